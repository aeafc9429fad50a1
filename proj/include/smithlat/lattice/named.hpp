#pragma once

#include <string>
#include <vector>

#include "smithlat/lattice/lattice.hpp"

namespace smithlat::lattice {

/// Hyperbolic plane [[0,1],[1,0]].
GramLattice hyperbolic_plane();
/// Negated E8 Cartan matrix, Bourbaki numbering (branch node 4 joined to node 2).
GramLattice e8_minus();
/// U^3 + E8(-1)^2, rank 22, in that block order.
GramLattice k3_lattice();
/// K3 lattice + <-2>, the <-2> summand last.
GramLattice bb_lattice();

/// <6> + E8(-1)^2 + [[-2,1],[1,-6]]^2, rank 21, discriminant 726.
GramLattice ns_order11();
GramLattice a_order11();  // [[2,1,0],[1,6,0],[0,0,22]]
GramLattice b_order11();  // [[6,2,2],[2,8,-3],[2,-3,8]]

/// Registry keys: "U", "E8(-1)", "K3", "BB", "NS-order11", "A-order11", "B-order11".
std::vector<std::string> named_lattice_keys();
/// Throws std::invalid_argument for an unknown key.
GramLattice named_lattice(const std::string& key);

}  // namespace smithlat::lattice
