#include "smithlat/lattice/named.hpp"

#include <stdexcept>

namespace smithlat::lattice {

GramLattice hyperbolic_plane() { return GramLattice(IntMatrix{{0, 1}, {1, 0}}); }

GramLattice e8_minus() {
  IntMatrix g(8, 8);
  for (std::size_t i = 0; i < 8; ++i) g(i, i) = -2;
  // Bourbaki edges, 1-based: 1-3, 3-4, 4-5, 5-6, 6-7, 7-8, 2-4
  const int edges[][2] = {{1, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 7}, {7, 8}, {2, 4}};
  for (const auto& e : edges) {
    g(e[0] - 1, e[1] - 1) = 1;
    g(e[1] - 1, e[0] - 1) = 1;
  }
  return GramLattice(g);
}

GramLattice k3_lattice() {
  const GramLattice u = hyperbolic_plane();
  const GramLattice e8 = e8_minus();
  return direct_sum(direct_sum(direct_sum(u, u), direct_sum(u, e8)), e8);
}

GramLattice bb_lattice() { return direct_sum(k3_lattice(), GramLattice(IntMatrix{{-2}})); }

GramLattice ns_order11() {
  const GramLattice e8 = e8_minus();
  const GramLattice k(IntMatrix{{-2, 1}, {1, -6}});
  // rank 21 = rho(X) needs the 2 x 2 block twice; this also gives disc 2 * 3 * 11^2
  return direct_sum(direct_sum(GramLattice(IntMatrix{{6}}), direct_sum(e8, e8)), direct_sum(k, k));
}

GramLattice a_order11() { return GramLattice(IntMatrix{{2, 1, 0}, {1, 6, 0}, {0, 0, 22}}); }

GramLattice b_order11() { return GramLattice(IntMatrix{{6, 2, 2}, {2, 8, -3}, {2, -3, 8}}); }

std::vector<std::string> named_lattice_keys() {
  return {"U", "E8(-1)", "K3", "BB", "NS-order11", "A-order11", "B-order11"};
}

GramLattice named_lattice(const std::string& key) {
  if (key == "U") return hyperbolic_plane();
  if (key == "E8(-1)") return e8_minus();
  if (key == "K3") return k3_lattice();
  if (key == "BB") return bb_lattice();
  if (key == "NS-order11") return ns_order11();
  if (key == "A-order11") return a_order11();
  if (key == "B-order11") return b_order11();
  throw std::invalid_argument("unknown lattice: " + key);
}

}  // namespace smithlat::lattice
