#pragma once

#include <vector>

#include "smithlat/fpg/jordan.hpp"

namespace smithlat::fpg {

/// dim H^i(G; N_q) for 0 <= i <= max_degree, from kernels and images of
/// tau = g - 1 and sigma = 1 + g + ... + g^(p-1) acting on the explicit block.
std::vector<Count> cohomology_dims(Prime p, int q, int max_degree);

/// Additive extension over the blocks of a module.
std::vector<Count> cohomology_dims(const JordanType& type, int max_degree);

/// The matrix of g + 2g^2 + ... + (p-1)g^(p-1) on N_q, summed term by term.
FpMatrix weighted_sum_action(Prime p, int q);

/// The same endomorphism by case analysis on q: 0 for q <= p-2,
/// -tau^(q-1) for q = p-1, -tau^(q-1) - tau^(q-2) for q = p.
FpMatrix weighted_sum_closed_form(Prime p, int q);

struct TorDims {
  Count tor0 = 0;
  Count tor1 = 0;
  friend bool operator==(const TorDims&, const TorDims&) = default;
};

/// Dimensions of Tor_0 and Tor_1 of H^*(G; M) over the polynomial part R of H^*(G; F_p),
/// totalled over the blocks of M.
TorDims tor_dims(const JordanType& type);

/// The same dimensions read off explicit cohomology dims h^0, h^1, h^2 of one module,
/// using that the periodicity class maps H^0 onto H^2 (p odd; onto H^1 for p = 2) and is
/// an isomorphism in positive degrees.
TorDims tor_dims_from_cohomology(Prime p, const std::vector<Count>& dims);

/// Sum over degrees k and block lengths q < p of l_q^k.
Count fixed_locus_total(const GradedJordanType& h);

/// nu * (tor0 - tor1) with Tor totalled over all degrees; nu = 1 for p = 2, 1/2 otherwise.
Count fixed_locus_total_via_tor(const GradedJordanType& h);

/// Sum over degrees of the invariant dimension minus l_p.
Count fixed_locus_total_via_invariants(const GradedJordanType& h);

}  // namespace smithlat::fpg
