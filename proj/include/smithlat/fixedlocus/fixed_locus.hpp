#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "smithlat/fpg/jordan.hpp"

namespace smithlat::fixedlocus {

using fpg::Count;
using fpg::Prime;

class InadmissibleParams : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An order-p action on a deformation of the Hilbert square of a K3 surface,
/// through the integral parameters a = a_G and m = m_G of H^2.
struct ActionParams {
  Prime p = 3;
  Count a = 0;
  Count m = 0;
  bool symplectic = false;
  /// Picard number; when given, adds the bound (p-1)m <= rho (symplectic)
  /// or 23 - (p-1)m <= rho (non-symplectic).
  std::optional<Count> rho;
};

enum class Mode { exact, upper_bound };
std::string to_string(Mode mode);

/// Primes where the formula is an equality: 3, 7, 11, 13, 17, 19.
bool exact_mode_supported(Prime p);
/// Primes accepted at all: the above plus 2 and 5 (bounds only).
bool prime_in_range(Prime p);

/// Empty string when admissible, otherwise the reason.
std::string admissibility_error(const ActionParams& params);
void require_admissible(const ActionParams& params);

/// l_p = a, l_{p-1} = m - a, l_1 = 23 - a - (p-1)m (for p = 2: l_2 = a, l_1 = 23 - 2a).
fpg::JordanType degree2_jordan(const ActionParams& params);

struct Degree4Params {
  Count a4 = 0;
  Count m4 = 0;
  fpg::JordanType jordan;  // of Sym^2 of the degree-2 type
};
/// Throws std::invalid_argument for p in {2, 5} unless mode is upper_bound.
Degree4Params degree4_params(const ActionParams& params, Mode mode = Mode::exact);

/// 324 - 2a(25 - a) - (p-2)m(25 - 2a) + m((p-2)^2 m - p)/2, for odd p.
Count h_star_closed_form(Prime p, Count a, Count m);
/// 324 - 4a - 2a4 - 2(p-2)m - (p-2)m4
Count h_star_assembled(Prime p, Count a, Count m, Count a4, Count m4);

struct FixedLocusReport {
  ActionParams params;
  Mode mode = Mode::exact;
  Count h_star = 0;                 // value, or bound in upper_bound mode
  std::optional<Count> closed_form;  // absent for p = 2
  Count assembled = 0;
  Count from_jordan = 0;  // sum of l_q (q < p) over degrees 0, 2, 4, 6, 8
  Count a4 = 0;
  Count m4 = 0;
  fpg::GradedJordanType jordan;  // degrees 0, 2, 4, 6, 8 in order
};

/// Exact mode requires exact_mode_supported(p); p in {2, 5} need Mode::upper_bound.
FixedLocusReport h_star(const ActionParams& params, Mode mode = Mode::exact);

/// Fixed-locus total for an order-p automorphism of a K3 surface:
/// 24 - 2a (p = 2, needs a fixed point) or 24 - (p-2)m - 2a.
Count h_star_k3(Prime p, Count a, Count m, bool has_fixed_point = true);

struct AdmissiblePair {
  Count a = 0;
  Count m = 0;
  Count h_star = 0;
  friend bool operator==(const AdmissiblePair&, const AdmissiblePair&) = default;
};

/// All arithmetically admissible (a, m), including a <= m, for an exact-mode prime, ordered by m then a.
/// Pairs with a = 0 are dropped when p > 11 and no even unimodular lattice of
/// signature (2, (p-1)m - 2) exists, since such actions cannot be symplectic.
std::vector<AdmissiblePair> enumerate_admissible(Prime p, std::optional<Count> target = std::nullopt);

/// Milnor: an even unimodular lattice of signature (s+, s-) exists iff s+ - s- = 0 mod 8.
bool even_unimodular_exists(Count positive, Count negative);

}  // namespace smithlat::fixedlocus
