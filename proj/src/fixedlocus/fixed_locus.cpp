#include "smithlat/fixedlocus/fixed_locus.hpp"

#include <algorithm>

#include "smithlat/fpg/cohomology.hpp"

namespace smithlat::fixedlocus {

namespace {

constexpr Count kB2 = 23;           // second Betti number
constexpr Count kTotalBetti = 324;  // 1 + 23 + 276 + 23 + 1

// symplectic actions on these varieties have order at most 11
constexpr Prime kMaxSymplecticPrime = 11;

}  // namespace

std::string to_string(Mode mode) { return mode == Mode::exact ? "exact" : "upper-bound"; }

bool exact_mode_supported(Prime p) {
  return p == 3 || p == 7 || p == 11 || p == 13 || p == 17 || p == 19;
}

bool prime_in_range(Prime p) { return p == 2 || p == 5 || exact_mode_supported(p); }

std::string admissibility_error(const ActionParams& params) {
  const Prime p = params.p;
  if (p == 23) return "p = 23 is out of scope (Z[zeta_23] is not a principal ideal domain)";
  if (!prime_in_range(p)) return "p must be a prime in [2, 19]";
  if (params.a < 0 || params.m < 0) return "a and m must be nonnegative";
  if (params.m == 0) return "m = 0 means a trivial action on H^2, which is impossible";
  const Count rank_orth = static_cast<Count>(p - 1) * params.m;
  if (p == 2) {
    if (rank_orth >= kB2) return "need 1 <= m <= 22";
  } else if (rank_orth < 2 || rank_orth >= kB2) {
    return "need 2 <= (p-1)m < 23";
  }
  if (params.a > std::min(rank_orth, kB2 - rank_orth)) return "need a <= min((p-1)m, 23 - (p-1)m)";
  // l_{p-1} = m - a is a block count
  if (params.a > params.m) return "need a <= m";
  if (params.symplectic && p > kMaxSymplecticPrime) return "symplectic actions have order at most 11";
  if (params.rho) {
    const Count rho = *params.rho;
    if (rho < 0 || rho > 21) return "rho must lie in [0, 21]";
    if (params.symplectic && rank_orth > rho) return "symplectic action needs (p-1)m <= rho";
    if (!params.symplectic && kB2 - rank_orth > rho) return "non-symplectic action needs 23 - (p-1)m <= rho";
  }
  return {};
}

void require_admissible(const ActionParams& params) {
  const std::string why = admissibility_error(params);
  if (!why.empty()) throw InadmissibleParams(why);
}

fpg::JordanType degree2_jordan(const ActionParams& params) {
  require_admissible(params);
  const Prime p = params.p;
  fpg::JordanType t(p);
  if (p == 2) {
    t.set(2, params.a);
    t.set(1, kB2 - 2 * params.a);
  } else {
    t.set(static_cast<int>(p), params.a);
    t.set(static_cast<int>(p) - 1, params.m - params.a);
    t.set(1, kB2 - params.a - static_cast<Count>(p - 1) * params.m);
  }
  return t;
}

Degree4Params degree4_params(const ActionParams& params, Mode mode) {
  const Prime p = params.p;
  // Sym^2 H^2 and H^4 agree mod p only away from 2 and 5
  if (mode == Mode::exact && !exact_mode_supported(p))
    throw std::invalid_argument("degree4_params: p = " + std::to_string(p) + " is only available as a bound");
  const fpg::JordanType sym2 = fpg::sym2_type(degree2_jordan(params));
  Degree4Params out{0, 0, sym2};
  out.a4 = sym2.count(static_cast<int>(p));
  out.m4 = p == 2 ? out.a4 : out.a4 + sym2.count(static_cast<int>(p) - 1);
  return out;
}

Count h_star_closed_form(Prime p, Count a, Count m) {
  if (p == 2) throw std::invalid_argument("h_star_closed_form: needs an odd prime");
  const Count q = static_cast<Count>(p) - 2;
  const Count twice = 2 * (kTotalBetti - 2 * a * (25 - a) - q * m * (25 - 2 * a)) + m * (q * q * m - static_cast<Count>(p));
  if (twice % 2 != 0) throw std::logic_error("h_star_closed_form: odd numerator");
  return twice / 2;
}

Count h_star_assembled(Prime p, Count a, Count m, Count a4, Count m4) {
  const Count q = static_cast<Count>(p) - 2;
  return kTotalBetti - 4 * a - 2 * a4 - 2 * q * m - q * m4;
}

FixedLocusReport h_star(const ActionParams& params, Mode mode) {
  require_admissible(params);
  const Prime p = params.p;
  if (mode == Mode::exact && !exact_mode_supported(p))
    throw std::invalid_argument("h_star: p = " + std::to_string(p) + " requires upper-bound mode");

  FixedLocusReport r{params, mode, 0, std::nullopt, 0, 0, 0, 0, fpg::GradedJordanType(p)};
  const fpg::JordanType h2 = degree2_jordan(params);
  const Degree4Params d4 = degree4_params(params, mode);
  r.a4 = d4.a4;
  r.m4 = d4.m4;
  r.assembled = h_star_assembled(p, params.a, params.m, d4.a4, d4.m4);
  // H^6 is dual to H^2 and has the same Jordan type
  const fpg::JordanType point = fpg::JordanType::trivial(p, 1);
  r.jordan = fpg::GradedJordanType(p, {point, h2, d4.jordan, h2, point});
  r.from_jordan = fpg::fixed_locus_total(r.jordan);
  if (r.from_jordan != r.assembled) throw std::logic_error("h_star: Jordan total differs from assembled form");
  if (p != 2) {
    r.closed_form = h_star_closed_form(p, params.a, params.m);
    if (*r.closed_form != r.assembled) throw std::logic_error("h_star: closed form differs from assembled form");
  }
  r.h_star = r.assembled;
  return r;
}

Count h_star_k3(Prime p, Count a, Count m, bool has_fixed_point) {
  if (!is_prime(p) || p > 19) throw std::invalid_argument("h_star_k3: p must be a prime <= 19");
  if (a < 0 || m < 0) throw std::invalid_argument("h_star_k3: a and m must be nonnegative");
  Count value;
  if (p == 2) {
    if (!has_fixed_point) throw std::invalid_argument("h_star_k3: formula needs a fixed point when p = 2");
    value = 24 - 2 * a;
  } else {
    value = 24 - static_cast<Count>(p - 2) * m - 2 * a;
  }
  if (value < 0) throw std::invalid_argument("h_star_k3: parameters give a negative total");
  return value;
}

bool even_unimodular_exists(Count positive, Count negative) {
  const Count diff = positive - negative;
  return ((diff % 8) + 8) % 8 == 0;
}

std::vector<AdmissiblePair> enumerate_admissible(Prime p, std::optional<Count> target) {
  if (!exact_mode_supported(p))
    throw std::invalid_argument("enumerate_admissible: p must be one of 3, 7, 11, 13, 17, 19");
  std::vector<AdmissiblePair> out;
  const Count step = static_cast<Count>(p) - 1;
  for (Count m = 1; step * m < kB2; ++m) {
    const Count rank_orth = step * m;
    if (rank_orth < 2) continue;
    for (Count a = 0; a <= std::min({m, rank_orth, kB2 - rank_orth}); ++a) {
      // a = 0 makes Orth even unimodular of signature (2, (p-1)m - 2)
      if (a == 0 && p > kMaxSymplecticPrime && !even_unimodular_exists(2, rank_orth - 2)) continue;
      const Count h = h_star(ActionParams{p, a, m, false, std::nullopt}).h_star;
      if (target && h != *target) continue;
      out.push_back({a, m, h});
    }
  }
  return out;
}

}  // namespace smithlat::fixedlocus
