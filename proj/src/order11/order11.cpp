#include "smithlat/order11/order11.hpp"

#include <algorithm>

#include "smithlat/lattice/named.hpp"

namespace smithlat::order11 {

namespace {

const Integer kNormSix = 6;  // square of the Pluecker class

std::vector<Integer> divisors(const Integer& n) {
  std::vector<Integer> out;
  for (Integer k = 1; k <= n; ++k)
    if (mpz_divisible_p(n.get_mpz_t(), k.get_mpz_t())) out.push_back(k);
  return out;
}

}  // namespace

CandidateAnalysis analyse_candidate(const std::string& name, const lattice::GramLattice& l,
                                    const Integer& target_trans_disc) {
  CandidateAnalysis c{name, l, abs(l.determinant()), l.is_positive_definite(), lattice::disc_group(l), {}, {}, false};
  for (const auto& v : lattice::short_vectors(l, kNormSix)) {
    const Integer d = abs(lattice::orth_complement(l, v).determinant());
    c.norm_six.push_back({v, d});
    if (d == target_trans_disc) c.attains_target = true;
  }
  c.form_values = lattice::disc_form_value_counts(l);
  return c;
}

ScenarioResult verify_scenario() {
  const Integer target = 3 * 11 * 11;
  ScenarioResult r{fixedlocus::enumerate_admissible(kPrime, kIsolatedPoints),
                   abs(lattice::ns_order11().determinant()),
                   abs(lattice::bb_lattice().determinant()),
                   Integer(0),
                   Integer(3),
                   {},
                   {},
                   {},
                   target,
                   analyse_candidate("A", lattice::a_order11(), target),
                   analyse_candidate("B", lattice::b_order11(), target),
                   false,
                   true};

  // the Pluecker class spans the <6> summand
  const lattice::GramLattice ns = lattice::ns_order11();
  IntVector g(ns.rank());
  g[0] = 1;
  r.disc_ns0 = abs(lattice::orth_complement(ns, g).determinant());

  // [H^2 : NS + T]^2 = disc(NS) disc(T) / disc(H^2), the index dividing disc(H^2)
  for (const auto& k : divisors(r.disc_h2)) {
    const Integer num = r.disc_ns * r.disc_h2;
    if (mpz_divisible_p(num.get_mpz_t(), Integer(k * k).get_mpz_t())) r.from_ns.push_back(num / (k * k));
  }
  // the same relation inside H^2(X)_0
  for (const auto& k : divisors(r.disc_h2_primitive)) r.from_primitive.push_back(r.disc_ns0 * k);

  for (const auto& d : r.from_ns)
    if (std::find(r.from_primitive.begin(), r.from_primitive.end(), d) != r.from_primitive.end())
      r.trans_candidates.push_back(d);
  std::sort(r.from_ns.begin(), r.from_ns.end());
  std::sort(r.trans_candidates.begin(), r.trans_candidates.end());

  r.forms_isometric = lattice::disc_forms_isometric(r.a.gram, r.b.gram);
  r.lattices_isometric = r.a.norm_six.size() == r.b.norm_six.size();
  return r;
}

}  // namespace smithlat::order11
