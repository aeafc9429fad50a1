#include <gtest/gtest.h>

#include <numeric>

#include "smithlat/lattice/named.hpp"
#include "smithlat/order11/order11.hpp"
#include "support/oracles.hpp"

using namespace smithlat;
using namespace smithlat::order11;

namespace {

// disc(v^perp) = v^2 disc(L) / div(v)^2 for primitive v, div(v) = gcd of G v
long long complement_disc_oracle(const oracle::Small& g, const std::vector<long long>& v, long long disc) {
  long long div = 0, norm = 0;
  for (std::size_t i = 0; i < g.size(); ++i) {
    long long gv = 0;
    for (std::size_t j = 0; j < g.size(); ++j) gv += g[i][j] * v[j];
    div = std::gcd(div, gv);
    norm += v[i] * gv;
  }
  return norm * disc / (div * div);
}

}  // namespace

TEST(Order11, CandidateLattices) {
  const auto a = lattice::a_order11();
  const auto b = lattice::b_order11();
  EXPECT_EQ(a.determinant(), 242);
  EXPECT_EQ(b.determinant(), 242);
  EXPECT_TRUE(a.is_positive_definite());
  EXPECT_TRUE(b.is_positive_definite());
  EXPECT_TRUE(a.is_even());
  EXPECT_TRUE(b.is_even());
}

TEST(Order11, NormSixVectorsMatchOracle) {
  for (const auto& [name, l] : {std::pair{"A", lattice::a_order11()}, std::pair{"B", lattice::b_order11()}}) {
    const CandidateAnalysis c = analyse_candidate(name, l, 363);
    const auto g = oracle::to_small(l.gram());
    const auto expected = oracle::box_short_vectors(g, 6, oracle::safe_box_bound(g, 6));
    ASSERT_EQ(c.norm_six.size(), expected.size()) << name;
    for (std::size_t k = 0; k < expected.size(); ++k) {
      std::vector<long long> v;
      for (const auto& x : c.norm_six[k].vector) v.push_back(x.get_si());
      EXPECT_EQ(v, expected[k]);
      EXPECT_EQ(c.norm_six[k].complement_disc, Integer(static_cast<long>(complement_disc_oracle(g, v, 242))));
    }
  }
}

TEST(Order11, Scenario) {
  const ScenarioResult r = verify_scenario();
  EXPECT_EQ(r.pairs, (std::vector<fixedlocus::AdmissiblePair>{{2, 2, 5}}));
  EXPECT_EQ(r.disc_ns, 726);
  EXPECT_EQ(r.disc_ns0, 121);
  EXPECT_EQ(r.trans_candidates, std::vector<Integer>{Integer(363)});
  EXPECT_EQ(r.target_trans_disc, 363);
  EXPECT_EQ(r.a.norm_six.size(), 2u);
  EXPECT_EQ(r.b.norm_six.size(), 1u);
  EXPECT_FALSE(r.a.attains_target);
  EXPECT_TRUE(r.b.attains_target);
  EXPECT_EQ(r.a.group, r.b.group);
  EXPECT_FALSE(r.lattices_isometric);
  // the two discriminant forms turn out to be isometric
  EXPECT_TRUE(r.forms_isometric);
}
