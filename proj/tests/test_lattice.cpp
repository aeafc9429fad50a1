#include <gtest/gtest.h>

#include <random>

#include "smithlat/exactla/smith.hpp"
#include "smithlat/lattice/named.hpp"
#include "support/oracles.hpp"

using namespace smithlat;
using namespace smithlat::lattice;

namespace {

GramLattice conjugate(const GramLattice& l, const IntMatrix& u) { return GramLattice(u.transpose() * l.gram() * u); }

IntVector v(std::initializer_list<long> xs) {
  IntVector out;
  for (long x : xs) out.emplace_back(x);
  return out;
}

std::vector<std::vector<long long>> small_vectors(const std::vector<IntVector>& vs) {
  std::vector<std::vector<long long>> out;
  for (const auto& x : vs) {
    std::vector<long long> y;
    for (const auto& c : x) y.push_back(c.get_si());
    out.push_back(y);
  }
  return out;
}

// positive definite Gram: B^T B + I for a random integer B
oracle::Small random_positive_gram(std::size_t n, std::mt19937_64& rng) {
  const auto b = oracle::random_small(n, n, 2, rng);
  oracle::Small g(n, std::vector<long long>(n, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) g[i][j] += b[k][i] * b[k][j];
      if (i == j) g[i][j] += 1;
    }
  return g;
}

}  // namespace

TEST(GramLattice, Validation) {
  EXPECT_THROW(GramLattice(IntMatrix{{1, 2}, {3, 4}}), std::invalid_argument);
  EXPECT_THROW(GramLattice(IntMatrix{{1, 1}, {1, 1}}), DegenerateLattice);
  const GramLattice l(IntMatrix{{2, 1}, {1, 2}});
  EXPECT_TRUE(l.is_even());
  EXPECT_TRUE(l.is_positive_definite());
  EXPECT_EQ(l.norm(v({1, -1})), 2);
  EXPECT_FALSE(hyperbolic_plane().is_positive_definite());
}

TEST(DiscGroup, Examples) {
  EXPECT_TRUE(disc_group(hyperbolic_plane()).is_trivial());
  EXPECT_EQ(disc_group(GramLattice(IntMatrix{{-2}})).to_string(), "Z/2");
  EXPECT_EQ(disc_group(bb_lattice()).to_string(), "Z/2");
  EXPECT_EQ(disc_group(k3_lattice()).order(), 1);
  EXPECT_EQ(abs(ns_order11().determinant()), 726);
  EXPECT_EQ(ns_order11().rank(), 21u);
  EXPECT_EQ(disc_group(a_order11()).to_string(), "Z/11 + Z/22");
}

TEST(DiscGroup, FiniteAbelianGroupNormalisation) {
  const auto g = FiniteAbelianGroup::from_cyclic_orders({Integer(2), Integer(2), Integer(5)});
  EXPECT_EQ(g.to_string(), "Z/2 + Z/10");
  EXPECT_EQ(g.order(), 20);
  EXPECT_THROW(FiniteAbelianGroup({Integer(4), Integer(6)}), std::invalid_argument);
  const auto e = g.elementary_divisors();
  ASSERT_EQ(e.size(), 3u);
  EXPECT_EQ(e[2].first, 5);
}

TEST(PElementary, Examples) {
  const auto a = is_p_elementary(GramLattice(IntMatrix{{-2}}), 2);
  EXPECT_TRUE(a.elementary);
  EXPECT_EQ(a.exponent, 1u);
  EXPECT_TRUE(is_p_elementary(hyperbolic_plane(), 7).elementary);
  EXPECT_EQ(is_p_elementary(hyperbolic_plane(), 7).exponent, 0u);
  EXPECT_FALSE(is_p_elementary(ns_order11(), 11).elementary);
}

TEST(Rescale, Determinants) {
  EXPECT_EQ(rescale(hyperbolic_plane(), -8).determinant(), -64);
  EXPECT_THROW(rescale(hyperbolic_plane(), 0), std::invalid_argument);
  const GramLattice minus_two(IntMatrix{{-2}});
  Integer expected;
  mpz_ui_pow_ui(expected.get_mpz_t(), 2, 47);
  Integer five;
  mpz_ui_pow_ui(five.get_mpz_t(), 5, 46);
  EXPECT_EQ(abs(direct_sum(rescale(k3_lattice(), 100), rescale(minus_two, 100)).determinant()), expected * five);
}

TEST(DirectSum, NamedLattices) {
  EXPECT_EQ(direct_sum(hyperbolic_plane(), hyperbolic_plane()).determinant(), 1);
  EXPECT_EQ(k3_lattice().rank(), 22u);
  EXPECT_EQ(abs(k3_lattice().determinant()), 1);
  EXPECT_TRUE(k3_lattice().is_even());
  EXPECT_EQ(bb_lattice().determinant(), 2);
  EXPECT_EQ(e8_minus().determinant(), 1);
  EXPECT_TRUE(rescale(e8_minus(), -1).is_positive_definite());
  for (const auto& key : named_lattice_keys()) EXPECT_NO_THROW(named_lattice(key));
  EXPECT_THROW(named_lattice("nope"), std::invalid_argument);
}

TEST(OrthComplement, Examples) {
  const GramLattice d(IntMatrix{{6, 0}, {0, 22}});
  const GramLattice c = orth_complement(d, v({1, 0}));
  EXPECT_EQ(c.gram(), (IntMatrix{{22}}));
  const GramLattice u2 = direct_sum(hyperbolic_plane(), GramLattice(IntMatrix{{-2}}));
  EXPECT_THROW(orth_complement(u2, v({1, 0, 0})), DegenerateLattice);
  EXPECT_THROW(orth_complement(d, v({0, 0})), std::invalid_argument);
}

TEST(OrthComplement, IsPrimitiveAndOrthogonal) {
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t n = 3 + trial % 3;
    const GramLattice l(oracle::to_int_matrix(random_positive_gram(n, rng)));
    IntVector x(n);
    for (auto& c : x) c = static_cast<long>(rng() % 5) - 2;
    if (std::all_of(x.begin(), x.end(), [](const Integer& c) { return sgn(c) == 0; })) x[0] = 1;
    const IntMatrix basis = orth_complement_basis(l, IntMatrix::from_columns({x}, n));
    ASSERT_EQ(basis.cols(), n - 1);
    for (std::size_t j = 0; j < basis.cols(); ++j) EXPECT_EQ(l.inner(basis.column(j), x), 0);
    // primitive: the Smith form of the basis has only unit factors
    for (const auto& d : snf(basis).invariant_factors) EXPECT_EQ(d, 1);
  }
}

TEST(ShortVectors, Trivial) {
  const auto vs = short_vectors(GramLattice(IntMatrix{{2, 0}, {0, 2}}), 2);
  EXPECT_EQ(vs, (std::vector<IntVector>{v({0, 1}), v({1, 0})}));
  EXPECT_THROW(short_vectors(hyperbolic_plane(), 2), std::domain_error);
  EXPECT_TRUE(short_vectors(GramLattice(IntMatrix{{2}}), 0).empty());
}

TEST(ShortVectors, MatchBoxOracle) {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t n = 1 + trial % 4;
    const auto g = random_positive_gram(n, rng);
    const long long norm = 1 + static_cast<long long>(rng() % 12);
    const auto expected = oracle::box_short_vectors(g, norm, oracle::safe_box_bound(g, norm));
    EXPECT_EQ(small_vectors(short_vectors(GramLattice(oracle::to_int_matrix(g)), Integer(static_cast<long>(norm)))), expected);
  }
  for (const auto& l : {a_order11(), b_order11()}) {
    const auto g = oracle::to_small(l.gram());
    for (long long norm : {2, 6, 8, 22}) {
      const auto expected = oracle::box_short_vectors(g, norm, oracle::safe_box_bound(g, norm));
      EXPECT_EQ(small_vectors(short_vectors(l, Integer(static_cast<long>(norm)))), expected);
    }
  }
}

TEST(DiscForm, Examples) {
  const auto q = disc_form(GramLattice(IntMatrix{{-2}}));
  ASSERT_EQ(q.size(), 1u);
  EXPECT_EQ(q[0].q_value, Rational(3, 2));  // -1/2 mod 2
  EXPECT_EQ(q[0].order, 2);
  EXPECT_TRUE(disc_form(hyperbolic_plane()).empty());
  EXPECT_THROW(disc_form(GramLattice(IntMatrix{{1}})), std::invalid_argument);
  const auto counts = disc_form_value_counts(GramLattice(IntMatrix{{2, 1}, {1, 2}}));
  // A_2: Z/3 with q = 2/3 on both nonzero classes
  ASSERT_EQ(counts.size(), 2u);
  EXPECT_EQ(counts[1].first, Rational(2, 3));
  EXPECT_EQ(counts[1].second, 2u);
}

TEST(DiscForm, Isometry) {
  EXPECT_TRUE(disc_forms_isometric(a_order11(), a_order11()));
  EXPECT_FALSE(disc_forms_isometric(GramLattice(IntMatrix{{2}}), GramLattice(IntMatrix{{-2}})));
  EXPECT_FALSE(disc_forms_isometric(GramLattice(IntMatrix{{2}}), GramLattice(IntMatrix{{4}})));
  // <2> + <-2> has the same form as U(2), with the group (Z/2)^2 in both cases... but
  // q takes values {1/2, 3/2} vs {0, 1}: not isometric
  EXPECT_FALSE(disc_forms_isometric(GramLattice(IntMatrix{{2, 0}, {0, -2}}), rescale(hyperbolic_plane(), 2)));
  // the two order-11 candidates share their discriminant form
  EXPECT_TRUE(disc_forms_isometric(a_order11(), b_order11()));
  EXPECT_EQ(disc_form_value_counts(a_order11()), disc_form_value_counts(b_order11()));
}

TEST(BasisChange, InvariantsUnderUnimodularConjugation) {
  std::mt19937_64 rng(100);
  const std::vector<GramLattice> lattices = {a_order11(), b_order11(), ns_order11(), bb_lattice(),
                                             GramLattice(IntMatrix{{2, 1, 0}, {1, -4, 3}, {0, 3, 6}})};
  for (int trial = 0; trial < 100; ++trial) {
    const GramLattice& l = lattices[trial % lattices.size()];
    const GramLattice c = conjugate(l, oracle::random_unimodular(l.rank(), rng));
    EXPECT_EQ(disc_group(c), disc_group(l));
    EXPECT_EQ(abs(c.determinant()), disc_group(l).order());
    if (l.rank() <= 3) {
      EXPECT_EQ(disc_form_value_counts(c), disc_form_value_counts(l));
      EXPECT_TRUE(disc_forms_isometric(c, l));
    }
  }
}

TEST(IndexRelation, SublatticesOfFiniteIndex) {
  // [L : S + T]^2 disc(L) = disc(S) disc(T) for primitive orthogonal S, T of full total rank
  std::mt19937_64 rng(21);
  const std::vector<GramLattice> lattices = {bb_lattice(), a_order11(), b_order11(), k3_lattice()};
  for (int trial = 0; trial < 20; ++trial) {
    const GramLattice& l = lattices[trial % lattices.size()];
    const std::size_t n = l.rank();
    IntMatrix seed(n, 1 + trial % 2);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < seed.cols(); ++j) seed(i, j) = static_cast<long>(rng() % 5) - 2;
    const IntMatrix s_basis = saturate(seed);
    IntMatrix t_basis;
    Integer disc_s, disc_t;
    try {
      disc_s = abs(sublattice(l, s_basis).determinant());
      t_basis = orth_complement_basis(l, s_basis);
      disc_t = abs(sublattice(l, t_basis).determinant());
    } catch (const DegenerateLattice&) {
      continue;
    }
    IntMatrix joint(n, n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < s_basis.cols(); ++j) joint(i, j) = s_basis(i, j);
      for (std::size_t j = 0; j < t_basis.cols(); ++j) joint(i, s_basis.cols() + j) = t_basis(i, j);
    }
    const Integer index = abs(det(joint));
    EXPECT_EQ(index * index * abs(l.determinant()), disc_s * disc_t);
  }
}

TEST(Saturate, PrimitiveClosure) {
  const IntMatrix s = saturate(IntMatrix{{2}, {4}, {0}});
  ASSERT_EQ(s.cols(), 1u);
  EXPECT_EQ(abs(s(0, 0)), 1);
  EXPECT_EQ(abs(s(1, 0)), 2);
}
