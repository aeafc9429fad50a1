#include <gtest/gtest.h>

#include "smithlat/fpg/cohomology.hpp"
#include "smithlat/fpg/json.hpp"
#include "support/oracles.hpp"

using namespace smithlat;
using namespace smithlat::fpg;

namespace {

JordanType from_counts(Prime p, const std::map<int, long long>& c) {
  std::map<int, Count> m(c.begin(), c.end());
  return JordanType(p, m);
}

std::map<int, long long> to_counts(const JordanType& t) {
  return std::map<int, long long>(t.counts().begin(), t.counts().end());
}

}  // namespace

TEST(JordanType, Basics) {
  JordanType t(5, {{1, 2}, {5, 3}});
  EXPECT_EQ(t.dimension(), 17);
  EXPECT_EQ(t.block_count(), 5);
  EXPECT_TRUE(t.closed_form_supported());
  t.add(3, 1);
  EXPECT_FALSE(t.closed_form_supported());
  EXPECT_THROW(t.set(6, 1), std::out_of_range);
  EXPECT_THROW(t.set(1, -1), std::invalid_argument);
  EXPECT_THROW(JordanType(6), std::invalid_argument);
  EXPECT_EQ(jordan_type_from_json(to_json(t)), t);
}

TEST(JordanType, OfExplicitBlocks) {
  for (const Prime p : {2u, 3u, 5u, 7u}) {
    for (int q = 1; q <= static_cast<int>(p); ++q) EXPECT_EQ(jordan_type_of(jordan_block(p, q)), JordanType::block(p, q));
    const JordanType mixed(p, {{1, 2}, {static_cast<int>(p), 1}});
    EXPECT_EQ(jordan_type_of(module_matrix(mixed)), mixed);
  }
  // g^p != 1 is not a representation of Z/p
  EXPECT_THROW(jordan_type_of(FpMatrix(3, {{2}})), std::invalid_argument);
}

TEST(JordanType, RankProfileAgreesWithOracle) {
  std::mt19937_64 rng(9);
  for (const Prime p : {2u, 3u, 5u}) {
    for (int trial = 0; trial < 20; ++trial) {
      // conjugate a module matrix by a random invertible matrix
      const auto types = oracle::supported_types(p, 8);
      const auto& c = types[rng() % types.size()];
      const FpMatrix g = module_matrix(from_counts(p, c));
      FpMatrix u = FpMatrix::identity(p, g.rows());
      for (std::size_t i = 0; i + 1 < g.rows(); ++i) u.set(i, i + 1, static_cast<long long>(rng() % p));
      FpMatrix v = FpMatrix::identity(p, g.rows());
      for (std::size_t i = 0; i + 1 < g.rows(); ++i) v.set(i + 1, i, static_cast<long long>(rng() % p));
      const FpMatrix w = u * v;
      const FpMatrix conj = w * g * *fp_inverse(w);
      EXPECT_EQ(to_counts(jordan_type_of(conj)), c);
    }
  }
}

TEST(Tensor, SmallTable) {
  // N_p x N_q = N_p^q and N_{p-1} x N_{p-1} = N_p^{p-2} + N_1
  EXPECT_EQ(tensor_type(JordanType::block(5, 5), JordanType::block(5, 3), Method::oracle), JordanType(5, {{5, 3}}));
  EXPECT_EQ(tensor_type(JordanType::block(5, 4), JordanType::block(5, 4)), JordanType(5, {{5, 3}, {1, 1}}));
  EXPECT_EQ(tensor_type(JordanType::block(2, 2), JordanType::block(2, 2)), JordanType(2, {{2, 2}}));
  EXPECT_THROW(tensor_type(JordanType::block(5, 2), JordanType::block(5, 2)), UnsupportedBlockLengths);
  EXPECT_THROW(tensor_type(JordanType::block(5, 2), JordanType::block(3, 2)), std::invalid_argument);
}

TEST(Tensor, ClosedFormMatchesIndependentOracle) {
  int cases = 0;
  for (const long long p : {2LL, 3LL, 5LL, 7LL}) {
    const auto types = oracle::supported_types(p, 6);
    for (const auto& a : types)
      for (const auto& b : types) {
        const auto k = oracle::kronecker(oracle::module_matrix(p, a), oracle::module_matrix(p, b), p);
        const auto expected = oracle::jordan_counts(k, p);
        const auto closed = tensor_type(from_counts(static_cast<Prime>(p), a), from_counts(static_cast<Prime>(p), b));
        EXPECT_EQ(to_counts(closed), expected) << "p=" << p;
        ++cases;
      }
  }
  EXPECT_GT(cases, 100);
}

TEST(Sym2, ClosedFormMatchesIndependentOracle) {
  int cases = 0;
  for (const long long p : {2LL, 3LL, 5LL, 7LL, 11LL}) {
    for (const auto& a : oracle::supported_types(p, 12)) {
      const auto s = oracle::symmetric_square(oracle::module_matrix(p, a), p);
      const auto closed = sym2_type(from_counts(static_cast<Prime>(p), a));
      EXPECT_EQ(to_counts(closed), oracle::jordan_counts(s, p)) << "p=" << p;
      ++cases;
    }
  }
  EXPECT_GT(cases, 200);
}

TEST(Sym2, LibraryOracleAgreesOnUnsupportedTypes) {
  // blocks outside {1, p-1, p}: the library oracle still works and matches the test oracle
  for (const long long p : {5LL, 7LL}) {
    const std::map<int, long long> a{{2, 1}, {3, 1}};
    const auto lib = sym2_type(from_counts(static_cast<Prime>(p), a), Method::oracle);
    EXPECT_EQ(to_counts(lib), oracle::jordan_counts(oracle::symmetric_square(oracle::module_matrix(p, a), p), p));
    EXPECT_THROW(sym2_type(from_counts(static_cast<Prime>(p), a)), UnsupportedBlockLengths);
  }
}

TEST(Sym2, Dimension) {
  const JordanType a(3, {{1, 5}, {3, 6}});
  EXPECT_EQ(sym2_type(a).dimension(), 23 * 24 / 2);
}

TEST(Cohomology, BlockTables) {
  for (Prime p = 2; p <= 19; ++p) {
    if (!is_prime(p)) continue;
    for (int q = 1; q <= static_cast<int>(p); ++q) {
      const auto dims = cohomology_dims(p, q, 5);
      for (int i = 0; i <= 5; ++i) EXPECT_EQ(dims[i], (q < static_cast<int>(p) || i == 0) ? 1 : 0) << p << " " << q;
      EXPECT_EQ(weighted_sum_action(p, q), weighted_sum_closed_form(p, q)) << p << " " << q;
      EXPECT_EQ(tor_dims(JordanType::block(p, q)), tor_dims_from_cohomology(p, dims));
    }
  }
}

TEST(Cohomology, TorValues) {
  EXPECT_EQ(tor_dims(JordanType::block(5, 3)), (TorDims{2, 0}));
  EXPECT_EQ(tor_dims(JordanType::block(5, 5)), (TorDims{1, 1}));
  EXPECT_EQ(tor_dims(JordanType::block(2, 1)), (TorDims{1, 0}));
  EXPECT_EQ(tor_dims(JordanType::block(2, 2)), (TorDims{1, 1}));
  EXPECT_THROW(cohomology_dims(5, 6, 2), std::out_of_range);
}

TEST(Cohomology, FixedLocusTotalsAgree) {
  std::mt19937_64 rng(4);
  for (const Prime p : {2u, 3u, 5u, 7u}) {
    for (int trial = 0; trial < 30; ++trial) {
      GradedJordanType h(p);
      for (int k = 0; k < 4; ++k) {
        JordanType t(p);
        for (int q = 1; q <= static_cast<int>(p); ++q) t.set(q, static_cast<Count>(rng() % 4));
        h.per_degree.push_back(t);
      }
      const Count direct = fixed_locus_total(h);
      EXPECT_EQ(fixed_locus_total_via_tor(h), direct);
      EXPECT_EQ(fixed_locus_total_via_invariants(h), direct);
    }
  }
}
