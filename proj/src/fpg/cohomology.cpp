#include "smithlat/fpg/cohomology.hpp"

#include <stdexcept>
#include <string>

namespace smithlat::fpg {

namespace {

void check_block(Prime p, int q) {
  if (q < 1 || static_cast<Prime>(q) > p)
    throw std::out_of_range("block length " + std::to_string(q) + " outside [1, " + std::to_string(p) + "]");
}

}  // namespace

std::vector<Count> cohomology_dims(Prime p, int q, int max_degree) {
  check_block(p, q);
  if (max_degree < 0) throw std::invalid_argument("cohomology_dims: negative degree");
  const FpMatrix g = jordan_block(p, q);
  const FpMatrix id = FpMatrix::identity(p, static_cast<std::size_t>(q));
  const FpMatrix tau = g - id;

  FpMatrix sigma(p, static_cast<std::size_t>(q), static_cast<std::size_t>(q));
  FpMatrix power = id;
  for (Prime i = 0; i < p; ++i) {
    sigma = sigma + power;
    power = power * g;
  }
  if (!(sigma == tau.pow(p - 1))) throw std::logic_error("cohomology_dims: sigma != tau^(p-1)");

  const auto dim = static_cast<Count>(q);
  const auto rank_tau = static_cast<Count>(fp_rank(tau));
  const auto rank_sigma = static_cast<Count>(fp_rank(sigma));
  const Count ker_tau = dim - rank_tau;
  const Count ker_sigma = dim - rank_sigma;

  // 0 -> M --tau--> M --sigma--> M --tau--> M ...
  std::vector<Count> dims;
  dims.reserve(static_cast<std::size_t>(max_degree) + 1);
  for (int i = 0; i <= max_degree; ++i) {
    if (i == 0) dims.push_back(ker_tau);
    else if (i % 2 == 1) dims.push_back(ker_sigma - rank_tau);
    else dims.push_back(ker_tau - rank_sigma);
  }
  return dims;
}

std::vector<Count> cohomology_dims(const JordanType& type, int max_degree) {
  std::vector<Count> total(static_cast<std::size_t>(max_degree) + 1, 0);
  for (const auto& [q, n] : type.counts()) {
    const auto block = cohomology_dims(type.p(), q, max_degree);
    for (std::size_t i = 0; i < total.size(); ++i) total[i] += n * block[i];
  }
  return total;
}

FpMatrix weighted_sum_action(Prime p, int q) {
  check_block(p, q);
  const FpMatrix g = jordan_block(p, q);
  FpMatrix sum(p, static_cast<std::size_t>(q), static_cast<std::size_t>(q));
  FpMatrix power = g;
  for (Prime i = 1; i < p; ++i) {
    sum = sum + power.scaled(static_cast<long long>(i));
    power = power * g;
  }
  return sum;
}

FpMatrix weighted_sum_closed_form(Prime p, int q) {
  check_block(p, q);
  const auto n = static_cast<std::size_t>(q);
  const FpMatrix tau = jordan_block(p, q) - FpMatrix::identity(p, n);
  const int pp = static_cast<int>(p);
  if (q <= pp - 2) return FpMatrix(p, n, n);
  if (q == pp - 1) return tau.pow(static_cast<std::uint64_t>(q - 1)).scaled(-1);
  return (tau.pow(static_cast<std::uint64_t>(q - 1)) + tau.pow(static_cast<std::uint64_t>(q - 2))).scaled(-1);
}

TorDims tor_dims(const JordanType& type) {
  TorDims t;
  const int p = static_cast<int>(type.p());
  for (const auto& [q, n] : type.counts()) {
    if (q == p) {
      t.tor0 += n;
      t.tor1 += n;
    } else {
      // free over R on one generator (p = 2) or two generators v, s v (p >= 3)
      t.tor0 += (p == 2 ? 1 : 2) * n;
    }
  }
  return t;
}

TorDims tor_dims_from_cohomology(Prime p, const std::vector<Count>& dims) {
  if (dims.size() < 3) throw std::invalid_argument("tor_dims_from_cohomology: need degrees 0..2");
  if (p == 2) return {dims[0], dims[0] - dims[1]};
  return {dims[0] + dims[1], dims[0] - dims[2]};
}

Count fixed_locus_total(const GradedJordanType& h) {
  Count total = 0;
  for (const auto& t : h.per_degree)
    for (const auto& [q, n] : t.counts())
      if (static_cast<Prime>(q) < h.p) total += n;
  return total;
}

Count fixed_locus_total_via_tor(const GradedJordanType& h) {
  TorDims sum;
  for (const auto& t : h.per_degree) {
    const TorDims d = tor_dims(t);
    sum.tor0 += d.tor0;
    sum.tor1 += d.tor1;
  }
  const Count diff = sum.tor0 - sum.tor1;
  if (h.p == 2) return diff;
  if (diff % 2 != 0) throw std::logic_error("fixed_locus_total_via_tor: odd Tor difference");
  return diff / 2;
}

Count fixed_locus_total_via_invariants(const GradedJordanType& h) {
  Count total = 0;
  for (const auto& t : h.per_degree) total += t.block_count() - t.count(static_cast<int>(h.p));
  return total;
}

}  // namespace smithlat::fpg
