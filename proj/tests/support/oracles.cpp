#include "oracles.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>

namespace oracle {

smithlat::IntMatrix to_int_matrix(const Small& m) {
  smithlat::IntMatrix out(m.size(), m.empty() ? 0 : m[0].size());
  for (std::size_t i = 0; i < out.rows(); ++i)
    for (std::size_t j = 0; j < out.cols(); ++j) out(i, j) = static_cast<long>(m[i][j]);
  return out;
}

Small to_small(const smithlat::IntMatrix& m) {
  Small out(m.rows(), std::vector<long long>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out[i][j] = m(i, j).get_si();
  return out;
}

long long permutation_det(const Small& m) {
  const std::size_t n = m.size();
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  long long total = 0;
  do {
    int inversions = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (perm[i] > perm[j]) ++inversions;
    long long term = inversions % 2 ? -1 : 1;
    for (std::size_t i = 0; i < n; ++i) term *= m[i][perm[i]];
    total += term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

namespace {

void choose(std::size_t n, std::size_t k, std::vector<std::vector<std::size_t>>& out) {
  std::vector<std::size_t> pick;
  std::function<void(std::size_t)> go = [&](std::size_t start) {
    if (pick.size() == k) {
      out.push_back(pick);
      return;
    }
    for (std::size_t i = start; i < n; ++i) {
      pick.push_back(i);
      go(i + 1);
      pick.pop_back();
    }
  };
  go(0);
}

long long mod(long long a, long long p) { return ((a % p) + p) % p; }

long long inverse_mod(long long a, long long p) {
  long long result = 1, base = mod(a, p), e = p - 2;
  while (e) {
    if (e & 1) result = result * base % p;
    base = base * base % p;
    e >>= 1;
  }
  return result;
}

Small multiply(const Small& a, const Small& b, long long p) {
  Small c(a.size(), std::vector<long long>(b[0].size(), 0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t k = 0; k < b.size(); ++k)
      if (a[i][k])
        for (std::size_t j = 0; j < b[0].size(); ++j) c[i][j] = (c[i][j] + a[i][k] * b[k][j]) % p;
  return c;
}

}  // namespace

std::vector<long long> determinantal_divisors(const Small& m) {
  const std::size_t r = m.size(), c = m[0].size();
  std::vector<long long> out;
  for (std::size_t k = 1; k <= std::min(r, c); ++k) {
    std::vector<std::vector<std::size_t>> rows, cols;
    choose(r, k, rows);
    choose(c, k, cols);
    long long g = 0;
    for (const auto& rs : rows)
      for (const auto& cs : cols) {
        Small minor(k, std::vector<long long>(k));
        for (std::size_t i = 0; i < k; ++i)
          for (std::size_t j = 0; j < k; ++j) minor[i][j] = m[rs[i]][cs[j]];
        g = std::gcd(g, std::llabs(permutation_det(minor)));
      }
    out.push_back(g);
  }
  return out;
}

std::size_t rank_mod_p(Small m, long long p) {
  if (m.empty()) return 0;
  for (auto& row : m)
    for (auto& x : row) x = mod(x, p);
  const std::size_t rows = m.size(), cols = m[0].size();
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t pivot = rank;
    while (pivot < rows && m[pivot][c] == 0) ++pivot;
    if (pivot == rows) continue;
    std::swap(m[pivot], m[rank]);
    const long long inv = inverse_mod(m[rank][c], p);
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == rank || m[i][c] == 0) continue;
      const long long f = m[i][c] * inv % p;
      for (std::size_t j = c; j < cols; ++j) m[i][j] = mod(m[i][j] - f * m[rank][j], p);
    }
    ++rank;
  }
  return rank;
}

std::map<int, long long> jordan_counts(const Small& g, long long p) {
  const std::size_t n = g.size();
  Small t = g;
  for (std::size_t i = 0; i < n; ++i) t[i][i] = mod(t[i][i] - 1, p);
  // k_j = dim ker t^j; blocks of length >= j number k_j - k_{j-1}
  std::vector<long long> kernel{0};
  Small power = t;
  for (long long j = 1; j <= p; ++j) {
    kernel.push_back(static_cast<long long>(n - rank_mod_p(power, p)));
    power = multiply(power, t, p);
  }
  std::map<int, long long> counts;
  for (long long q = 1; q <= p; ++q) {
    const long long at_least_q = kernel[q] - kernel[q - 1];
    const long long at_least_next = q < p ? kernel[q + 1] - kernel[q] : 0;
    if (at_least_q - at_least_next) counts[static_cast<int>(q)] = at_least_q - at_least_next;
  }
  return counts;
}

Small module_matrix(long long, const std::map<int, long long>& counts) {
  std::size_t n = 0;
  for (const auto& [q, c] : counts) n += static_cast<std::size_t>(q * c);
  Small g(n, std::vector<long long>(n, 0));
  std::size_t at = 0;
  for (const auto& [q, c] : counts)
    for (long long r = 0; r < c; ++r) {
      for (int i = 0; i < q; ++i) {
        g[at + i][at + i] = 1;
        if (i + 1 < q) g[at + i][at + i + 1] = 1;
      }
      at += static_cast<std::size_t>(q);
    }
  return g;
}

Small kronecker(const Small& a, const Small& b, long long p) {
  const std::size_t n = a.size(), m = b.size();
  Small k(n * m, std::vector<long long>(n * m));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t r = 0; r < m; ++r)
        for (std::size_t s = 0; s < m; ++s) k[i * m + r][j * m + s] = a[i][j] * b[r][s] % p;
  return k;
}

Small symmetric_square(const Small& g, long long p) {
  const std::size_t n = g.size();
  std::vector<std::pair<std::size_t, std::size_t>> mono;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) mono.emplace_back(i, j);
  const auto where = [&](std::size_t i, std::size_t j) {
    if (i > j) std::swap(i, j);
    return static_cast<std::size_t>(std::find(mono.begin(), mono.end(), std::make_pair(i, j)) - mono.begin());
  };
  Small s(mono.size(), std::vector<long long>(mono.size(), 0));
  for (std::size_t col = 0; col < mono.size(); ++col) {
    const auto [i, j] = mono[col];
    // g(e_i) g(e_j) = sum_{k,l} g_ki g_lj e_k e_l
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t l = 0; l < n; ++l) {
        const long long c = g[k][i] * g[l][j] % p;
        if (c) s[where(k, l)][col] = (s[where(k, l)][col] + c) % p;
      }
  }
  return s;
}

std::vector<std::map<int, long long>> supported_types(long long p, long long max_dim) {
  std::vector<std::map<int, long long>> out;
  const long long mid = p == 2 ? 0 : p - 1;  // for p = 2 the length p - 1 is 1
  for (long long lp = 0; p * lp <= max_dim; ++lp)
    for (long long lm = 0; p * lp + mid * lm <= max_dim; ++lm) {
      if (mid == 0 && lm > 0) break;
      for (long long l1 = 0; p * lp + mid * lm + l1 <= max_dim; ++l1) {
        std::map<int, long long> t;
        if (l1) t[1] += l1;
        if (lm) t[static_cast<int>(mid)] += lm;
        if (lp) t[static_cast<int>(p)] += lp;
        if (!t.empty()) out.push_back(t);
      }
    }
  return out;
}

std::vector<std::vector<long long>> box_short_vectors(const Small& gram, long long norm, long long bound) {
  const std::size_t n = gram.size();
  std::vector<std::vector<long long>> found;
  std::vector<long long> v(n, -bound);
  for (;;) {
    long long q = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) q += v[i] * gram[i][j] * v[j];
    if (q == norm) {
      const auto nz = std::find_if(v.begin(), v.end(), [](long long x) { return x != 0; });
      if (nz != v.end() && *nz > 0) found.push_back(v);
    }
    std::size_t pos = 0;
    while (pos < n && ++v[pos] > bound) v[pos++] = -bound;
    if (pos == n) break;
  }
  std::sort(found.begin(), found.end());
  return found;
}

long long safe_box_bound(const Small& gram, long long norm) {
  // |v_i|^2 <= norm * (G^{-1})_ii; the inverse diagonal is at most 1 / lambda_min,
  // and lambda_min >= det / (trace^(n-1)) gives a crude but safe radius.
  const std::size_t n = gram.size();
  double trace = 0;
  for (std::size_t i = 0; i < n; ++i) trace += static_cast<double>(gram[i][i]);
  const double det = static_cast<double>(std::llabs(permutation_det(gram)));
  const double lambda_min = det / std::pow(trace, static_cast<double>(n - 1));
  return static_cast<long long>(std::sqrt(static_cast<double>(norm) / lambda_min)) + 1;
}

smithlat::IntMatrix random_unimodular(std::size_t n, std::mt19937_64& rng, int steps) {
  if (steps == 0) steps = static_cast<int>(4 * n);
  smithlat::IntMatrix u = smithlat::IntMatrix::identity(n);
  if (n < 2) return u;
  std::uniform_int_distribution<std::size_t> pick(0, n - 1);
  std::uniform_int_distribution<int> factor(-2, 2);
  for (int s = 0; s < steps; ++s) {
    const std::size_t a = pick(rng), b = pick(rng);
    switch (rng() % 4) {
      case 0: u.swap_cols(a, b); break;
      case 1: {
        smithlat::IntMatrix d = smithlat::IntMatrix::identity(n);
        d(a, a) = -1;
        u = u * d;
        break;
      }
      default:
        if (a != b) u.add_col_multiple(a, b, factor(rng));
    }
  }
  return u;
}

Small random_small(std::size_t rows, std::size_t cols, long long range, std::mt19937_64& rng) {
  std::uniform_int_distribution<long long> d(-range, range);
  Small m(rows, std::vector<long long>(cols));
  for (auto& row : m)
    for (auto& x : row) x = d(rng);
  return m;
}

}  // namespace oracle
