#include "smithlat/fpg/jordan.hpp"

#include <string>
#include <utility>

namespace smithlat::fpg {

JordanType::JordanType(Prime p) : p_(p) {
  if (!is_prime(p)) throw std::invalid_argument("JordanType: " + std::to_string(p) + " is not prime");
}

JordanType::JordanType(Prime p, const std::map<int, Count>& counts) : JordanType(p) {
  for (const auto& [q, n] : counts) set(q, n);
}

JordanType JordanType::trivial(Prime p, Count dimension) {
  JordanType t(p);
  t.set(1, dimension);
  return t;
}

JordanType JordanType::block(Prime p, int q) {
  JordanType t(p);
  t.set(q, 1);
  return t;
}

void JordanType::check_length(int q) const {
  if (q < 1 || static_cast<Prime>(q) > p_)
    throw std::out_of_range("JordanType: block length " + std::to_string(q) + " outside [1, " +
                            std::to_string(p_) + "]");
}

Count JordanType::count(int q) const {
  check_length(q);
  const auto it = counts_.find(q);
  return it == counts_.end() ? 0 : it->second;
}

void JordanType::set(int q, Count n) {
  check_length(q);
  if (n < 0) throw std::invalid_argument("JordanType: negative multiplicity");
  if (n == 0) counts_.erase(q);
  else counts_[q] = n;
}

Count JordanType::dimension() const {
  Count d = 0;
  for (const auto& [q, n] : counts_) d += q * n;
  return d;
}

Count JordanType::block_count() const {
  Count n = 0;
  for (const auto& [q, c] : counts_) n += c;
  return n;
}

bool JordanType::closed_form_supported() const {
  const int p = static_cast<int>(p_);
  for (const auto& [q, n] : counts_) {
    if (q != 1 && q != p - 1 && q != p) return false;
  }
  return true;
}

GradedJordanType::GradedJordanType(Prime prime, std::vector<JordanType> degrees)
    : p(prime), per_degree(std::move(degrees)) {
  for (const auto& t : per_degree)
    if (t.p() != p) throw std::invalid_argument("GradedJordanType: mixed primes");
}

Count GradedJordanType::total(int q) const {
  Count n = 0;
  for (const auto& t : per_degree) n += t.count(q);
  return n;
}

FpMatrix jordan_block(Prime p, int q) {
  if (q < 1 || static_cast<Prime>(q) > p) throw std::out_of_range("jordan_block: q outside [1, p]");
  FpMatrix m = FpMatrix::identity(p, static_cast<std::size_t>(q));
  for (int i = 1; i < q; ++i) m.set(static_cast<std::size_t>(i - 1), static_cast<std::size_t>(i), 1);
  return m;
}

FpMatrix module_matrix(const JordanType& type) {
  FpMatrix m(type.p(), 0, 0);
  for (const auto& [q, n] : type.counts()) {
    const FpMatrix block = jordan_block(type.p(), q);
    for (Count k = 0; k < n; ++k) m = FpMatrix::direct_sum(m, block);
  }
  return m;
}

JordanType jordan_type_of(const FpMatrix& g) {
  if (!g.is_square()) throw std::invalid_argument("jordan_type_of: matrix is not square");
  const Prime p = g.p();
  const std::size_t n = g.rows();
  const FpMatrix id = FpMatrix::identity(p, n);
  if (!(g.pow(p) == id)) throw std::invalid_argument("jordan_type_of: g^p is not the identity");

  // ranks[j] = rank((g - 1)^j); the sequence reaches 0 by j = min(n, p)
  const FpMatrix tau = g - id;
  std::vector<Count> ranks{static_cast<Count>(n)};
  FpMatrix power = id;
  while (ranks.back() != 0) {
    power = power * tau;
    ranks.push_back(static_cast<Count>(fp_rank(power)));
  }
  const auto rank_at = [&](std::size_t j) { return j < ranks.size() ? ranks[j] : 0; };

  JordanType type(p);
  for (std::size_t q = 1; q < ranks.size(); ++q)
    type.set(static_cast<int>(q), rank_at(q - 1) - 2 * rank_at(q) + rank_at(q + 1));
  return type;
}

FpMatrix symmetric_square_action(const FpMatrix& g) {
  if (!g.is_square()) throw std::invalid_argument("symmetric_square_action: matrix is not square");
  const std::size_t n = g.rows();
  std::vector<std::vector<std::size_t>> index(n, std::vector<std::size_t>(n));
  std::size_t next = 0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) index[i][j] = index[j][i] = next++;

  const auto p = static_cast<long long>(g.p());
  FpMatrix s(g.p(), next, next);
  // g(e_i e_j) = sum_{k,l} g_ki g_lj e_k e_l
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      const std::size_t col = index[i][j];
      for (std::size_t k = 0; k < n; ++k) {
        const long long gki = g(k, i);
        if (gki == 0) continue;
        for (std::size_t l = 0; l < n; ++l) {
          const long long glj = g(l, j);
          if (glj == 0) continue;
          const std::size_t row = index[k][l];
          s.set(row, col, (s(row, col) + gki * glj % p) % p);
        }
      }
    }
  }
  return s;
}

namespace {

void require_same_prime(const JordanType& a, const JordanType& b) {
  if (a.p() != b.p()) throw std::invalid_argument("mismatched primes " + std::to_string(a.p()) + " and " +
                                                  std::to_string(b.p()));
}

void require_supported(const JordanType& a, const char* op) {
  if (!a.closed_form_supported())
    throw UnsupportedBlockLengths(std::string(op) +
                                  ": closed form needs block lengths in {1, p-1, p}; use Method::oracle");
}

// N_q (x) N_r for q, r in {1, p-1, p}.
JordanType block_tensor(Prime p, int q, int r) {
  const int pp = static_cast<int>(p);
  JordanType t(p);
  if (p == 2) {
    if (q == 2 || r == 2) t.set(2, q * r / 2);
    else t.set(1, 1);
    return t;
  }
  if (q > r) std::swap(q, r);
  if (r == pp) {
    t.set(pp, q);  // N_p (x) N_q = N_p^q
  } else if (q == pp - 1) {
    t.set(pp, pp - 2);
    t.add(1, 1);
  } else if (r == pp - 1) {
    t.set(pp - 1, 1);
  } else {
    t.set(1, 1);
  }
  return t;
}

}  // namespace

JordanType tensor_type(const JordanType& a, const JordanType& b, Method method) {
  require_same_prime(a, b);
  if (method == Method::oracle)
    return jordan_type_of(FpMatrix::kronecker(module_matrix(a), module_matrix(b)));
  require_supported(a, "tensor_type");
  require_supported(b, "tensor_type");
  JordanType out(a.p());
  for (const auto& [q, n] : a.counts()) {
    for (const auto& [r, m] : b.counts()) {
      const JordanType piece = block_tensor(a.p(), q, r);
      for (const auto& [s, k] : piece.counts()) out.add(s, n * m * k);
    }
  }
  return out;
}

JordanType sym2_type(const JordanType& a, Method method) {
  if (method == Method::oracle) return jordan_type_of(symmetric_square_action(module_matrix(a)));
  require_supported(a, "sym2_type");

  const Count p = a.p();
  JordanType out(a.p());
  if (p == 2) {
    const Count l1 = a.count(1);
    const Count l2 = a.count(2);
    out.set(1, l1 * (l1 + 1) / 2 + l2);
    out.set(2, l2 * (l2 + l1));
    return out;
  }
  const Count l1 = a.count(1);
  const Count lm = a.count(static_cast<int>(p - 1));
  const Count lp = a.count(static_cast<int>(p));
  out.set(1, l1 * (l1 + 1) / 2 + lm * (lm - 1) / 2);
  out.add(static_cast<int>(p - 1), lm * l1);
  out.add(static_cast<int>(p), (p + 1) / 2 * lp + p * (lp * (lp - 1) / 2) + (p - 1) / 2 * lm +
                                   (p - 1) * lp * lm + lp * l1 + (p - 2) * (lm * (lm - 1) / 2));
  return out;
}

}  // namespace smithlat::fpg
