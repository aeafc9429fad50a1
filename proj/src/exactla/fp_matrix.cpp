#include "smithlat/exactla/fp_matrix.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <utility>

namespace smithlat {

namespace {

using Residue = FpMatrix::Residue;

Residue mul_mod(Residue a, Residue b, Residue p) {
  return static_cast<Residue>(static_cast<std::uint64_t>(a) * b % p);
}

Residue pow_mod(Residue a, std::uint64_t e, Residue p) {
  std::uint64_t result = 1 % p;
  std::uint64_t base = a % p;
  while (e) {
    if (e & 1) result = result * base % p;
    base = base * base % p;
    e >>= 1;
  }
  return static_cast<Residue>(result);
}

Residue inv_mod(Residue a, Residue p) { return pow_mod(a, p - 2, p); }

// Row echelon form in place; returns pivot columns.
std::vector<std::size_t> echelonize(std::vector<std::vector<Residue>>& m, std::size_t cols, Residue p) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < m.size(); ++c) {
    std::size_t pivot = r;
    while (pivot < m.size() && m[pivot][c] == 0) ++pivot;
    if (pivot == m.size()) continue;
    std::swap(m[r], m[pivot]);
    const Residue inv = inv_mod(m[r][c], p);
    for (auto& x : m[r]) x = mul_mod(x, inv, p);
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i == r || m[i][c] == 0) continue;
      const Residue f = m[i][c];
      for (std::size_t j = c; j < m[i].size(); ++j) {
        if (m[r][j] == 0) continue;
        m[i][j] = static_cast<Residue>((m[i][j] + static_cast<std::uint64_t>(p - mul_mod(f, m[r][j], p))) % p);
      }
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

std::vector<std::vector<Residue>> to_rows(const FpMatrix& a) {
  std::vector<std::vector<Residue>> m(a.rows(), std::vector<Residue>(a.cols()));
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) m[i][j] = a(i, j);
  return m;
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

FpMatrix::FpMatrix(Residue p, std::size_t rows, std::size_t cols)
    : p_(p), rows_(rows), cols_(cols), data_(rows * cols, 0) {
  if (p >= (Residue{1} << 31) || !is_prime(p))
    throw std::invalid_argument("FpMatrix: modulus " + std::to_string(p) + " is not a prime below 2^31");
}

FpMatrix::FpMatrix(Residue p, std::initializer_list<std::initializer_list<long long>> rows)
    : FpMatrix(p, rows.size(), rows.size() ? rows.begin()->size() : 0) {
  std::size_t i = 0;
  for (const auto& r : rows) {
    if (r.size() != cols_) throw std::invalid_argument("FpMatrix: ragged initializer");
    std::size_t j = 0;
    for (long long v : r) set(i, j++, v);
    ++i;
  }
}

FpMatrix FpMatrix::identity(Residue p, std::size_t n) {
  FpMatrix m(p, n, n);
  for (std::size_t i = 0; i < n; ++i) m.data_[i * n + i] = 1 % p;
  return m;
}

FpMatrix FpMatrix::reduce(Residue p, const IntMatrix& a) {
  FpMatrix m(p, a.rows(), a.cols());
  const Integer modulus = p;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      Integer r;
      mpz_fdiv_r(r.get_mpz_t(), a(i, j).get_mpz_t(), modulus.get_mpz_t());
      m.data_[i * m.cols_ + j] = static_cast<Residue>(r.get_ui());
    }
  }
  return m;
}

FpMatrix FpMatrix::kronecker(const FpMatrix& a, const FpMatrix& b) {
  if (a.p_ != b.p_) throw std::invalid_argument("kronecker: mismatched moduli");
  FpMatrix m(a.p_, a.rows_ * b.rows_, a.cols_ * b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t j = 0; j < a.cols_; ++j) {
      const Residue aij = a(i, j);
      if (aij == 0) continue;
      for (std::size_t k = 0; k < b.rows_; ++k)
        for (std::size_t l = 0; l < b.cols_; ++l)
          m.data_[(i * b.rows_ + k) * m.cols_ + j * b.cols_ + l] = mul_mod(aij, b(k, l), a.p_);
    }
  return m;
}

FpMatrix FpMatrix::direct_sum(const FpMatrix& a, const FpMatrix& b) {
  if (a.p_ != b.p_) throw std::invalid_argument("direct_sum: mismatched moduli");
  FpMatrix m(a.p_, a.rows_ + b.rows_, a.cols_ + b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t j = 0; j < a.cols_; ++j) m.data_[i * m.cols_ + j] = a(i, j);
  for (std::size_t i = 0; i < b.rows_; ++i)
    for (std::size_t j = 0; j < b.cols_; ++j) m.data_[(a.rows_ + i) * m.cols_ + a.cols_ + j] = b(i, j);
  return m;
}

Residue FpMatrix::reduce_value(long long value) const {
  long long r = value % static_cast<long long>(p_);
  if (r < 0) r += p_;
  return static_cast<Residue>(r);
}

void FpMatrix::set(std::size_t i, std::size_t j, long long value) {
  data_[i * cols_ + j] = reduce_value(value);
}

FpMatrix FpMatrix::pow(std::uint64_t k) const {
  if (!is_square()) throw std::invalid_argument("FpMatrix::pow: matrix is not square");
  FpMatrix result = identity(p_, rows_);
  FpMatrix base = *this;
  while (k) {
    if (k & 1) result = result * base;
    k >>= 1;
    if (k) base = base * base;
  }
  return result;
}

FpMatrix FpMatrix::scaled(long long s) const {
  FpMatrix m = *this;
  const Residue f = reduce_value(s);
  for (auto& x : m.data_) x = mul_mod(x, f, p_);
  return m;
}

bool FpMatrix::is_zero() const {
  for (Residue x : data_)
    if (x) return false;
  return true;
}

bool operator==(const FpMatrix& a, const FpMatrix& b) {
  return a.p_ == b.p_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

FpMatrix operator*(const FpMatrix& a, const FpMatrix& b) {
  if (a.p_ != b.p_) throw std::invalid_argument("FpMatrix product: mismatched moduli");
  if (a.cols_ != b.rows_) throw std::invalid_argument("FpMatrix product: shape mismatch");
  FpMatrix c(a.p_, a.rows_, b.cols_);
  std::vector<std::uint64_t> acc(b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    std::fill(acc.begin(), acc.end(), 0);
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const std::uint64_t aik = a(i, k);
      if (aik == 0) continue;
      const Residue* brow = &b.data_[k * b.cols_];
      for (std::size_t j = 0; j < b.cols_; ++j) acc[j] = (acc[j] + aik * brow[j]) % a.p_;
    }
    for (std::size_t j = 0; j < b.cols_; ++j) c.data_[i * c.cols_ + j] = static_cast<Residue>(acc[j]);
  }
  return c;
}

FpMatrix operator+(const FpMatrix& a, const FpMatrix& b) {
  if (a.p_ != b.p_ || a.rows_ != b.rows_ || a.cols_ != b.cols_)
    throw std::invalid_argument("FpMatrix sum: mismatch");
  FpMatrix c = a;
  for (std::size_t k = 0; k < c.data_.size(); ++k)
    c.data_[k] = static_cast<Residue>((static_cast<std::uint64_t>(c.data_[k]) + b.data_[k]) % a.p_);
  return c;
}

FpMatrix operator-(const FpMatrix& a, const FpMatrix& b) {
  if (a.p_ != b.p_ || a.rows_ != b.rows_ || a.cols_ != b.cols_)
    throw std::invalid_argument("FpMatrix difference: mismatch");
  FpMatrix c = a;
  for (std::size_t k = 0; k < c.data_.size(); ++k)
    c.data_[k] = static_cast<Residue>((static_cast<std::uint64_t>(c.data_[k]) + a.p_ - b.data_[k]) % a.p_);
  return c;
}

std::size_t fp_rank(const FpMatrix& a) {
  auto rows = to_rows(a);
  return echelonize(rows, a.cols(), a.p()).size();
}

FpMatrix fp_kernel(const FpMatrix& a) {
  auto rows = to_rows(a);
  const auto pivots = echelonize(rows, a.cols(), a.p());
  std::vector<bool> is_pivot(a.cols(), false);
  for (std::size_t c : pivots) is_pivot[c] = true;

  FpMatrix basis(a.p(), a.cols(), a.cols() - pivots.size());
  std::size_t k = 0;
  for (std::size_t free = 0; free < a.cols(); ++free) {
    if (is_pivot[free]) continue;
    basis.set(free, k, 1);
    for (std::size_t r = 0; r < pivots.size(); ++r)
      basis.set(pivots[r], k, -static_cast<long long>(rows[r][free]));
    ++k;
  }
  return basis;
}

std::optional<FpMatrix> fp_inverse(const FpMatrix& a) {
  if (!a.is_square()) throw std::invalid_argument("fp_inverse: matrix is not square");
  const std::size_t n = a.rows();
  auto rows = to_rows(a);
  for (std::size_t i = 0; i < n; ++i) {
    rows[i].resize(2 * n, 0);
    rows[i][n + i] = 1 % a.p();
  }
  const auto pivots = echelonize(rows, n, a.p());
  if (pivots.size() != n) return std::nullopt;
  FpMatrix inv(a.p(), n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv.set(i, j, rows[i][n + j]);
  return inv;
}

}  // namespace smithlat
