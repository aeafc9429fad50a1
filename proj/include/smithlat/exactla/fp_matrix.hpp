#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <vector>

#include "smithlat/exactla/int_matrix.hpp"

namespace smithlat {

bool is_prime(std::uint64_t n);

/// Dense matrix over F_p for a prime p < 2^31. Entries are kept reduced.
class FpMatrix {
 public:
  using Residue = std::uint32_t;

  FpMatrix(Residue p, std::size_t rows, std::size_t cols);
  FpMatrix(Residue p, std::initializer_list<std::initializer_list<long long>> rows);

  static FpMatrix identity(Residue p, std::size_t n);
  static FpMatrix reduce(Residue p, const IntMatrix& a);
  static FpMatrix kronecker(const FpMatrix& a, const FpMatrix& b);
  static FpMatrix direct_sum(const FpMatrix& a, const FpMatrix& b);

  Residue p() const { return p_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  Residue operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
  void set(std::size_t i, std::size_t j, long long value);

  FpMatrix pow(std::uint64_t k) const;
  FpMatrix scaled(long long s) const;
  bool is_zero() const;

  friend bool operator==(const FpMatrix& a, const FpMatrix& b);
  friend FpMatrix operator*(const FpMatrix& a, const FpMatrix& b);
  friend FpMatrix operator+(const FpMatrix& a, const FpMatrix& b);
  friend FpMatrix operator-(const FpMatrix& a, const FpMatrix& b);

 private:
  Residue reduce_value(long long value) const;

  Residue p_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Residue> data_;
};

std::size_t fp_rank(const FpMatrix& a);

/// Basis of the right kernel {x : a x = 0}, one vector per column.
FpMatrix fp_kernel(const FpMatrix& a);

std::optional<FpMatrix> fp_inverse(const FpMatrix& a);

}  // namespace smithlat
