#pragma once

#include <vector>

#include "smithlat/exactla/int_matrix.hpp"

namespace smithlat {

/// Smith normal form with certifying transforms: left * A * right is diagonal with
/// the invariant factors on the leading diagonal followed by zeros.
struct SmithForm {
  /// Nonzero diagonal entries d_1 | d_2 | ... | d_r, all positive (unit factors included).
  std::vector<Integer> invariant_factors;
  IntMatrix left;   // rows(A) x rows(A), unimodular
  IntMatrix right;  // cols(A) x cols(A), unimodular

  std::size_t rank() const { return invariant_factors.size(); }

  /// The factors greater than one, i.e. the torsion of coker(A).
  std::vector<Integer> nontrivial_factors() const;

  /// The rows(A) x cols(A) diagonal matrix left * A * right.
  IntMatrix diagonal_form(std::size_t rows, std::size_t cols) const;
};

/// Classical elimination with smallest-nonzero pivoting. Accepts any rectangular matrix.
SmithForm snf(const IntMatrix& a);

/// Order of the class of v in coker(A) = Z^rows / A Z^cols, given snf(A).
/// Returns 0 when the class has infinite order.
Integer cokernel_order(const SmithForm& form, const IntVector& v);

}  // namespace smithlat
