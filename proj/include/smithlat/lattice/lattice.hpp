#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "smithlat/exactla/int_matrix.hpp"

namespace smithlat::lattice {

class DegenerateLattice : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A nondegenerate integral lattice given by its symmetric Gram matrix.
class GramLattice {
 public:
  /// Throws std::invalid_argument for a non-symmetric Gram and DegenerateLattice when det = 0.
  explicit GramLattice(IntMatrix gram);

  const IntMatrix& gram() const { return gram_; }
  std::size_t rank() const { return gram_.rows(); }
  const Integer& determinant() const { return det_; }
  bool is_even() const;
  bool is_positive_definite() const;

  Integer inner(const IntVector& x, const IntVector& y) const;
  Integer norm(const IntVector& x) const { return inner(x, x); }

 private:
  IntMatrix gram_;
  Integer det_;
};

/// Finite abelian group Z/d_1 + ... + Z/d_k with 1 < d_1 | d_2 | ... | d_k.
class FiniteAbelianGroup {
 public:
  FiniteAbelianGroup() = default;
  /// Unit factors are dropped; the remaining list must form a divisibility chain.
  explicit FiniteAbelianGroup(std::vector<Integer> invariant_factors);
  /// Normalises an arbitrary list of cyclic orders into invariant-factor form.
  static FiniteAbelianGroup from_cyclic_orders(const std::vector<Integer>& orders);

  const std::vector<Integer>& invariant_factors() const { return factors_; }
  Integer order() const;
  bool is_trivial() const { return factors_.empty(); }

  /// Prime-power cyclic orders, sorted by prime then exponent.
  std::vector<std::pair<Integer, unsigned>> elementary_divisors() const;
  /// e.g. "(Z/2)^22 + Z/10"
  std::string to_string() const;

  friend bool operator==(const FiniteAbelianGroup& a, const FiniteAbelianGroup& b) {
    return a.factors_ == b.factors_;
  }

 private:
  std::vector<Integer> factors_;
};

FiniteAbelianGroup disc_group(const GramLattice& l);

struct PElementary {
  bool elementary = false;
  std::size_t exponent = 0;  // a with A_L = (Z/p)^a; meaningful only when elementary
};
PElementary is_p_elementary(const GramLattice& l, unsigned long p);

GramLattice rescale(const GramLattice& l, const Integer& n);
GramLattice direct_sum(const GramLattice& a, const GramLattice& b);

/// Gram of the sublattice spanned by the columns of basis (B^T G B).
GramLattice sublattice(const GramLattice& l, const IntMatrix& basis);

/// Basis (as columns) of the primitive closure (span over Q) intersected with Z^n.
IntMatrix saturate(const IntMatrix& columns);

/// Basis (as columns) of {x : <x, v> = 0 for every column v}; always primitive.
IntMatrix orth_complement_basis(const GramLattice& l, const IntMatrix& vectors);

/// Orthogonal complement of v. Throws std::invalid_argument for v = 0 and
/// DegenerateLattice when the complement is degenerate.
GramLattice orth_complement(const GramLattice& l, const IntVector& v);
GramLattice orth_complement(const GramLattice& l, const IntMatrix& vectors);

/// All v with v^T G v = norm, one representative per +-pair (first nonzero coordinate
/// positive), in lexicographic order. Requires a positive definite lattice.
std::vector<IntVector> short_vectors(const GramLattice& l, const Integer& norm);

struct DiscFormGenerator {
  std::vector<Rational> lift;  // coordinates in the basis of L (an element of L*)
  Integer order;
  Rational q_value;  // x^T G x reduced into [0, 2)
};

/// Discriminant quadratic form on the invariant-factor generators of A_L.
/// Requires an even lattice.
std::vector<DiscFormGenerator> disc_form(const GramLattice& l);

/// Histogram of q over all elements of A_L, values in [0, 2), sorted by value.
/// Basis independent. Refuses groups larger than max_order.
std::vector<std::pair<Rational, std::size_t>> disc_form_value_counts(const GramLattice& l,
                                                                     std::size_t max_order = 1000000);

/// Whether A_L1 and A_L2 with their quadratic forms are isometric, by a backtracking search
/// for the images of the invariant-factor generators. Refuses groups larger than max_order.
bool disc_forms_isometric(const GramLattice& l1, const GramLattice& l2, std::size_t max_order = 100000);

Rational reduce_mod2(const Rational& q);

}  // namespace smithlat::lattice
