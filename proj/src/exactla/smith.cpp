#include "smithlat/exactla/smith.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <utility>

namespace smithlat {

namespace {

struct Position {
  std::size_t row;
  std::size_t col;
};

std::optional<Position> smallest_nonzero(const IntMatrix& w, std::size_t t) {
  std::optional<Position> best;
  Integer best_abs;
  for (std::size_t i = t; i < w.rows(); ++i) {
    for (std::size_t j = t; j < w.cols(); ++j) {
      const Integer& x = w(i, j);
      if (sgn(x) == 0) continue;
      if (!best || mpz_cmpabs(x.get_mpz_t(), best_abs.get_mpz_t()) < 0) {
        best = Position{i, j};
        best_abs = abs(x);
        if (best_abs == 1) return best;
      }
    }
  }
  return best;
}

// Clears row t and column t below/right of the pivot by truncated division.
// Returns true when all eliminated entries became zero.
bool eliminate_cross(IntMatrix& w, IntMatrix& left, IntMatrix& right, std::size_t t) {
  bool clean = true;
  const Integer pivot = w(t, t);
  for (std::size_t i = t + 1; i < w.rows(); ++i) {
    if (sgn(w(i, t)) == 0) continue;
    Integer q;
    mpz_tdiv_q(q.get_mpz_t(), w(i, t).get_mpz_t(), pivot.get_mpz_t());
    if (sgn(q) != 0) {
      const Integer neg = -q;
      w.add_row_multiple(i, t, neg);
      left.add_row_multiple(i, t, neg);
    }
    if (sgn(w(i, t)) != 0) clean = false;
  }
  for (std::size_t j = t + 1; j < w.cols(); ++j) {
    if (sgn(w(t, j)) == 0) continue;
    Integer q;
    mpz_tdiv_q(q.get_mpz_t(), w(t, j).get_mpz_t(), pivot.get_mpz_t());
    if (sgn(q) != 0) {
      const Integer neg = -q;
      w.add_col_multiple(j, t, neg);
      right.add_col_multiple(j, t, neg);
    }
    if (sgn(w(t, j)) != 0) clean = false;
  }
  return clean;
}

std::optional<std::size_t> row_not_divisible(const IntMatrix& w, std::size_t t) {
  const Integer& pivot = w(t, t);
  if (abs(pivot) == 1) return std::nullopt;
  for (std::size_t i = t + 1; i < w.rows(); ++i)
    for (std::size_t j = t + 1; j < w.cols(); ++j)
      if (sgn(w(i, j)) != 0 && !mpz_divisible_p(w(i, j).get_mpz_t(), pivot.get_mpz_t())) return i;
  return std::nullopt;
}

}  // namespace

std::vector<Integer> SmithForm::nontrivial_factors() const {
  std::vector<Integer> out;
  for (const auto& d : invariant_factors)
    if (d != 1) out.push_back(d);
  return out;
}

IntMatrix SmithForm::diagonal_form(std::size_t rows, std::size_t cols) const {
  IntMatrix d(rows, cols);
  for (std::size_t i = 0; i < invariant_factors.size(); ++i) d(i, i) = invariant_factors[i];
  return d;
}

SmithForm snf(const IntMatrix& a) {
  IntMatrix w = a;
  IntMatrix left = IntMatrix::identity(a.rows());
  IntMatrix right = IntMatrix::identity(a.cols());
  std::vector<Integer> factors;

  const std::size_t steps = std::min(a.rows(), a.cols());
  for (std::size_t t = 0; t < steps; ++t) {
    for (;;) {
      const auto pos = smallest_nonzero(w, t);
      if (!pos) {
        return SmithForm{std::move(factors), std::move(left), std::move(right)};
      }
      w.swap_rows(t, pos->row);
      left.swap_rows(t, pos->row);
      w.swap_cols(t, pos->col);
      right.swap_cols(t, pos->col);
      if (!eliminate_cross(w, left, right, t)) continue;
      if (const auto bad = row_not_divisible(w, t)) {
        w.add_row_multiple(t, *bad, 1);
        left.add_row_multiple(t, *bad, 1);
        continue;
      }
      break;
    }
    if (sgn(w(t, t)) < 0) {
      w.negate_row(t);
      left.negate_row(t);
    }
    factors.push_back(w(t, t));
  }
  return SmithForm{std::move(factors), std::move(left), std::move(right)};
}

Integer cokernel_order(const SmithForm& form, const IntVector& v) {
  if (v.size() != form.left.cols()) throw std::invalid_argument("cokernel_order: size mismatch");
  const IntVector image = form.left.apply(v);
  Integer order = 1;
  for (std::size_t i = 0; i < image.size(); ++i) {
    if (i >= form.invariant_factors.size()) {
      if (sgn(image[i]) != 0) return 0;
      continue;
    }
    const Integer& d = form.invariant_factors[i];
    Integer g = gcd(image[i], d);
    Integer local = d / g;
    order = lcm(order, local);
  }
  return order;
}

}  // namespace smithlat
