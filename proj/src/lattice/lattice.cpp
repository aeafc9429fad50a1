#include "smithlat/lattice/lattice.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <numeric>
#include <sstream>

#include "smithlat/exactla/smith.hpp"

namespace smithlat::lattice {

namespace {

// Symmetric elimination: x^T G x = sum_i d_i (x_i + sum_{j>i} m_ij x_j)^2.
struct SquareDecomposition {
  std::vector<Rational> pivots;
  std::vector<std::vector<Rational>> mu;  // mu[i][j], j > i
};

SquareDecomposition decompose(const IntMatrix& gram) {
  const std::size_t n = gram.rows();
  std::vector<std::vector<Rational>> a(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a[i][j] = gram(i, j);
  SquareDecomposition out{std::vector<Rational>(n), std::vector<std::vector<Rational>>(n, std::vector<Rational>(n))};
  for (std::size_t i = 0; i < n; ++i) {
    out.pivots[i] = a[i][i];
    if (sgn(out.pivots[i]) == 0) {
      out.pivots.resize(i + 1);
      return out;
    }
    for (std::size_t j = i + 1; j < n; ++j) out.mu[i][j] = a[i][j] / out.pivots[i];
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = i + 1; k < n; ++k) a[j][k] -= out.pivots[i] * out.mu[i][j] * out.mu[i][k];
  }
  return out;
}

Integer floor_of(const Rational& q) {
  Integer r;
  mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

// Integers x with (x - c)^2 <= s, as an inclusive range (empty when lo > hi).
std::pair<Integer, Integer> integer_window(const Rational& c, const Rational& s) {
  const double radius = std::sqrt(std::max(0.0, s.get_d()));
  const auto inside = [&](const Integer& x) {
    const Rational d = Rational(x) - c;
    return d * d <= s;
  };
  Integer lo = floor_of(c) - Integer(static_cast<long>(std::ceil(radius))) - 1;
  while (Rational(lo) < c && !inside(lo)) ++lo;
  while (inside(lo - 1)) --lo;
  Integer hi = floor_of(c) + Integer(static_cast<long>(std::ceil(radius))) + 1;
  while (Rational(hi) > c && !inside(hi)) --hi;
  while (inside(hi + 1)) ++hi;
  if (!inside(lo)) return {Integer(1), Integer(0)};
  return {lo, hi};
}

bool first_nonzero_positive(const IntVector& v) {
  for (const auto& x : v)
    if (sgn(x) != 0) return sgn(x) > 0;
  return false;
}

}  // namespace

GramLattice::GramLattice(IntMatrix gram) : gram_(std::move(gram)) {
  if (!gram_.is_symmetric()) throw std::invalid_argument("GramLattice: Gram matrix is not symmetric");
  det_ = det(gram_);
  if (sgn(det_) == 0) throw DegenerateLattice("GramLattice: Gram matrix is degenerate");
}

bool GramLattice::is_even() const {
  for (std::size_t i = 0; i < rank(); ++i)
    if (!mpz_even_p(gram_(i, i).get_mpz_t())) return false;
  return true;
}

bool GramLattice::is_positive_definite() const {
  const auto d = decompose(gram_);
  if (d.pivots.size() != rank()) return false;
  return std::all_of(d.pivots.begin(), d.pivots.end(), [](const Rational& x) { return sgn(x) > 0; });
}

Integer GramLattice::inner(const IntVector& x, const IntVector& y) const { return dot(x, gram_.apply(y)); }

FiniteAbelianGroup::FiniteAbelianGroup(std::vector<Integer> invariant_factors) {
  for (auto& d : invariant_factors) {
    if (sgn(d) <= 0) throw std::invalid_argument("FiniteAbelianGroup: factors must be positive");
    if (d == 1) continue;
    if (!factors_.empty() && !mpz_divisible_p(d.get_mpz_t(), factors_.back().get_mpz_t()))
      throw std::invalid_argument("FiniteAbelianGroup: factors do not form a divisibility chain");
    factors_.push_back(std::move(d));
  }
}

FiniteAbelianGroup FiniteAbelianGroup::from_cyclic_orders(const std::vector<Integer>& orders) {
  std::vector<Integer> diag;
  for (const auto& o : orders)
    if (o != 1) diag.push_back(o);
  const SmithForm s = snf(IntMatrix::diagonal(diag));
  return FiniteAbelianGroup(s.invariant_factors);
}

Integer FiniteAbelianGroup::order() const {
  Integer n = 1;
  for (const auto& d : factors_) n *= d;
  return n;
}

std::vector<std::pair<Integer, unsigned>> FiniteAbelianGroup::elementary_divisors() const {
  std::vector<std::pair<Integer, unsigned>> out;
  for (Integer d : factors_) {
    for (Integer q = 2; q * q <= d; ++q) {
      unsigned e = 0;
      while (mpz_divisible_p(d.get_mpz_t(), q.get_mpz_t())) {
        d /= q;
        ++e;
      }
      if (e) out.emplace_back(q, e);
    }
    if (d > 1) out.emplace_back(d, 1u);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::string FiniteAbelianGroup::to_string() const {
  if (factors_.empty()) return "0";
  std::ostringstream os;
  std::size_t i = 0;
  while (i < factors_.size()) {
    std::size_t j = i;
    while (j < factors_.size() && factors_[j] == factors_[i]) ++j;
    if (i) os << " + ";
    if (j - i > 1) os << "(Z/" << factors_[i].get_str() << ")^" << (j - i);
    else os << "Z/" << factors_[i].get_str();
    i = j;
  }
  return os.str();
}

FiniteAbelianGroup disc_group(const GramLattice& l) { return FiniteAbelianGroup(snf(l.gram()).invariant_factors); }

PElementary is_p_elementary(const GramLattice& l, unsigned long p) {
  const FiniteAbelianGroup a = disc_group(l);
  const Integer prime = p;
  for (const auto& d : a.invariant_factors())
    if (d != prime) return {false, 0};
  return {true, a.invariant_factors().size()};
}

GramLattice rescale(const GramLattice& l, const Integer& n) {
  if (sgn(n) == 0) throw std::invalid_argument("rescale: factor must be nonzero");
  return GramLattice(n * l.gram());
}

GramLattice direct_sum(const GramLattice& a, const GramLattice& b) {
  return GramLattice(IntMatrix::block_diagonal(a.gram(), b.gram()));
}

GramLattice sublattice(const GramLattice& l, const IntMatrix& basis) {
  if (basis.rows() != l.rank()) throw std::invalid_argument("sublattice: basis has wrong length");
  return GramLattice(basis.transpose() * l.gram() * basis);
}

IntMatrix saturate(const IntMatrix& columns) {
  const SmithForm s = snf(columns);
  return int_inverse(s.left).columns(0, s.rank());
}

IntMatrix orth_complement_basis(const GramLattice& l, const IntMatrix& vectors) {
  if (vectors.rows() != l.rank()) throw std::invalid_argument("orth_complement: vector has wrong length");
  const IntMatrix constraints = vectors.transpose() * l.gram();
  const SmithForm s = snf(constraints);
  return s.right.columns(s.rank(), l.rank() - s.rank());
}

GramLattice orth_complement(const GramLattice& l, const IntMatrix& vectors) {
  if (vectors.is_zero()) throw std::invalid_argument("orth_complement: zero vector");
  const IntMatrix basis = orth_complement_basis(l, vectors);
  const IntMatrix gram = basis.transpose() * l.gram() * basis;
  if (sgn(det(gram)) == 0) throw DegenerateLattice("orth_complement: complement is degenerate");
  return GramLattice(gram);
}

GramLattice orth_complement(const GramLattice& l, const IntVector& v) {
  return orth_complement(l, IntMatrix::from_columns({v}, v.size()));
}

std::vector<IntVector> short_vectors(const GramLattice& l, const Integer& norm) {
  const std::size_t n = l.rank();
  const auto dec = decompose(l.gram());
  if (dec.pivots.size() != n ||
      !std::all_of(dec.pivots.begin(), dec.pivots.end(), [](const Rational& x) { return sgn(x) > 0; }))
    throw std::domain_error("short_vectors: lattice is not positive definite");

  std::vector<IntVector> found;
  if (sgn(norm) <= 0 || n == 0) return found;

  IntVector x(n);
  const Rational target = norm;
  // remaining budget before choosing coordinate i
  std::function<void(std::size_t, const Rational&)> descend = [&](std::size_t level, const Rational& budget) {
    const std::size_t i = level - 1;
    Rational center = 0;
    for (std::size_t j = i + 1; j < n; ++j) center -= dec.mu[i][j] * x[j];
    const auto [lo, hi] = integer_window(center, budget / dec.pivots[i]);
    for (Integer v = lo; v <= hi; ++v) {
      x[i] = v;
      const Rational d = Rational(v) - center;
      const Rational rest = budget - dec.pivots[i] * d * d;
      if (i == 0) {
        if (sgn(rest) == 0 && first_nonzero_positive(x)) found.push_back(x);
      } else {
        descend(i, rest);
      }
    }
    x[i] = 0;
  };
  descend(n, target);
  std::sort(found.begin(), found.end());
  return found;
}

Rational reduce_mod2(const Rational& q) {
  const Rational half = q / 2;
  Rational r = q - Rational(2 * floor_of(half));
  r.canonicalize();
  return r;
}

std::vector<DiscFormGenerator> disc_form(const GramLattice& l) {
  if (!l.is_even()) throw std::invalid_argument("disc_form: lattice is not even");
  const SmithForm s = snf(l.gram());
  std::vector<DiscFormGenerator> out;
  for (std::size_t i = 0; i < s.invariant_factors.size(); ++i) {
    const Integer& d = s.invariant_factors[i];
    if (d == 1) continue;
    DiscFormGenerator g;
    g.order = d;
    for (std::size_t k = 0; k < l.rank(); ++k) {
      Rational c(s.right(k, i), d);
      c.canonicalize();
      g.lift.push_back(c);
    }
    Rational q = 0;
    for (std::size_t a = 0; a < l.rank(); ++a)
      for (std::size_t b = 0; b < l.rank(); ++b)
        if (sgn(l.gram()(a, b)) != 0) q += g.lift[a] * l.gram()(a, b) * g.lift[b];
    g.q_value = reduce_mod2(q);
    out.push_back(std::move(g));
  }
  return out;
}

std::vector<std::pair<Rational, std::size_t>> disc_form_value_counts(const GramLattice& l, std::size_t max_order) {
  const auto gens = disc_form(l);
  if (disc_group(l).order() > max_order)
    throw std::invalid_argument("disc_form_value_counts: discriminant group too large to enumerate");

  const std::size_t k = gens.size();
  std::vector<std::vector<Rational>> b(k, std::vector<Rational>(k));
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j)
      for (std::size_t a = 0; a < l.rank(); ++a)
        for (std::size_t c = 0; c < l.rank(); ++c)
          if (sgn(l.gram()(a, c)) != 0) b[i][j] += gens[i].lift[a] * l.gram()(a, c) * gens[j].lift[c];

  std::map<Rational, std::size_t> histogram;
  std::vector<unsigned long> coeff(k, 0);
  for (;;) {
    Rational q = 0;
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j)
        if (coeff[i] && coeff[j]) q += Rational(static_cast<long>(coeff[i] * coeff[j])) * b[i][j];
    ++histogram[reduce_mod2(q)];
    std::size_t pos = 0;
    while (pos < k && ++coeff[pos] == gens[pos].order.get_ui()) coeff[pos++] = 0;
    if (pos == k) break;
  }
  return {histogram.begin(), histogram.end()};
}

}  // namespace smithlat::lattice

namespace smithlat::lattice {

namespace {

// A_L in coordinates over the invariant-factor generators.
struct FormTable {
  std::vector<unsigned long> orders;
  std::vector<std::vector<Rational>> b;  // b(x_i, x_j) exactly, from lifts

  Rational pair(const std::vector<unsigned long>& x, const std::vector<unsigned long>& y) const {
    Rational s = 0;
    for (std::size_t i = 0; i < x.size(); ++i)
      for (std::size_t j = 0; j < y.size(); ++j)
        if (x[i] && y[j]) s += Rational(static_cast<long>(x[i] * y[j])) * b[i][j];
    return s;
  }
};

FormTable form_table(const GramLattice& l) {
  const auto gens = disc_form(l);
  FormTable t;
  t.b.assign(gens.size(), std::vector<Rational>(gens.size()));
  for (std::size_t i = 0; i < gens.size(); ++i) {
    t.orders.push_back(gens[i].order.get_ui());
    for (std::size_t j = 0; j < gens.size(); ++j)
      for (std::size_t a = 0; a < l.rank(); ++a)
        for (std::size_t c = 0; c < l.rank(); ++c)
          if (sgn(l.gram()(a, c)) != 0) t.b[i][j] += gens[i].lift[a] * l.gram()(a, c) * gens[j].lift[c];
  }
  return t;
}

Rational reduce_mod1(const Rational& q) {
  Rational r = q - Rational(floor_of(q));
  r.canonicalize();
  return r;
}

unsigned long element_order(const std::vector<unsigned long>& x, const std::vector<unsigned long>& orders) {
  unsigned long n = 1;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const unsigned long o = orders[i] / std::gcd(x[i], orders[i]);
    n = std::lcm(n, o);
  }
  return n;
}

}  // namespace

bool disc_forms_isometric(const GramLattice& l1, const GramLattice& l2, std::size_t max_order) {
  const FiniteAbelianGroup g1 = disc_group(l1), g2 = disc_group(l2);
  if (!(g1 == g2)) return false;
  if (g1.order() > max_order) throw std::invalid_argument("disc_forms_isometric: group too large to search");
  const FormTable s = form_table(l1), t = form_table(l2);
  const std::size_t k = s.orders.size();

  std::vector<std::vector<unsigned long>> elements;
  std::vector<unsigned long> x(k, 0);
  if (k > 0) {
    for (;;) {
      elements.push_back(x);
      std::size_t pos = 0;
      while (pos < k && ++x[pos] == t.orders[pos]) x[pos++] = 0;
      if (pos == k) break;
    }
  }

  // candidate images of generator i: right order and right q value
  std::vector<std::vector<std::size_t>> candidates(k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t e = 0; e < elements.size(); ++e)
      if (element_order(elements[e], t.orders) == s.orders[i] &&
          reduce_mod2(t.pair(elements[e], elements[e])) == reduce_mod2(s.b[i][i]))
        candidates[i].push_back(e);

  std::vector<std::size_t> image(k);
  std::function<bool(std::size_t)> extend = [&](std::size_t i) {
    if (i == k) return true;
    for (const std::size_t e : candidates[i]) {
      bool ok = true;
      for (std::size_t j = 0; j < i && ok; ++j)
        ok = reduce_mod1(t.pair(elements[image[j]], elements[e])) == reduce_mod1(s.b[j][i]);
      if (!ok) continue;
      image[i] = e;
      if (extend(i + 1)) return true;
    }
    return false;
  };
  return extend(0);
}

}  // namespace smithlat::lattice
