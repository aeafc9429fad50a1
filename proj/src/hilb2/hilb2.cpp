#include "smithlat/hilb2/hilb2.hpp"

#include <stdexcept>

#include "smithlat/lattice/named.hpp"

namespace smithlat::hilb2 {

namespace {

// Fujiki constant of the Hilbert square.
const Integer kFujiki = 3;
// integral of q^{-1}.alpha^2 = 25 q(alpha); c_2 and u are 6/5 and 4 times q^{-1}.
const Integer kDualClassFactor = 25;
const Integer kC2Factor = 30;
const Integer kUFactor = 100;

void check_k3_index(std::size_t i) {
  if (i < 1 || i > kK3Rank) throw std::out_of_range("K3 basis index must lie in 1..22");
}

Integer exact_quotient(const Integer& a, const Integer& b) {
  if (!mpz_divisible_p(a.get_mpz_t(), b.get_mpz_t())) throw std::logic_error("non-integral intersection number");
  return a / b;
}

}  // namespace

std::size_t index_a() { return 0; }

std::size_t index_b(std::size_t i) {
  check_k3_index(i);
  return i;
}

std::size_t index_c(std::size_t i, std::size_t j) {
  check_k3_index(i);
  check_k3_index(j);
  if (i >= j) throw std::out_of_range("C_ij requires i < j");
  std::size_t offset = 0;
  for (std::size_t k = 1; k < i; ++k) offset += kK3Rank - k;
  return 1 + kK3Rank + offset + (j - i - 1);
}

std::size_t index_d(std::size_t i) {
  check_k3_index(i);
  return kH4Rank - kK3Rank - 1 + i;
}

std::string h4_label(std::size_t index) {
  if (index >= kH4Rank) throw std::out_of_range("H4 index out of range");
  if (index == 0) return "A";
  if (index <= kK3Rank) return "B_" + std::to_string(index);
  if (index >= index_d(1)) return "D_" + std::to_string(index - index_d(1) + 1);
  for (std::size_t i = 1; i < kK3Rank; ++i)
    for (std::size_t j = i + 1; j <= kK3Rank; ++j)
      if (index_c(i, j) == index) return "C_" + std::to_string(i) + "," + std::to_string(j);
  throw std::logic_error("h4_label: unreachable");
}

std::size_t sym2_index(std::size_t a, std::size_t b, std::size_t n) {
  if (a > b || b >= n) throw std::out_of_range("sym2_index requires a <= b < n");
  // pairs (x, y) with x < a contribute n - x each
  return a * n - a * (a - 1) / 2 + (b - a);
}

Hilb2Model::Hilb2Model(IntMatrix k3_gram) : k3_gram_(std::move(k3_gram)) {
  if (k3_gram_.rows() != kK3Rank || k3_gram_.cols() != kK3Rank)
    throw std::invalid_argument("Hilb2Model: K3 Gram must be 22 x 22");
  const lattice::GramLattice l(k3_gram_);
  if (!l.is_even() || abs(l.determinant()) != 1)
    throw std::invalid_argument("Hilb2Model: K3 Gram must be even unimodular");
  mu_ = int_inverse(k3_gram_);
  if (!mu_.is_symmetric()) throw std::logic_error("Hilb2Model: mu not symmetric");
  if (!(mu_ * k3_gram_ == IntMatrix::identity(kK3Rank))) throw std::logic_error("Hilb2Model: mu G != 1");
  // the f_0 f_0 expansion halves the diagonal of mu
  for (std::size_t i = 0; i < kK3Rank; ++i)
    if (!mpz_even_p(mu_(i, i).get_mpz_t())) throw std::logic_error("Hilb2Model: mu has odd diagonal");
}

IntMatrix Hilb2Model::bb_gram() const {
  return IntMatrix::block_diagonal(IntMatrix{{-2}}, k3_gram_);
}

IntVector Hilb2Model::cup_basis(std::size_t a, std::size_t b) const {
  if (a >= kH2Rank || b >= kH2Rank) throw std::out_of_range("cup_basis: index out of range");
  if (a > b) std::swap(a, b);
  IntVector out(kH4Rank);
  if (a == 0 && b == 0) {
    out[index_a()] = 1;
    for (std::size_t i = 1; i <= kK3Rank; ++i) {
      const Integer& m = mu_(i - 1, i - 1);
      out[index_d(i)] += m;
      out[index_b(i)] += m / 2;
      for (std::size_t j = i + 1; j <= kK3Rank; ++j) out[index_c(i, j)] += mu_(i - 1, j - 1);
    }
  } else if (a == 0) {
    out[index_b(b)] = 1;
  } else if (a == b) {
    // q_1(alpha)^2 = 2 m_{1,1}(alpha) + q_2(alpha)
    out[index_a()] = k3_gram_(a - 1, a - 1);
    out[index_d(a)] = 2;
    out[index_b(a)] = 1;
  } else {
    out[index_a()] = k3_gram_(a - 1, b - 1);
    out[index_c(a, b)] = 1;
  }
  return out;
}

IntVector Hilb2Model::cup(const IntVector& x, const IntVector& y) const {
  if (x.size() != kH2Rank || y.size() != kH2Rank) throw std::invalid_argument("cup: H2 vectors have length 23");
  IntVector out(kH4Rank);
  for (std::size_t a = 0; a < kH2Rank; ++a) {
    if (sgn(x[a]) == 0) continue;
    for (std::size_t b = 0; b < kH2Rank; ++b) {
      if (sgn(y[b]) == 0) continue;
      const Integer c = x[a] * y[b];
      const IntVector prod = cup_basis(a, b);
      for (std::size_t k = 0; k < kH4Rank; ++k)
        if (sgn(prod[k]) != 0) out[k] += c * prod[k];
    }
  }
  return out;
}

IntMatrix Hilb2Model::sym2_embedding() const {
  IntMatrix m(kH4Rank, kH4Rank);
  for (std::size_t a = 0; a < kH2Rank; ++a)
    for (std::size_t b = a; b < kH2Rank; ++b) {
      const std::size_t col = sym2_index(a, b);
      const IntVector v = cup_basis(a, b);
      for (std::size_t k = 0; k < kH4Rank; ++k) m(k, col) = v[k];
    }
  return m;
}

const SmithForm& Hilb2Model::sym2_smith() const {
  std::call_once(smith_once_, [this] { smith_ = std::make_unique<SmithForm>(snf(sym2_embedding())); });
  return *smith_;
}

lattice::FiniteAbelianGroup Hilb2Model::sym2_quotient() const {
  return lattice::FiniteAbelianGroup(sym2_smith().invariant_factors);
}

Integer Hilb2Model::quotient_class_order(const IntVector& h4) const {
  if (h4.size() != kH4Rank) throw std::invalid_argument("quotient_class_order: H4 vectors have length 276");
  return cokernel_order(sym2_smith(), h4);
}

const Hilb2Model& standard_model() {
  static const Hilb2Model model(lattice::k3_lattice().gram());
  return model;
}

IntMatrix ogrady_gram(const IntMatrix& q) {
  if (!q.is_symmetric()) throw std::invalid_argument("ogrady_gram: form must be symmetric");
  const std::size_t n = q.rows();
  const std::size_t m = n * (n + 1) / 2;
  IntMatrix g(m, m);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c)
        for (std::size_t d = c; d < n; ++d)
          g(sym2_index(a, b, n), sym2_index(c, d, n)) = q(a, b) * q(c, d) + q(a, c) * q(b, d) + q(a, d) * q(b, c);
  return g;
}

IntVector sym2_square(const IntVector& x) {
  const std::size_t n = x.size();
  IntVector out(n * (n + 1) / 2);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a; b < n; ++b) out[sym2_index(a, b, n)] = (a == b ? 1 : 2) * x[a] * x[b];
  return out;
}

Integer ogrady_disc() { return abs(det(ogrady_gram(standard_model().bb_gram()))); }

MultMap parse_mult_map(const std::string& key) {
  if (key == "e2") return MultMap::e2;
  if (key == "c2") return MultMap::c2;
  if (key == "u") return MultMap::u;
  throw std::invalid_argument("unknown multiplication map: " + key + " (expected e2, c2 or u)");
}

std::string to_string(MultMap which) {
  switch (which) {
    case MultMap::e2: return "e2";
    case MultMap::c2: return "c2";
    case MultMap::u: return "u";
  }
  return "?";
}

IntMatrix mult_map_gram(MultMap which) {
  const IntMatrix q = standard_model().bb_gram();
  switch (which) {
    case MultMap::e2: {
      // polarised Fujiki relation: (c/3)(q(e)<a,b> + 2<a,e><e,b>), e = 2 delta
      IntVector e(kH2Rank);
      e[0] = 2;
      const IntVector qe = q.apply(e);
      const Integer qee = dot(e, qe);
      IntMatrix g = qee * q;
      for (std::size_t i = 0; i < kH2Rank; ++i)
        for (std::size_t j = 0; j < kH2Rank; ++j) g(i, j) += 2 * qe[i] * qe[j];
      return (kFujiki / 3) * g;
    }
    // the c_2 form is 30 q up to a sign; +30 is used
    case MultMap::c2: return kC2Factor * q;
    case MultMap::u: return kUFactor * q;
  }
  throw std::invalid_argument("mult_map_gram: unknown map");
}

Integer mult_map_disc(MultMap which) { return abs(det(mult_map_gram(which))); }

TopIntersections top_intersections() {
  const IntMatrix q = standard_model().bb_gram();
  IntVector e(kH2Rank);
  e[0] = 2;
  const Integer qe = dot(e, q.apply(e));

  // integral of (q^{-1})^2 = 25 * sum_ij (Q^{-1})_ij Q_ij
  const auto inv = rational_inverse(q);
  Rational pairing = 0;
  for (std::size_t i = 0; i < kH2Rank; ++i)
    for (std::size_t j = 0; j < kH2Rank; ++j) pairing += inv[i][j] * q(i, j);
  if (pairing.get_den() != 1) throw std::logic_error("top_intersections: non-integral trace");
  const Integer dual_square = kDualClassFactor * pairing.get_num();

  // x = (k / 25) q^{-1}, so integral of x^2 = k^2 / 625 * integral of (q^{-1})^2
  const Integer denom = kDualClassFactor * kDualClassFactor;
  return {kFujiki * qe * qe, exact_quotient(kC2Factor * kC2Factor * dual_square, denom),
          exact_quotient(kUFactor * kUFactor * dual_square, denom)};
}

Json cup_table_json(const Hilb2Model& model) {
  Json j;
  j["k3_gram"] = to_json(model.k3_gram());
  j["mu"] = to_json(model.mu());
  Json h4 = Json::array();
  for (std::size_t k = 0; k < kH4Rank; ++k) h4.push_back(h4_label(k));
  j["h4_basis"] = h4;
  Json products = Json::array();
  for (std::size_t a = 0; a < kH2Rank; ++a)
    for (std::size_t b = a; b < kH2Rank; ++b) {
      Json terms = Json::object();
      const IntVector v = model.cup_basis(a, b);
      for (std::size_t k = 0; k < kH4Rank; ++k)
        if (sgn(v[k]) != 0) terms[h4_label(k)] = v[k].get_str();
      products.push_back({{"a", a}, {"b", b}, {"product", terms}});
    }
  j["products"] = products;
  return j;
}

}  // namespace smithlat::hilb2
