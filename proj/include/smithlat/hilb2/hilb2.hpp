#pragma once

#include <cstddef>
#include <memory>
#include <mutex>
#include <string>

#include "smithlat/exactla/json.hpp"
#include "smithlat/exactla/smith.hpp"
#include "smithlat/lattice/lattice.hpp"

namespace smithlat::hilb2 {

inline constexpr std::size_t kK3Rank = 22;
inline constexpr std::size_t kH2Rank = 23;
inline constexpr std::size_t kH4Rank = 276;

// H^2 basis: f_0 = delta, then f_i (i = 1..22) from the K3 basis alpha_i.
// H^4 basis: A, B_1..B_22, C_ij (i < j, lexicographic), D_1..D_22.
std::size_t index_a();
std::size_t index_b(std::size_t i);
std::size_t index_c(std::size_t i, std::size_t j);
std::size_t index_d(std::size_t i);
std::string h4_label(std::size_t index);

/// Position of the pair (a, b), a <= b, among the 276 monomials f_a f_b in lexicographic order.
std::size_t sym2_index(std::size_t a, std::size_t b, std::size_t n = kH2Rank);

/// Integral model of H^2 and H^4 of the Hilbert square of a K3 surface over a
/// chosen basis of the K3 lattice.
class Hilb2Model {
 public:
  /// k3_gram must be an even unimodular 22 x 22 Gram matrix.
  explicit Hilb2Model(IntMatrix k3_gram);

  const IntMatrix& k3_gram() const { return k3_gram_; }
  /// Inverse of the K3 Gram; the coefficients of the diagonal class.
  const IntMatrix& mu() const { return mu_; }
  /// Beauville-Bogomolov Gram in the basis f_0, f_1, ..., f_22.
  IntMatrix bb_gram() const;

  IntVector cup_basis(std::size_t a, std::size_t b) const;
  IntVector cup(const IntVector& x, const IntVector& y) const;

  /// Columns cup(f_a, f_b) for a <= b in sym2_index order.
  IntMatrix sym2_embedding() const;
  /// Smith form of the embedding, computed once.
  const SmithForm& sym2_smith() const;
  lattice::FiniteAbelianGroup sym2_quotient() const;
  /// Order of an H^4 class in H^4 / Sym^2 H^2.
  Integer quotient_class_order(const IntVector& h4) const;

 private:
  IntMatrix k3_gram_;
  IntMatrix mu_;
  mutable std::once_flag smith_once_;
  mutable std::unique_ptr<SmithForm> smith_;
};

/// The model over the pinned K3 Gram U^3 + E8(-1)^2; built once and shared.
const Hilb2Model& standard_model();

/// <<e_a e_b, e_c e_d>> = q_ab q_cd + q_ac q_bd + q_ad q_bc on the monomial basis (a <= b).
IntMatrix ogrady_gram(const IntMatrix& q);
/// Coordinates of x.x in the monomial basis.
IntVector sym2_square(const IntVector& x);
/// |det| of the pairing on Sym^2 of the Beauville-Bogomolov lattice.
Integer ogrady_disc();

enum class MultMap { e2, c2, u };
/// Accepts "e2", "c2", "u"; throws std::invalid_argument otherwise.
MultMap parse_mult_map(const std::string& key);
std::string to_string(MultMap which);

/// Gram of (alpha, beta) -> integral of alpha.x.beta on H^2 for x = e^2, c_2 or u.
IntMatrix mult_map_gram(MultMap which);
Integer mult_map_disc(MultMap which);

struct TopIntersections {
  Integer e4;
  Integer c2_squared;
  Integer u_squared;
};
TopIntersections top_intersections();

/// Full cup table: mu and the H^4 coordinates of every product f_a f_b.
Json cup_table_json(const Hilb2Model& model);

}  // namespace smithlat::hilb2
