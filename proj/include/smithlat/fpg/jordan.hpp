#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <vector>

#include "smithlat/exactla/fp_matrix.hpp"

namespace smithlat::fpg {

using Count = std::int64_t;
using Prime = FpMatrix::Residue;

/// Multiplicities of the Jordan blocks N_q (1 <= q <= p) of an F_p[G]-module,
/// G cyclic of order p.
class JordanType {
 public:
  explicit JordanType(Prime p);
  JordanType(Prime p, const std::map<int, Count>& counts);

  static JordanType trivial(Prime p, Count dimension);
  static JordanType block(Prime p, int q);

  Prime p() const { return p_; }
  Count count(int q) const;
  void set(int q, Count n);
  void add(int q, Count n) { set(q, count(q) + n); }

  Count dimension() const;
  /// Number of blocks; equals the dimension of the invariant subspace.
  Count block_count() const;
  /// Nonzero multiplicities only.
  const std::map<int, Count>& counts() const { return counts_; }

  /// True when every block length lies in {1, p-1, p}.
  bool closed_form_supported() const;

  friend bool operator==(const JordanType& a, const JordanType& b) {
    return a.p_ == b.p_ && a.counts() == b.counts();
  }

 private:
  void check_length(int q) const;

  Prime p_;
  std::map<int, Count> counts_;  // nonzero multiplicities only
};

/// Jordan types of H^k indexed by degree k, sharing one prime.
struct GradedJordanType {
  Prime p;
  std::vector<JordanType> per_degree;

  explicit GradedJordanType(Prime prime, std::vector<JordanType> degrees = {});
  Count total(int q) const;
};

class UnsupportedBlockLengths : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

enum class Method { closed_form, oracle };

/// The q x q block N_q: g v_1 = v_1, g v_i = v_{i-1} + v_i.
FpMatrix jordan_block(Prime p, int q);

/// Block-diagonal action matrix realising the given type (blocks in increasing length).
FpMatrix module_matrix(const JordanType& type);

/// Jordan type of g from the rank profile of (g - 1)^j. Requires g^p = 1.
JordanType jordan_type_of(const FpMatrix& g);

/// Action of g on Sym^2 V in the basis e_i e_j (i <= j), pairs ordered lexicographically.
FpMatrix symmetric_square_action(const FpMatrix& g);

JordanType tensor_type(const JordanType& a, const JordanType& b, Method method = Method::closed_form);
JordanType sym2_type(const JordanType& a, Method method = Method::closed_form);

}  // namespace smithlat::fpg
