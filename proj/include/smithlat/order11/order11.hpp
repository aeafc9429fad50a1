#pragma once

#include <string>
#include <utility>
#include <vector>

#include "smithlat/fixedlocus/fixed_locus.hpp"
#include "smithlat/lattice/lattice.hpp"

namespace smithlat::order11 {

inline constexpr fixedlocus::Prime kPrime = 11;
inline constexpr fixedlocus::Count kIsolatedPoints = 5;

struct NormSixVector {
  IntVector vector;
  Integer complement_disc;
};

struct CandidateAnalysis {
  std::string name;  // "A" or "B"
  lattice::GramLattice gram;
  Integer disc;
  bool positive_definite = false;
  lattice::FiniteAbelianGroup group;
  std::vector<NormSixVector> norm_six;
  std::vector<std::pair<Rational, std::size_t>> form_values;
  bool attains_target = false;
};

struct ScenarioResult {
  std::vector<fixedlocus::AdmissiblePair> pairs;  // p = 11 pairs with h* = 5
  Integer disc_ns;
  Integer disc_h2;
  Integer disc_ns0;           // NS intersected with the orthogonal of the Pluecker class
  Integer disc_h2_primitive;  // quoted: disc of the primitive part of H^2(X)
  std::vector<Integer> from_ns;         // disc(NS) * disc(H^2) / k^2, k | disc(H^2)
  std::vector<Integer> from_primitive;  // disc(NS_0) * k, k | disc(H^2_0)
  std::vector<Integer> trans_candidates;  // intersection
  Integer target_trans_disc;
  CandidateAnalysis a;
  CandidateAnalysis b;
  bool forms_isometric = false;   // discriminant forms of A and B
  bool lattices_isometric = true;  // false once an isometry invariant separates A and B
};

CandidateAnalysis analyse_candidate(const std::string& name, const lattice::GramLattice& l,
                                    const Integer& target_trans_disc);

ScenarioResult verify_scenario();

}  // namespace smithlat::order11
