#pragma once

#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "smithlat/cli/report.hpp"
#include "smithlat/fixedlocus/fixed_locus.hpp"
#include "smithlat/fpg/jordan.hpp"
#include "smithlat/lattice/lattice.hpp"

namespace smithlat::cli {

/// "q:n,q:n,..." e.g. "11:2,1:1".
fpg::JordanType parse_jordan_type(fpg::Prime p, const std::string& text);
/// "1,-2,0"
IntVector parse_int_vector(const std::string& text);

Report snf_report(const IntMatrix& a);

struct LatticeOptions {
  std::optional<unsigned long> p;      // p-elementary test
  std::optional<Integer> short_norm;   // short vectors of this norm
  std::optional<IntVector> orth;       // orthogonal complement of this vector
  std::optional<Integer> rescale;      // report the rescaled lattice instead
};
Report lattice_report(const std::string& label, const lattice::GramLattice& l, const LatticeOptions& options);
/// Discriminants of the named lattices and of the rescaled forms.
Report named_lattices_report();

struct JordanOptions {
  bool sym2 = false;
  std::optional<fpg::JordanType> tensor_with;
};
Report jordan_report(const fpg::JordanType& type, const JordanOptions& options);
Report jordan_matrix_report(const FpMatrix& g);

Report cohomology_report(fpg::Prime p, const fpg::JordanType& type, int max_degree);
/// Explicit cohomology, Tor and weighted-sum tables for every prime p <= max_prime.
Report cohomology_tables_report(fpg::Prime max_prime = 19);

Report hilb2_verify_report();

Report fixedlocus_eval_report(const fixedlocus::ActionParams& params, fixedlocus::Mode mode);
Report fixedlocus_enumerate_report(fixedlocus::Prime p, std::optional<fixedlocus::Count> target);
/// Closed form against assembled form over every admissible (p, a, m).
Report fixedlocus_identity_report();
Report k3_report(fixedlocus::Prime p, fixedlocus::Count a, fixedlocus::Count m, bool has_fixed_point);

Report order11_report();

/// The full regression suite in a fixed order. threads = 0 picks hardware concurrency.
std::vector<Report> verify_all(unsigned threads);
/// SMITHLAT_THREADS, defaulting to 0.
unsigned threads_from_env();

/// Entry point shared by the executable and the tests. args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace smithlat::cli
