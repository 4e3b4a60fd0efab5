#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "orthotwin/lattice.hpp"

namespace otw {

// One line of the published-value regression suite.
struct RegressionResult {
  std::string name;
  std::string source;  // published-table | closed-form | identity | exact-count
  double expected = 0;
  double computed = 0;
  double tolerance = 0;
  bool pass = false;
  // Marks the documented inconsistency in the published element tables (the
  // printed Type-I shear block repeats the Type-II one); the check is still
  // run and reported verbatim.
  bool known_erratum = false;
  std::string note;
};

// Runs the full regression suite at the given parameters. All expected values
// are the published CuAlNi reference constants, so running at any other
// parameters reports failures by design.
std::vector<RegressionResult> verify_paper(const LatticeParams& params);

void print_results(const std::vector<RegressionResult>& results, std::ostream& os);

int count_failures(const std::vector<RegressionResult>& results);
int count_unexpected_failures(const std::vector<RegressionResult>& results);

// 0 when everything passes, 2 on any regression failure.
int verify_exit_code(const std::vector<RegressionResult>& results);

}  // namespace otw
