#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "grain/io.hpp"

namespace grain {

// One verification check.  A check that fails exactly as documented
// (expected_fail set and the observation inside its pinned diagnostic band)
// does not fail the suite; a check that fails any other way does.
struct CheckResult {
  std::string name;
  bool passed = false;
  bool expected_fail = false;
  double observed = 0.0;
  double bound = 0.0;
  std::string detail;
  double seconds = 0.0;
};

struct VerifyOptions {
  std::string suite = "fast-smoke";  // fast-smoke | acceptance | full
  std::uint64_t seed = 1;
  int threads = 1;
  int criterion = 0;  // acceptance: restrict to one criterion, 0 = all
};

// Runs acceptance criterion 1..12 with pinned parameters and tolerances.
CheckResult run_acceptance_criterion(int index, std::uint64_t seed,
                                     int threads);

std::vector<CheckResult> run_suite(const VerifyOptions& options);

// Machine-readable results: name, status, observed, bound, seconds.
CsvTable results_table(const std::vector<CheckResult>& results);

// 0 when every check passed or failed exactly as documented, 1 otherwise.
int suite_exit_code(const std::vector<CheckResult>& results);

}  // namespace grain
