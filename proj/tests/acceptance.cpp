// Acceptance gate: each invocation runs one numbered criterion and prints a
// single verdict line.  A red check that matches its pinned diagnostic is
// reported as FAIL (expected) and exits 0, so the documented failure stays
// visible without masking regressions in it.

#include <cstdint>
#include <cstdlib>
#include <iostream>
#include <string>

#include "grain/verify.hpp"

int main(int argc, char** argv) {
  int criterion = 0;
  std::uint64_t seed = 1;
  int threads = 1;
  for (int i = 1; i < argc; ++i) {
    std::string arg = argv[i];
    auto next = [&]() -> const char* {
      if (i + 1 >= argc) {
        std::cerr << "missing value after " << arg << "\n";
        std::exit(2);
      }
      return argv[++i];
    };
    if (arg == "--criterion") {
      criterion = std::atoi(next());
    } else if (arg == "--seed") {
      seed = std::strtoull(next(), nullptr, 10);
    } else if (arg == "--threads") {
      threads = std::atoi(next());
    } else {
      std::cerr << "unknown argument " << arg << "\n";
      return 2;
    }
  }
  if (criterion < 1 || criterion > 12) {
    std::cerr << "usage: acceptance --criterion N (1..12) [--seed S] "
                 "[--threads T]\n";
    return 2;
  }
  try {
    grain::CheckResult r =
        grain::run_acceptance_criterion(criterion, seed, threads);
    const char* verdict = r.passed          ? "PASS"
                          : r.expected_fail ? "FAIL (expected)"
                                            : "FAIL";
    std::cout << "criterion " << criterion << ": " << verdict << " " << r.name
              << " observed=" << grain::format_double(r.observed)
              << " bound=" << grain::format_double(r.bound) << " ("
              << grain::format_double(r.seconds) << " s)\n";
    if (!r.detail.empty()) std::cout << "  " << r.detail << "\n";
    return (r.passed || r.expected_fail) ? 0 : 1;
  } catch (const std::exception& e) {
    std::cerr << "criterion " << criterion << " raised: " << e.what() << "\n";
    return 1;
  }
}
