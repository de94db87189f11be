#pragma once

#include <stdexcept>
#include <string>

namespace grain {

// Base class for everything thrown by this library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Parameter validation.
struct AlphaOutOfRange : Error { using Error::Error; };
struct POutOfRange : Error { using Error::Error; };
struct BadGrain : Error { using Error::Error; };
struct ZOutOfRange : Error { using Error::Error; };

// An operation was asked to evaluate a quantity outside the regime where it
// is defined (e.g. a slide-regime constant inside the sheet regime).
struct RegimeMismatch : Error { using Error::Error; };

// Numerical integration did not reach the requested tolerance.
struct QuadratureFailure : Error { using Error::Error; };

// Simulation cost guards.
struct BudgetExceeded : Error { using Error::Error; };
struct TruncationBudgetExceeded : Error { using Error::Error; };

// Dense Gaussian sampling.
struct CovarianceNotPSD : Error { using Error::Error; };

// Statistics on empirical samples.
struct InsufficientData : Error { using Error::Error; };
struct DegenerateDesign : Error { using Error::Error; };
struct GridMismatch : Error { using Error::Error; };

// Process exit codes used by the command line tool.
enum ExitCode {
  exit_ok = 0,
  exit_error = 1,
  exit_validation = 2,
  exit_budget = 3,
  exit_numeric = 4,
  exit_regime = 5,
};

int exit_code_for(const std::exception& e);

}  // namespace grain
