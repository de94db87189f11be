#pragma once

#include <complex>
#include <functional>
#include <vector>

#include "grain/errors.hpp"

namespace grain {
namespace quad {

// Absolute error target of a single one dimensional pass.  Nested or chained
// integrals accumulate these, which callers account for in their own
// tolerances.
inline constexpr double default_tol = 1e-8;

using Fn = std::function<double(double)>;
using CFn = std::function<std::complex<double>(double)>;

// Adaptive Gauss-Kronrod on [a,b]; the integrand must be smooth inside.
double finite(const Fn& f, double a, double b, double tol = default_tol);

// [a, inf).
double upper_tail(const Fn& f, double a, double tol = default_tol);

// Finite interval with integrable endpoint singularities.
double singular(const Fn& f, double a, double b, double tol = default_tol);

// Piecewise integration with interior breakpoints (kinks of the integrand).
// knots must be increasing; the last entry may be +inf.
double segments(const Fn& f, const std::vector<double>& knots,
                double tol = default_tol);

std::complex<double> finite_c(const CFn& f, double a, double b,
                              double tol = default_tol);
std::complex<double> upper_tail_c(const CFn& f, double a,
                                  double tol = default_tol);
std::complex<double> segments_c(const CFn& f, const std::vector<double>& knots,
                                double tol = default_tol);

}  // namespace quad
}  // namespace grain
