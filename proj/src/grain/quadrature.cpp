#include "grain/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include <boost/math/quadrature/exp_sinh.hpp>
#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/quadrature/tanh_sinh.hpp>

namespace grain {
namespace quad {

namespace {

using boost::math::quadrature::gauss_kronrod;

void check(double result, double err, double l1, double tol,
           const char* where) {
  if (!std::isfinite(result))
    throw QuadratureFailure(std::string(where) + ": non-finite result");
  // accept either the absolute target or the same target relative to the
  // L1 mass of the integral
  if (err > tol * std::max(1.0, l1))
    throw QuadratureFailure(std::string(where) + ": error estimate " +
                            std::to_string(err) + " exceeds tolerance " +
                            std::to_string(tol));
}

}  // namespace

double finite(const Fn& f, double a, double b, double tol) {
  if (!(a < b)) return 0.0;
  double err = 0.0, l1 = 0.0;
  double res =
      gauss_kronrod<double, 31>::integrate(f, a, b, 20, tol, &err, &l1);
  check(res, err, l1, tol, "finite");
  return res;
}

double upper_tail(const Fn& f, double a, double tol) {
  // Gauss-Kronrod maps a power-law tail onto an endpoint singularity its
  // error estimate never resolves; the double-exponential rule integrates
  // the same tails to near machine precision.
  boost::math::quadrature::exp_sinh<double> integrator;
  double err = 0.0, l1 = 0.0;
  double res = 0.0;
  try {
    res = integrator.integrate(f, a, std::numeric_limits<double>::infinity(),
                               tol, &err, &l1);
  } catch (const Error&) {
    throw;
  } catch (const std::exception& e) {
    throw QuadratureFailure(std::string("upper_tail: ") + e.what());
  }
  check(res, err, l1, tol, "upper_tail");
  return res;
}

double singular(const Fn& f, double a, double b, double tol) {
  if (!(a < b)) return 0.0;
  boost::math::quadrature::tanh_sinh<double> integrator;
  double err = 0.0, l1 = 0.0;
  double res = 0.0;
  try {
    res = integrator.integrate(f, a, b, tol, &err, &l1);
  } catch (const Error&) {
    throw;
  } catch (const std::exception& e) {
    throw QuadratureFailure(std::string("singular: ") + e.what());
  }
  // tanh_sinh reports a relative error estimate
  check(res, err * std::max(l1, std::fabs(res)), l1, tol, "singular");
  return res;
}

double segments(const Fn& f, const std::vector<double>& knots, double tol) {
  if (knots.size() < 2)
    throw QuadratureFailure("segments: need at least two knots");
  double total = 0.0;
  for (std::size_t i = 0; i + 1 < knots.size(); ++i) {
    double a = knots[i], b = knots[i + 1];
    if (!(a <= b)) throw QuadratureFailure("segments: knots not increasing");
    if (a == b) continue;
    if (std::isinf(b))
      total += upper_tail(f, a, tol);
    else
      total += finite(f, a, b, tol);
  }
  return total;
}

std::complex<double> finite_c(const CFn& f, double a, double b, double tol) {
  double re = finite([&](double x) { return f(x).real(); }, a, b, tol);
  double im = finite([&](double x) { return f(x).imag(); }, a, b, tol);
  return {re, im};
}

std::complex<double> upper_tail_c(const CFn& f, double a, double tol) {
  double re = upper_tail([&](double x) { return f(x).real(); }, a, tol);
  double im = upper_tail([&](double x) { return f(x).imag(); }, a, tol);
  return {re, im};
}

std::complex<double> segments_c(const CFn& f, const std::vector<double>& knots,
                                double tol) {
  double re = segments([&](double x) { return f(x).real(); }, knots, tol);
  double im = segments([&](double x) { return f(x).imag(); }, knots, tol);
  return {re, im};
}

}  // namespace quad
}  // namespace grain
