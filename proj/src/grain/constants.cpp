#include "grain/constants.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "grain/exponents.hpp"
#include "grain/quadrature.hpp"

namespace grain {

namespace {

bool near(double a, double b) {
  double scale = std::max({1.0, std::fabs(a), std::fabs(b)});
  return std::fabs(a - b) <= 1e-12 * scale;
}

}  // namespace

double stable_c(double a) {
  if (!(a > 1.0) || !(a < 2.0))
    throw AlphaOutOfRange("stable exponent must lie in (1,2), got " +
                          std::to_string(a));
  return std::cos(2.0 * std::atan(1.0) * a) * std::tgamma(2.0 - a) /
         (a * (1.0 - a));
}

double sigma_alpha(const ModelParams& params) {
  validate(params, true);
  return params.c_f() * std::pow(params.shape.area, params.alpha) *
         stable_c(params.alpha);
}

double sigma_alpha_plus(const ModelParams& params) {
  validate(params);
  double alpha = params.alpha, p = params.p;
  if (near(alpha, 2.0 - p) || alpha > 2.0 - p)
    throw RegimeMismatch(
        "stable line scale requires alpha < 2-p; use the fractional sheet "
        "scale instead");
  double alpha_plus = (alpha - p) / (1.0 - p);
  return params.c_f() / (1.0 - p) * stable_c(alpha_plus) *
         section_power_integral(params.shape, alpha_plus);
}

double sigma_plus_sq(const ModelParams& params) {
  validate(params, true);
  double alpha = params.alpha, p = params.p;
  if (near(alpha, 2.0 - p) || alpha < 2.0 - p)
    throw RegimeMismatch("fractional sheet scale requires 2-p < alpha < 2");
  if (params.shape.kind == ShapeKind::UnitSquare) {
    // For unit square grains the (u,r) integral is elementary.
    double v = 1.0 / (2.0 - alpha) - 1.0 / (3.0 * (2.0 + p - alpha)) +
               1.0 / (alpha + p - 2.0) - 1.0 / (3.0 * (alpha + 2.0 * p - 2.0));
    return params.c_f() * v;
  }
  const GrainShape& shape = params.shape;
  double bx0 = shape.bbox[0], bx1 = shape.bbox[2];
  double extent = bx1 - bx0;
  // The anchor integral of the squared covered section length reduces to
  // the autocorrelation of the horizontal section profile weighted by a
  // triangular kernel:
  //   psi(r) = 2 int_0^{min(extent, r^-p)} A(d) (1 - r^p d) dd,
  //   A(d)   = int l(x) l(x + d) dx.
  // Tabulating A once makes every psi evaluation a table lookup, so the
  // outer size integrals never nest adaptive quadrature.
  constexpr std::size_t cells = 2048;
  double step = extent / static_cast<double>(cells);
  std::vector<double> acf(cells + 1, 0.0);
  for (std::size_t i = 0; i <= cells; ++i) {
    double d = static_cast<double>(i) * step;
    if (bx1 - d <= bx0) continue;
    acf[i] = quad::singular(
        [&](double x) {
          return shape.section_length(x) * shape.section_length(x + d);
        },
        bx0, bx1 - d, 1e-9);
  }
  // exact first two moments of the piecewise-linear interpolant of A
  std::vector<double> cum0(cells + 1, 0.0), cum1(cells + 1, 0.0);
  for (std::size_t i = 0; i < cells; ++i) {
    double d0 = static_cast<double>(i) * step;
    double a = acf[i], slope = (acf[i + 1] - acf[i]) / step;
    double seg0 = a * step + 0.5 * slope * step * step;
    cum0[i + 1] = cum0[i] + seg0;
    cum1[i + 1] = cum1[i] + d0 * seg0 + 0.5 * a * step * step +
                  slope * step * step * step / 3.0;
  }
  auto psi = [&](double r) {
    double lp = std::pow(r, p);
    double c = std::min(extent, 1.0 / lp);
    auto j = std::min<std::size_t>(cells - 1,
                                   static_cast<std::size_t>(c / step));
    double d0 = static_cast<double>(j) * step, xi = c - d0;
    double a = acf[j], slope = (acf[j + 1] - acf[j]) / step;
    double part0 = a * xi + 0.5 * slope * xi * xi;
    double i0 = cum0[j] + part0;
    double i1 = cum1[j] + d0 * part0 + 0.5 * a * xi * xi +
                slope * xi * xi * xi / 3.0;
    return 2.0 * (i0 - lp * i1);
  };
  // substituting r = z^(1/(2-alpha)) absorbs the small-size singularity
  // r^(1-alpha) exactly, leaving a bounded integrand
  double m = 1.0 / (2.0 - alpha);
  double head = m * quad::finite(
                        [&](double z) { return psi(std::pow(z, m)); }, 0.0,
                        1.0, 1e-8);
  double tail = quad::upper_tail(
      [&](double r) { return psi(r) * std::pow(r, 1.0 - alpha); }, 1.0, 1e-8);
  return params.c_f() * (head + tail);
}

double sigma_tilde_plus_sq(const ModelParams& params, double gamma) {
  validate(params);
  double alpha = params.alpha, p = params.p;
  if (!near(alpha, 2.0 - p))
    throw RegimeMismatch("log-corrected sheet scale requires alpha = 2-p");
  double gamma_plus = alpha / p - 1.0;
  if (!(gamma > gamma_plus) || near(gamma, gamma_plus))
    throw RegimeMismatch("log-corrected sheet scale requires gamma > gamma_plus");
  double overlap = section_power_integral(params.shape, 2.0);
  return params.c_f() * (gamma - gamma_plus) / (2.0 * (1.0 - p)) * overlap;
}

double section_power_integral(const GrainShape& shape, double q) {
  switch (shape.kind) {
    case ShapeKind::UnitSquare:
      return 1.0;
    case ShapeKind::UnitDisk:
    case ShapeKind::Custom:
      break;
  }
  double a = shape.bbox[0], b = shape.bbox[2];
  return quad::singular(
      [&](double u) { return std::pow(shape.section_length(u), q); }, a, b,
      1e-9);
}

}  // namespace grain
