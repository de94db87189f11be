#include "grain/chf.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

#include "grain/quadrature.hpp"

namespace grain {
namespace chf {

namespace {
constexpr double pi_half = 1.5707963267948966;
}

cd psi(double z) {
  // e^{iz}-1 = -2 sin^2(z/2) + i sin z avoids cancellation in the real part
  double s = std::sin(0.5 * z);
  return {-2.0 * s * s, std::sin(z) - z};
}

cd psi_int(double c, double m) {
  double u = c * m;
  if (std::fabs(u) < 1e-2) {
    // m * ((e^{iu}-1)/(iu) - 1 - iu/2) expanded around u = 0
    double u2 = u * u;
    double re = -u2 / 6.0 + u2 * u2 / 120.0;
    double im = -u * u2 / 24.0 + u2 * u2 * u / 720.0;
    return cd{m * re, m * im};
  }
  double s = std::sin(0.5 * u);
  // (e^{iu}-1)/(iu) = sin(u)/u + i 2 sin^2(u/2)/u
  double re = std::sin(u) / u - 1.0;
  double im = 2.0 * s * s / u - 0.5 * u;
  return cd{m * re, m * im};
}

cd stable_log_chf(double theta, double a, double scale) {
  if (theta == 0.0) return {0.0, 0.0};
  double mag = scale * std::pow(std::fabs(theta), a);
  double sgn = theta > 0.0 ? 1.0 : -1.0;
  return {-mag, mag * sgn * std::tan(pi_half * a)};
}

cd window_log_chf(const ModelParams& params, double lambda, double gamma,
                  double x, double y, double norm, double theta) {
  validate(params);
  if (params.shape.kind != ShapeKind::UnitSquare)
    throw BadGrain("window log-chf oracle is implemented for unit square grains");
  if (!(lambda > 0.0) || !(x > 0.0) || !(y > 0.0) || !(norm > 0.0))
    throw Error("window log-chf needs positive lambda, x, y, norm");
  const double X = lambda * x;
  const double Y = std::pow(lambda, gamma) * y;
  const double alpha = params.alpha, p = params.p;
  const double scaled_theta = theta / norm;

  // For fixed grain size r the overlap of the window with a square grain
  // factorizes into two clipped interval overlaps; each factor, viewed as a
  // function of the anchor coordinate, is a trapezoid.  Pushing the anchor
  // measure through a trapezoid of height m and plateau length f gives
  // 2 Leb(0,m) + f delta_m, so the (u,v) integral of Psi collapses to the
  // four product terms below with a single numeric pass left.
  auto inner = [&](double r) -> cd {
    double lx = std::pow(r, p), ly = std::pow(r, 1.0 - p);
    double mx = std::min(lx, X), my = std::min(ly, Y);
    double fx = std::fabs(X - lx), fy = std::fabs(Y - ly);
    cd ramp = quad::finite_c(
        [&](double a) { return psi_int(scaled_theta * a, my); }, 0.0, mx,
        1e-10);
    cd total = 4.0 * ramp;
    total += 2.0 * fy * psi_int(scaled_theta * my, mx);
    total += 2.0 * fx * psi_int(scaled_theta * mx, my);
    total += fx * fy * psi(scaled_theta * mx * my);
    return total;
  };

  const double c_f = params.c_f();
  auto integrand = [&](double r) -> cd {
    return inner(r) * (c_f * std::pow(r, -1.0 - alpha));
  };

  std::vector<double> knots{params.r_min};
  double kx = std::pow(X, 1.0 / p);
  double ky = std::pow(Y, 1.0 / (1.0 - p));
  if (kx > params.r_min) knots.push_back(kx);
  if (ky > params.r_min) knots.push_back(ky);
  std::sort(knots.begin(), knots.end());
  knots.push_back(std::numeric_limits<double>::infinity());
  return quad::segments_c(integrand, knots, 1e-9);
}

}  // namespace chf
}  // namespace grain
