#include "grain/covariance.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "grain/quadrature.hpp"

namespace grain {

namespace {

// area of the intersection of two unit disks at center distance d
double lens_area(double d) {
  if (d >= 2.0) return 0.0;
  if (d <= 0.0) return 4.0 * std::atan(1.0);
  return 2.0 * std::acos(0.5 * d) - 0.5 * d * std::sqrt(4.0 - d * d);
}

}  // namespace

double shape_overlap(const GrainShape& shape, double a, double b) {
  switch (shape.kind) {
    case ShapeKind::UnitSquare:
      return std::max(0.0, 1.0 - std::fabs(a)) * std::max(0.0, 1.0 - std::fabs(b));
    case ShapeKind::UnitDisk:
      return lens_area(std::hypot(a, b));
    case ShapeKind::Custom:
      throw BadGrain("self-overlap of custom grains is not implemented");
  }
  return 0.0;
}

double covariance_exact(const ModelParams& params, double t, double s) {
  validate(params);
  const double alpha = params.alpha, p = params.p;
  const double c_f = params.c_f();
  auto integrand = [&](double r) {
    double ov = shape_overlap(params.shape, t / std::pow(r, p),
                              s / std::pow(r, 1.0 - p));
    return r * ov * c_f * std::pow(r, -1.0 - alpha);
  };
  // radius below which the rescaled offset leaves the overlap support
  double w = params.shape.width() / 2.0, h = params.shape.height() / 2.0;
  double r0 = params.r_min;
  if (params.shape.kind == ShapeKind::UnitSquare) {
    if (t != 0.0) r0 = std::max(r0, std::pow(std::fabs(t), 1.0 / p));
    if (s != 0.0) r0 = std::max(r0, std::pow(std::fabs(s), 1.0 / (1.0 - p)));
  } else {
    // overlap needs (t/r^p)^2/(2w)^2 + (s/r^(1-p))^2/(2h)^2 < 1; bracket the
    // root of the monotone reach function and bisect
    auto outside = [&](double r) {
      double a = t / (2.0 * w * std::pow(r, p));
      double b = s / (2.0 * h * std::pow(r, 1.0 - p));
      return a * a + b * b >= 1.0;
    };
    if (outside(r0)) {
      double lo = r0, hi = std::max(2.0 * r0, 2.0);
      while (outside(hi)) {
        hi *= 2.0;
        if (hi > 1e300) return 0.0;
      }
      for (int i = 0; i < 200; ++i) {
        double mid = 0.5 * (lo + hi);
        (outside(mid) ? lo : hi) = mid;
      }
      r0 = hi;
    }
  }
  return quad::upper_tail(integrand, r0, 1e-10);
}

double angular_b(const ModelParams& params, double z) {
  validate(params);
  if (!(z >= -1.0) || !(z <= 1.0))
    throw ZOutOfRange("angular profile argument must lie in [-1,1], got " +
                      std::to_string(z));
  const double alpha = params.alpha, p = params.p;
  const double c_f = params.c_f();
  double az = std::fabs(z);
  // offsets traced by the unit level curve of the anisotropic gauge
  double off_t = z;
  double off_s = std::pow(1.0 - std::pow(az, 1.0 / p), 1.0 - p);
  auto integrand = [&](double r) {
    double ov = shape_overlap(params.shape, off_t / std::pow(r, p),
                              off_s / std::pow(r, 1.0 - p));
    return ov * c_f * std::pow(r, -alpha);
  };
  // only the tail of the size distribution enters; integrate over all r > 0
  // where the shifted copies still intersect
  double r0 = 0.0;
  if (params.shape.kind == ShapeKind::UnitSquare) {
    r0 = std::max(az != 0.0 ? std::pow(az, 1.0 / p) : 0.0,
                  off_s != 0.0 ? std::pow(off_s, 1.0 / (1.0 - p)) : 0.0);
  } else {
    double w = params.shape.width() / 2.0, h = params.shape.height() / 2.0;
    auto outside = [&](double r) {
      double a = off_t / (2.0 * w * std::pow(r, p));
      double b = off_s / (2.0 * h * std::pow(r, 1.0 - p));
      return a * a + b * b >= 1.0;
    };
    double lo = 1e-12, hi = 4.0;
    if (outside(lo)) {
      while (outside(hi)) hi *= 2.0;
      for (int i = 0; i < 200; ++i) {
        double mid = 0.5 * (lo + hi);
        (outside(mid) ? lo : hi) = mid;
      }
      r0 = hi;
    }
  }
  return quad::upper_tail(integrand, r0, 1e-10);
}

LrdClassification lrd_classify(const ModelParams& params) {
  validate(params);
  LrdClassification c{};
  c.plane = true;
  c.vertical = params.alpha <= 2.0 - params.p + 1e-12;
  c.horizontal = params.alpha <= 1.0 + params.p + 1e-12;
  return c;
}

namespace {

// int_lo^hi r^e dr; hi may be infinite when e < -1, and e = -1 produces the
// logarithm (the tolerance absorbs boundary parameter sets like
// alpha = 2 - p, where an exponent lands on -1 exactly)
double power_primitive(double lo, double hi, double e) {
  if (std::isinf(hi)) {
    if (e >= -1.0) throw QuadratureFailure("divergent tail in size integral");
    return -std::pow(lo, e + 1.0) / (e + 1.0);
  }
  if (std::fabs(e + 1.0) < 1e-9) return std::log(hi / lo);
  return (std::pow(hi, e + 1.0) - std::pow(lo, e + 1.0)) / (e + 1.0);
}

}  // namespace

double window_integral_variance(const ModelParams& params, double X,
                                double Y) {
  validate(params);
  if (params.shape.kind != ShapeKind::UnitSquare)
    throw BadGrain("the closed-form window variance needs square grains");
  if (!(X > 0.0) || !(Y > 0.0) || !std::isfinite(X) || !std::isfinite(Y))
    throw Error("window extents must be positive and finite");
  const double a = params.alpha, p = params.p;
  // sizes where one grain axis outgrows its window extent; beyond such a
  // point that factor of the squared-overlap integral saturates
  double k1 = std::pow(X, 1.0 / p);
  double k2 = std::pow(Y, 1.0 / (1.0 - p));
  double edges[4] = {params.r_min, std::max(k1, params.r_min),
                     std::max(k2, params.r_min),
                     std::numeric_limits<double>::infinity()};
  std::sort(edges, edges + 4);
  double total = 0.0;
  for (int seg = 0; seg < 3; ++seg) {
    double lo = edges[seg], hi = edges[seg + 1];
    if (!(hi > lo)) continue;
    double mid = std::isinf(hi) ? 2.0 * lo : std::sqrt(lo * hi);
    // each axis factor of int overlap^2 is a two-term polynomial in powers
    // of r: l^2(L - l/3) with l = r^q while l <= L, else L^2(l - L/3)
    double cx[2], ex[2], cy[2], ey[2];
    if (std::pow(mid, p) <= X) {
      cx[0] = X, ex[0] = 2.0 * p, cx[1] = -1.0 / 3.0, ex[1] = 3.0 * p;
    } else {
      cx[0] = X * X, ex[0] = p, cx[1] = -X * X * X / 3.0, ex[1] = 0.0;
    }
    double q = 1.0 - p;
    if (std::pow(mid, q) <= Y) {
      cy[0] = Y, ey[0] = 2.0 * q, cy[1] = -1.0 / 3.0, ey[1] = 3.0 * q;
    } else {
      cy[0] = Y * Y, ey[0] = q, cy[1] = -Y * Y * Y / 3.0, ey[1] = 0.0;
    }
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j)
        total += cx[i] * cy[j] *
                 power_primitive(lo, hi, ex[i] + ey[j] - 1.0 - a);
  }
  return params.c_f() * total;
}

}  // namespace grain

