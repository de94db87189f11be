#include "grain/limits.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include <Eigen/Cholesky>
#include <Eigen/Core>

#include "grain/quadrature.hpp"

namespace grain {

namespace {

double clipped_overlap(double u, double len, double x) {
  return std::max(0.0, std::min(u + len, x) - std::max(u, 0.0));
}

void check_grid(const std::vector<double>& xs, const char* axis) {
  if (xs.empty()) throw Error(std::string("empty ") + axis + " grid");
  double prev = 0.0;
  for (double x : xs) {
    if (!(x > prev) || !std::isfinite(x))
      throw Error(std::string(axis) +
                  " grid must be positive, finite and strictly increasing");
    prev = x;
  }
}

double truncated_pareto(double uniform, double exponent, double lo,
                        double hi) {
  double a = std::pow(lo, -exponent), b = std::pow(hi, -exponent);
  return std::pow(a - uniform * (a - b), -1.0 / exponent);
}

}  // namespace

double interval_overlap_product(double len, double x1, double x2) {
  if (!(len > 0.0) || !(x1 > 0.0) || !(x2 > 0.0)) return 0.0;
  double mn = std::min(x1, x2), gap = std::fabs(x1 - x2);
  // below both windows and their gap the integral has an exact quadratic
  // form; the Simpson path would lose the O(len) correction to rounding
  // once len falls far below the window scale
  if (len <= mn && (gap == 0.0 || len <= gap))
    return len * len * (mn - len * (gap == 0.0 ? 1.0 / 3.0 : 1.0 / 6.0));
  // both overlap lengths are piecewise linear in the offset, so their
  // product is piecewise quadratic and Simpson is exact between breakpoints
  double brk[6] = {-len, 0.0, x1 - len, x1, x2 - len, x2};
  std::sort(brk, brk + 6);
  double total = 0.0;
  for (int i = 0; i + 1 < 6; ++i) {
    double a = brk[i], b = brk[i + 1];
    if (b <= a) continue;
    double m = 0.5 * (a + b);
    double fa = clipped_overlap(a, len, x1) * clipped_overlap(a, len, x2);
    double fm = clipped_overlap(m, len, x1) * clipped_overlap(m, len, x2);
    double fb = clipped_overlap(b, len, x1) * clipped_overlap(b, len, x2);
    total += (b - a) / 6.0 * (fa + 4.0 * fm + fb);
  }
  return total;
}

double fbs_covariance(double h1, double h2, double x1, double y1, double x2,
                      double y2) {
  if (!(h1 > 0.0) || h1 > 1.0 || !(h2 > 0.0) || h2 > 1.0)
    throw Error("Hurst exponents must lie in (0, 1]");
  if (x1 < 0.0 || y1 < 0.0 || x2 < 0.0 || y2 < 0.0)
    throw Error("sheet coordinates must be non-negative");
  auto q = [](double a, double b, double h) {
    return 0.5 * (std::pow(a, 2.0 * h) + std::pow(b, 2.0 * h) -
                  std::pow(std::fabs(a - b), 2.0 * h));
  };
  return q(x1, x2, h1) * q(y1, y2, h2);
}

std::vector<double> sample_gaussian_field(const std::vector<double>& cov,
                                          std::size_t n, SeededStream& rng) {
  if (n == 0 || cov.size() != n * n)
    throw Error("covariance must be a square matrix matching the grid");
  if (n > 4096)
    throw Error("dense factorization supports at most 4096 points");
  // the noise vector is drawn first so the output does not depend on how
  // much jitter the factorization needed
  Eigen::VectorXd g(static_cast<Eigen::Index>(n));
  for (std::size_t i = 0; i < n; ++i) g[static_cast<Eigen::Index>(i)] =
      gaussian_sample(rng);
  Eigen::Map<const Eigen::MatrixXd> m(cov.data(),
                                      static_cast<Eigen::Index>(n),
                                      static_cast<Eigen::Index>(n));
  double max_diag = 0.0;
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    max_diag = std::max(max_diag, std::fabs(m(i, i)));
  if (max_diag == 0.0) return std::vector<double>(n, 0.0);
  for (double jitter : {0.0, 1e-14, 1e-12, 1e-10}) {
    Eigen::MatrixXd shifted = m;
    shifted.diagonal().array() += jitter * max_diag;
    Eigen::LLT<Eigen::MatrixXd> llt(shifted);
    if (llt.info() == Eigen::Success) {
      Eigen::VectorXd z = llt.matrixL() * g;
      return std::vector<double>(z.data(), z.data() + n);
    }
  }
  throw CovarianceNotPSD("covariance is not positive semi-definite "
                         "within jitter 1e-10");
}

std::vector<double> sample_fbs(double h1, double h2,
                               const std::vector<double>& xs,
                               const std::vector<double>& ys,
                               SeededStream& rng) {
  check_grid(xs, "x");
  check_grid(ys, "y");
  std::size_t nx = xs.size(), ny = ys.size(), n = nx * ny;
  std::vector<double> cov(n * n);
  for (std::size_t i = 0; i < nx; ++i)
    for (std::size_t j = 0; j < ny; ++j)
      for (std::size_t k = 0; k < nx; ++k)
        for (std::size_t l = 0; l < ny; ++l)
          cov[(i * ny + j) * n + (k * ny + l)] =
              fbs_covariance(h1, h2, xs[i], ys[j], xs[k], ys[l]);
  return sample_gaussian_field(cov, n, rng);
}

std::vector<double> sample_fbm(double hurst, const std::vector<double>& xs,
                               SeededStream& rng) {
  check_grid(xs, "x");
  std::size_t n = xs.size();
  std::vector<double> cov(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k)
      cov[i * n + k] = fbs_covariance(hurst, 0.5, xs[i], 1.0, xs[k], 1.0);
  return sample_gaussian_field(cov, n, rng);
}

std::vector<double> sample_stable_sheet(double alpha, double sigma,
                                        double skew,
                                        const std::vector<double>& xs,
                                        const std::vector<double>& ys,
                                        SeededStream& rng) {
  check_grid(xs, "x");
  check_grid(ys, "y");
  if (!(sigma > 0.0)) throw Error("scale must be positive");
  std::size_t nx = xs.size(), ny = ys.size();
  std::vector<double> vals(nx * ny, 0.0);
  double prev_x = 0.0;
  for (std::size_t i = 0; i < nx; ++i) {
    double dx = xs[i] - prev_x;
    prev_x = xs[i];
    double prev_y = 0.0;
    for (std::size_t j = 0; j < ny; ++j) {
      double dy = ys[j] - prev_y;
      prev_y = ys[j];
      double inc = stable_sample(rng, alpha,
                                 sigma * std::pow(dx * dy, 1.0 / alpha), skew);
      // two-dimensional prefix sum over the cell increments
      double up = (j > 0) ? vals[i * ny + (j - 1)] : 0.0;
      double left = (i > 0) ? vals[(i - 1) * ny + j] : 0.0;
      double diag = (i > 0 && j > 0) ? vals[(i - 1) * ny + (j - 1)] : 0.0;
      vals[i * ny + j] = inc + up + left - diag;
    }
  }
  return vals;
}

std::vector<double> sample_stable_line(double alpha, double sigma, double skew,
                                       const std::vector<double>& xs,
                                       SeededStream& rng) {
  check_grid(xs, "x");
  if (!(sigma > 0.0)) throw Error("scale must be positive");
  std::vector<double> vals(xs.size());
  double prev_x = 0.0, acc = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    double dx = xs[i] - prev_x;
    prev_x = xs[i];
    acc += stable_sample(rng, alpha, sigma * std::pow(dx, 1.0 / alpha), skew);
    vals[i] = acc;
  }
  return vals;
}

std::vector<double> sample_intermediate_plus(const ModelParams& params,
                                             const std::vector<double>& xs,
                                             const std::vector<double>& ys,
                                             SeededStream& rng,
                                             const IntermediateConfig& config) {
  validate(params);
  if (params.shape.kind != ShapeKind::UnitSquare)
    throw BadGrain("the intermediate field is defined for square grains");
  check_grid(xs, "x");
  check_grid(ys, "y");
  if (!(config.eps > 0.0) || !(config.r_max > config.eps) ||
      !std::isfinite(config.r_max))
    throw Error("need 0 < eps < r_max < inf");
  const double alpha = params.alpha, p = params.p, cf = params.c_f();
  const double eps = config.eps, rmax = config.r_max;
  const double x_max = xs.back(), y_max = ys.back();
  std::size_t nx = xs.size(), ny = ys.size(), n = nx * ny;
  std::vector<double> vals(n, 0.0);

  // atoms carry offset density du on (-r^p, x_max), so the mass splits into
  // an untilted piece (u >= 0) and an r^p-tilted piece (u < 0)
  double mass_a = x_max * (std::pow(eps, -alpha) - std::pow(rmax, -alpha)) /
                  alpha;
  double mass_b = (std::pow(eps, p - alpha) - std::pow(rmax, p - alpha)) /
                  (alpha - p);
  double lambda = y_max * cf * (mass_a + mass_b);
  std::uint64_t atoms = poisson_count(rng, lambda);
  if (atoms > config.budget)
    throw TruncationBudgetExceeded(
        "realization needs " + std::to_string(atoms) + " atoms, budget is " +
        std::to_string(config.budget));
  for (std::uint64_t a = 0; a < atoms; ++a) {
    double pick = rng.unit() * (mass_a + mass_b);
    double r, u;
    if (pick < mass_a) {
      r = truncated_pareto(rng.unit(), alpha, eps, rmax);
      u = rng.unit() * x_max;
    } else {
      r = truncated_pareto(rng.unit(), alpha - p, eps, rmax);
      u = -rng.unit() * std::pow(r, p);
    }
    double v = rng.unit() * y_max;
    double rp = std::pow(r, p), weight = std::pow(r, 1.0 - p);
    for (std::size_t i = 0; i < nx; ++i) {
      double contrib = weight * clipped_overlap(u, rp, xs[i]);
      if (contrib == 0.0) continue;
      for (std::size_t j = 0; j < ny; ++j)
        if (v <= ys[j]) vals[i * ny + j] += contrib;
    }
  }
  double compensator = cf *
      (std::pow(eps, 1.0 - alpha) - std::pow(rmax, 1.0 - alpha)) /
      (alpha - 1.0);
  for (std::size_t i = 0; i < nx; ++i)
    for (std::size_t j = 0; j < ny; ++j)
      vals[i * ny + j] -= compensator * xs[i] * ys[j];

  // sizes below eps enter through a Gaussian field with their exact
  // covariance, which factorizes into min(y, y') times an x-part
  // the x-part is int_0^eps r^(1-alpha) [iop(r^p)/r^(2p)] dr; substituting
  // r = eps z^(1/(2-alpha)) absorbs the small-size singularity exactly, and
  // the normalized overlap product is bounded by min(x, x') at every size
  std::vector<double> xcov(nx * nx);
  double m_sub = 1.0 / (2.0 - alpha);
  for (std::size_t i = 0; i < nx; ++i)
    for (std::size_t k = i; k < nx; ++k) {
      double integral =
          std::pow(eps, 2.0 - alpha) * m_sub *
          quad::finite(
              [&](double z) {
                double lp = std::pow(eps * std::pow(z, m_sub), p);
                double mn = std::min(xs[i], xs[k]);
                double gap = std::fabs(xs[i] - xs[k]);
                // use the exact small-length form directly: microscopic
                // grains would otherwise form a quotient of two quantities
                // that both round to nothing
                if (lp <= mn && (gap == 0.0 || lp <= gap))
                  return mn - lp * (gap == 0.0 ? 1.0 / 3.0 : 1.0 / 6.0);
                return interval_overlap_product(lp, xs[i], xs[k]) / (lp * lp);
              },
              0.0, 1.0, 1e-9);
      xcov[i * nx + k] = xcov[k * nx + i] = cf * integral;
    }
  std::vector<double> cov(n * n);
  for (std::size_t i = 0; i < nx; ++i)
    for (std::size_t j = 0; j < ny; ++j)
      for (std::size_t k = 0; k < nx; ++k)
        for (std::size_t l = 0; l < ny; ++l)
          cov[(i * ny + j) * n + (k * ny + l)] =
              std::min(ys[j], ys[l]) * xcov[i * nx + k];
  std::vector<double> gauss = sample_gaussian_field(cov, n, rng);
  for (std::size_t k = 0; k < n; ++k) vals[k] += gauss[k];
  return vals;
}

}  // namespace grain
