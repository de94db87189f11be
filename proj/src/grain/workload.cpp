#include "grain/workload.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "grain/constants.hpp"
#include "grain/kernels.hpp"
#include "grain/quadrature.hpp"

namespace grain {

namespace {

bool near(double a, double b) {
  if (std::isinf(a) || std::isinf(b)) return a == b;
  return std::fabs(a - b) <=
         1e-12 * std::max({1.0, std::fabs(a), std::fabs(b)});
}

void require_square(const ModelParams& params) {
  if (params.shape.kind != ShapeKind::UnitSquare)
    throw BadGrain("workload sessions correspond to square grains");
}

void check_points(const std::vector<double>& xs) {
  if (xs.empty()) throw Error("empty evaluation grid");
  double prev = 0.0;
  for (double x : xs) {
    if (!(x > prev) || !std::isfinite(x))
      throw Error("evaluation points must be positive, finite and "
                  "strictly increasing");
    prev = x;
  }
}

void check_eps(const IntermediateConfig& config) {
  if (!(config.eps > 0.0) || !(config.eps < 1.0))
    throw Error("small-jump threshold must lie in (0, 1)");
}

double clipped_overlap(double u, double len, double x) {
  return std::max(0.0, std::min(u + len, x) - std::max(u, 0.0));
}

// shared by the capped-kernel laws: integral of (r^(1-p) ^ 1) r^p and of
// (r^(1-p) ^ 1) against r^(p-1-alpha) over (eps, inf) coincide
double capped_compensator_rate(double alpha, double p, double eps) {
  return (std::pow(eps, 1.0 - alpha) - 1.0) / (alpha - 1.0) +
         1.0 / (alpha - p);
}

}  // namespace

const char* workload_family_name(WorkloadFamily family) {
  switch (family) {
    case WorkloadFamily::AlphaStableLevy: return "AlphaStableLevy";
    case WorkloadFamily::AlphaOverPStableLevy: return "AlphaOverPStableLevy";
    case WorkloadFamily::BrownianMotion: return "BrownianMotion";
    case WorkloadFamily::BrownianMotionLog: return "BrownianMotionLog";
    case WorkloadFamily::IntermediateLevyHat: return "IntermediateLevyHat";
    case WorkloadFamily::FbmSlow: return "FbmSlow";
    case WorkloadFamily::GaussianLine: return "GaussianLine";
    case WorkloadFamily::StableLinePlus: return "StableLinePlus";
    case WorkloadFamily::FbmPlus: return "FbmPlus";
    case WorkloadFamily::BrownianMotionLogFast:
      return "BrownianMotionLogFast";
    case WorkloadFamily::IntermediateGaussHat: return "IntermediateGaussHat";
    case WorkloadFamily::GaussianLineHatZ: return "GaussianLineHatZ";
    case WorkloadFamily::GaussianLineLog: return "GaussianLineLog";
    case WorkloadFamily::IntermediateI: return "IntermediateI";
    case WorkloadFamily::IntermediateIHat: return "IntermediateIHat";
    case WorkloadFamily::IntermediateIPlus: return "IntermediateIPlus";
  }
  return "unknown";
}

WorkloadRegime classify_workload_regime(const ModelParams& params,
                                        double gamma, double beta) {
  validate(params, true);
  require_square(params);
  if (!(gamma > 0.0) || !std::isfinite(gamma))
    throw Error("gamma must be positive and finite");
  if (!(beta > 0.0)) throw Error("beta must be positive");

  const double alpha = params.alpha, p = params.p, cf = params.c_f();
  const double inf = std::numeric_limits<double>::infinity();
  const double gp = alpha / p - 1.0;
  const double ap = p < 1.0 ? (alpha - p) / (1.0 - p) : inf;
  const double ab = alpha * beta;
  const double apb = std::isinf(beta) || std::isinf(ap) ? inf : ap * beta;
  const double h_plus = (2.0 - alpha + p) / (2.0 * p);

  WorkloadRegime reg;
  WorkloadConstants& c = reg.constants;

  auto brownian = [&] {
    reg.family = WorkloadFamily::BrownianMotion;
    reg.script_H = 0.5 * (1.0 + gamma + beta * (2.0 - alpha) / (1.0 - p));
    c.sigma_sq = 2.0 * cf * (1.0 - p) / ((2.0 - alpha) * (alpha - 2.0 * p));
  };
  auto brownian_log = [&] {
    reg.family = WorkloadFamily::BrownianMotionLog;
    reg.script_H = beta + (1.0 + gamma) / 2.0;
    reg.log_correction = true;
    c.sigma_sq = cf * ((1.0 + gamma) * (1.0 - p) - 2.0 * p * beta) /
                 (2.0 * p * (1.0 - p));
  };
  auto fbm_plus = [&] {
    reg.family = WorkloadFamily::FbmPlus;
    reg.script_H = h_plus + gamma / 2.0;
    c.hurst = h_plus;
    c.sigma_sq = sigma_plus_sq(params);
  };

  if (gamma < gp && !near(gamma, gp)) {
    // slow connection rate
    double thresh = (1.0 + gamma) * (1.0 - p);
    if (p == 1.0 || (!near(ab, thresh) && ab > thresh)) {
      reg.family = WorkloadFamily::AlphaStableLevy;
      reg.script_H = (1.0 + gamma) / alpha;
      c.stable_index = alpha;
      c.stable_scale = sigma_alpha(params);
    } else if (near(ab, thresh)) {
      reg.family = WorkloadFamily::IntermediateLevyHat;
      reg.script_H = (1.0 + gamma) / alpha;
    } else if (near(alpha, 2.0 * p)) {
      brownian_log();
    } else if (alpha < 2.0 * p) {
      double index = alpha / p;
      reg.family = WorkloadFamily::AlphaOverPStableLevy;
      reg.script_H = beta + (1.0 + gamma) * p / alpha;
      c.stable_index = index;
      c.stable_scale = cf * stable_c(index) / p;
    } else {
      brownian();
    }
  } else if (near(gamma, gp)) {
    // intermediate connection rate
    if (near(apb, gp)) {
      reg.family = WorkloadFamily::IntermediateIHat;
      reg.script_H = 1.0 / p;
    } else if (apb > gp) {
      reg.family = WorkloadFamily::IntermediateIPlus;
      reg.script_H = 1.0 / p;
    } else if (near(alpha, 2.0 * p)) {
      brownian_log();
    } else if (alpha < 2.0 * p) {
      reg.family = WorkloadFamily::IntermediateI;
      reg.script_H = 1.0 + beta;
    } else {
      brownian();
    }
  } else {
    // fast connection rate
    if (p == 1.0) {
      fbm_plus();
    } else if (near(apb, gp)) {
      reg.family = WorkloadFamily::IntermediateGaussHat;
      reg.script_H = 0.5 * (1.0 + gamma + (2.0 - alpha) / p);
    } else if (apb < gp) {
      if (near(alpha, 2.0 * p)) {
        reg.family = WorkloadFamily::BrownianMotionLogFast;
        reg.script_H = beta + (1.0 + gamma) / 2.0;
        reg.log_correction = true;
        c.sigma_sq = cf * (1.0 / p - beta / (1.0 - p));
      } else if (alpha < 2.0 * p) {
        double hurst = (3.0 - alpha / p) / 2.0;
        reg.family = WorkloadFamily::FbmSlow;
        reg.script_H = hurst + beta + gamma / 2.0;
        c.hurst = hurst;
        c.sigma_sq = 2.0 * cf /
                     (alpha * (2.0 - alpha / p) * (3.0 - alpha / p) *
                      (alpha / p - 1.0));
      } else {
        brownian();
      }
    } else if (near(alpha, 2.0 - p)) {
      reg.family = WorkloadFamily::GaussianLineLog;
      reg.script_H = 1.0 + gamma / 2.0;
      reg.log_correction = true;
      c.sigma_sq = sigma_tilde_plus_sq(params, gamma);
    } else if (alpha > 2.0 - p) {
      fbm_plus();
    } else if (near(apb, gamma)) {
      reg.family = WorkloadFamily::GaussianLineHatZ;
      reg.script_H = 1.0 + beta;
      // the slope variance happens to match the Gaussian line constant
      c.sigma_sq = 2.0 * cf * (1.0 - p) / ((2.0 - p - alpha) * (alpha - p));
    } else if (apb < gamma) {
      reg.family = WorkloadFamily::GaussianLine;
      reg.script_H =
          1.0 + 0.5 * (gamma + beta * (2.0 - alpha - p) / (1.0 - p));
      c.sigma_sq = 2.0 * cf * (1.0 - p) / ((2.0 - p - alpha) * (alpha - p));
    } else {
      reg.family = WorkloadFamily::StableLinePlus;
      reg.script_H = 1.0 + gamma / ap;
      c.stable_index = ap;
      c.stable_scale = sigma_alpha_plus(params);
    }
  }
  return reg;
}

double capped_work_mean(const ModelParams& params, double K) {
  validate(params, true);
  if (!(K > 0.0)) throw Error("rate cap must be positive");
  if (std::isinf(K)) return params.moment(1.0);
  if (params.p == 1.0) return std::min(1.0, K) * params.moment(1.0);
  const double alpha = params.alpha, p = params.p, rm = params.r_min;
  double r_cap = std::pow(K, 1.0 / (1.0 - p));
  if (r_cap <= rm) return K * params.moment(p);
  double below = alpha / (alpha - 1.0) *
                 (rm - std::pow(rm, alpha) * std::pow(r_cap, 1.0 - alpha));
  double above = K * alpha * std::pow(rm, alpha) *
                 std::pow(r_cap, p - alpha) / (alpha - p);
  return below + above;
}

std::vector<double> simulate_workload(const ModelParams& params,
                                      const WorkloadConfig& config,
                                      SeededStream& rng) {
  validate(params, true);
  require_square(params);
  check_points(config.xs);
  if (!(config.T > 1.0) || !std::isfinite(config.T))
    throw Error("horizon T must exceed 1");
  if (!(config.gamma > 0.0) || !std::isfinite(config.gamma))
    throw Error("gamma must be positive and finite");
  if (!(config.beta > 0.0)) throw Error("beta must be positive");

  const double alpha = params.alpha, p = params.p, rm = params.r_min;
  const double M = std::pow(config.T, config.gamma);
  const double K = std::pow(config.T, config.beta);
  std::vector<double> horizon(config.xs.size());
  for (std::size_t j = 0; j < config.xs.size(); ++j)
    horizon[j] = config.T * config.xs[j];
  const double t_max = horizon.back();

  // sessions in progress at time 0 come from a boundary component whose
  // durations carry an extra factor r^p
  const double means[2] = {M * t_max, M * params.moment(p)};
  const double tilts[2] = {0.0, p};
  std::uint64_t counts[2];
  std::uint64_t total = 0;
  for (int comp = 0; comp < 2; ++comp) {
    counts[comp] = poisson_count(rng, means[comp]);
    total += counts[comp];
  }
  if (total > config.budget)
    throw BudgetExceeded("realization needs " + std::to_string(total) +
                         " sessions, budget is " +
                         std::to_string(config.budget));

  const kernels::Ops& ops = kernels::active_ops();
  const std::size_t chunk_size = std::size_t{1} << 16;
  const double rp_min = std::pow(rm, p);
  const double r1p_min = std::pow(rm, 1.0 - p);
  std::vector<double> a(config.xs.size(), 0.0);
  std::vector<double> ur, uu, rp, r1p;
  for (int comp = 0; comp < 2; ++comp) {
    const double exponent = -1.0 / (alpha - tilts[comp]);
    std::uint64_t left = counts[comp];
    while (left > 0) {
      std::size_t n = static_cast<std::size_t>(
          std::min<std::uint64_t>(left, chunk_size));
      left -= n;
      ur.resize(n);
      uu.resize(n);
      rp.resize(n);
      r1p.resize(n);
      rng.fill_unit(ur.data(), n);
      rng.fill_unit(uu.data(), n);
      ops.pow_transform(ur.data(), rp.data(), n, rp_min, exponent * p);
      ops.pow_transform(ur.data(), r1p.data(), n, r1p_min,
                        exponent * (1.0 - p));
      for (std::size_t i = 0; i < n; ++i) {
        double u = comp == 0 ? uu[i] * t_max : -uu[i] * rp[i];
        double rate = std::min(r1p[i], K);
        for (std::size_t j = 0; j < a.size(); ++j) {
          double len =
              std::min(u + rp[i], horizon[j]) - std::max(u, 0.0);
          if (len > 0.0) a[j] += rate * len;
        }
      }
    }
  }
  return a;
}

std::vector<double> normalize_workload(const ModelParams& params,
                                       const WorkloadConfig& config,
                                       const WorkloadRegime& regime,
                                       const std::vector<double>& raw) {
  if (raw.size() != config.xs.size())
    throw Error("raw workload length does not match the grid");
  if (!(config.T > 1.0)) throw Error("horizon T must exceed 1");
  const double M = std::pow(config.T, config.gamma);
  const double K = std::pow(config.T, config.beta);
  const double per_session = capped_work_mean(params, K);
  double b_t = std::pow(config.T, regime.script_H);
  if (regime.log_correction) b_t *= std::sqrt(std::log(config.T));
  std::vector<double> out(raw.size());
  for (std::size_t j = 0; j < raw.size(); ++j)
    out[j] =
        (raw[j] - config.T * config.xs[j] * M * per_session) / b_t;
  return out;
}

namespace {

// infinitely divisible slope with log chf c_f int Psi(theta (r^(1-p)^1))
// r^(p-1-alpha) dr, sampled as compensated jumps above eps plus a Gaussian
// stand-in for the jumps below
double hat_z_slope(double alpha, double p, double cf, SeededStream& rng,
                   const IntermediateConfig& config) {
  check_eps(config);
  if (!(alpha < 2.0 - p))
    throw RegimeMismatch("the line slope law needs alpha < 2 - p");
  double eps = config.eps;
  double mass = cf * std::pow(eps, p - alpha) / (alpha - p);
  std::uint64_t n = poisson_count(rng, mass);
  if (n > config.budget)
    throw TruncationBudgetExceeded("slope realization exceeds atom budget");
  double acc = 0.0;
  for (std::uint64_t i = 0; i < n; ++i) {
    double r = pareto_sample(rng, alpha, eps, p);
    acc += std::min(std::pow(r, 1.0 - p), 1.0);
  }
  acc -= cf * capped_compensator_rate(alpha, p, eps);
  double small_var = cf * std::pow(eps, 2.0 - p - alpha) / (2.0 - p - alpha);
  return acc + gaussian_sample(rng) * std::sqrt(small_var);
}

// Levy process with jumps (r^(1-p)^1) r^p at Poisson times, rate density
// c_f r^(-1-alpha); small jumps become an independent Brownian part
std::vector<double> levy_hat_path(double alpha, double p, double cf,
                                  const std::vector<double>& xs,
                                  SeededStream& rng,
                                  const IntermediateConfig& config) {
  check_eps(config);
  double eps = config.eps, x_max = xs.back();
  std::vector<double> vals(xs.size(), 0.0);
  double mass = x_max * cf * std::pow(eps, -alpha) / alpha;
  std::uint64_t n = poisson_count(rng, mass);
  if (n > config.budget)
    throw TruncationBudgetExceeded("path realization exceeds atom budget");
  for (std::uint64_t i = 0; i < n; ++i) {
    double r = pareto_sample(rng, alpha, eps, 0.0);
    double u = rng.unit() * x_max;
    double jump = std::min(std::pow(r, 1.0 - p), 1.0) * std::pow(r, p);
    for (std::size_t j = 0; j < xs.size(); ++j)
      if (u <= xs[j]) vals[j] += jump;
  }
  double comp = cf * capped_compensator_rate(alpha, p, eps);
  double small_rate = cf * std::pow(eps, 2.0 - alpha) / (2.0 - alpha);
  double prev_x = 0.0, bm = 0.0;
  for (std::size_t j = 0; j < xs.size(); ++j) {
    bm += gaussian_sample(rng) * std::sqrt(small_rate * (xs[j] - prev_x));
    prev_x = xs[j];
    vals[j] += bm - comp * xs[j];
  }
  return vals;
}

// compensated Poisson path with the spread kernel overlap((u, u+r^p], (0,x]),
// optionally weighted by the capped rate r^(1-p) ^ 1
std::vector<double> intermediate_path(double alpha, double p, double cf,
                                      const std::vector<double>& xs,
                                      SeededStream& rng,
                                      const IntermediateConfig& config,
                                      bool capped) {
  check_eps(config);
  if (!capped && !(alpha < 2.0 * p))
    throw RegimeMismatch("the uncapped intermediate process needs "
                         "alpha < 2p");
  double eps = config.eps, x_max = xs.back();
  std::size_t m = xs.size();
  std::vector<double> vals(m, 0.0);

  double mass_a = x_max * std::pow(eps, -alpha) / alpha;
  double mass_b = std::pow(eps, p - alpha) / (alpha - p);
  std::uint64_t n = poisson_count(rng, cf * (mass_a + mass_b));
  if (n > config.budget)
    throw TruncationBudgetExceeded("path realization exceeds atom budget");
  for (std::uint64_t i = 0; i < n; ++i) {
    double pick = rng.unit() * (mass_a + mass_b);
    double r, u;
    if (pick < mass_a) {
      r = pareto_sample(rng, alpha, eps, 0.0);
      u = rng.unit() * x_max;
    } else {
      r = pareto_sample(rng, alpha, eps, p);
      u = -rng.unit() * std::pow(r, p);
    }
    double rp = std::pow(r, p);
    double w = capped ? std::min(std::pow(r, 1.0 - p), 1.0) : 1.0;
    for (std::size_t j = 0; j < m; ++j)
      vals[j] += w * clipped_overlap(u, rp, xs[j]);
  }
  double comp_rate = capped
      ? cf * capped_compensator_rate(alpha, p, eps)
      : cf * std::pow(eps, p - alpha) / (alpha - p);
  for (std::size_t j = 0; j < m; ++j) vals[j] -= comp_rate * xs[j];

  std::vector<double> cov(m * m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t k = i; k < m; ++k) {
      double integral = quad::singular(
          [&](double r) {
            double w2 = capped ? std::pow(r, 2.0 * (1.0 - p)) : 1.0;
            return w2 * std::pow(r, -1.0 - alpha) *
                   interval_overlap_product(std::pow(r, p), xs[i], xs[k]);
          },
          0.0, eps);
      cov[i * m + k] = cov[k * m + i] = cf * integral;
    }
  std::vector<double> gauss = sample_gaussian_field(cov, m, rng);
  for (std::size_t j = 0; j < m; ++j) vals[j] += gauss[j];
  return vals;
}

// Gaussian process with the covariance of the capped spread kernel
std::vector<double> gauss_hat_path(double alpha, double p, double cf,
                                   const std::vector<double>& xs,
                                   SeededStream& rng) {
  std::size_t m = xs.size();
  std::vector<double> cov(m * m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t k = i; k < m; ++k) {
      auto weighted = [&](double r) {
        double w = std::min(std::pow(r, 1.0 - p), 1.0);
        return w * w * std::pow(r, -1.0 - alpha) *
               interval_overlap_product(std::pow(r, p), xs[i], xs[k]);
      };
      double integral =
          quad::singular(weighted, 0.0, 1.0) + quad::upper_tail(weighted, 1.0);
      cov[i * m + k] = cov[k * m + i] = cf * integral;
    }
  return sample_gaussian_field(cov, m, rng);
}

}  // namespace

std::vector<double> sample_workload_limit(const ModelParams& params,
                                          const WorkloadRegime& regime,
                                          const std::vector<double>& xs,
                                          SeededStream& rng,
                                          const IntermediateConfig& config) {
  validate(params, true);
  require_square(params);
  check_points(xs);
  const double alpha = params.alpha, p = params.p, cf = params.c_f();
  const WorkloadConstants& c = regime.constants;
  switch (regime.family) {
    case WorkloadFamily::AlphaStableLevy:
    case WorkloadFamily::AlphaOverPStableLevy: {
      double index = c.stable_index;
      double sigma = std::pow(c.stable_scale, 1.0 / index);
      return sample_stable_line(index, sigma, 1.0, xs, rng);
    }
    case WorkloadFamily::BrownianMotion:
    case WorkloadFamily::BrownianMotionLog:
    case WorkloadFamily::BrownianMotionLogFast: {
      std::vector<double> vals(xs.size());
      double prev = 0.0, acc = 0.0;
      for (std::size_t j = 0; j < xs.size(); ++j) {
        acc += gaussian_sample(rng) *
               std::sqrt(c.sigma_sq * (xs[j] - prev));
        prev = xs[j];
        vals[j] = acc;
      }
      return vals;
    }
    case WorkloadFamily::FbmSlow:
    case WorkloadFamily::FbmPlus: {
      std::vector<double> vals = sample_fbm(c.hurst, xs, rng);
      double scale = std::sqrt(c.sigma_sq);
      for (double& v : vals) v *= scale;
      return vals;
    }
    case WorkloadFamily::GaussianLine:
    case WorkloadFamily::GaussianLineLog: {
      double slope = std::sqrt(c.sigma_sq) * gaussian_sample(rng);
      std::vector<double> vals(xs.size());
      for (std::size_t j = 0; j < xs.size(); ++j) vals[j] = slope * xs[j];
      return vals;
    }
    case WorkloadFamily::GaussianLineHatZ: {
      double slope = hat_z_slope(alpha, p, cf, rng, config);
      std::vector<double> vals(xs.size());
      for (std::size_t j = 0; j < xs.size(); ++j) vals[j] = slope * xs[j];
      return vals;
    }
    case WorkloadFamily::StableLinePlus: {
      double index = c.stable_index;
      double slope = stable_sample(rng, index,
                                   std::pow(c.stable_scale, 1.0 / index),
                                   1.0);
      std::vector<double> vals(xs.size());
      for (std::size_t j = 0; j < xs.size(); ++j) vals[j] = slope * xs[j];
      return vals;
    }
    case WorkloadFamily::IntermediateLevyHat:
      return levy_hat_path(alpha, p, cf, xs, rng, config);
    case WorkloadFamily::IntermediateGaussHat:
      return gauss_hat_path(alpha, p, cf, xs, rng);
    case WorkloadFamily::IntermediateI:
      return intermediate_path(alpha, p, cf, xs, rng, config, false);
    case WorkloadFamily::IntermediateIHat:
      return intermediate_path(alpha, p, cf, xs, rng, config, true);
    case WorkloadFamily::IntermediateIPlus:
      return sample_intermediate_plus(params, xs, {1.0}, rng, config);
  }
  throw Error("unhandled workload family");
}

}  // namespace grain
