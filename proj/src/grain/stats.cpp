#include "grain/stats.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace grain {

namespace {

void check_finite(const std::vector<double>& values) {
  for (double v : values)
    if (!std::isfinite(v)) throw Error("sample contains non-finite values");
}

double standard_normal_cdf(double z) {
  return 0.5 * std::erfc(-z / std::sqrt(2.0));
}

// survival function of the Kolmogorov distribution
double kolmogorov_q(double lambda) {
  if (lambda < 1e-8) return 1.0;
  double sum = 0.0;
  double sign = 1.0;
  for (int k = 1; k <= 100; ++k) {
    double term = std::exp(-2.0 * k * k * lambda * lambda);
    sum += sign * term;
    if (term < 1e-12) break;
    sign = -sign;
  }
  return std::clamp(2.0 * sum, 0.0, 1.0);
}

}  // namespace

Estimate sample_mean(const std::vector<double>& values) {
  if (values.empty()) throw InsufficientData("mean of an empty sample");
  check_finite(values);
  double sum = 0.0;
  for (double v : values) sum += v;
  Estimate e;
  e.value = sum / static_cast<double>(values.size());
  if (values.size() > 1)
    e.se = std::sqrt(sample_variance(values) /
                     static_cast<double>(values.size()));
  return e;
}

double sample_variance(const std::vector<double>& values) {
  if (values.size() < 2)
    throw InsufficientData("variance needs at least two values");
  check_finite(values);
  double sum = 0.0;
  for (double v : values) sum += v;
  double mean = sum / static_cast<double>(values.size());
  double ssq = 0.0;
  for (double v : values) ssq += (v - mean) * (v - mean);
  return ssq / static_cast<double>(values.size() - 1);
}

Estimate hill(const std::vector<double>& values, std::size_t k) {
  check_finite(values);
  std::size_t n = values.size();
  if (k < 1 || n < 3 || k + 1 > n)
    throw InsufficientData("Hill needs 1 <= k < n");
  std::vector<double> sorted = values;
  std::sort(sorted.begin(), sorted.end(), std::greater<double>());
  if (!(sorted[k] > 0.0))
    throw InsufficientData("Hill needs the top k+1 values to be positive");
  double log_threshold = std::log(sorted[k]);
  double acc = 0.0;
  for (std::size_t i = 0; i < k; ++i)
    acc += std::log(sorted[i]) - log_threshold;
  if (!(acc > 0.0))
    throw InsufficientData("degenerate sample: zero log-spacings");
  Estimate e;
  e.value = static_cast<double>(k) / acc;
  e.se = e.value / std::sqrt(static_cast<double>(k));
  return e;
}

std::size_t default_hill_k(std::size_t n) {
  return static_cast<std::size_t>(
      std::ceil(2.0 * std::sqrt(static_cast<double>(n))));
}

HillSensitivity hill_sensitivity(const std::vector<double>& values,
                                 std::size_t k) {
  std::size_t n = values.size();
  if (n < 6) throw InsufficientData("sensitivity scan needs n >= 6");
  auto clamp_k = [n](std::size_t c) {
    return std::min(std::max<std::size_t>(c, 1), n - 2);
  };
  HillSensitivity s;
  s.half = hill(values, clamp_k(k / 2));
  s.chosen = hill(values, clamp_k(k));
  s.twice = hill(values, clamp_k(2 * k));
  return s;
}

SlopeFit scaling_slope(const std::vector<std::pair<double, double>>& pairs) {
  std::size_t n = pairs.size();
  std::vector<double> xs(n), ys(n);
  for (std::size_t i = 0; i < n; ++i) {
    double lambda = pairs[i].first, stat = pairs[i].second;
    if (!(lambda > 0.0) || !(stat > 0.0) || !std::isfinite(lambda) ||
        !std::isfinite(stat))
      throw Error("scaling fit needs positive finite (lambda, statistic)");
    xs[i] = std::log(lambda);
    ys[i] = std::log(stat);
  }
  std::vector<double> distinct = xs;
  std::sort(distinct.begin(), distinct.end());
  distinct.erase(std::unique(distinct.begin(), distinct.end()),
                 distinct.end());
  if (distinct.size() < 4)
    throw DegenerateDesign("scaling fit needs at least 4 distinct lambdas");

  double x_mean = 0.0, y_mean = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    x_mean += xs[i];
    y_mean += ys[i];
  }
  x_mean /= static_cast<double>(n);
  y_mean /= static_cast<double>(n);
  double sxx = 0.0, sxy = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    sxx += (xs[i] - x_mean) * (xs[i] - x_mean);
    sxy += (xs[i] - x_mean) * (ys[i] - y_mean);
  }
  SlopeFit fit;
  fit.slope = sxy / sxx;
  fit.intercept = y_mean - fit.slope * x_mean;
  // heteroskedasticity-robust variance with the small-sample correction
  double meat = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    double resid = ys[i] - fit.intercept - fit.slope * xs[i];
    double w = xs[i] - x_mean;
    meat += w * w * resid * resid;
  }
  double correction =
      n > 2 ? static_cast<double>(n) / static_cast<double>(n - 2) : 1.0;
  fit.se = std::sqrt(correction * meat) / sxx;
  return fit;
}

ChfCurve empirical_chf(const std::vector<double>& values,
                       const std::vector<double>& thetas) {
  if (values.empty()) throw InsufficientData("empirical chf of empty sample");
  check_finite(values);
  ChfCurve curve;
  curve.thetas = thetas;
  curve.empirical = true;
  curve.n = values.size();
  curve.values.reserve(thetas.size());
  double inv_n = 1.0 / static_cast<double>(values.size());
  for (double theta : thetas) {
    // evaluate at |theta| and conjugate, so the symmetry
    // value(-theta) = conj(value(theta)) holds exactly
    double t = std::fabs(theta);
    double re = 0.0, im = 0.0;
    for (double v : values) {
      re += std::cos(t * v);
      im += std::sin(t * v);
    }
    std::complex<double> val(re * inv_n, im * inv_n);
    curve.values.push_back(theta < 0.0 ? std::conj(val) : val);
  }
  return curve;
}

double chf_sup_distance(const ChfCurve& a, const ChfCurve& b) {
  if (a.thetas.size() != b.thetas.size())
    throw GridMismatch("theta grids differ in length");
  for (std::size_t i = 0; i < a.thetas.size(); ++i) {
    double x = a.thetas[i], y = b.thetas[i];
    if (std::fabs(x - y) >
        1e-12 * std::max({1.0, std::fabs(x), std::fabs(y)}))
      throw GridMismatch("theta grids differ at index " + std::to_string(i));
  }
  double sup = 0.0;
  for (std::size_t i = 0; i < a.values.size(); ++i)
    sup = std::max(sup, std::abs(a.values[i] - b.values[i]));
  return sup;
}

KsResult ks_distance(const std::vector<double>& a,
                     const std::vector<double>& b) {
  if (a.empty() || b.empty())
    throw InsufficientData("two-sample distance needs non-empty samples");
  check_finite(a);
  check_finite(b);
  std::vector<double> sa = a, sb = b;
  std::sort(sa.begin(), sa.end());
  std::sort(sb.begin(), sb.end());
  double n = static_cast<double>(sa.size()), m = static_cast<double>(sb.size());
  std::size_t i = 0, j = 0;
  double d = 0.0;
  while (i < sa.size() && j < sb.size()) {
    double v = std::min(sa[i], sb[j]);
    while (i < sa.size() && sa[i] <= v) ++i;
    while (j < sb.size() && sb[j] <= v) ++j;
    d = std::max(d, std::fabs(static_cast<double>(i) / n -
                              static_cast<double>(j) / m));
  }
  KsResult r;
  r.distance = d;
  double ne = std::sqrt(n * m / (n + m));
  r.p_value = kolmogorov_q((ne + 0.12 + 0.11 / ne) * d);
  return r;
}

LillieforsResult lilliefors_normal(const std::vector<double>& values) {
  if (values.size() < 5)
    throw InsufficientData("normality test needs at least 5 values");
  check_finite(values);
  double sd = std::sqrt(sample_variance(values));
  if (!(sd > 0.0)) throw InsufficientData("constant sample");
  double mean = sample_mean(values).value;
  std::vector<double> z = values;
  for (double& v : z) v = (v - mean) / sd;
  std::sort(z.begin(), z.end());
  double n = static_cast<double>(z.size());
  double d = 0.0;
  for (std::size_t i = 0; i < z.size(); ++i) {
    double cdf = standard_normal_cdf(z[i]);
    d = std::max(d, std::fabs(cdf - static_cast<double>(i + 1) / n));
    d = std::max(d, std::fabs(cdf - static_cast<double>(i) / n));
  }
  LillieforsResult r;
  r.statistic = d;
  // large-sample 1% point of the Lilliefors null distribution
  r.critical_1pct = 1.035 / std::sqrt(n);
  return r;
}

}  // namespace grain
