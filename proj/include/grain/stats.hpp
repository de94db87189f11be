#pragma once

#include <complex>
#include <cstddef>
#include <utility>
#include <vector>

#include "grain/errors.hpp"

namespace grain {

struct Estimate {
  double value = 0.0;
  double se = 0.0;
};

// mean with its standard error, and the unbiased sample variance
Estimate sample_mean(const std::vector<double>& values);
double sample_variance(const std::vector<double>& values);

// Hill tail-index estimator over the top k order statistics; SE is the
// usual estimate / sqrt(k)
Estimate hill(const std::vector<double>& values, std::size_t k);

// the convention used when no k is given
std::size_t default_hill_k(std::size_t n);

// estimates at k/2, k and 2k, for eyeballing how stable the choice is
struct HillSensitivity {
  Estimate half, chosen, twice;
};
HillSensitivity hill_sensitivity(const std::vector<double>& values,
                                 std::size_t k);

// least-squares slope of log(statistic) against log(lambda) with a
// heteroskedasticity-robust standard error
struct SlopeFit {
  double slope = 0.0;
  double se = 0.0;
  double intercept = 0.0;
};
SlopeFit scaling_slope(const std::vector<std::pair<double, double>>& pairs);

struct ChfCurve {
  std::vector<double> thetas;
  std::vector<std::complex<double>> values;
  bool empirical = false;
  std::size_t n = 0;  // sample size behind an empirical curve
};

ChfCurve empirical_chf(const std::vector<double>& values,
                       const std::vector<double>& thetas);

template <class Fn>
ChfCurve theoretical_chf(const std::vector<double>& thetas, Fn&& chf) {
  ChfCurve curve;
  curve.thetas = thetas;
  curve.values.reserve(thetas.size());
  for (double t : thetas) curve.values.push_back(chf(t));
  return curve;
}

// sup over the shared theta grid of |a - b|
double chf_sup_distance(const ChfCurve& a, const ChfCurve& b);

// two-sample Kolmogorov-Smirnov distance with asymptotic p-value
struct KsResult {
  double distance = 0.0;
  double p_value = 0.0;
};
KsResult ks_distance(const std::vector<double>& a,
                     const std::vector<double>& b);

// Lilliefors test of normality (mean and variance estimated from the
// sample); reject at level 1% when statistic > critical_1pct
struct LillieforsResult {
  double statistic = 0.0;
  double critical_1pct = 0.0;
};
LillieforsResult lilliefors_normal(const std::vector<double>& values);

}  // namespace grain
