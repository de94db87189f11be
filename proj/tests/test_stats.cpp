#include <cmath>
#include <complex>
#include <cstddef>
#include <utility>
#include <vector>

#include "doctest.h"
#include "grain/errors.hpp"
#include "grain/rng.hpp"
#include "grain/stats.hpp"

using namespace grain;

TEST_SUITE("statistics") {

TEST_CASE("mean and variance") {
  std::vector<double> v = {1.0, 2.0, 3.0, 4.0};
  Estimate m = sample_mean(v);
  CHECK(m.value == doctest::Approx(2.5).epsilon(1e-12));
  // unbiased variance 5/3, SE = sqrt(var/n)
  CHECK(sample_variance(v) == doctest::Approx(5.0 / 3.0).epsilon(1e-12));
  CHECK(m.se == doctest::Approx(std::sqrt(5.0 / 12.0)).epsilon(1e-12));
}

TEST_CASE("hill estimator recovers a pareto tail") {
  SeededStream rng(51, 0);
  std::vector<double> draws(20000);
  for (double& d : draws) d = pareto_sample(rng, 1.5, 1.0);
  std::size_t k = default_hill_k(draws.size());
  Estimate est = hill(draws, k);
  CHECK(std::fabs(est.value - 1.5) < 0.10);
  CHECK(est.se == doctest::Approx(est.value / std::sqrt(double(k)))
                      .epsilon(1e-12));
  HillSensitivity sens = hill_sensitivity(draws, k);
  CHECK(std::fabs(sens.half.value - 1.5) < 0.2);
  CHECK(std::fabs(sens.twice.value - 1.5) < 0.2);
  CHECK(sens.chosen.value == doctest::Approx(est.value).epsilon(1e-12));

  std::vector<double> tiny = {1.0, 2.0};
  CHECK_THROWS_AS(hill(tiny, 8), InsufficientData);
}

TEST_CASE("scaling slope on an exact power law") {
  std::vector<std::pair<double, double>> pairs;
  for (double lambda : {4.0, 16.0, 64.0, 256.0})
    pairs.push_back({lambda, 2.5 * std::pow(lambda, 1.75)});
  SlopeFit fit = scaling_slope(pairs);
  CHECK(fit.slope == doctest::Approx(1.75).epsilon(1e-12));
  CHECK(fit.intercept == doctest::Approx(std::log(2.5)).epsilon(1e-9));
  CHECK(fit.se == doctest::Approx(0.0).epsilon(1e-9));
}

TEST_CASE("empirical chf basics") {
  std::vector<double> draws = {-1.0, 0.5, 2.0, 3.5};
  std::vector<double> thetas = {-1.0, -0.25, 0.25, 1.0};
  ChfCurve curve = empirical_chf(draws, thetas);
  CHECK(curve.empirical);
  CHECK(curve.n == 4);
  // conjugate symmetry: chf(-theta) = conj(chf(theta))
  CHECK(std::abs(curve.values[0] - std::conj(curve.values[3])) < 1e-12);
  CHECK(std::abs(curve.values[1] - std::conj(curve.values[2])) < 1e-12);
  // chf(0) would be 1; at small theta the modulus is near 1
  CHECK(std::abs(curve.values[1]) <= 1.0 + 1e-12);
  CHECK(chf_sup_distance(curve, curve) == doctest::Approx(0.0));
}

TEST_CASE("two-sample ks") {
  std::vector<double> a, b, c;
  SeededStream rng(52, 0);
  for (int i = 0; i < 1500; ++i) {
    a.push_back(rng.gaussian());
    b.push_back(rng.gaussian());
    c.push_back(10.0 + rng.unit());
  }
  KsResult same = ks_distance(a, b);
  CHECK(same.p_value > 0.01);
  KsResult split = ks_distance(a, c);  // disjoint supports
  CHECK(split.distance == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(split.p_value < 1e-6);
  CHECK(ks_distance(a, a).distance == doctest::Approx(0.0));
}

TEST_CASE("lilliefors normality test") {
  SeededStream rng(53, 0);
  std::vector<double> normal(2000), flat(2000);
  for (int i = 0; i < 2000; ++i) {
    normal[i] = 3.0 + 2.0 * rng.gaussian();
    flat[i] = rng.unit();
  }
  LillieforsResult ok = lilliefors_normal(normal);
  CHECK(ok.statistic < ok.critical_1pct);
  LillieforsResult bad = lilliefors_normal(flat);
  CHECK(bad.statistic > bad.critical_1pct);
}

}  // TEST_SUITE
