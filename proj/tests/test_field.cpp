#include <cmath>
#include <complex>
#include <cstdint>
#include <vector>

#include "doctest.h"
#include "grain/chf.hpp"
#include "grain/covariance.hpp"
#include "grain/errors.hpp"
#include "grain/exponents.hpp"
#include "grain/field.hpp"
#include "grain/params.hpp"
#include "grain/rng.hpp"

using namespace grain;

namespace {

ModelParams make(double alpha, double p, double r_min = 1.0,
                 GrainShape shape = GrainShape::unit_square()) {
  ModelParams params;
  params.alpha = alpha;
  params.p = p;
  params.r_min = r_min;
  params.shape = shape;
  return params;
}

}  // namespace

TEST_SUITE("occupation field") {

TEST_CASE("mean occupation") {
  // E X = leb(B) E R with E R = alpha r_min/(alpha-1) = 3
  CHECK(mean_occupation(make(1.5, 0.5)) == doctest::Approx(3.0));
  CHECK(mean_occupation(make(1.5, 0.5, 1.0, GrainShape::unit_disk())) ==
        doctest::Approx(3.0 * 3.14159265358979323846));
}

TEST_CASE("pointwise counts are Poisson") {
  ModelParams params = make(1.5, 0.5);
  ExtendedWindow win;
  const int reps = 3000;
  double sum = 0.0, sq = 0.0;
  int zeros = 0;
  for (int rep = 0; rep < reps; ++rep) {
    SeededStream rng(21, static_cast<std::uint64_t>(rep));
    auto counts = evaluate_occupation(params, win, {0.5}, {0.5}, rng);
    REQUIRE(counts.size() == 1);
    double k = static_cast<double>(counts[0]);
    sum += k;
    sq += k * k;
    if (counts[0] == 0) ++zeros;
  }
  double mean = sum / reps, var = sq / reps - mean * mean;
  CHECK(std::fabs(mean - 3.0) < 4.0 * std::sqrt(3.0 / reps));
  // Poisson: variance equals the mean
  CHECK(var / 3.0 == doctest::Approx(1.0).epsilon(0.12));
  double p0 = std::exp(-3.0);
  CHECK(std::fabs(double(zeros) / reps - p0) <
        4.0 * std::sqrt(p0 * (1.0 - p0) / reps));
}

TEST_CASE("window integral is centered") {
  ModelParams params = make(1.5, 0.5);
  const int reps = 500;
  std::vector<double> draws(reps);
  for (int rep = 0; rep < reps; ++rep) {
    SeededStream rng(22, static_cast<std::uint64_t>(rep));
    draws[rep] = simulate_S(params, 2.0, 1.0, 1.0, 1.0, rng);
  }
  double sum = 0.0, sq = 0.0;
  for (double d : draws) {
    sum += d;
    sq += d * d;
  }
  double mean = sum / reps;
  double sd = std::sqrt((sq / reps - mean * mean) * reps / (reps - 1.0));
  CHECK(std::fabs(mean) < 4.0 * sd / std::sqrt(double(reps)));
}

TEST_CASE("window characteristic function at finite scale") {
  // The normalized integral has an explicit log-characteristic function
  // (a size integral of Poisson overlap exponents), valid at every lambda,
  // not only in the limit.
  ModelParams params = make(1.5, 0.5);
  FieldRegime regime = classify_field_regime(params, 1.0);
  const double lambda = 64.0;
  double norm = field_normalization(regime, lambda);
  const int reps = 600;
  std::vector<double> draws(reps);
  for (int rep = 0; rep < reps; ++rep) {
    SeededStream rng(23, static_cast<std::uint64_t>(rep));
    draws[rep] = simulate_S(params, lambda, 1.0, 1.0, 1.0, rng) / norm;
  }
  for (double theta : {0.5, 1.0}) {
    std::complex<double> emp(0.0, 0.0);
    for (double d : draws)
      emp += std::complex<double>(std::cos(theta * d), std::sin(theta * d));
    emp /= static_cast<double>(reps);
    std::complex<double> target = std::exp(
        chf::window_log_chf(params, lambda, 1.0, 1.0, 1.0, norm, theta));
    CHECK(std::abs(emp - target) < 0.15);
  }
}

TEST_CASE("empirical covariance matches quadrature") {
  ModelParams params = make(1.5, 0.5);
  std::vector<CovarianceLag> lags = {{0.0, 0.0}, {1.0, 0.0}, {2.0, 0.0}};
  auto estimates = empirical_covariance(params, lags, 3000, 24, 1);
  REQUIRE(estimates.size() == 3);
  // along the t axis the decay b(1) t^(-(alpha-1)/p) is exact once
  // t >= r_min^p, and the lag-0 value is the Poisson variance E X
  CHECK(estimates[0].exact == doctest::Approx(3.0).epsilon(1e-12));
  CHECK(estimates[1].exact == doctest::Approx(1.5).epsilon(1e-12));
  CHECK(estimates[2].exact == doctest::Approx(0.75).epsilon(1e-12));
  for (const auto& e : estimates) {
    CHECK(e.exact ==
          doctest::Approx(covariance_exact(params, e.dt, e.ds))
              .epsilon(1e-12));
    CHECK(std::fabs(e.estimate - e.exact) < 4.0 * e.se);
    CHECK(e.pairs > 0);
  }
}

TEST_CASE("custom shapes are rejected by the sampler") {
  auto ind = [](double, double) { return true; };
  auto sec = [](double) { return 1.0; };
  ModelParams params = make(
      1.5, 0.5, 1.0,
      GrainShape::custom(ind, {0.0, 0.0, 1.0, 1.0}, 1.0, sec));
  SeededStream rng(25, 0);
  CHECK_THROWS_AS(simulate_S(params, 2.0, 1.0, 1.0, 1.0, rng), BadGrain);
}

TEST_CASE("batch output does not depend on the thread count") {
  ModelParams params = make(1.5, 0.5);
  auto serial = simulate_S_batch(params, 4.0, 1.0, 1.0, 1.0, 48, 26, 1);
  auto parallel = simulate_S_batch(params, 4.0, 1.0, 1.0, 1.0, 48, 26, 3);
  CHECK(serial == parallel);
  REQUIRE(serial.size() == 48);
}

TEST_CASE("closed-form window variance") {
  // oracle fixed by Monte Carlo and an independent numeric integration
  CHECK(window_integral_variance(make(1.9, 0.5, 0.1), 1.2, 19.2) ==
        doctest::Approx(2.1096432208180538).epsilon(1e-12));
  // at the log boundary alpha = 2-p the variance of the normalized integral
  // grows like a multiple of log lambda
  ModelParams params = make(1.5, 0.5);
  double lambda = 1024.0;
  double var = window_integral_variance(params, lambda,
                                        lambda * lambda * lambda);
  double ratio = var / (std::pow(lambda, 5.0) * std::log(lambda));
  CHECK(ratio == doctest::Approx(6.432386720440746).epsilon(1e-9));
  CHECK_THROWS_AS(window_integral_variance(
                      make(1.5, 0.5, 1.0, GrainShape::unit_disk()), 4.0, 4.0),
                  BadGrain);
  CHECK_THROWS_AS(window_integral_variance(make(1.5, 0.5), -1.0, 4.0), Error);
}

TEST_CASE("nested windows agree with single-window sampling") {
  ModelParams params = make(1.5, 0.5);
  SeededStream rng_a(27, 5);
  double single = simulate_S(params, 4.0, 1.0, 1.0, 1.0, rng_a);
  SeededStream rng_b(27, 5);
  auto nested = simulate_S_nested(params, {4.0}, 1.0, 1.0, 1.0, rng_b);
  REQUIRE(nested.size() == 1);
  CHECK(nested[0] == single);

  SeededStream rng_c(27, 6);
  CHECK_THROWS_AS(simulate_S_nested(params, {4.0, 4.0}, 1.0, 1.0, 1.0, rng_c),
                  Error);

  // both coordinates of a nested pair are centered
  const int reps = 200;
  double s0 = 0.0, s1 = 0.0, q0 = 0.0, q1 = 0.0;
  for (int rep = 0; rep < reps; ++rep) {
    SeededStream rng(28, static_cast<std::uint64_t>(rep));
    auto pair = simulate_S_nested(params, {2.0, 4.0}, 1.0, 1.0, 1.0, rng);
    s0 += pair[0];
    s1 += pair[1];
    q0 += pair[0] * pair[0];
    q1 += pair[1] * pair[1];
  }
  double m0 = s0 / reps, m1 = s1 / reps;
  double sd0 = std::sqrt((q0 / reps - m0 * m0) * reps / (reps - 1.0));
  double sd1 = std::sqrt((q1 / reps - m1 * m1) * reps / (reps - 1.0));
  CHECK(std::fabs(m0) < 4.0 * sd0 / std::sqrt(double(reps)));
  CHECK(std::fabs(m1) < 4.0 * sd1 / std::sqrt(double(reps)));
}

TEST_CASE("normalization carries the regime exponent") {
  ModelParams params = make(1.5, 0.5);
  FieldRegime sheet = classify_field_regime(params, 1.0);
  CHECK(field_normalization(sheet, 16.0) ==
        doctest::Approx(std::pow(16.0, 4.0 / 3.0)).epsilon(1e-12));
  // alpha = 2-p puts gamma above gamma_plus in the log-corrected regime
  FieldRegime log_regime = classify_field_regime(params, 3.0);
  CHECK(log_regime.log_correction);
  CHECK(field_normalization(log_regime, 64.0) ==
        doctest::Approx(std::pow(64.0, 2.5) * std::sqrt(std::log(64.0)))
            .epsilon(1e-12));
}

}  // TEST_SUITE
