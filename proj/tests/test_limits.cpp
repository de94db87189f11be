#include <cmath>
#include <complex>
#include <cstdint>
#include <vector>

#include "doctest.h"
#include "grain/chf.hpp"
#include "grain/constants.hpp"
#include "grain/errors.hpp"
#include "grain/limits.hpp"
#include "grain/params.hpp"
#include "grain/rng.hpp"

using namespace grain;

namespace {

ModelParams make(double alpha, double p, double r_min = 1.0) {
  ModelParams params;
  params.alpha = alpha;
  params.p = p;
  params.r_min = r_min;
  params.shape = GrainShape::unit_square();
  return params;
}

}  // namespace

TEST_SUITE("limit processes") {

TEST_CASE("interval overlap product") {
  // for len <= min(x1, x2) the integrand ramps up, stays flat, ramps down;
  // hand integration gives len^2 (min - len/3) (+ rectangular bulk terms)
  CHECK(interval_overlap_product(1.0, 1.0, 1.0) ==
        doctest::Approx(2.0 / 3.0).epsilon(1e-12));
  CHECK(interval_overlap_product(2.0, 1.0, 1.0) ==
        doctest::Approx(5.0 / 3.0).epsilon(1e-12));
  // symmetry in the window pair
  CHECK(interval_overlap_product(0.7, 1.3, 2.9) ==
        doctest::Approx(interval_overlap_product(0.7, 2.9, 1.3))
            .epsilon(1e-12));
}

TEST_CASE("fractional sheet covariance") {
  // h = 1/2 reduces to the Brownian sheet: R = min(x1,x2) min(y1,y2)
  CHECK(fbs_covariance(0.5, 0.5, 1.0, 2.0, 3.0, 1.5) ==
        doctest::Approx(1.5).epsilon(1e-12));
  CHECK(fbs_covariance(0.75, 0.5, 1.0, 1.0, 1.0, 1.0) ==
        doctest::Approx(1.0).epsilon(1e-12));
  // (|x1|^2h + |x2|^2h - |x1-x2|^2h)/2 at h=3/4, x = 1 and 2
  CHECK(fbs_covariance(0.75, 0.5, 1.0, 1.0, 2.0, 1.0) ==
        doctest::Approx(std::sqrt(2.0)).epsilon(1e-12));
}

TEST_CASE("gaussian sampler rejects indefinite input") {
  // [[1, 2], [2, 1]] has eigenvalues 3 and -1
  std::vector<double> cov = {1.0, 2.0, 2.0, 1.0};
  SeededStream rng(31, 0);
  CHECK_THROWS_AS(sample_gaussian_field(cov, 2, rng), CovarianceNotPSD);
}

TEST_CASE("fbm and fbs variances") {
  const int reps = 4000;
  double sq_end = 0.0, sq_grid = 0.0;
  for (int rep = 0; rep < reps; ++rep) {
    SeededStream rng(32, static_cast<std::uint64_t>(rep));
    auto path = sample_fbm(0.7, {0.5, 2.0}, rng);
    sq_end += path[1] * path[1];
    auto sheet = sample_fbs(0.7, 0.5, {2.0}, {3.0}, rng);
    sq_grid += sheet[0] * sheet[0];
  }
  // Var B_H(t) = t^(2H); Var of the sheet factorizes across axes
  double target_fbm = std::pow(2.0, 1.4);
  CHECK(std::fabs(sq_end / reps - target_fbm) <
        4.0 * target_fbm * std::sqrt(2.0 / reps));
  double target_fbs = std::pow(2.0, 1.4) * 3.0;
  CHECK(std::fabs(sq_grid / reps - target_fbs) <
        4.0 * target_fbs * std::sqrt(2.0 / reps));
}

TEST_CASE("stable sheet marginal") {
  const double a = 1.5, sigma = 0.8;
  const int reps = 30000;
  std::complex<double> emp(0.0, 0.0);
  const double theta = 0.7;
  for (int rep = 0; rep < reps; ++rep) {
    SeededStream rng(33, static_cast<std::uint64_t>(rep));
    auto vals = sample_stable_sheet(a, sigma, 1.0, {2.0}, {1.5}, rng);
    emp += std::complex<double>(std::cos(theta * vals[0]),
                                std::sin(theta * vals[0]));
  }
  emp /= static_cast<double>(reps);
  // value at (x,y) is stable with scale sigma (x y)^(1/alpha)
  double scale = std::pow(sigma, a) * 2.0 * 1.5;
  std::complex<double> target =
      std::exp(chf::stable_log_chf(theta, a, scale));
  CHECK(std::abs(emp - target) < 0.03);
}

TEST_CASE("intermediate field second moment") {
  // at gamma = gamma_plus the limit is the compensated Poisson integral
  // whose variance at the unit point is the closed-form constant below
  ModelParams params = make(1.9, 0.5);
  const int reps = 3000;
  double mean = 0.0, sq = 0.0;
  for (int rep = 0; rep < reps; ++rep) {
    SeededStream rng(34, static_cast<std::uint64_t>(rep));
    auto vals = sample_intermediate_plus(params, {1.0}, {1.0}, rng);
    mean += vals[0];
    sq += vals[0] * vals[0];
  }
  mean /= reps;
  double target = sigma_plus_sq(params);
  CHECK(target == doctest::Approx(21.990740740740741).epsilon(1e-12));
  // heavy-ish fourth moment, so give the variance check a generous band
  CHECK(std::fabs(mean) < 4.0 * std::sqrt(target / reps));
  CHECK(sq / reps == doctest::Approx(target).epsilon(0.12));
}

TEST_CASE("intermediate budget guard") {
  ModelParams params = make(1.9, 0.5);
  IntermediateConfig config;
  config.eps = 1e-4;
  config.budget = 100;
  SeededStream rng(35, 0);
  CHECK_THROWS_AS(
      sample_intermediate_plus(params, {1.0}, {1.0}, rng, config),
      TruncationBudgetExceeded);
}

}  // TEST_SUITE
