#include <cmath>
#include <complex>
#include <cstdint>
#include <limits>
#include <set>
#include <string>
#include <vector>

#include "doctest.h"
#include "grain/chf.hpp"
#include "grain/errors.hpp"
#include "grain/exponents.hpp"
#include "grain/params.hpp"
#include "grain/rng.hpp"
#include "grain/workload.hpp"

using namespace grain;

namespace {

const double kInf = std::numeric_limits<double>::infinity();

ModelParams make(double alpha, double p, double r_min = 1.0) {
  ModelParams params;
  params.alpha = alpha;
  params.p = p;
  params.r_min = r_min;
  params.shape = GrainShape::unit_square();
  return params;
}

}  // namespace

TEST_SUITE("workload aggregation") {

TEST_CASE("family names are distinct") {
  std::set<std::string> names;
  for (int i = 0; i < 16; ++i)
    names.insert(workload_family_name(static_cast<WorkloadFamily>(i)));
  CHECK(names.size() == 16);
}

TEST_CASE("slow uncapped regime is a stable Levy motion") {
  ModelParams params = make(1.5, 0.5);
  WorkloadRegime regime = classify_workload_regime(params, 1.0, kInf);
  CHECK(regime.family == WorkloadFamily::AlphaStableLevy);
  CHECK(regime.script_H == doctest::Approx(4.0 / 3.0).epsilon(1e-12));
  CHECK(!regime.log_correction);
  CHECK(regime.constants.stable_index == doctest::Approx(1.5));
}

TEST_CASE("fast uncapped regimes") {
  // alpha below 2-p: stable line limit with the reflected index
  ModelParams thin = make(1.2, 0.5);
  WorkloadRegime stable_line = classify_workload_regime(thin, 3.0, kInf);
  CHECK(stable_line.family == WorkloadFamily::StableLinePlus);
  CHECK(stable_line.constants.stable_index ==
        doctest::Approx(1.4).epsilon(1e-12));
  // alpha exactly 2-p: Gaussian line with a log-corrected normalization
  ModelParams boundary = make(1.5, 0.5);
  WorkloadRegime gauss_log = classify_workload_regime(boundary, 3.0, kInf);
  CHECK(gauss_log.family == WorkloadFamily::GaussianLineLog);
  CHECK(gauss_log.log_correction);
  CHECK(gauss_log.constants.sigma_sq == doctest::Approx(1.5).epsilon(1e-9));
}

TEST_CASE("boundary inputs snap") {
  ModelParams params = make(1.5, 0.5);
  WorkloadRegime at = classify_workload_regime(params, 2.0, 3.0);
  WorkloadRegime near = classify_workload_regime(params, 2.0 * (1.0 + 1e-13),
                                                 3.0);
  CHECK(at.family == near.family);
  CHECK(at.script_H == doctest::Approx(near.script_H).epsilon(1e-11));
}

TEST_CASE("unit p is allowed here but not for the planar field") {
  ModelParams params = make(1.5, 1.0);
  CHECK_NOTHROW(classify_workload_regime(params, 1.0, 0.5));
  CHECK_THROWS_AS(classify_field_regime(params, 1.0), POutOfRange);
}

TEST_CASE("capped session work") {
  ModelParams params = make(1.5, 0.5);
  // E[(sqrt R ^ 4) sqrt R]: split the size integral at R = 16
  CHECK(capped_work_mean(params, 4.0) ==
        doctest::Approx(2.625).epsilon(1e-12));
  CHECK(capped_work_mean(params, kInf) == doctest::Approx(3.0).epsilon(1e-12));
  // p = 1: the rate factor degenerates to min(1, K)
  CHECK(capped_work_mean(make(1.5, 1.0), 0.5) ==
        doctest::Approx(1.5).epsilon(1e-12));

  // Monte Carlo agreement for the capped mean
  SeededStream rng(41, 0);
  const int n = 200000;
  double sum = 0.0;
  for (int i = 0; i < n; ++i) {
    double r = pareto_sample(rng, 1.5, 1.0);
    sum += std::min(std::sqrt(r), 4.0) * std::sqrt(r);
  }
  // terms are bounded by 16 R, so the variance is at most 256 Var-ish;
  // a direct bound E term^2 <= 16 E R = 48 suffices
  CHECK(std::fabs(sum / n - 2.625) < 4.0 * std::sqrt(48.0 / n));
}

TEST_CASE("workload simulation: determinism, mean, normalization") {
  ModelParams params = make(1.5, 0.5);
  WorkloadConfig config;
  config.T = 16.0;
  config.gamma = 1.0;
  config.beta = 0.5;  // rate cap K = 4
  config.xs = {0.5, 1.0};

  SeededStream a(42, 9), b(42, 9);
  auto run1 = simulate_workload(params, config, a);
  auto run2 = simulate_workload(params, config, b);
  CHECK(run1 == run2);
  REQUIRE(run1.size() == 2);
  CHECK(run1[0] <= run1[1]);  // cumulative in x

  // E A(T x) = T^(1+gamma) x E[(R^(1-p) ^ K) R^p] = 256 * 2.625 = 672 at x=1
  const int reps = 400;
  double sum = 0.0, sq = 0.0;
  for (int rep = 0; rep < reps; ++rep) {
    SeededStream rng(43, static_cast<std::uint64_t>(rep));
    auto vals = simulate_workload(params, config, rng);
    sum += vals[1];
    sq += vals[1] * vals[1];
  }
  double mean = sum / reps;
  double sd = std::sqrt((sq / reps - mean * mean) * reps / (reps - 1.0));
  CHECK(std::fabs(mean - 672.0) < 4.0 * sd / std::sqrt(double(reps)));

  // normalize_workload subtracts that exact mean and divides by T^H
  WorkloadConfig uncapped = config;
  uncapped.beta = kInf;
  WorkloadRegime regime = classify_workload_regime(params, 1.0, kInf);
  std::vector<double> raw = {100.0, 300.0};
  auto normalized = normalize_workload(params, uncapped, regime, raw);
  double b_T = std::pow(16.0, regime.script_H);
  CHECK(normalized[0] ==
        doctest::Approx((100.0 - 256.0 * 0.5 * 3.0) / b_T).epsilon(1e-9));
  CHECK(normalized[1] ==
        doctest::Approx((300.0 - 256.0 * 1.0 * 3.0) / b_T).epsilon(1e-9));
}

TEST_CASE("limit sampler matches the stable law") {
  ModelParams params = make(1.5, 0.5);
  WorkloadRegime regime = classify_workload_regime(params, 1.0, kInf);
  const int reps = 3000;
  const double theta = 0.5;
  std::complex<double> emp(0.0, 0.0);
  for (int rep = 0; rep < reps; ++rep) {
    SeededStream rng(44, static_cast<std::uint64_t>(rep));
    auto vals = sample_workload_limit(params, regime, {1.0}, rng);
    emp += std::complex<double>(std::cos(theta * vals[0]),
                                std::sin(theta * vals[0]));
  }
  emp /= static_cast<double>(reps);
  std::complex<double> target = std::exp(chf::stable_log_chf(
      theta, regime.constants.stable_index, regime.constants.stable_scale));
  CHECK(std::abs(emp - target) < 0.05);

  // deterministic given the stream
  SeededStream c(45, 1), d(45, 1);
  CHECK(sample_workload_limit(params, regime, {0.5, 1.0}, c) ==
        sample_workload_limit(params, regime, {0.5, 1.0}, d));
}

}  // TEST_SUITE
