#pragma once

#include <cstdint>
#include <vector>

#include "grain/exponents.hpp"
#include "grain/grain_stream.hpp"
#include "grain/params.hpp"
#include "grain/rng.hpp"

namespace grain {

// mean (and, the count being Poisson, variance) of the occupation count at
// any fixed point: grain area times mean size
double mean_occupation(const ModelParams& params);

// occupation counts at the given points for one realization of the model
// restricted to [0, X] x [0, Y]; ts and ss are paired coordinates
std::vector<std::uint32_t> evaluate_occupation(
    const ModelParams& params, const ExtendedWindow& win,
    const std::vector<double>& ts, const std::vector<double>& ss,
    SeededStream& rng, std::uint64_t budget = default_grain_budget);

// centered integral of the occupation field over
// [0, lambda x] x [0, lambda^gamma y]
double simulate_S(const ModelParams& params, double lambda, double gamma,
                  double x, double y, SeededStream& rng,
                  std::uint64_t budget = default_grain_budget);

// centered window integrals for the whole nested family
// [0, lambda_i x] x [0, lambda_i^gamma y] from a single grain realization
// drawn for the largest window; lambdas must be strictly increasing.
// Sharing the realization correlates the estimates across scales, which
// stabilizes scaling-slope fits.
std::vector<double> simulate_S_nested(const ModelParams& params,
                                      const std::vector<double>& lambdas,
                                      double gamma, double x, double y,
                                      SeededStream& rng,
                                      std::uint64_t budget =
                                          default_grain_budget);

// independent replicates of simulate_S; replicate i always uses stream
// (seed, i), so the output is identical for every thread count
std::vector<double> simulate_S_batch(const ModelParams& params, double lambda,
                                     double gamma, double x, double y,
                                     std::size_t reps, std::uint64_t seed,
                                     int threads = 1,
                                     std::uint64_t budget =
                                         default_grain_budget);

// lambda^H, times sqrt(log lambda) when the regime carries a log factor
double field_normalization(const FieldRegime& regime, double lambda);

struct CovarianceLag {
  double dt = 0.0, ds = 0.0;
};

struct CovarianceEstimate {
  double dt = 0.0, ds = 0.0;
  double exact = 0.0;     // quadrature value of the model covariance
  double estimate = 0.0;  // empirical mean of centered pair products
  double se = 0.0;        // standard error across replicates
  std::size_t pairs = 0;  // anchor pairs averaged within each replicate
};

// estimates cov(X(0,0), X(dt,ds)) for each lag by averaging centered pair
// products over a grid of anchor points (pitch = smallest lag component on
// each axis when the lags are commensurate), with a standard error taken
// across independent replicates
std::vector<CovarianceEstimate> empirical_covariance(
    const ModelParams& params, const std::vector<CovarianceLag>& lags,
    std::size_t reps, std::uint64_t seed, int threads = 1);

}  // namespace grain
