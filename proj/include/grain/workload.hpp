#pragma once

#include <cstdint>
#include <vector>

#include "grain/grain_stream.hpp"
#include "grain/limits.hpp"
#include "grain/params.hpp"
#include "grain/rng.hpp"

namespace grain {

// limit families of the aggregated session workload; the connection rate
// grows like T^beta and the arrival intensity like T^gamma
enum class WorkloadFamily {
  AlphaStableLevy,
  AlphaOverPStableLevy,
  BrownianMotion,
  BrownianMotionLog,
  IntermediateLevyHat,
  FbmSlow,
  GaussianLine,
  StableLinePlus,
  FbmPlus,
  BrownianMotionLogFast,
  IntermediateGaussHat,
  GaussianLineHatZ,
  GaussianLineLog,
  IntermediateI,
  IntermediateIHat,
  IntermediateIPlus,
};

const char* workload_family_name(WorkloadFamily family);

struct WorkloadConstants {
  double sigma_sq = 0.0;      // variance constant of Gaussian families
  double stable_index = 0.0;  // stable families: index of the limit law
  double stable_scale = 0.0;  // stable families: coefficient of |theta|^index
  double hurst = 0.0;         // fractional Brownian families
};

struct WorkloadRegime {
  WorkloadFamily family = WorkloadFamily::AlphaStableLevy;
  double script_H = 0.0;       // normalization exponent of T
  bool log_correction = false; // true when b_T carries (log T)^(1/2)
  WorkloadConstants constants;
};

// exact case analysis over (gamma, beta, alpha, p); beta may be +infinity
// (uncapped rate), p may be 1, and values within 1e-12 relative distance of
// a boundary are classified as the boundary family
WorkloadRegime classify_workload_regime(const ModelParams& params,
                                        double gamma, double beta);

// E[(R^(1-p) ^ K) R^p]: mean work transmitted by one session under rate
// cap K (K may be +infinity)
double capped_work_mean(const ModelParams& params, double K);

struct WorkloadConfig {
  double T = 0.0;          // horizon scale; observation window is (0, T x]
  double gamma = 0.0;      // arrival intensity M = T^gamma
  double beta = 0.0;       // rate cap K = T^beta (+infinity allowed)
  std::vector<double> xs;  // evaluation points, positive increasing
  std::uint64_t budget = default_grain_budget;
};

// cumulative workload A(T x) at the grid points for one realization of the
// stationary session process (arrivals on the whole line, observed work on
// (0, T x])
std::vector<double> simulate_workload(const ModelParams& params,
                                      const WorkloadConfig& config,
                                      SeededStream& rng);

// (A(T x) - E A(T x)) / b_T with b_T = T^H (times sqrt(log T) when the
// regime carries one)
std::vector<double> normalize_workload(const ModelParams& params,
                                       const WorkloadConfig& config,
                                       const WorkloadRegime& regime,
                                       const std::vector<double>& raw);

// samples the regime's limit process at the given points; every constant
// the law needs is carried inside the regime
std::vector<double> sample_workload_limit(const ModelParams& params,
                                          const WorkloadRegime& regime,
                                          const std::vector<double>& xs,
                                          SeededStream& rng,
                                          const IntermediateConfig& config =
                                              IntermediateConfig{});

}  // namespace grain
