#pragma once

#include <cstdint>
#include <cstddef>

namespace grain {

// Deterministic stream of pseudo-random numbers (xoshiro256++).  A stream is
// identified by (seed, stream_id); replicates get their own stream_id so the
// work split across threads never changes the numbers any replicate sees.
class SeededStream {
 public:
  explicit SeededStream(std::uint64_t seed, std::uint64_t stream_id = 0);

  std::uint64_t next_u64();

  // uniform on (0,1]
  double unit();
  void fill_unit(double* dst, std::size_t n);

  // standard normal (polar method, one value cached)
  double gaussian();

  // unit-mean exponential
  double exponential();

 private:
  std::uint64_t s_[4];
  double spare_ = 0.0;
  bool has_spare_ = false;
};

// Pareto(alpha, r_min) draw; with tilt q the density is reweighted by r^q
// (normalized), which is again Pareto with exponent alpha - q.  Used for the
// boundary components of the grain stream.
double pareto_sample(SeededStream& rng, double alpha, double r_min,
                     double tilt = 0.0);

double gaussian_sample(SeededStream& rng);

// Exact Poisson draw for any mean (multiplicative inversion below 10,
// transformed rejection above).
std::uint64_t poisson_count(SeededStream& rng, double mean);

// Strictly stable draw with index a in (1,2), scale sigma and skewness beta
// in [-1,1], in the parametrization
//   E e^{i theta Z} = exp{-sigma^a |theta|^a (1 - i beta sgn(theta) tan(pi a/2))}.
double stable_sample(SeededStream& rng, double a, double sigma, double beta);

}  // namespace grain
