#include "grain/rng.hpp"

#include <cmath>

#include "grain/errors.hpp"

namespace grain {

namespace {

std::uint64_t splitmix64(std::uint64_t& x) {
  std::uint64_t z = (x += 0x9E3779B97F4A7C15ULL);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

inline std::uint64_t rotl(std::uint64_t x, int k) {
  return (x << k) | (x >> (64 - k));
}

constexpr double pi = 3.141592653589793238462643383279502884;

}  // namespace

SeededStream::SeededStream(std::uint64_t seed, std::uint64_t stream_id) {
  std::uint64_t x = seed ^ (0xA0761D6478BD642FULL * (stream_id + 1));
  s_[0] = splitmix64(x);
  s_[1] = splitmix64(x);
  s_[2] = splitmix64(x);
  s_[3] = splitmix64(x);
  if ((s_[0] | s_[1] | s_[2] | s_[3]) == 0) s_[0] = 1;
}

std::uint64_t SeededStream::next_u64() {
  const std::uint64_t result = rotl(s_[0] + s_[3], 23) + s_[0];
  const std::uint64_t t = s_[1] << 17;
  s_[2] ^= s_[0];
  s_[3] ^= s_[1];
  s_[1] ^= s_[2];
  s_[0] ^= s_[3];
  s_[2] ^= t;
  s_[3] = rotl(s_[3], 45);
  return result;
}

double SeededStream::unit() {
  return static_cast<double>((next_u64() >> 11) + 1) * 0x1.0p-53;
}

void SeededStream::fill_unit(double* dst, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) dst[i] = unit();
}

double SeededStream::gaussian() {
  if (has_spare_) {
    has_spare_ = false;
    return spare_;
  }
  double u, v, s;
  do {
    u = 2.0 * unit() - 1.0;
    v = 2.0 * unit() - 1.0;
    s = u * u + v * v;
  } while (s >= 1.0 || s == 0.0);
  double f = std::sqrt(-2.0 * std::log(s) / s);
  spare_ = v * f;
  has_spare_ = true;
  return u * f;
}

double SeededStream::exponential() { return -std::log(unit()); }

double pareto_sample(SeededStream& rng, double alpha, double r_min,
                     double tilt) {
  if (!(tilt < alpha))
    throw AlphaOutOfRange("pareto tilt must stay below alpha");
  return r_min * std::pow(rng.unit(), -1.0 / (alpha - tilt));
}

double gaussian_sample(SeededStream& rng) { return rng.gaussian(); }

namespace {

// multiplicative inversion, exact for small means
std::uint64_t poisson_small(SeededStream& rng, double mean) {
  double limit = std::exp(-mean);
  double prod = rng.unit();
  std::uint64_t n = 0;
  while (prod > limit) {
    ++n;
    prod *= rng.unit();
  }
  return n;
}

// transformed rejection with squeeze (Hormann's PTRS), exact for mean >= 10
std::uint64_t poisson_ptrs(SeededStream& rng, double mean) {
  const double slam = std::sqrt(mean);
  const double loglam = std::log(mean);
  const double b = 0.931 + 2.53 * slam;
  const double a = -0.059 + 0.02483 * b;
  const double inv_alpha = 1.1239 + 1.1328 / (b - 3.4);
  const double v_r = 0.9277 - 3.6224 / (b - 2.0);
  for (;;) {
    double u = rng.unit() - 0.5;
    double v = rng.unit();
    double us = 0.5 - std::fabs(u);
    double k = std::floor((2.0 * a / us + b) * u + mean + 0.43);
    if (us >= 0.07 && v <= v_r) return static_cast<std::uint64_t>(k);
    if (k < 0.0 || (us < 0.013 && v > us)) continue;
    if (std::log(v) + std::log(inv_alpha) - std::log(a / (us * us) + b) <=
        k * loglam - mean - std::lgamma(k + 1.0))
      return static_cast<std::uint64_t>(k);
  }
}

}  // namespace

std::uint64_t poisson_count(SeededStream& rng, double mean) {
  if (!(mean >= 0.0) || !std::isfinite(mean))
    throw Error("poisson mean must be finite and non-negative");
  if (mean == 0.0) return 0;
  if (mean < 10.0) return poisson_small(rng, mean);
  return poisson_ptrs(rng, mean);
}

double stable_sample(SeededStream& rng, double a, double sigma, double beta) {
  if (!(a > 1.0) || !(a < 2.0))
    throw AlphaOutOfRange("stable index must lie in (1,2), got " +
                          std::to_string(a));
  if (!(beta >= -1.0) || !(beta <= 1.0))
    throw Error("stable skewness must lie in [-1,1]");
  double t = beta * std::tan(pi * a / 2.0);
  double shift = std::atan(t) / a;
  double scale = std::pow(1.0 + t * t, 1.0 / (2.0 * a));
  double u = pi * (rng.unit() - 0.5);  // uniform on (-pi/2, pi/2)
  double w = rng.exponential();
  double x = scale * std::sin(a * (u + shift)) /
             std::pow(std::cos(u), 1.0 / a) *
             std::pow(std::cos(u - a * (u + shift)) / w, (1.0 - a) / a);
  return sigma * x;
}

}  // namespace grain
