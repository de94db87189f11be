#pragma once

#include <cstdint>
#include <vector>

#include "grain/params.hpp"
#include "grain/rng.hpp"

namespace grain {

// integral over all offsets u of the overlap length of (u, u+len] with
// (0, x1] times its overlap with (0, x2]
double interval_overlap_product(double len, double x1, double x2);

// covariance of the unit fractional Brownian sheet with Hurst pair (h1, h2)
double fbs_covariance(double h1, double h2, double x1, double y1, double x2,
                      double y2);

// draws a centered Gaussian vector with the given dense covariance
// (row-major, n x n, n <= 4096) via Cholesky; a tiny diagonal jitter is
// escalated up to 1e-10 times the largest diagonal entry before giving up
// with CovarianceNotPSD
std::vector<double> sample_gaussian_field(const std::vector<double>& cov,
                                          std::size_t n, SeededStream& rng);

// unit-scale fractional Brownian sheet at the grid xs x ys (row-major,
// xs outer); grid coordinates must be positive and strictly increasing
std::vector<double> sample_fbs(double h1, double h2,
                               const std::vector<double>& xs,
                               const std::vector<double>& ys,
                               SeededStream& rng);

// one-dimensional fractional Brownian motion at the given points
std::vector<double> sample_fbm(double hurst, const std::vector<double>& xs,
                               SeededStream& rng);

// independent-increment stable sheet: value at (x, y) sums iid stable cell
// increments with scale sigma (dx dy)^(1/alpha) over [0,x] x [0,y]
std::vector<double> sample_stable_sheet(double alpha, double sigma,
                                        double skew,
                                        const std::vector<double>& xs,
                                        const std::vector<double>& ys,
                                        SeededStream& rng);

// one-dimensional stable Levy motion at the given points
std::vector<double> sample_stable_line(double alpha, double sigma, double skew,
                                       const std::vector<double>& xs,
                                       SeededStream& rng);

struct IntermediateConfig {
  double eps = 0.05;     // grain sizes below this go into the Gaussian part
  double r_max = 1e5;    // grain sizes above this are dropped
  std::uint64_t budget = 20000000;  // cap on Poisson atoms per realization
};

// intermediate-limit field between the stable sheet and the fractional
// sheet: a compensated Poisson integral of vertically collapsed grains,
// sampled by explicit atoms for sizes in [eps, r_max] plus a Gaussian
// field with the exact covariance of the sizes below eps
std::vector<double> sample_intermediate_plus(const ModelParams& params,
                                             const std::vector<double>& xs,
                                             const std::vector<double>& ys,
                                             SeededStream& rng,
                                             const IntermediateConfig& config =
                                                 IntermediateConfig{});

}  // namespace grain
