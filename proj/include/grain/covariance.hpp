#pragma once

#include "grain/params.hpp"

namespace grain {

// Cov(X(0,0), X(t,s)) of the stationary occupation field, computed by
// integrating the grain self-overlap over the size distribution.
double covariance_exact(const ModelParams& params, double t, double s);

// Angular profile of the covariance decay: along the curve
// (t,s) = (z w^p_dir ...) with w -> infinity the covariance behaves like
// b(z) w^(-(alpha-1)/p) where z in [-1,1] fixes the direction.  b depends
// only on the tail of the size distribution, not on r_min.
double angular_b(const ModelParams& params, double z);

// Long range dependence of the field: the planar covariance is never
// integrable for alpha < 2; the directional statements depend on how alpha
// compares with 2-p (vertical) and 1+p (horizontal).
struct LrdClassification {
  bool plane;
  bool vertical;
  bool horizontal;
};

LrdClassification lrd_classify(const ModelParams& params);

// leb(B cap (B + (a,b))) for the built-in template shapes.
double shape_overlap(const GrainShape& shape, double a, double b);

// Var of the centered occupation integral over (0,X] x (0,Y] for square
// grains.  The grain sum is Poisson, so the variance is the size integral of
// the squared window overlap, which is piecewise power-law in the size and
// integrates in closed form.
double window_integral_variance(const ModelParams& params, double X, double Y);

}  // namespace grain
