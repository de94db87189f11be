#pragma once

#include "grain/params.hpp"

namespace grain {

// cos(pi a/2) Gamma(2-a) / (a(1-a)) for a in (1,2); positive there.  This is
// the factor turning the integral of e^{iz}-1-iz against z^(-1-a) dz into
// the standard totally skewed stable exponent.
double stable_c(double a);

// Scale of the stable sheet limit: sigma^alpha = c_f leb(B)^alpha stable_c(alpha).
double sigma_alpha(const ModelParams& params);

// Scale of the stable line limit above gamma_plus, defined for alpha < 2-p:
// sigma^{alpha_plus} = c_f/(1-p) stable_c(alpha_plus) int leb1(B(u))^{alpha_plus} du.
double sigma_alpha_plus(const ModelParams& params);

// Variance scale of the fractional sheet limit above gamma_plus, defined for
// 2-p < alpha < 2:
// sigma_+^2 = c_f int du int_0^inf ( int_0^1 leb1(B((t-u)/r^p)) dt )^2 r^(1-alpha-2p) dr.
double sigma_plus_sq(const ModelParams& params);

// Variance scale on the boundary alpha = 2-p (log-corrected normalization),
// defined for gamma > gamma_plus:
// sigma~_+^2 = c_f (gamma-gamma_plus)/(2(1-p)) int leb(B cap (B+(0,u))) du.
double sigma_tilde_plus_sq(const ModelParams& params, double gamma);

// int leb1(B(u))^q du over the horizontal extent of B.
double section_power_integral(const GrainShape& shape, double q);

}  // namespace grain
