#pragma once

#include <complex>

#include "grain/params.hpp"

namespace grain {
namespace chf {

using cd = std::complex<double>;

// Psi(z) = e^{iz} - 1 - iz, the centered Poisson exponent kernel.
cd psi(double z);

// int_0^m Psi(c a) da, stable for small |c m|.
cd psi_int(double c, double m);

// Log characteristic function of a totally right-skewed strictly stable law
// in the parametrization
//   log E e^{i theta Z} = -scale |theta|^a (1 - i sgn(theta) tan(pi a/2)),
// where scale plays the role of sigma^a.
cd stable_log_chf(double theta, double a, double scale);

// Exact log characteristic function of the normalized centered window
// integral at finite lambda for unit square grains:
//   log E exp{ i theta S(lambda x, lambda^gamma y) / norm }.
// Exact up to quadrature error (three nested one dimensional passes), which
// makes it an oracle for simulation output at moderate lambda.
cd window_log_chf(const ModelParams& params, double lambda, double gamma,
                  double x, double y, double norm, double theta);

}  // namespace chf
}  // namespace grain
