#pragma once

#include "grain/frac.hpp"
#include "grain/params.hpp"

namespace grain {

// Critical values of the window aspect exponent gamma and the secondary
// stability indices of the edge regimes.  For 1 < alpha < 2 and 0 < p < 1,
//   gamma_minus = (1-p)/(alpha-(1-p)),
//   gamma_plus  = alpha/p - 1,
//   alpha_plus  = (alpha-p)/(1-p),
//   alpha_minus = (alpha-1+p)/p,
// with 0 < gamma_minus < gamma_plus (both can sit on either side of 1).
struct CriticalExponents {
  double gamma_minus;
  double gamma_plus;
  double alpha_plus;
  double alpha_minus;
};

CriticalExponents critical_exponents(const ModelParams& params);

// Scaling families of the rectangle-window partial integrals of the centered
// field, indexed by how the window aspect gamma compares with the critical
// pair (gamma_minus, gamma_plus).
enum class FieldFamily {
  StableSheet,        // independently scattered stable sheet limit
  StableSlidePlus,    // x * L(y): stable line process sliding in y
  StableSlideMinus,   // y * L(x): stable line process sliding in x
  FbsPlus,            // fractional Brownian sheet, indices (H+, 1/2)
  FbsMinus,           // fractional Brownian sheet, indices (1/2, H-)
  FbsLogPlus,         // boundary alpha = 2-p, log-corrected sheet (1, 1/2)
  FbsLogMinus,        // boundary alpha = 1+p, log-corrected sheet (1/2, 1)
  IntermediatePlus,   // gamma = gamma_plus, Poisson integral limit
  IntermediateMinus,  // gamma = gamma_minus, Poisson integral limit
};

const char* family_name(FieldFamily f);

struct FieldRegime {
  FieldFamily family;
  double H;               // normalization grows like lambda^H
  bool log_correction;    // additional (log lambda)^(1/2) factor
  double stable_index;    // index of the stable limit, 0 if Gaussian/other
  double hurst_x;         // Hurst pair of fractional sheet limits, else 0
  double hurst_y;
};

// Floating point classification.  Comparisons against the critical values
// snap to the boundary at relative tolerance 1e-12.
FieldRegime classify_field_regime(const ModelParams& params, double gamma);

// Exact classification for rational inputs; every branch condition and every
// exponent is evaluated in integer arithmetic.
FieldRegime classify_field_regime(const Frac& alpha, const Frac& p,
                                  const Frac& gamma);

// The model looked at through the diagonal mirror: grains transposed,
// p -> 1-p, window aspect inverted.  Partial integrals of the reflected
// model over (y,x) windows at scale lambda^gamma match the original ones
// over (x,y) windows at scale lambda, which reduces every gamma < gamma_minus
// statement to a gamma > gamma_plus statement.
struct ReflectedScenario {
  ModelParams params;
  double gamma;
};

ReflectedScenario reflect_params(const ModelParams& params, double gamma);

}  // namespace grain
