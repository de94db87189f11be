#include "grain/exponents.hpp"

#include <algorithm>
#include <cmath>

namespace grain {

namespace {

// a == b up to relative tolerance 1e-12; used to snap floating point input
// onto the boundary sets where the regime changes.
bool near(double a, double b) {
  double scale = std::max({1.0, std::fabs(a), std::fabs(b)});
  return std::fabs(a - b) <= 1e-12 * scale;
}

void check_gamma(double gamma) {
  if (!(gamma > 0.0) || !std::isfinite(gamma))
    throw Error("gamma must be positive and finite, got " + std::to_string(gamma));
}

FieldRegime plus_regime(double alpha, double p, double gamma, bool alpha_is_2mp) {
  FieldRegime r{};
  double alpha_plus = (alpha - p) / (1.0 - p);
  if (alpha_is_2mp) {
    r.family = FieldFamily::FbsLogPlus;
    r.H = 1.0 + gamma / 2.0;
    r.log_correction = true;
    r.hurst_x = 1.0;
    r.hurst_y = 0.5;
  } else if (alpha < 2.0 - p) {
    r.family = FieldFamily::StableSlidePlus;
    r.H = 1.0 + gamma / alpha_plus;
    r.stable_index = alpha_plus;
  } else {
    double h_plus = (2.0 - alpha + p) / (2.0 * p);
    r.family = FieldFamily::FbsPlus;
    r.H = h_plus + gamma / 2.0;
    r.hurst_x = h_plus;
    r.hurst_y = 0.5;
  }
  return r;
}

FieldRegime minus_regime(double alpha, double p, double gamma, bool alpha_is_1pp) {
  FieldRegime r{};
  double alpha_minus = (alpha - 1.0 + p) / p;
  if (alpha_is_1pp) {
    r.family = FieldFamily::FbsLogMinus;
    r.H = gamma + 0.5;
    r.log_correction = true;
    r.hurst_x = 0.5;
    r.hurst_y = 1.0;
  } else if (alpha < 1.0 + p) {
    r.family = FieldFamily::StableSlideMinus;
    r.H = gamma + 1.0 / alpha_minus;
    r.stable_index = alpha_minus;
  } else {
    double h_minus = (3.0 - p - alpha) / (2.0 * (1.0 - p));
    r.family = FieldFamily::FbsMinus;
    r.H = gamma * h_minus + 0.5;
    r.hurst_x = 0.5;
    r.hurst_y = h_minus;
  }
  return r;
}

}  // namespace

CriticalExponents critical_exponents(const ModelParams& params) {
  validate(params);
  double alpha = params.alpha, p = params.p;
  CriticalExponents c{};
  c.gamma_minus = (1.0 - p) / (alpha - (1.0 - p));
  c.gamma_plus = alpha / p - 1.0;
  c.alpha_plus = (alpha - p) / (1.0 - p);
  c.alpha_minus = (alpha - 1.0 + p) / p;
  return c;
}

const char* family_name(FieldFamily f) {
  switch (f) {
    case FieldFamily::StableSheet: return "StableSheet";
    case FieldFamily::StableSlidePlus: return "StableSlidePlus";
    case FieldFamily::StableSlideMinus: return "StableSlideMinus";
    case FieldFamily::FbsPlus: return "FbsPlus";
    case FieldFamily::FbsMinus: return "FbsMinus";
    case FieldFamily::FbsLogPlus: return "FbsLogPlus";
    case FieldFamily::FbsLogMinus: return "FbsLogMinus";
    case FieldFamily::IntermediatePlus: return "IntermediatePlus";
    case FieldFamily::IntermediateMinus: return "IntermediateMinus";
  }
  return "unknown";
}

FieldRegime classify_field_regime(const ModelParams& params, double gamma) {
  validate(params);
  check_gamma(gamma);
  double alpha = params.alpha, p = params.p;
  CriticalExponents c = critical_exponents(params);

  if (near(gamma, c.gamma_plus)) {
    FieldRegime r{};
    r.family = FieldFamily::IntermediatePlus;
    r.H = 1.0 / p;
    return r;
  }
  if (near(gamma, c.gamma_minus)) {
    FieldRegime r{};
    r.family = FieldFamily::IntermediateMinus;
    r.H = 1.0 / (alpha - 1.0 + p);
    return r;
  }
  if (gamma > c.gamma_minus && gamma < c.gamma_plus) {
    FieldRegime r{};
    r.family = FieldFamily::StableSheet;
    r.H = (1.0 + gamma) / alpha;
    r.stable_index = alpha;
    return r;
  }
  if (gamma > c.gamma_plus)
    return plus_regime(alpha, p, gamma, near(alpha, 2.0 - p));
  return minus_regime(alpha, p, gamma, near(alpha, 1.0 + p));
}

FieldRegime classify_field_regime(const Frac& alpha, const Frac& p,
                                  const Frac& gamma) {
  ModelParams check;
  check.alpha = alpha.value();
  check.p = p.value();
  validate(check);
  if (!(gamma > Frac(0))) throw Error("gamma must be positive");

  const Frac one(1), two(2), half(1, 2);
  Frac gamma_plus = alpha / p - one;
  Frac gamma_minus = (one - p) / (alpha - (one - p));

  FieldRegime r{};
  if (gamma == gamma_plus) {
    r.family = FieldFamily::IntermediatePlus;
    r.H = (one / p).value();
    return r;
  }
  if (gamma == gamma_minus) {
    r.family = FieldFamily::IntermediateMinus;
    r.H = (one / (alpha - one + p)).value();
    return r;
  }
  if (gamma > gamma_minus && gamma < gamma_plus) {
    r.family = FieldFamily::StableSheet;
    r.H = ((one + gamma) / alpha).value();
    r.stable_index = alpha.value();
    return r;
  }
  if (gamma > gamma_plus) {
    if (alpha == two - p) {
      r.family = FieldFamily::FbsLogPlus;
      r.H = (one + gamma / two).value();
      r.log_correction = true;
      r.hurst_x = 1.0;
      r.hurst_y = 0.5;
    } else if (alpha < two - p) {
      Frac alpha_plus = (alpha - p) / (one - p);
      r.family = FieldFamily::StableSlidePlus;
      r.H = (one + gamma / alpha_plus).value();
      r.stable_index = alpha_plus.value();
    } else {
      Frac h_plus = (two - alpha + p) / (two * p);
      r.family = FieldFamily::FbsPlus;
      r.H = (h_plus + gamma / two).value();
      r.hurst_x = h_plus.value();
      r.hurst_y = 0.5;
    }
    return r;
  }
  if (alpha == one + p) {
    r.family = FieldFamily::FbsLogMinus;
    r.H = (gamma + half).value();
    r.log_correction = true;
    r.hurst_x = 0.5;
    r.hurst_y = 1.0;
  } else if (alpha < one + p) {
    Frac alpha_minus = (alpha - one + p) / p;
    r.family = FieldFamily::StableSlideMinus;
    r.H = (gamma + one / alpha_minus).value();
    r.stable_index = alpha_minus.value();
  } else {
    Frac h_minus = (Frac(3) - p - alpha) / (two * (one - p));
    r.family = FieldFamily::FbsMinus;
    r.H = (gamma * h_minus + half).value();
    r.hurst_x = 0.5;
    r.hurst_y = h_minus.value();
  }
  return r;
}

ReflectedScenario reflect_params(const ModelParams& params, double gamma) {
  validate(params);
  check_gamma(gamma);
  ReflectedScenario out;
  out.params = params;
  out.params.p = 1.0 - params.p;
  out.gamma = 1.0 / gamma;
  switch (params.shape.kind) {
    case ShapeKind::UnitSquare:
    case ShapeKind::UnitDisk:
      break;  // symmetric under transposition
    case ShapeKind::Custom: {
      const GrainShape& s = params.shape;
      if (!s.indicator)
        throw BadGrain("cannot transpose a custom grain without an indicator");
      auto ind = s.indicator;
      out.params.shape.indicator = [ind](double u, double v) { return ind(v, u); };
      out.params.shape.bbox = {s.bbox[1], s.bbox[0], s.bbox[3], s.bbox[2]};
      // The vertical section of the transposed grain is the horizontal
      // section of the original, which the caller has to supply.
      out.params.shape.section = nullptr;
      break;
    }
  }
  return out;
}

}  // namespace grain
