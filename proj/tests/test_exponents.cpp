#include <cmath>

#include "doctest.h"
#include "grain/exponents.hpp"

using namespace grain;

namespace {

ModelParams make(double alpha, double p) {
  ModelParams m;
  m.alpha = alpha;
  m.p = p;
  return m;
}

}  // namespace

TEST_SUITE("critical exponents and field regimes") {

TEST_CASE("critical exponent values") {
  CriticalExponents c = critical_exponents(make(1.5, 0.5));
  CHECK(c.gamma_minus == doctest::Approx(0.5));
  CHECK(c.gamma_plus == doctest::Approx(2.0));
  CHECK(c.alpha_plus == doctest::Approx(2.0));
  CHECK(c.alpha_minus == doctest::Approx(2.0));

  c = critical_exponents(make(1.2, 0.8));
  CHECK(c.gamma_minus == doctest::Approx(0.2));
  CHECK(c.gamma_plus == doctest::Approx(0.5));
  CHECK(c.alpha_plus == doctest::Approx(2.0));
  CHECK(c.alpha_minus == doctest::Approx(1.25));

  c = critical_exponents(make(1.9, 0.5));
  CHECK(c.gamma_plus == doctest::Approx(2.8));
  CHECK(c.gamma_minus == doctest::Approx(0.5 / 1.4));
}

TEST_CASE("ordering of the critical window") {
  for (double alpha : {1.05, 1.3, 1.5, 1.7, 1.95}) {
    for (double p : {0.1, 0.3, 0.5, 0.7, 0.9}) {
      CriticalExponents c = critical_exponents(make(alpha, p));
      CAPTURE(alpha);
      CAPTURE(p);
      CHECK(c.gamma_minus > 0.0);
      CHECK(c.gamma_minus < c.gamma_plus);
      // the change points straddle 1 exactly when alpha beats the
      // corresponding aspect threshold
      CHECK((c.gamma_plus > 1.0) == (alpha > 2.0 * p));
      CHECK((c.gamma_minus < 1.0) == (alpha > 2.0 * (1.0 - p)));
      CHECK(c.alpha_plus > 1.0);
      CHECK(c.alpha_minus > 1.0);
      // the two secondary indices are the reflection images of one another
      CriticalExponents cr = critical_exponents(make(alpha, 1.0 - p));
      CHECK(c.alpha_minus == doctest::Approx(cr.alpha_plus));
      CHECK(c.gamma_minus == doctest::Approx(1.0 / cr.gamma_plus));
    }
  }
}

TEST_CASE("square window sits in the sheet regime iff alpha beats both "
          "aspect thresholds") {
  for (double alpha : {1.05, 1.5, 1.95})
    for (double p : {0.2, 0.5, 0.8}) {
      FieldRegime r = classify_field_regime(make(alpha, p), 1.0);
      bool sheet = alpha > 2.0 * p && alpha > 2.0 * (1.0 - p);
      CAPTURE(alpha);
      CAPTURE(p);
      CHECK((r.family == FieldFamily::StableSheet) == sheet);
      if (sheet) CHECK(r.H == doctest::Approx(2.0 / alpha));
    }
}

TEST_CASE("reference classifications") {
  FieldRegime r = classify_field_regime(make(1.5, 0.5), 1.0);
  CHECK(r.family == FieldFamily::StableSheet);
  CHECK(r.H == doctest::Approx(4.0 / 3.0));
  CHECK(r.stable_index == doctest::Approx(1.5));
  CHECK(!r.log_correction);

  r = classify_field_regime(make(1.9, 0.5), 3.0);
  CHECK(r.family == FieldFamily::FbsPlus);
  CHECK(r.H == doctest::Approx(2.1));
  CHECK(r.hurst_x == doctest::Approx(0.6));
  CHECK(r.hurst_y == doctest::Approx(0.5));

  r = classify_field_regime(make(1.5, 0.5), 2.0);
  CHECK(r.family == FieldFamily::IntermediatePlus);
  CHECK(r.H == doctest::Approx(2.0));

  r = classify_field_regime(make(1.5, 0.5), 3.0);  // alpha = 2-p exactly
  CHECK(r.family == FieldFamily::FbsLogPlus);
  CHECK(r.log_correction);
  CHECK(r.H == doctest::Approx(2.5));

  r = classify_field_regime(make(1.4, 0.5), 3.0);  // alpha < 2-p
  CHECK(r.family == FieldFamily::StableSlidePlus);
  CHECK(r.stable_index == doctest::Approx(0.9 / 0.5));
  CHECK(r.H == doctest::Approx(1.0 + 3.0 / 1.8));

  r = classify_field_regime(make(1.5, 0.5), 0.25);  // below gamma_minus, alpha = 1+p
  CHECK(r.family == FieldFamily::FbsLogMinus);
  CHECK(r.H == doctest::Approx(0.75));

  r = classify_field_regime(make(1.4, 0.5), 0.25);  // alpha < 1+p
  CHECK(r.family == FieldFamily::StableSlideMinus);
  CHECK(r.stable_index == doctest::Approx(1.8));
  CHECK(r.H == doctest::Approx(0.25 + 1.0 / 1.8));

  r = classify_field_regime(make(1.75, 0.5), 0.25);  // alpha > 1+p
  CHECK(r.family == FieldFamily::FbsMinus);
  CHECK(r.hurst_y == doctest::Approx((3.0 - 0.5 - 1.75) / 1.0));
  CHECK(r.H == doctest::Approx(0.25 * 0.75 + 0.5));
}

TEST_CASE("exact rational classification hits boundaries") {
  Frac alpha(3, 2), p(1, 2);
  FieldRegime r = classify_field_regime(alpha, p, Frac(2));
  CHECK(r.family == FieldFamily::IntermediatePlus);
  CHECK(r.H == doctest::Approx(2.0));

  r = classify_field_regime(alpha, p, Frac(1, 2));
  CHECK(r.family == FieldFamily::IntermediateMinus);
  CHECK(r.H == doctest::Approx(1.0));

  // one ulp off the boundary in rational terms is still off the boundary
  r = classify_field_regime(alpha, p, Frac(1999999999, 1000000000));
  CHECK(r.family == FieldFamily::StableSheet);

  r = classify_field_regime(Frac(19, 10), p, Frac(14, 5));
  CHECK(r.family == FieldFamily::IntermediatePlus);
  CHECK(r.H == doctest::Approx(2.0));
}

TEST_CASE("floating point input snaps onto nearby boundaries") {
  // computing gamma_plus through a different expression moves the last ulp
  ModelParams m = make(1.9, 0.7);
  double gp = (1.9 - 0.7) / 0.7;
  FieldRegime r = classify_field_regime(m, gp);
  CHECK(r.family == FieldFamily::IntermediatePlus);
  r = classify_field_regime(m, gp * (1.0 + 1e-9));
  CHECK(r.family != FieldFamily::IntermediatePlus);
}

TEST_CASE("H is continuous across both critical aspects") {
  for (auto [alpha, p] : {std::pair{1.5, 0.5}, {1.9, 0.5}, {1.2, 0.3},
                          {1.7, 0.8}, {1.05, 0.6}}) {
    ModelParams m = make(alpha, p);
    CriticalExponents c = critical_exponents(m);
    double eps = 1e-9;
    double h_at = classify_field_regime(m, c.gamma_plus).H;
    CHECK(h_at == doctest::Approx(1.0 / p));
    CHECK(classify_field_regime(m, c.gamma_plus - eps).H ==
          doctest::Approx(h_at).epsilon(1e-6));
    CHECK(classify_field_regime(m, c.gamma_plus + eps).H ==
          doctest::Approx(h_at).epsilon(1e-6));
    double h_lo = classify_field_regime(m, c.gamma_minus).H;
    CHECK(h_lo == doctest::Approx(1.0 / (alpha - 1.0 + p)));
    CHECK(classify_field_regime(m, c.gamma_minus - eps).H ==
          doctest::Approx(h_lo).epsilon(1e-6));
    CHECK(classify_field_regime(m, c.gamma_minus + eps).H ==
          doctest::Approx(h_lo).epsilon(1e-6));
  }
}

TEST_CASE("classification below gamma_minus mirrors the one above gamma_plus") {
  for (auto [alpha, p] : {std::pair{1.5, 0.5}, {1.8, 0.3}, {1.3, 0.7},
                          {1.6, 0.45}, {1.9, 0.62}}) {
    ModelParams m = make(alpha, p);
    CriticalExponents c = critical_exponents(m);
    for (double gamma : {c.gamma_minus * 0.7, c.gamma_minus * 0.3,
                         c.gamma_minus * 0.05}) {
      FieldRegime lo = classify_field_regime(m, gamma);
      ReflectedScenario ref = reflect_params(m, gamma);
      FieldRegime hi = classify_field_regime(ref.params, ref.gamma);
      CAPTURE(alpha);
      CAPTURE(p);
      CAPTURE(gamma);
      CHECK(lo.H == doctest::Approx(gamma * hi.H));
      switch (hi.family) {
        case FieldFamily::StableSlidePlus:
          CHECK(lo.family == FieldFamily::StableSlideMinus);
          CHECK(lo.stable_index == doctest::Approx(hi.stable_index));
          break;
        case FieldFamily::FbsPlus:
          CHECK(lo.family == FieldFamily::FbsMinus);
          CHECK(lo.hurst_y == doctest::Approx(hi.hurst_x));
          break;
        case FieldFamily::FbsLogPlus:
          CHECK(lo.family == FieldFamily::FbsLogMinus);
          break;
        default:
          FAIL("unexpected reflected family");
      }
    }
  }
}

TEST_CASE("rational and floating point classification agree") {
  for (auto [an, ad, pn, pd] : {std::tuple{3, 2, 1, 2}, {19, 10, 1, 2},
                                {6, 5, 4, 5}, {7, 4, 1, 4}}) {
    Frac alpha(an, ad), p(pn, pd);
    for (auto [gn, gd] : {std::pair{1, 1}, {3, 1}, {1, 8}, {5, 2}}) {
      Frac gamma(gn, gd);
      FieldRegime exact = classify_field_regime(alpha, p, gamma);
      ModelParams m = make(alpha.value(), p.value());
      FieldRegime fl = classify_field_regime(m, gamma.value());
      CAPTURE(alpha.str());
      CAPTURE(p.str());
      CAPTURE(gamma.str());
      CHECK(exact.family == fl.family);
      CHECK(exact.H == doctest::Approx(fl.H).epsilon(1e-12));
    }
  }
}

TEST_CASE("invalid gamma rejected") {
  CHECK_THROWS_AS(classify_field_regime(make(1.5, 0.5), 0.0), Error);
  CHECK_THROWS_AS(classify_field_regime(make(1.5, 0.5), -1.0), Error);
}

}  // TEST_SUITE
