#include <cmath>

#include "doctest.h"
#include "grain/params.hpp"

using namespace grain;

TEST_SUITE("model parameters") {

TEST_CASE("validation accepts the reference configuration") {
  ModelParams m;  // alpha 1.5, p 0.5, r_min 1, unit square
  CHECK_NOTHROW(validate(m));
}

TEST_CASE("alpha outside (1,2) is rejected") {
  ModelParams m;
  m.alpha = 1.0;
  CHECK_THROWS_AS(validate(m), AlphaOutOfRange);
  m.alpha = 2.0;
  CHECK_THROWS_AS(validate(m), AlphaOutOfRange);
  m.alpha = 2.5;
  CHECK_THROWS_AS(validate(m), AlphaOutOfRange);
  m.alpha = 0.9;
  CHECK_THROWS_AS(validate(m), AlphaOutOfRange);
}

TEST_CASE("p boundary handling") {
  ModelParams m;
  m.p = 0.0;
  CHECK_THROWS_AS(validate(m), POutOfRange);
  m.p = 1.0;
  CHECK_THROWS_AS(validate(m), POutOfRange);
  CHECK_NOTHROW(validate(m, /*allow_unit_p=*/true));
  m.p = 1.1;
  CHECK_THROWS_AS(validate(m, true), POutOfRange);
  m.p = 0.5;
  CHECK_NOTHROW(validate(m));
}

TEST_CASE("bad grains are rejected") {
  ModelParams m;
  m.r_min = 0.0;
  CHECK_THROWS_AS(validate(m), BadGrain);
  m.r_min = 1.0;
  m.shape.area = 0.0;
  CHECK_THROWS_AS(validate(m), BadGrain);
  m.shape = GrainShape::custom(nullptr, {0, 0, 1, 1}, 1.0, nullptr);
  CHECK_THROWS_AS(validate(m), BadGrain);
}

TEST_CASE("pareto moments") {
  ModelParams m;  // alpha = 1.5, r_min = 1
  CHECK(m.c_f() == doctest::Approx(1.5));
  CHECK(m.moment(1.0) == doctest::Approx(3.0));       // E R
  CHECK(m.moment(0.5) == doctest::Approx(1.5));       // E R^(1/2)
  CHECK(m.moment(0.0) == doctest::Approx(1.0));
  CHECK_THROWS_AS(m.moment(1.5), AlphaOutOfRange);
  m.alpha = 1.9;
  m.r_min = 8.0;
  CHECK(m.c_f() == doctest::Approx(1.9 * std::pow(8.0, 1.9)));
  CHECK(m.moment(1.0) == doctest::Approx(1.9 * 8.0 / 0.9));
}

TEST_CASE("unit square geometry") {
  GrainShape s = GrainShape::unit_square();
  CHECK(s.area == 1.0);
  CHECK(s.width() == 1.0);
  CHECK(s.contains(0.5, 0.5));
  CHECK(!s.contains(-0.1, 0.5));
  CHECK(s.section_length(0.5) == 1.0);
  CHECK(s.section_length(1.5) == 0.0);
}

TEST_CASE("unit disk geometry") {
  GrainShape s = GrainShape::unit_disk();
  CHECK(s.area == doctest::Approx(3.14159265358979324));
  CHECK(s.width() == 2.0);
  CHECK(s.contains(0.0, 0.0));
  CHECK(s.contains(0.6, 0.79));
  CHECK(!s.contains(0.8, 0.7));
  CHECK(s.section_length(0.0) == doctest::Approx(2.0));
  CHECK(s.section_length(0.6) == doctest::Approx(1.6));
  // the section integrates back to the area
  double acc = 0.0;
  int n = 20000;
  for (int i = 0; i < n; ++i) {
    double u = -1.0 + 2.0 * (i + 0.5) / n;
    acc += s.section_length(u) * 2.0 / n;
  }
  CHECK(acc == doctest::Approx(s.area).epsilon(1e-6));
}

}  // TEST_SUITE
