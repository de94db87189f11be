#include <cmath>

#include "doctest.h"
#include "grain/covariance.hpp"

using namespace grain;

namespace {

ModelParams make(double alpha, double p, double r_min = 1.0) {
  ModelParams m;
  m.alpha = alpha;
  m.p = p;
  m.r_min = r_min;
  return m;
}

}  // namespace

TEST_SUITE("covariance structure") {

TEST_CASE("variance of the field equals area times mean grain size") {
  ModelParams m = make(1.5, 0.5);
  CHECK(covariance_exact(m, 0.0, 0.0) == doctest::Approx(3.0).epsilon(1e-8));
  ModelParams disk = m;
  disk.shape = GrainShape::unit_disk();
  CHECK(covariance_exact(disk, 0.0, 0.0) ==
        doctest::Approx(3.0 * disk.shape.area).epsilon(1e-8));
}

TEST_CASE("horizontal decay saturates to an exact power law") {
  // For t >= r_min^p only tail grains connect the two points and the
  // covariance equals b(1) t^(-(alpha-1)/p) with no correction at all.
  ModelParams m = make(1.5, 0.5);
  double b1 = angular_b(m, 1.0);
  CHECK(b1 == doctest::Approx(1.5).epsilon(1e-8));
  for (double t : {1.0, 4.0, 100.0, 1000.0}) {
    CAPTURE(t);
    CHECK(covariance_exact(m, t, 0.0) ==
          doctest::Approx(b1 * std::pow(t, -1.0)).epsilon(1e-7));
  }
  // the same with an r_min that pushes the saturation point outward
  ModelParams m2 = make(1.5, 0.5, 2.0);
  double b1_2 = angular_b(m2, 1.0);
  CHECK(b1_2 == doctest::Approx(1.5 * std::pow(2.0, 1.5)).epsilon(1e-8));
  CHECK(covariance_exact(m2, 4.0, 0.0) ==
        doctest::Approx(b1_2 / 4.0).epsilon(1e-7));
  // below the saturation point the power law is only an upper bound
  CHECK(covariance_exact(m2, 1.0, 0.0) < b1_2);
}

TEST_CASE("angular profile endpoints") {
  ModelParams m = make(1.5, 0.5);
  // p/((alpha-1)(alpha+p-1)) and (1-p)/((alpha-1)(alpha-p)) times c_f
  CHECK(angular_b(m, 1.0) == doctest::Approx(1.5).epsilon(1e-8));
  CHECK(angular_b(m, 0.0) == doctest::Approx(1.5).epsilon(1e-8));
  CHECK(angular_b(m, -1.0) == doctest::Approx(angular_b(m, 1.0)).epsilon(1e-8));

  ModelParams m2 = make(1.8, 0.3);
  CHECK(angular_b(m2, 1.0) ==
        doctest::Approx(1.8 * 0.3 / (0.8 * 1.1)).epsilon(1e-8));
  CHECK(angular_b(m2, 0.0) ==
        doctest::Approx(1.8 * 0.7 / (0.8 * 1.5)).epsilon(1e-8));
}

TEST_CASE("angular profile is symmetric for symmetric grains") {
  ModelParams m = make(1.6, 0.4);
  for (double z : {0.25, 0.5, 0.9})
    CHECK(angular_b(m, z) == doctest::Approx(angular_b(m, -z)).epsilon(1e-8));
}

TEST_CASE("disk grains at p = 1/2 have an isotropic angular profile") {
  ModelParams m = make(1.5, 0.5);
  m.shape = GrainShape::unit_disk();
  double ref = angular_b(m, 0.0);
  for (double z : {0.3, 0.5, 0.8, 1.0})
    CHECK(angular_b(m, z) == doctest::Approx(ref).epsilon(1e-7));
}

TEST_CASE("angular profile rejects arguments outside [-1,1]") {
  ModelParams m = make(1.5, 0.5);
  CHECK_THROWS_AS(angular_b(m, 1.5), ZOutOfRange);
  CHECK_THROWS_AS(angular_b(m, -1.0001), ZOutOfRange);
}

TEST_CASE("covariance symmetry and monotonicity") {
  ModelParams m = make(1.7, 0.6);
  CHECK(covariance_exact(m, 2.0, 0.5) ==
        doctest::Approx(covariance_exact(m, -2.0, -0.5)).epsilon(1e-9));
  CHECK(covariance_exact(m, 2.0, -0.5) ==
        doctest::Approx(covariance_exact(m, 2.0, 0.5)).epsilon(1e-9));
  double prev = covariance_exact(m, 0.0, 0.0);
  for (double t : {0.5, 1.0, 2.0, 8.0}) {
    double cur = covariance_exact(m, t, 0.0);
    CHECK(cur < prev);
    prev = cur;
  }
}

TEST_CASE("long range dependence directions") {
  auto c = lrd_classify(make(1.5, 0.5));
  CHECK(c.plane);
  CHECK(c.vertical);    // alpha = 2-p boundary counts as dependent
  CHECK(c.horizontal);  // alpha = 1+p boundary

  c = lrd_classify(make(1.9, 0.5));
  CHECK(c.plane);
  CHECK(!c.vertical);
  CHECK(!c.horizontal);

  c = lrd_classify(make(1.2, 0.5));
  CHECK(c.vertical);
  CHECK(c.horizontal);

  c = lrd_classify(make(1.6, 0.7));
  CHECK(!c.vertical);   // 1.6 > 1.3
  CHECK(c.horizontal);  // 1.6 <= 1.7
}

TEST_CASE("custom grains are rejected where unsupported") {
  ModelParams m = make(1.5, 0.5);
  m.shape = GrainShape::custom([](double, double) { return true; },
                               {0, 0, 1, 1}, 1.0, [](double) { return 1.0; });
  CHECK_THROWS_AS(covariance_exact(m, 0.0, 0.0), BadGrain);
}

}  // TEST_SUITE
