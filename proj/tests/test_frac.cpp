#include "doctest.h"
#include "grain/frac.hpp"

using grain::Frac;

TEST_SUITE("rational arithmetic") {

TEST_CASE("normalization and comparison") {
  Frac a(6, 4);
  CHECK(a.num == 3);
  CHECK(a.den == 2);
  CHECK(Frac(-6, 4) == Frac(3, -2));
  CHECK(Frac(1, 3) < Frac(1, 2));
  CHECK(Frac(7, 5) > Frac(4, 3));
  CHECK(Frac(2, 6) == Frac(1, 3));
}

TEST_CASE("arithmetic stays exact") {
  Frac alpha(3, 2), p(1, 2);
  // gamma_plus = alpha/p - 1
  Frac gp = alpha / p - Frac(1);
  CHECK(gp == Frac(2));
  // gamma_minus = (1-p)/(alpha-(1-p))
  Frac gm = (Frac(1) - p) / (alpha - (Frac(1) - p));
  CHECK(gm == Frac(1, 2));
  // alpha_plus = (alpha-p)/(1-p)
  CHECK((alpha - p) / (Frac(1) - p) == Frac(2));
  // no drift under repeated accumulation
  Frac s(0);
  for (int i = 0; i < 100; ++i) s = s + Frac(1, 3);
  CHECK(s == Frac(100, 3));
}

TEST_CASE("large cross products do not overflow") {
  Frac a(1000000007LL, 998244353LL);
  Frac b(998244353LL, 1000000007LL);
  CHECK(a > b);
  CHECK(a.cmp(a) == 0);
}

TEST_CASE("parsing") {
  REQUIRE(Frac::parse("3/2").has_value());
  CHECK(*Frac::parse("3/2") == Frac(3, 2));
  CHECK(*Frac::parse("-1/4") == Frac(-1, 4));
  CHECK(*Frac::parse("2") == Frac(2));
  CHECK(*Frac::parse("0.25") == Frac(1, 4));
  CHECK(*Frac::parse("1.9") == Frac(19, 10));
  CHECK(*Frac::parse("-0.5") == Frac(-1, 2));
  CHECK(!Frac::parse("").has_value());
  CHECK(!Frac::parse("a/b").has_value());
  CHECK(!Frac::parse("1/0").has_value());
  CHECK(!Frac::parse("1.2.3").has_value());
}

TEST_CASE("division by zero throws") {
  CHECK_THROWS_AS(Frac(1) / Frac(0), grain::Error);
}

}  // TEST_SUITE
