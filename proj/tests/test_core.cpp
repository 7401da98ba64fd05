#include "cyclic_slope/core.hpp"

#include "cyclic_slope/error.hpp"
#include "doctest.h"

using namespace cyclic_slope;

TEST_CASE("rational canonical form and parsing") {
  CHECK(Rational(6, 4).str() == "3/2");
  CHECK(Rational(-6, 4).str() == "-3/2");
  CHECK(Rational(6, -4).str() == "-3/2");
  CHECK(Rational(8, 4).str() == "2");
  CHECK(Rational(0, 7).str() == "0");
  CHECK(Rational::parse("-3/2") == Rational(-3, 2));
  CHECK(Rational::parse("42") == Rational(42));
  CHECK_THROWS_AS(Rational::parse("3.5"), Error);
  CHECK_THROWS_AS(Rational::parse("1/0"), Error);
  CHECK_THROWS_AS(Rational::parse(""), Error);
  CHECK(Rational(1, 3) + Rational(1, 6) == Rational(1, 2));
  CHECK(Rational(2, 3) * Rational(9, 4) == Rational(3, 2));
  CHECK(Rational(1, 3) < Rational(1, 2));
}

TEST_CASE("derive_r") {
  CHECK(derive_r(2, 0, 2) == 6);
  CHECK(derive_r(9, 0, 4) == 8);
  CHECK(derive_r(5, 1, 2) == 8);
  // 2(g-1-n(h-1)) not divisible by n-1
  CHECK_THROWS_AS(derive_r(4, 0, 4), Error);
  // r would be negative
  CHECK_THROWS_AS(derive_r(2, 3, 2), Error);
}

TEST_CASE("derive_r not multiple of n") {
  // g = 3, h = 1, n = 3: r = 2(g-1)/(n-1) = 2, not in 3Z.
  CHECK_THROWS_AS(derive_r(3, 1, 3), Error);
  try {
    derive_r(3, 1, 3);
  } catch (const Error& e) {
    CHECK(e.code() == Errc::NotMultipleOfN);
  }
}

TEST_CASE("lambda_lower") {
  CHECK(lambda_lower(2, 0, 2) == Rational(2));
  CHECK(lambda_lower(5, 0, 3) == Rational(48, 13));
  for (long long n = 2; n <= 6; ++n)
    for (long long g = 2; g <= 40; ++g)
      CHECK(lambda_lower(g, 1, n) == Rational(12 * (n - 1), 2 * n - 1));
}

TEST_CASE("genus hypothesis flag") {
  // h = 1, n = 2: threshold (2n-1)(2hn+n-1)/(n+1) = 5.
  CHECK(genus_hypothesis_holds(5, 1, 2));
  CHECK_FALSE(genus_hypothesis_holds(4, 1, 2));
}

TEST_CASE("lambda_upper anchors") {
  CHECK(lambda_upper(9, 4) == Rational(32, 5));
  CHECK(lambda_upper(21, 4) == Rational(10));
  CHECK(lambda_upper(15, 4) == Rational(273, 31));
  CHECK(lambda_upper(16, 5) == Rational(15, 2));
  CHECK_THROWS_AS(lambda_upper(5, 3), Error);
  CHECK_THROWS_AS(lambda_upper(3, 2), Error);
}

TEST_CASE("slope constants") {
  const auto c = slope_constants(15, 4);
  CHECK(c.r == 12);
  CHECK(c.delta == 1);
  CHECK(c.mu == Rational(99, 31));
  CHECK(c.A == Rational(105, 62));
  CHECK(c.B == Rational(34, 31));
  CHECK(Rational(-2) * c.A + 4 * c.B - 1 == Rational(0));

  const auto c21 = slope_constants(21, 4);
  CHECK(Rational(-2) * c21.A + 4 * c21.B - 1 == Rational(0));

  const auto c16 = slope_constants(16, 5);
  CHECK(c16.case_small_r);  // r = 10 < 20
  CHECK(c16.B == Rational(0));
  CHECK(c16.A > 0);
}

TEST_CASE("slope constants invariants across orders") {
  for (long long n = 4; n <= 20; ++n) {
    for (long long r = n * (n - 1); r <= n * (n - 1) + 8 * n; r += n) {
      if ((n - 1) * (r - 2) % 2 != 0) continue;
      const long long g = (n - 1) * (r - 2) / 2;
      if (g < 2) continue;
      const auto c = slope_constants(g, n);
      REQUIRE(c.r == r);
      CHECK(Rational(-2) * c.A + Rational(n) * c.B - 1 == Rational(0));
      CHECK(Rational(n - 2) * c.A - 2 * c.B > 0);
      CHECK(c.mu_prime == Rational(n - 1) * c.mu / Rational(12 * (r - 1)));
    }
  }
}

TEST_CASE("two-sided bound sanity") {
  for (long long n = 4; n <= 8; ++n) {
    for (long long r = 2 * n; r <= 6 * n; r += n) {
      if ((n - 1) * (r - 2) % 2 != 0) continue;
      const long long g = (n - 1) * (r - 2) / 2;
      if (g < 2) continue;
      CHECK(lambda_upper(g, n) >= lambda_lower(g, 0, n));
    }
  }
}

TEST_CASE("lambda specialization identities") {
  for (long long g = 2; g <= 200; ++g) {
    CHECK(lambda_lower(g, 0, 2) == Rational(4) - Rational(4, g));
    CHECK(lambda_lower(g, 0, 3) == Rational(24 * (g - 1), 5 * g + 1));
    CHECK(lambda_lower(g, 0, 4) == Rational(36 * (g - 1), 7 * g + 3));
  }
}
