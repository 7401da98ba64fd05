#include "cyclic_slope/bounds.hpp"

#include "cyclic_slope/error.hpp"
#include "doctest.h"

using namespace cyclic_slope;

TEST_CASE("wlevel invariants") {
  // Product data for n = 2, h = 1, N = 3, M = 4.
  const auto d = product_surface_data(2, 1, 3, 4);
  const auto [omega2, chi] = wlevel_invariants(d);
  CHECK(omega2 == Rational(48));
  CHECK(chi == Rational(12));

  SurfaceClassData zero;
  zero.n = 4;
  zero.h = 2;
  zero.g = 37;
  const auto [o0, c0] = wlevel_invariants(zero);
  CHECK(o0.is_zero());
  CHECK(c0.is_zero());
}

TEST_CASE("wlevel closed forms on the ruled case") {
  for (long long n = 2; n <= 5; ++n) {
    for (long long M = 1; M <= 50; ++M) {
      const long long g = n * (n - 1) * M / 2 - n + 1;
      if (g < 2) continue;
      const auto d = ruled_surface_data(n, g, Rational(M));
      const auto [omega2, chi] = wlevel_invariants(d);
      CHECK(omega2 == Rational(4 * (g - 1) * (n - 1), n) * M);
      CHECK(chi == Rational(2 * (2 * n - 1) * (g - 1) + n * (n + 1), 6 * n) * M);
    }
  }
}

TEST_CASE("blowup corrections") {
  {
    const auto [o, c] = blowup_corrections({{2}}, 2);
    CHECK(o.is_zero());
    CHECK(c.is_zero());
  }
  {
    const auto [o, c] = blowup_corrections({{3}}, 3);
    CHECK(o == Rational(3));
    CHECK(c == Rational(1));
  }
  for (long long n = 2; n <= 6; ++n) {
    const auto [o, c] = blowup_corrections({{0}}, n);
    CHECK(o == Rational(n));
    CHECK(c.is_zero());
  }
  CHECK_THROWS_AS(blowup_corrections({{2}}, 3), Error);  // 2 not in 3Z or 3Z+1

  // Additive over concatenation.
  const auto [oa, ca] = blowup_corrections({{6, 7}}, 3);
  const auto [o1, c1] = blowup_corrections({{6}}, 3);
  const auto [o2, c2] = blowup_corrections({{7}}, 3);
  CHECK(oa == o1 + o2);
  CHECK(ca == c1 + c2);
}

TEST_CASE("lower bound certificate on product examples") {
  {
    const auto cert = lower_bound_certificate(product_surface_data(2, 1, 3, 4), {}, 0);
    CHECK(cert.g == 5);
    CHECK(cert.r == 8);
    CHECK(cert.lambda == Rational(4));
    CHECK(cert.genus_hypothesis);
    CHECK(cert.slope_inequality_phi);
    CHECK(cert.hodge_determinant.is_zero());
    CHECK(cert.data_consistent);
    CHECK(cert.Kf2 == Rational(48));
    CHECK(cert.chif == Rational(12));
    CHECK(cert.verdict);
    CHECK(cert.equality);
    CHECK(cert.branch_nonsingular);
    CHECK(cert.slope_equality_phi);
    CHECK(cert.hodge_singular);
  }
  {
    const auto cert = lower_bound_certificate(product_surface_data(3, 2, 1, 2), {}, 0);
    CHECK(cert.g == 10);
    CHECK(cert.Kf2 == Rational(72));
    CHECK(cert.chif == Rational(13));
    CHECK(cert.lambda == Rational(72, 13));
    CHECK(cert.verdict);
    CHECK(cert.equality);
  }
  {
    // One extra blow-up of multiplicity 3: K^2 drops by 3, chi by 1, and
    // the inequality stays strict: 69 >= (72/13) * 12.
    const auto cert = lower_bound_certificate(product_surface_data(3, 2, 1, 2), {{3}}, 0);
    CHECK(cert.Kf2 == Rational(69));
    CHECK(cert.chif == Rational(12));
    CHECK(cert.verdict);
    CHECK_FALSE(cert.equality);
    CHECK_FALSE(cert.branch_nonsingular);
  }
}

TEST_CASE("lower bound certificate reports hypothesis failures") {
  auto d = product_surface_data(2, 1, 3, 4);
  d.DGamma = Rational(5);  // should be r/n = 4
  const auto cert = lower_bound_certificate(d, {}, 0);
  CHECK_FALSE(cert.data_consistent);

  // Genus hypothesis fails for small g: n = 2, h = 1 needs g >= 5.
  const auto small = lower_bound_certificate(product_surface_data(2, 1, 1, 1), {}, 0);
  CHECK(small.g == 2);
  CHECK_FALSE(small.genus_hypothesis);
}

TEST_CASE("upper bound certificate") {
  {
    GlobalModel model;
    model.n = 4;
    model.g = 9;
    model.M = Rational(1);
    model.generic_alpha0 = 14;  // 2(r-1)M with r = 8
    const auto cert = upper_bound_certificate(model);
    CHECK(cert.applicable);
    CHECK(cert.lambda_upper == Rational(32, 5));
    CHECK(cert.slope == Rational(48, 11));
    CHECK(cert.verdict);
    CHECK(cert.decomposition_ok);
    CHECK(cert.signs_ok);
    CHECK(cert.constants.B.is_zero());  // r = 8 < n(n-1)
  }
  {
    GlobalModel model;
    model.n = 4;
    model.g = 15;
    model.M = Rational(1);
    model.generic_alpha0 = 22;  // r = 12
    const auto cert = upper_bound_certificate(model);
    CHECK(cert.constants.A == Rational(105, 62));
    CHECK(cert.constants.B == Rational(34, 31));
    CHECK(cert.coeff_j1.is_zero());          // -2A + 4B - 1
    CHECK(cert.coeff_jeta == Rational(37, 31));
    CHECK(cert.verdict);
  }
  {
    GlobalModel empty;
    empty.n = 4;
    empty.g = 9;
    const auto cert = upper_bound_certificate(empty);
    CHECK_FALSE(cert.applicable);  // chi = 0, slope undefined
  }
  GlobalModel bad;
  bad.n = 3;
  bad.g = 4;
  CHECK_THROWS_AS(upper_bound_certificate(bad), Error);
}

TEST_CASE("certificates serialize") {
  const auto cert = lower_bound_certificate(product_surface_data(2, 1, 3, 4), {}, 0);
  const json j = lower_certificate_to_json(cert);
  CHECK(j["verdict"] == true);
  CHECK(j["equality"] == true);
  CHECK(j["hypotheses"]["hodge_determinant"] == "0");

  GlobalModel model;
  model.n = 4;
  model.g = 9;
  model.M = Rational(1);
  model.generic_alpha0 = 14;
  const json ju = upper_certificate_to_json(upper_bound_certificate(model));
  CHECK(ju["verdict"] == true);
  CHECK(ju["lambda_upper"] == "32/5");
}
