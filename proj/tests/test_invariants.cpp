#include "cyclic_slope/invariants.hpp"

#include "cyclic_slope/error.hpp"
#include "doctest.h"

using namespace cyclic_slope;

namespace {

FiberGerm triple_point() {
  FiberGerm g;
  g.n = 2;
  g.r = 6;
  g.nodes = {{1, 0, 3, kFree}, {2, 1, 2, kFree}, {3, 1, 2, kFree}, {4, 1, 2, kFree}};
  return g;
}

GlobalModel smooth_model(long long M) {
  GlobalModel m;
  m.n = 2;
  m.g = 2;
  m.M = Rational(M);
  m.generic_alpha0 = 10 * M;
  return m;
}

}  // namespace

TEST_CASE("m_from_indices") {
  CHECK(m_from_indices(2, 6, 10, {}, 0) == Rational(1));
  CHECK(m_from_indices(2, 6, 12, {{1, 4}}, 0) == Rational(2));
  CHECK(m_from_indices(2, 6, 0, {}, 0) == Rational(0));
  CHECK(m_from_indices(2, 6, 5, {}, 0) == Rational(1, 2));
  CHECK_THROWS_AS(m_from_indices(2, 6, 1, {}, 0), Error);  // M = 1/10
}

TEST_CASE("relative invariants of smooth-branch models") {
  for (long long M = 1; M <= 3; ++M) {
    const auto inv = relative_invariants(smooth_model(M));
    CHECK(inv.Kf2 == Rational(2 * M));
    CHECK(inv.chif == Rational(M));
    CHECK(inv.ef == Rational(10 * M));
  }
}

TEST_CASE("relative invariants of the triple point model") {
  const GlobalModel model = build_model(2, 2, {{"p0", triple_point()}}, Rational(2));
  CHECK(model.generic_alpha0 == 14);  // germ alpha0 = -2, global alpha0 = 12
  const auto inv = relative_invariants(model);
  CHECK(inv.Kf2 == Rational(4));
  CHECK(inv.chif == Rational(2));
  CHECK(inv.ef == Rational(20));
  CHECK(slope_equality_residual(model).is_zero());
}

TEST_CASE("validate_model catches inconsistency") {
  GlobalModel m = smooth_model(1);
  m.generic_alpha0 = 9;  // alpha0 must be 2(r-1)M = 10
  CHECK_FALSE(validate_model(m).empty());
  m.generic_alpha0 = 10;
  CHECK(validate_model(m).empty());
  m.M = Rational(1, 3);
  CHECK_FALSE(validate_model(m).empty());
}

TEST_CASE("horikawa index") {
  GermIndices only_alpha1;
  only_alpha1.alpha = {{1, 5}};
  CHECK(horikawa_index(2, 6, only_alpha1).is_zero());
  CHECK(horikawa_index(2, 8, only_alpha1).is_zero());

  GermIndices alpha2;
  alpha2.alpha = {{2, 1}};
  CHECK(horikawa_index(2, 8, alpha2) == Rational(2, 3));

  GermIndices alpha1;
  alpha1.alpha = {{1, 1}};
  CHECK(horikawa_index(3, 6, alpha1) == Rational(3, 7));

  GermIndices eps_only;
  eps_only.eps = 2;
  CHECK(horikawa_index(2, 6, eps_only) == Rational(2));
}

TEST_CASE("local signature coefficients for n=2, r=6") {
  GermIndices a0;
  a0.alpha0 = 1;
  CHECK(local_signature(2, 6, a0) == Rational(-3, 5));
  GermIndices a1;
  a1.alpha = {{1, 1}};
  CHECK(local_signature(2, 6, a1) == Rational(-6, 5));
  GermIndices ep;
  ep.eps = 1;
  CHECK(local_signature(2, 6, ep) == Rational(11, 5));

  GermIndices triple;
  triple.alpha0 = -2;
  triple.alpha = {{1, 4}};
  CHECK(local_signature(2, 6, triple) == Rational(-18, 5));
}

TEST_CASE("signature total two ways") {
  {
    const GlobalModel model = build_model(2, 2, {{"p0", triple_point()}}, Rational(2));
    const auto sig = signature_total(model);
    CHECK(sig.first == Rational(-12));
    CHECK(sig.second == Rational(-12));
  }
  {
    const auto sig = signature_total(smooth_model(1));
    CHECK(sig.first == Rational(-6));
    CHECK(sig.second == Rational(-6));
  }
  {
    const auto sig = signature_total(smooth_model(0));
    CHECK(sig.first == Rational(0));
    CHECK(sig.second == Rational(0));
  }
}

TEST_CASE("slope equality with a nontrivial index") {
  // n = 2, r = 8: a single point of multiplicity 4 contributes Ind = 2/3.
  FiberGerm g;
  g.n = 2;
  g.r = 8;
  g.nodes = {{1, 0, 4, kFree}};
  const Rational m0 = minimal_m(2, 3, {{"p0", g}});
  const GlobalModel model = build_model(2, 3, {{"p0", g}}, m0);
  const auto rep = invariant_report(model);
  CHECK(rep.ind_per_fiber.at("p0") == Rational(2, 3));
  CHECK(rep.slope_residual.is_zero());
  CHECK(Rational(12) * rep.chif == rep.Kf2 + rep.ef);
}

TEST_CASE("invariant report fields") {
  const GlobalModel model = build_model(2, 2, {{"p0", triple_point()}}, Rational(2));
  const auto rep = invariant_report(model);
  CHECK(rep.lambda == Rational(2));
  CHECK(rep.slope_defined);
  CHECK(rep.slope == Rational(2));
  CHECK(rep.sign_total == Rational(-12));
  CHECK(rep.ind_total.is_zero());
  const json j = report_to_json(rep);
  CHECK(j["K_f2"] == "4");
  CHECK(j["sigma_per_fiber"]["p0"] == "-18/5");
}

TEST_CASE("model json round trip") {
  const GlobalModel model = build_model(2, 2, {{"p0", triple_point()}}, Rational(5, 2));
  const json j = model_to_json(model);
  const GlobalModel back = model_from_json(j);
  CHECK(model_to_json(back) == j);
  CHECK(back.M == Rational(5, 2));
  CHECK(back.germs.size() == 1);
  CHECK(back.germs[0].second.nodes.size() == 4);
}

TEST_CASE("build model rejects negative generic ramification") {
  CHECK_THROWS_AS(build_model(2, 2, {{"p0", triple_point()}}, Rational(0)), Error);
}

TEST_CASE("chi vanishes only for the zero model") {
  const auto inv = relative_invariants(smooth_model(0));
  CHECK(inv.chif.is_zero());
  CHECK(inv.Kf2.is_zero());
  const auto inv1 = relative_invariants(smooth_model(1));
  CHECK(inv1.chif > 0);
}
