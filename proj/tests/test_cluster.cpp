#include "cyclic_slope/cluster.hpp"

#include <algorithm>

#include "cyclic_slope/error.hpp"
#include "doctest.h"

using namespace cyclic_slope;

namespace {

FiberGerm triple_point() {
  // Ordinary triple point for n = 2, r = 6.
  FiberGerm g;
  g.n = 2;
  g.r = 6;
  g.nodes = {{1, 0, 3, kFree}, {2, 1, 2, kFree}, {3, 1, 2, kFree}, {4, 1, 2, kFree}};
  return g;
}

// A cusp packet whose corner between two branch curves is itself a point of
// type nZ+1: the smallest kind of configuration with kappa > 0.
FiberGerm kappa_germ() {
  FiberGerm g;
  g.n = 2;
  g.r = 6;
  g.nodes = {{1, 0, 3, kFree},  {2, 1, 3, kFree}, {3, 2, 3, 1},
             {4, 3, 2, kFree},  {5, 3, 2, 1},     {6, 3, 2, 2},
             {7, 2, 2, kFree}};
  return g;
}

bool has_rule(const std::vector<Violation>& v, const std::string& rule) {
  return std::any_of(v.begin(), v.end(), [&](const Violation& x) { return x.rule == rule; });
}

}  // namespace

TEST_CASE("validate_germ basics") {
  FiberGerm empty;
  empty.n = 3;
  empty.r = 6;
  CHECK(validate_germ(empty).empty());

  FiberGerm bad = empty;
  bad.nodes = {{1, 0, 2, kFree}};
  CHECK(has_rule(validate_germ(bad), "mod_n"));  // 2 not in 3Z or 3Z+1

  CHECK(validate_germ(triple_point()).empty());
  CHECK(validate_germ(kappa_germ()).empty());
}

TEST_CASE("validate_germ rejects unresolved branch curves") {
  // m = 3 for n = 2 puts the exceptional curve in the branch; with no
  // children the branches would end crossing it.
  FiberGerm g;
  g.n = 2;
  g.r = 6;
  g.nodes = {{1, 0, 3, kFree}};
  const auto v = validate_germ(g);
  CHECK(has_rule(v, "branch_continuation"));
  CHECK(has_rule(v, "branch_self_intersection"));
}

TEST_CASE("validate_germ standardization bound") {
  // g = 2 is even for r = 6, n = 2: every point of the branch on the
  // original surface has multiplicity at most r/2 = 3.
  FiberGerm g;
  g.n = 2;
  g.r = 6;
  g.nodes = {{1, 0, 4, kFree}};
  CHECK(has_rule(validate_germ(g), "standardization"));
}

TEST_CASE("validate_germ deep satellite budget") {
  // Branch material may only return to a host curve by spending its
  // contact budget; this tower overdraws it.
  FiberGerm g;
  g.n = 2;
  g.r = 6;
  g.nodes = {{1, 0, 3, kFree}, {2, 1, 4, kGamma}, {3, 2, 4, 1}, {4, 3, 4, 1}, {5, 4, 2, kFree}};
  CHECK(has_rule(validate_germ(g), "proximity"));
}

TEST_CASE("validate_germ structure") {
  FiberGerm g;
  g.n = 2;
  g.r = 6;
  g.nodes = {{1, 5, 2, kFree}};
  CHECK(has_rule(validate_germ(g), "structure"));  // dangling parent

  g.nodes = {{1, 0, 2, kFree}, {1, 0, 2, kFree}};
  CHECK(has_rule(validate_germ(g), "structure"));  // duplicate id

  g.nodes = {{1, 0, 2, 1}};
  CHECK(has_rule(validate_germ(g), "structure"));  // root satellite

  // satellite_with must be a host of the parent's center
  g.nodes = {{1, 0, 3, kFree}, {2, 0, 2, kFree}, {3, 1, 4, 2}};
  CHECK(has_rule(validate_germ(g), "structure"));
}

TEST_CASE("gamma in branch contact budget") {
  // Three m = 3 points on an in-branch fiber for n = 3, r = 6.
  FiberGerm g;
  g.n = 3;
  g.r = 6;
  g.gamma_in_branch = true;
  g.nodes = {{1, 0, 3, kFree}, {2, 0, 3, kFree}, {3, 0, 3, kFree}};
  CHECK(validate_germ(g).empty());

  g.nodes.pop_back();  // contact 4 != r and prox 2 not divisible by 3
  const auto v = validate_germ(g);
  CHECK(has_rule(v, "fiber_contact"));
  CHECK(has_rule(v, "branch_self_intersection"));

  // Declared smooth contacts are impossible with the fiber in the branch.
  FiberGerm h;
  h.n = 3;
  h.r = 6;
  h.gamma_in_branch = true;
  h.horizontal_contacts = {2};
  CHECK(has_rule(validate_germ(h), "fiber_contact"));
}

TEST_CASE("multiplicity sequences") {
  {
    BranchProfile p;
    p.s = {{1, 2}, {2, 1}};
    const auto seq = multiplicity_sequence(p, 3);
    CHECK(seq.m == std::vector<long long>{4, 3});
    CHECK(seq.d == std::vector<long long>{1, 1});
    CHECK(seq.plus_one == std::vector<bool>{true, false});
    CHECK(seq.i_bm == 2);
    CHECK(seq.i_max == 2);
    CHECK(check_monotonicity(seq, 3));
  }
  {
    BranchProfile p;
    p.s = {{1, 2}};
    const auto seq = multiplicity_sequence(p, 2);
    CHECK(seq.m == std::vector<long long>{3, 2});
    CHECK(seq.i_bm == 2);
    CHECK(seq.i_max == 1);  // the odd last step adds one extra blow-up
    CHECK(check_monotonicity(seq, 2));
  }
  {
    BranchProfile p;
    p.s = {{1, 1}};
    const auto seq = multiplicity_sequence(p, 2);
    CHECK(seq.m == std::vector<long long>{2});
    CHECK(seq.i_bm == 1);
  }
  {
    BranchProfile p;
    p.s = {{1, 1}};  // m_1 = 2 breaks the mod-5 rule
    CHECK_THROWS_AS(multiplicity_sequence(p, 5), Error);
  }
  {
    BranchProfile p;
    p.s = {{2, 4}};  // m = (5, 5): equality case with s_1 = 0
    const auto seq = multiplicity_sequence(p, 5);
    CHECK(seq.m == std::vector<long long>{5, 5});
    CHECK(check_monotonicity(seq, 5));
  }
  {
    BranchProfile p;
    p.s = {{1, 2}, {2, 3}};  // m = (6, 5): d-gap 0 < n - 3 = 2
    const auto seq = multiplicity_sequence(p, 5);
    CHECK(seq.m == std::vector<long long>{6, 5});
    CHECK_FALSE(check_monotonicity(seq, 5));
  }
}

TEST_CASE("tc identities") {
  {
    // Ordinary triple point on an exceptional host, n = 2.
    std::vector<BranchProfile> pts(3);
    for (auto& p : pts) p.s = {{1, 1}};
    const auto rep = check_tc_identities(pts, HostKind::Exceptional, 2);
    CHECK(rep.t == 3);
    CHECK(rep.c == 3);
    CHECK(rep.sum_ci == 0);
    CHECK(rep.sum_m == 6);
    CHECK(rep.a == 2);
    CHECK(rep.ok);
  }
  {
    std::vector<BranchProfile> pts(1);
    pts[0].s = {{1, 1}};
    const auto rep = check_tc_identities(pts, HostKind::Exceptional, 2);
    CHECK(rep.t == 1);
    CHECK(rep.c == 1);
    CHECK(rep.sum_m == 2);
    CHECK(rep.ok);
  }
  {
    // Two points with s = {1:1, 2:1} on a fiber host, n = 2.
    std::vector<BranchProfile> pts(2);
    for (auto& p : pts) p.s = {{1, 1}, {2, 1}};
    const auto rep = check_tc_identities(pts, HostKind::Fiber, 2);
    CHECK(rep.t == 6);
    CHECK(rep.c == 6);
    CHECK(rep.sum_ci == 4);
    CHECK(rep.sum_m == 16);
    CHECK(rep.sum_d == 6);
    CHECK(rep.a == 3);
    CHECK(rep.ok);
  }
}

TEST_CASE("host reports from a germ") {
  const auto reports = host_tc_reports(triple_point());
  REQUIRE(reports.size() == 1);
  CHECK(reports[0].curve == 1);
  CHECK(reports[0].tc.ok);
  CHECK(reports[0].tc.t == 3);  // the multiplicity at the contracted point
  CHECK(reports[0].tc.c == 3);
  CHECK(reports[0].tc.a == 2);

  // The kappa germ: every in-branch host balances its budget exactly.
  const FiberGerm kg = kappa_germ();
  GermView view(kg);
  for (const auto& rep : host_tc_reports(kg)) {
    CHECK(rep.tc.ok);
    CHECK(rep.tc.t == view.node(view.index_of(rep.curve)).mult);
    CHECK(rep.tc.c == view.prox_of_curve(rep.curve));
    for (const auto& seq : rep.sequences) CHECK(check_monotonicity(seq, 2));
  }
}

TEST_CASE("elementary transformation") {
  CHECK(elementary_transform_step(4, 6, 2) == 1);
  CHECK(elementary_transform_step(4, 6, 3) == 1);
  CHECK(elementary_transform_step(6, 6, 2) == 0);
  CHECK(elementary_transform_step(9, 9, 3) == 0);
  CHECK_THROWS_AS(elementary_transform_step(2, 6, 2), Error);  // not offending
  CHECK_THROWS_AS(elementary_transform_step(5, 6, 3), Error);  // 5 not in 3Z or 3Z+1
}

TEST_CASE("standardize") {
  {
    const auto res = standardize({6}, 6, 2);
    CHECK(res.mults == std::vector<long long>{0});
    CHECK(res.steps == 1);
  }
  {
    const auto res = standardize({4}, 6, 2);
    CHECK(res.mults == std::vector<long long>{2});
    CHECK(res.steps == 1);
  }
  {
    const auto res = standardize({}, 6, 2);
    CHECK(res.mults.empty());
    CHECK(res.steps == 0);
  }
  {
    // Fiber-in-branch proviso: the transform lands on nd' + 1 and the
    // terminal value r/2 + 1 is kept.
    const auto res = standardize({6}, 8, 2, true);
    CHECK(res.mults == std::vector<long long>{3});
    CHECK(res.steps == 1);
    const auto term = standardize({5}, 8, 2, true);
    CHECK(term.mults == std::vector<long long>{5});
    CHECK(term.steps == 0);
  }
}

TEST_CASE("standardize terminates from far above the bound") {
  const auto res = standardize({12, 13, 7}, 12, 3);
  CHECK(res.steps >= 2);
  for (long long m : res.mults) CHECK(2 * m <= 12);
}

TEST_CASE("germ json round trip") {
  const FiberGerm g = kappa_germ();
  const json j = germ_to_json(g);
  const FiberGerm back = germ_from_json(j);
  CHECK(germ_to_json(back) == j);
  CHECK(back.nodes.size() == g.nodes.size());
  CHECK(back.nodes[2].satellite_with == 1);

  CHECK_THROWS_AS(germ_from_json(json::parse("{\"n\": 2}")), Error);  // missing r
  CHECK_THROWS_AS(germ_from_json(json::parse("[1,2]")), Error);
}
