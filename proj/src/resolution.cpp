#include "cyclic_slope/resolution.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "cyclic_slope/error.hpp"

namespace cyclic_slope {

long long ResolvedGerm::sum_alpha() const {
  long long s = 0;
  for (const auto& [k, c] : alpha) s += c;
  return s;
}

long long ResolvedGerm::sum_j() const {
  long long s = 0;
  for (const auto& [a, c] : j) s += c;
  return s;
}

namespace {

struct UnionFind {
  std::map<int, int> parent;
  int find(int x) {
    parent.emplace(x, x);
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(int x, int y) { parent[find(x)] = find(y); }
};

std::pair<int, int> norm_pair(int a, int b) { return a < b ? std::make_pair(a, b) : std::make_pair(b, a); }

}  // namespace

ResolvedGerm resolve_germ(const FiberGerm& g) {
  const auto violations = validate_germ(g);
  if (!violations.empty())
    throw Error(Errc::InvalidGerm,
                violations.front().rule + " at node " + std::to_string(violations.front().node_id) +
                    ": " + violations.front().detail);

  GermView view(g);
  const long long n = g.n;
  ResolvedGerm rg;
  rg.n = n;
  rg.r = g.r;

  // Simulate the tower: corners of the total transform of the fiber, and
  // the fiber multiplicity of each new exceptional curve.
  std::set<std::pair<int, int>> corners;
  std::map<int, long long> fiber_mult;
  fiber_mult[kGamma] = 1;
  for (int idx : view.order()) {
    const GermNode& nd = view.node(idx);
    const int h1 = view.host1_curve(idx);
    const int h2 = view.host2_curve(idx);
    if (h2 == kFree) {
      fiber_mult[nd.id] = fiber_mult[h1];
      corners.insert(norm_pair(nd.id, h1));
    } else {
      fiber_mult[nd.id] = fiber_mult[h1] + fiber_mult[h2];
      if (corners.erase(norm_pair(h1, h2)) != 1)
        throw Error(Errc::IdentityViolation, "satellite center not at a live corner");
      corners.insert(norm_pair(nd.id, h1));
      corners.insert(norm_pair(nd.id, h2));
    }
  }
  rg.corners.assign(corners.begin(), corners.end());

  for (int idx = 0; idx < view.count(); ++idx) {
    const long long k = view.node(idx).mult / n;
    rg.alpha[k] += 1;
  }

  rg.declared_contacts = static_cast<long long>(g.horizontal_contacts.size());
  rg.fill = view.fill();
  for (int idx = 0; idx < view.count(); ++idx) rg.ends_total += view.ends_of_node(idx);
  rg.alpha0_plus = g.r - (rg.ends_total + rg.fill + rg.declared_contacts);

  // Vertical branch components and their family decomposition.
  UnionFind families;
  std::vector<int> branch_curves;
  if (g.gamma_in_branch) branch_curves.push_back(kGamma);
  for (int idx = 0; idx < view.count(); ++idx) {
    if (!view.node_in_branch(idx)) continue;
    branch_curves.push_back(view.node(idx).id);
    for (int host : {view.host1_curve(idx), view.host2_curve(idx)})
      if (host != kFree && view.curve_in_branch(host)) families.unite(view.node(idx).id, host);
  }
  std::map<int, int> family_index;
  for (int c : branch_curves) {
    const int root = families.find(c);
    family_index.emplace(root, static_cast<int>(family_index.size()));
  }
  rg.eta = static_cast<long long>(family_index.size());

  for (int idx = 0; idx < view.count(); ++idx) {
    const int h2 = view.host2_curve(idx);
    if (h2 == kFree) continue;
    const int h1 = view.host1_curve(idx);
    if (view.curve_in_branch(h1) && view.curve_in_branch(h2)) {
      if (view.node(idx).mult % n == 0)
        rg.iota += 1;
      else
        rg.kappa += 1;
    }
  }

  // Curve ledger. Branch points are the distinct points of the branch
  // divisor on each fiber component: free ends, fiber contacts, and
  // corners whose partner lies in the branch.
  std::map<int, long long> corner_branch_points;
  for (const auto& [a, b] : rg.corners) {
    const bool a_br = view.curve_in_branch(a);
    const bool b_br = view.curve_in_branch(b);
    if (b_br) corner_branch_points[a] += 1;
    if (a_br) corner_branch_points[b] += 1;
  }

  auto make_entry = [&](int curve) {
    CurveLedgerEntry e;
    e.curve = curve;
    e.in_branch = view.curve_in_branch(curve);
    e.fiber_multiplicity = fiber_mult.at(curve);
    const long long prox = view.prox_of_curve(curve);
    e.self_intersection = (curve == kGamma ? 0 : -1) - prox;
    if (e.in_branch) {
      if (e.self_intersection % n != 0)
        throw Error(Errc::IdentityViolation, "in-branch vertical curve not a (-an)-curve");
      e.a = -e.self_intersection / n;
      e.family = family_index.at(families.find(curve));
      rg.j[e.a] += 1;
    } else {
      e.branch_points = corner_branch_points[curve];
      if (curve == kGamma)
        e.branch_points += rg.fill + rg.declared_contacts;
      else
        e.branch_points += view.ends_of_node(view.index_of(curve));
    }
    return e;
  };
  rg.ledger.push_back(make_entry(kGamma));
  for (int idx : view.order()) rg.ledger.push_back(make_entry(view.node(idx).id));

  rg.eps = rg.j.count(1) ? rg.j.at(1) : 0;
  long long deep_j = 0;
  for (const auto& [a, c] : rg.j)
    if (a >= 2) deep_j += c;
  rg.alpha0 = rg.alpha0_plus - 2 * deep_j;
  return rg;
}

std::vector<VerticalFamily> vertical_ledger(const ResolvedGerm& rg) {
  int count = 0;
  for (const auto& e : rg.ledger) count = std::max(count, e.family + 1);
  std::vector<VerticalFamily> out(count);
  for (const auto& e : rg.ledger) {
    if (e.family < 0) continue;
    out[e.family].curves.push_back(e.curve);
    out[e.family].j_a[e.a] += 1;
  }
  for (auto& f : out) std::sort(f.curves.begin(), f.curves.end());
  return out;
}

bool check_jp_bounds(const ResolvedGerm& rg) {
  const long long n = rg.n;
  const long long j_total = rg.sum_j();
  if (rg.iota != j_total - rg.eta) return false;
  if (rg.alpha0_plus < (n - 2) * (j_total - rg.eta + 2 * rg.kappa)) return false;
  long long weighted = 0;
  for (const auto& [a, c] : rg.j) weighted += (a * n - 2) * c;
  return rg.sum_alpha() >= weighted + 2 * rg.eta - rg.kappa;
}

long long euler_local(const ResolvedGerm& rg) {
  const long long n = rg.n;
  long long total = 0;
  std::set<int> in_branch;
  for (const auto& e : rg.ledger) {
    if (e.in_branch) {
      in_branch.insert(e.curve);
      total += 2;  // the reduced preimage is a single rational curve
    } else {
      total += 2 * n - (n - 1) * e.branch_points;
    }
  }
  for (const auto& [a, b] : rg.corners)
    total -= (in_branch.count(a) || in_branch.count(b)) ? 1 : n;
  const long long general = 2 * n - (n - 1) * rg.r;
  return total - general - rg.eps;
}

long long euler_from_indices(const ResolvedGerm& rg) {
  return (rg.n - 1) * rg.alpha0 + rg.n * rg.sum_alpha() - (2 * rg.n - 1) * rg.eps;
}

json resolved_to_json(const ResolvedGerm& rg) {
  json j;
  j["n"] = rg.n;
  j["r"] = rg.r;
  json alpha = json::object();
  for (const auto& [k, c] : rg.alpha) alpha[std::to_string(k)] = c;
  j["alpha"] = alpha;
  j["alpha0_plus"] = rg.alpha0_plus;
  j["alpha0"] = rg.alpha0;
  j["eps"] = rg.eps;
  json jj = json::object();
  for (const auto& [a, c] : rg.j) jj[std::to_string(a)] = c;
  j["j"] = jj;
  j["eta"] = rg.eta;
  j["iota"] = rg.iota;
  j["kappa"] = rg.kappa;
  j["euler_local"] = euler_local(rg);
  j["ledger"] = json::array();
  for (const auto& e : rg.ledger) {
    json je;
    je["curve"] = e.curve == kGamma ? json("gamma") : json(e.curve);
    je["self_intersection"] = e.self_intersection;
    je["in_branch"] = e.in_branch;
    je["fiber_multiplicity"] = e.fiber_multiplicity;
    je["branch_points"] = e.branch_points;
    if (e.in_branch) {
      je["a"] = e.a;
      je["family"] = e.family;
    }
    j["ledger"].push_back(je);
  }
  j["corners"] = json::array();
  for (const auto& [a, b] : rg.corners) {
    json jc = json::array();
    jc.push_back(a == kGamma ? json("gamma") : json(a));
    jc.push_back(b == kGamma ? json("gamma") : json(b));
    j["corners"].push_back(jc);
  }
  return j;
}

}  // namespace cyclic_slope
