#include "cyclic_slope/suite.hpp"

#include <algorithm>
#include <cstdlib>
#include <mutex>
#include <thread>

#include "cyclic_slope/bounds.hpp"
#include "cyclic_slope/error.hpp"

namespace cyclic_slope {

bool SuiteReport::all_pass() const {
  for (const auto& c : checks)
    if (!c.pass) return false;
  return true;
}

namespace {

struct Tally {
  std::vector<SuiteCheck> checks;
  long long models = 0;

  SuiteCheck& at(const std::string& name) {
    for (auto& c : checks)
      if (c.name == name) return c;
    checks.push_back({name, true, 0, ""});
    return checks.back();
  }

  void record(const std::string& name, bool ok, const std::string& detail) {
    SuiteCheck& c = at(name);
    c.checked += 1;
    if (!ok && c.pass) {
      c.pass = false;
      c.detail = detail;
    }
  }

  void merge(const Tally& other) {
    for (const auto& c : other.checks) {
      SuiteCheck& mine = at(c.name);
      mine.checked += c.checked;
      if (!c.pass && mine.pass) {
        mine.pass = false;
        mine.detail = c.detail;
      }
    }
    models += other.models;
  }
};

bool germ_is_empty(const FiberGerm& g) {
  return g.nodes.empty() && g.horizontal_contacts.empty() && !g.gamma_in_branch;
}

void check_germ(long long n, long long r, long long g_genus, const FiberGerm& germ,
                int germ_index, Tally& tally) {
  const std::string tag = "germ #" + std::to_string(germ_index);

  tally.record("germ_validation", validate_germ(germ).empty(), tag + " failed validation");

  const ResolvedGerm rg = resolve_germ(germ);
  GermView view(germ);

  // Multiplicity sequences and the t/c identities on every in-branch host.
  for (const auto& host : host_tc_reports(germ)) {
    bool seq_ok = true;
    bool mono_ok = true;
    for (std::size_t i = 0; i < host.sequences.size(); ++i) {
      mono_ok = mono_ok && check_monotonicity(host.sequences[i], n);
      // The regenerated sequence must match the chain in the cluster.
      std::vector<long long> chain;
      int cur = host.curve == kGamma ? -1 : view.index_of(host.curve);
      std::vector<int> starts =
          host.curve == kGamma ? view.roots() : view.children(view.index_of(host.curve));
      (void)cur;
      int at = starts[i];
      while (at >= 0) {
        chain.push_back(view.node(at).mult);
        int next = -1;
        for (int c : view.children(at))
          if (view.node(c).satellite_with == host.curve) next = c;
        at = next;
      }
      seq_ok = seq_ok && chain == host.sequences[i].m;
    }
    tally.record("multiplicity_sequences", seq_ok && mono_ok,
                 tag + " host " + std::to_string(host.curve));
    bool tc_ok = host.tc.ok;
    tc_ok = tc_ok && host.tc.c == view.prox_of_curve(host.curve);
    if (host.kind == HostKind::Fiber)
      tc_ok = tc_ok && host.tc.t == r;
    else
      tc_ok = tc_ok && host.tc.t == view.node(view.index_of(host.curve)).mult;
    tally.record("tc_identities", tc_ok, tag + " host " + std::to_string(host.curve));
  }

  // Ledger identities.
  bool ledger_ok = rg.eps == (rg.j.count(1) ? rg.j.at(1) : 0);
  ledger_ok = ledger_ok && rg.iota == rg.sum_j() - rg.eta;
  long long deep = 0;
  for (const auto& [a, c] : rg.j)
    if (a >= 2) deep += c;
  ledger_ok = ledger_ok && rg.alpha0 == rg.alpha0_plus - 2 * deep;
  for (const auto& e : rg.ledger)
    if (e.in_branch) ledger_ok = ledger_ok && e.self_intersection % n == 0 && e.self_intersection <= -n;
  tally.record("resolution_identities", ledger_ok, tag);

  tally.record("jp_bounds", check_jp_bounds(rg), tag);

  const long long euler_top = euler_local(rg);
  tally.record("euler_oracle", euler_top == euler_from_indices(rg), tag);
  tally.record("euler_nonnegative",
               euler_top >= 0 && (euler_top > 0 || germ_is_empty(germ)), tag);

  const Rational ind = horikawa_index(n, r, indices_of(rg));
  bool ind_ok = ind >= 0;
  if (n == 2) {
    bool only_alpha1 = rg.eps == 0;
    for (const auto& [k, c] : rg.alpha) only_alpha1 = only_alpha1 && (k == 1 || c == 0);
    ind_ok = ind_ok && (ind.is_zero() == only_alpha1);
  }
  tally.record("horikawa_nonnegative", ind_ok, tag);

  // Models around this germ: the minimal half-integer M and one bigger.
  const std::vector<std::pair<std::string, FiberGerm>> germs = {{"p0", germ}};
  const Rational m0 = minimal_m(n, g_genus, germs);
  for (const Rational& M : {m0, m0 + 1}) {
    GlobalModel model = build_model(n, g_genus, germs, M);
    tally.models += 1;

    const auto inv = relative_invariants(model);
    tally.record("noether", Rational(12) * inv.chif == inv.Kf2 + inv.ef,
                 tag + " M=" + M.str());
    tally.record("slope_equality", slope_equality_residual(model).is_zero(),
                 tag + " M=" + M.str());
    const auto sig = signature_total(model);
    tally.record("signature_two_routes", sig.first == sig.second, tag + " M=" + M.str());
    tally.record("chi_nonnegative",
                 inv.chif >= 0 && (inv.chif > 0 || (M.is_zero() && germ_is_empty(germ))),
                 tag + " M=" + M.str());

    // Independent route through the ruled-surface closed forms and the
    // blow-up corrections.
    BlowupList bl;
    for (const auto& nd : germ.nodes) bl.mults.push_back(nd.mult);
    const auto an = analyze_model(model);
    const auto cert = lower_bound_certificate(ruled_surface_data(n, g_genus, M), bl,
                                              an.total.eps);
    tally.record("wlevel_route",
                 cert.Kf2 == inv.Kf2 && cert.chif == inv.chif && cert.verdict,
                 tag + " M=" + M.str());

    // r = n forces a smooth branch and the slope sits on the lower bound;
    // the upper-bound defect formula only exists for r >= 2n.
    if (n >= 4 && r >= 2 * n) {
      const auto upper = upper_bound_certificate(model);
      bool ok = upper.decomposition_ok && upper.signs_ok && upper.per_fiber_ok;
      if (upper.applicable) ok = ok && upper.verdict && upper.residual >= 0;
      tally.record("upper_bound", ok, tag + " M=" + M.str());
    }
  }
}

int resolve_threads(int threads) {
  if (threads <= 0) {
    if (const char* env = std::getenv("CYCLIC_SLOPE_THREADS")) {
      const int parsed = std::atoi(env);
      if (parsed > 0) threads = parsed;
    }
  }
  if (threads <= 0) threads = static_cast<int>(std::thread::hardware_concurrency());
  return std::max(1, std::min(threads, 64));
}

}  // namespace

SuiteReport verify_suite(long long n, long long r, const EnumerationBudget& budget,
                         int threads) {
  SuiteReport rep;
  rep.n = n;
  rep.r = r;
  rep.g = (n - 1) * (r - 2) / 2;
  rep.budget = budget;

  const std::vector<FiberGerm> germs = enumerate_germs(n, r, budget);
  rep.germ_count = static_cast<long long>(germs.size());

  const int nthreads = resolve_threads(threads);
  std::vector<Tally> tallies(nthreads);
  std::vector<std::thread> pool;
  std::mutex fail_mutex;
  std::vector<std::string> hard_failures;
  for (int t = 0; t < nthreads; ++t) {
    pool.emplace_back([&, t]() {
      for (std::size_t i = t; i < germs.size(); i += nthreads) {
        try {
          check_germ(n, r, rep.g, germs[i], static_cast<int>(i), tallies[t]);
        } catch (const std::exception& e) {
          std::lock_guard<std::mutex> lock(fail_mutex);
          hard_failures.push_back("germ #" + std::to_string(i) + ": " + e.what());
        }
      }
    });
  }
  for (auto& th : pool) th.join();

  Tally total;
  for (const auto& t : tallies) total.merge(t);
  if (!hard_failures.empty())
    total.checks.push_back({"no_exceptions", false, static_cast<long long>(hard_failures.size()),
                            hard_failures.front()});
  rep.model_count = total.models;
  rep.checks = total.checks;
  std::sort(rep.checks.begin(), rep.checks.end(),
            [](const SuiteCheck& a, const SuiteCheck& b) { return a.name < b.name; });
  return rep;
}

json suite_to_json(const SuiteReport& rep) {
  json j;
  j["n"] = rep.n;
  j["r"] = rep.r;
  j["g"] = rep.g;
  j["budget"]["max_nodes"] = rep.budget.max_nodes;
  j["budget"]["max_mult"] = rep.budget.max_mult;
  j["budget"]["max_depth"] = rep.budget.max_depth;
  j["germs"] = rep.germ_count;
  j["models"] = rep.model_count;
  j["checks"] = json::array();
  for (const auto& c : rep.checks) {
    json jc;
    jc["name"] = c.name;
    jc["pass"] = c.pass;
    jc["checked"] = c.checked;
    if (!c.detail.empty()) jc["detail"] = c.detail;
    j["checks"].push_back(jc);
  }
  j["all_pass"] = rep.all_pass();
  return j;
}

}  // namespace cyclic_slope
