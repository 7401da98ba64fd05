#include "cyclic_slope/cluster.hpp"

#include <algorithm>
#include <deque>
#include <set>

#include "cyclic_slope/error.hpp"

namespace cyclic_slope {

GermView::GermView(const FiberGerm& g) : germ_(&g) {
  const int count = static_cast<int>(g.nodes.size());
  children_.assign(count, {});
  depth_.assign(count, 0);

  for (int i = 0; i < count; ++i) {
    const GermNode& nd = g.nodes[i];
    if (nd.id <= 0) {
      structural_.push_back({"structure", nd.id, "node ids must be positive"});
      continue;
    }
    if (!index_.emplace(nd.id, i).second)
      structural_.push_back({"structure", nd.id, "duplicate node id"});
  }
  if (!structural_.empty()) return;

  for (int i = 0; i < count; ++i) {
    const GermNode& nd = g.nodes[i];
    if (nd.parent == 0) {
      roots_.push_back(i);
    } else if (index_.count(nd.parent)) {
      if (nd.parent == nd.id)
        structural_.push_back({"structure", nd.id, "node is its own parent"});
      else
        children_[index_[nd.parent]].push_back(i);
    } else {
      structural_.push_back({"structure", nd.id, "parent id not present"});
    }
    if (nd.satellite_with != kFree && nd.satellite_with != kGamma &&
        !index_.count(nd.satellite_with))
      structural_.push_back({"structure", nd.id, "satellite_with id not present"});
  }
  if (!structural_.empty()) return;

  // Depth order; anything unreachable from a root sits on a parent cycle.
  std::deque<int> queue(roots_.begin(), roots_.end());
  for (int idx : roots_) depth_[idx] = 1;
  while (!queue.empty()) {
    const int idx = queue.front();
    queue.pop_front();
    order_.push_back(idx);
    for (int c : children_[idx]) {
      depth_[c] = depth_[idx] + 1;
      queue.push_back(c);
    }
  }
  if (static_cast<int>(order_.size()) != count) {
    structural_.push_back({"structure", 0, "parent links contain a cycle"});
    return;
  }

  for (int i = 0; i < count; ++i) {
    prox_[host1_curve(i)]++;
    if (g.nodes[i].satellite_with != kFree) {
      prox_[g.nodes[i].satellite_with]++;
      sat_v_[g.nodes[i].satellite_with] += v(i);
    }
  }
  for (int root : roots_) t_total_ += t_of_root(root);
}

int GermView::index_of(int id) const {
  auto it = index_.find(id);
  return it == index_.end() ? -1 : it->second;
}

int GermView::host1_curve(int idx) const {
  const GermNode& nd = germ_->nodes[idx];
  return nd.parent == 0 ? kGamma : nd.parent;
}

bool GermView::curve_in_branch(int curve_id) const {
  if (curve_id == kGamma) return germ_->gamma_in_branch;
  const int idx = index_of(curve_id);
  return idx >= 0 && node_in_branch(idx);
}

long long GermView::b(int idx) const {
  long long res = curve_in_branch(host1_curve(idx)) ? 1 : 0;
  const int h2 = host2_curve(idx);
  if (h2 != kFree && curve_in_branch(h2)) res += 1;
  return res;
}

long long GermView::prox_of_curve(int curve_id) const {
  auto it = prox_.find(curve_id);
  return it == prox_.end() ? 0 : it->second;
}

long long GermView::satellite_v_of_curve(int curve_id) const {
  auto it = sat_v_.find(curve_id);
  return it == sat_v_.end() ? 0 : it->second;
}

long long GermView::ends_of_node(int idx) const {
  long long sum = satellite_v_of_curve(germ_->nodes[idx].id);
  for (int c : children_[idx]) sum += v(c);
  return v(idx) - sum;
}

long long GermView::t_of_root(int idx) const {
  long long t = 0;
  int cur = idx;
  while (cur >= 0) {
    t += v(cur);
    int next = -1;
    for (int c : children_[cur])
      if (germ_->nodes[c].satellite_with == kGamma) next = c;
    cur = next;
  }
  return t;
}

long long GermView::fill() const {
  long long declared = 0;
  for (long long c : germ_->horizontal_contacts) declared += c;
  return germ_->r - t_total_ - declared;
}

long long GermView::genus() const { return (germ_->n - 1) * (germ_->r - 2) / 2; }

namespace {

std::string node_str(const GermNode& nd) {
  return "node " + std::to_string(nd.id) + " (mult " + std::to_string(nd.mult) + ")";
}

}  // namespace

std::vector<Violation> validate_germ(const FiberGerm& g) {
  std::vector<Violation> out;
  if (g.n < 2) out.push_back({"params", 0, "covering order n must be >= 2"});
  if (g.r <= 0 || (g.n >= 2 && g.r % g.n != 0))
    out.push_back({"params", 0, "branch degree r must be a positive multiple of n"});
  if (!out.empty()) return out;
  if ((g.n - 1) * (g.r - 2) % 2 != 0 || (g.n - 1) * (g.r - 2) / 2 < 2)
    out.push_back({"params", 0, "genus (n-1)(r-2)/2 must be an integer >= 2"});

  GermView view(g);
  if (!view.structurally_sound()) {
    for (const auto& v : view.structural_violations()) out.push_back(v);
    return out;
  }

  const long long n = g.n;
  const long long r = g.r;

  for (int i = 0; i < view.count(); ++i) {
    const GermNode& nd = view.node(i);
    if (nd.mult < 2) out.push_back({"min_mult", nd.id, node_str(nd) + ": multiplicity below 2"});
    if (nd.mult % n != 0 && nd.mult % n != 1)
      out.push_back({"mod_n", nd.id, node_str(nd) + ": multiplicity not in nZ or nZ+1"});

    // A satellite must sit at a corner of the parent's exceptional curve
    // with one of the parent's own hosts.
    if (nd.satellite_with != kFree) {
      if (nd.parent == 0) {
        out.push_back({"structure", nd.id, "a root cannot be a satellite"});
      } else {
        const int pidx = view.index_of(nd.parent);
        const int h1 = view.host1_curve(pidx);
        const int h2 = view.host2_curve(pidx);
        if (nd.satellite_with != h1 && nd.satellite_with != h2)
          out.push_back(
              {"structure", nd.id, "satellite_with is not a host of the parent's center"});
      }
    }
    std::set<int> used;
    for (int c : view.children(i)) {
      const int sw = view.node(c).satellite_with;
      if (sw != kFree && !used.insert(sw).second)
        out.push_back({"structure", view.node(c).id, "two satellites at one corner"});
    }

    if (view.v(i) < 0)
      out.push_back({"proximity", nd.id, node_str(nd) + ": fewer branches than in-branch hosts"});
    const long long ends = view.ends_of_node(i);
    if (ends < 0)
      out.push_back({"proximity", nd.id, node_str(nd) + ": children demand more branches than arrive"});
    if (view.node_in_branch(i) && ends != 0)
      out.push_back({"branch_continuation", nd.id,
                     node_str(nd) + ": branches may not end on an in-branch exceptional curve"});

    if (view.node_in_branch(i)) {
      if ((1 + view.prox_of_curve(nd.id)) % n != 0)
        out.push_back({"branch_self_intersection", nd.id,
                       node_str(nd) + ": in-branch curve would not end as a (-an)-curve"});
      // Crossings of two branch curves must be separated by further points.
      for (int host : {view.host1_curve(i), view.host2_curve(i)}) {
        if (host == kFree || !view.curve_in_branch(host)) continue;
        bool separated = false;
        for (int c : view.children(i))
          if (view.node(c).satellite_with == host) separated = true;
        if (!separated)
          out.push_back({"branch_crossing", nd.id,
                         node_str(nd) + ": crossing of two branch curves left unresolved"});
      }
    }
  }

  // Fiber contact budget.
  for (long long c : g.horizontal_contacts)
    if (c < 2)
      out.push_back({"fiber_contact", 0, "declared horizontal contacts must be >= 2"});
  if (g.gamma_in_branch) {
    if (!g.horizontal_contacts.empty())
      out.push_back({"fiber_contact", 0,
                     "with the fiber in the branch every contact point is singular"});
    if (view.t_total() != r)
      out.push_back({"fiber_contact", 0,
                     "fiber in branch: cluster contact with the fiber must be exactly r"});
    const long long pg = view.prox_of_curve(kGamma);
    if (pg == 0 || pg % n != 0)
      out.push_back({"branch_self_intersection", 0,
                     "in-branch fiber would not end as a (-an)-curve"});
  } else if (view.fill() < 0) {
    out.push_back({"fiber_contact", 0, "declared contact with the fiber exceeds r"});
  }

  // Standardized models bound the multiplicity at points of the original
  // surface; for n = 2 and even genus the bound includes the fiber.
  const bool even_g_strict = (n == 2) && (((r - 2) / 2) % 2 == 0);
  for (int root : view.roots()) {
    const GermNode& nd = view.node(root);
    const long long limit =
        even_g_strict ? r / 2 : r / 2 + (g.gamma_in_branch ? 1 : 0);
    if (nd.mult > limit)
      out.push_back({"standardization", nd.id,
                     node_str(nd) + ": above the standardized bound " + std::to_string(limit)});
  }
  return out;
}

long long BranchProfile::i_max() const {
  long long m = 0;
  for (const auto& [k, c] : s)
    if (c > 0) m = std::max(m, k);
  return m;
}

MultiplicitySequence multiplicity_sequence(const BranchProfile& p, long long n) {
  if (n < 2) throw Error(Errc::UnsupportedOrder, "n must be >= 2");
  for (const auto& [k, c] : p.s)
    if (k < 1 || c < 0) throw Error(Errc::InvalidProfile, "contact orders and counts must be positive");

  MultiplicitySequence seq;
  seq.i_max = p.i_max();
  auto tail = [&](long long j) {
    long long sum = 0;
    for (const auto& [k, c] : p.s)
      if (k >= j) sum += c;
    return sum;
  };
  auto count_at = [&](long long j) {
    auto it = p.s.find(j);
    return it == p.s.end() ? 0LL : it->second;
  };

  long long m = tail(1) + 1;
  long long j = 1;
  while (m > 1) {
    if (m % n != 0 && m % n != 1)
      throw Error(Errc::InvalidProfile,
                  "generated multiplicity " + std::to_string(m) + " violates the mod-n rule");
    seq.m.push_back(m);
    seq.d.push_back(m / n);
    seq.plus_one.push_back(m % n == 1);
    seq.s.push_back(count_at(j));
    m = tail(j + 1) + (m % n == 1 ? 2 : 1);
    ++j;
  }
  seq.i_bm = static_cast<long long>(seq.m.size());
  return seq;
}

bool check_monotonicity(const MultiplicitySequence& seq, long long n) {
  const auto len = static_cast<long long>(seq.m.size());
  for (long long j = 0; j < len; ++j) {
    const long long m = seq.m[j];
    const long long next = (j + 1 < len) ? seq.m[j + 1] : 1;
    if (n >= 3) {
      if (m < next) return false;
      if (m == next) {
        const bool ok_eq = (!seq.plus_one[j] && seq.s[j] == 0) ||
                           (seq.plus_one[j] && seq.s[j] == 1);
        if (!ok_eq) return false;
      }
    } else {
      if (m + 1 < next) return false;
      if (m + 1 == next && !(m % 2 == 1 && next % 2 == 0)) return false;
    }
    // Strict drop right after a step from nZ+1 to nZ.
    if (j > 0 && seq.plus_one[j - 1] && !seq.plus_one[j] && m <= next) return false;
    // d-gap for points of type nZ+1.
    if (seq.plus_one[j] && j + 1 < len && seq.d[j] - seq.d[j + 1] < n - 3) return false;
  }
  return true;
}

TcReport check_tc_identities(const std::vector<BranchProfile>& points, HostKind kind,
                             long long n) {
  TcReport rep;
  for (const auto& p : points) {
    const MultiplicitySequence seq = multiplicity_sequence(p, n);
    rep.c += seq.i_bm;
    for (const auto& [k, cnt] : p.s) rep.t += k * cnt;
    for (long long j = 0; j < seq.i_bm; ++j) {
      rep.sum_m += seq.m[j];
      rep.sum_d += seq.d[j];
      if (seq.plus_one[j]) rep.sum_ci += 1;
    }
  }
  const long long adj = (kind == HostKind::Exceptional) ? 1 : 0;
  rep.ok = (rep.t + rep.c + rep.sum_ci == rep.sum_m) && ((rep.t + rep.c) % n == 0) &&
           ((rep.t + rep.c) / n == rep.sum_d) && ((rep.c + adj) % n == 0);
  rep.a = (rep.c + adj) / n;
  return rep;
}

std::vector<HostReport> host_tc_reports(const FiberGerm& g) {
  GermView view(g);
  if (!view.structurally_sound())
    throw Error(Errc::InvalidGerm, "germ is structurally unsound");

  std::vector<HostReport> out;
  auto chains_for = [&](int curve, const std::vector<int>& starts) {
    HostReport rep;
    rep.curve = curve;
    rep.kind = curve == kGamma ? HostKind::Fiber : HostKind::Exceptional;
    for (int start : starts) {
      // Walk the proximity chain: the next point is the satellite child at
      // the corner with the host's proper transform.
      std::vector<long long> m;
      int cur = start;
      while (cur >= 0) {
        m.push_back(view.node(cur).mult);
        int next = -1;
        for (int c : view.children(cur))
          if (view.node(c).satellite_with == curve) next = c;
        cur = next;
      }
      // Invert the sequence rules to recover the virtual-branch profile.
      const auto len = static_cast<long long>(m.size());
      std::vector<long long> tail(len + 1, 0);
      for (long long j = 1; j <= len; ++j)
        tail[j - 1] = m[j - 1] - 1 - ((j >= 2 && m[j - 2] % g.n == 1) ? 1 : 0);
      BranchProfile profile;
      for (long long j = 0; j < len; ++j) {
        const long long s = tail[j] - tail[j + 1];
        if (s > 0) profile.s[j + 1] = s;
      }
      rep.profiles.push_back(profile);
      rep.sequences.push_back(multiplicity_sequence(profile, g.n));
    }
    rep.tc = check_tc_identities(rep.profiles, rep.kind, g.n);
    return rep;
  };

  if (g.gamma_in_branch) out.push_back(chains_for(kGamma, view.roots()));
  for (int i = 0; i < view.count(); ++i)
    if (view.node_in_branch(i)) out.push_back(chains_for(view.node(i).id, view.children(i)));
  return out;
}

long long elementary_transform_step(long long m, long long r, long long n) {
  if (n < 2 || r <= 0 || r % n != 0)
    throw Error(Errc::PreconditionViolated, "r must be a positive multiple of n");
  if (m < 0 || (m % n != 0 && m % n != 1))
    throw Error(Errc::PreconditionViolated, "multiplicity must lie in nZ or nZ+1");
  if (2 * m <= r)
    throw Error(Errc::PreconditionViolated,
                "the transformation only applies at points with m > r/2");
  const long long d_prime = r / n - m / n;
  if (d_prime < 0)
    throw Error(Errc::PreconditionViolated, "multiplicity exceeds the branch degree");
  return d_prime;
}

StandardizeResult standardize(std::vector<long long> mults, long long r, long long n,
                              bool fiber_in_branch) {
  StandardizeResult res;
  for (bool changed = true; changed;) {
    changed = false;
    for (auto& m : mults) {
      if (2 * m <= r) continue;
      if (fiber_in_branch && 2 * (m - 1) == r) continue;  // terminal r/2 + 1 case
      const long long d_prime = elementary_transform_step(m, r, n);
      m = n * d_prime + (fiber_in_branch ? 1 : 0);
      res.steps += 1;
      changed = true;
    }
  }
  res.mults = std::move(mults);
  return res;
}

json germ_to_json(const FiberGerm& g) {
  json j;
  j["n"] = g.n;
  j["r"] = g.r;
  j["gamma_in_branch"] = g.gamma_in_branch;
  j["nodes"] = json::array();
  for (const auto& nd : g.nodes) {
    json jn;
    jn["id"] = nd.id;
    jn["parent"] = nd.parent == 0 ? json(nullptr) : json(nd.parent);
    jn["mult"] = nd.mult;
    jn["satellite_with"] = nd.satellite_with == kFree ? json(nullptr) : json(nd.satellite_with);
    j["nodes"].push_back(jn);
  }
  j["horizontal_contacts"] = g.horizontal_contacts;
  return j;
}

namespace {

[[noreturn]] void parse_fail(const std::string& path, const std::string& what) {
  throw Error(Errc::ParseError, path + ": " + what);
}

long long require_int(const json& j, const std::string& path) {
  if (j.is_number_integer()) return j.get<long long>();
  if (j.is_string()) {
    try {
      return std::stoll(j.get<std::string>());
    } catch (const std::exception&) {
    }
  }
  parse_fail(path, "expected an integer");
}

}  // namespace

FiberGerm germ_from_json(const json& j) {
  if (!j.is_object()) parse_fail("$", "germ must be a JSON object");
  FiberGerm g;
  if (!j.contains("n")) parse_fail("$.n", "missing");
  g.n = require_int(j["n"], "$.n");
  if (!j.contains("r")) parse_fail("$.r", "missing");
  g.r = require_int(j["r"], "$.r");
  if (j.contains("gamma_in_branch")) {
    if (!j["gamma_in_branch"].is_boolean()) parse_fail("$.gamma_in_branch", "expected a boolean");
    g.gamma_in_branch = j["gamma_in_branch"].get<bool>();
  }
  if (j.contains("nodes")) {
    if (!j["nodes"].is_array()) parse_fail("$.nodes", "expected an array");
    int i = 0;
    for (const auto& jn : j["nodes"]) {
      const std::string path = "$.nodes[" + std::to_string(i++) + "]";
      if (!jn.is_object()) parse_fail(path, "expected an object");
      GermNode nd;
      if (!jn.contains("id")) parse_fail(path + ".id", "missing");
      nd.id = static_cast<int>(require_int(jn["id"], path + ".id"));
      nd.parent = (!jn.contains("parent") || jn["parent"].is_null())
                      ? 0
                      : static_cast<int>(require_int(jn["parent"], path + ".parent"));
      if (!jn.contains("mult")) parse_fail(path + ".mult", "missing");
      nd.mult = require_int(jn["mult"], path + ".mult");
      nd.satellite_with =
          (!jn.contains("satellite_with") || jn["satellite_with"].is_null())
              ? kFree
              : static_cast<int>(require_int(jn["satellite_with"], path + ".satellite_with"));
      g.nodes.push_back(nd);
    }
  }
  if (j.contains("horizontal_contacts")) {
    if (!j["horizontal_contacts"].is_array()) parse_fail("$.horizontal_contacts", "expected an array");
    int i = 0;
    for (const auto& jc : j["horizontal_contacts"])
      g.horizontal_contacts.push_back(
          require_int(jc, "$.horizontal_contacts[" + std::to_string(i++) + "]"));
  }
  return g;
}

json violations_to_json(const std::vector<Violation>& v) {
  json arr = json::array();
  for (const auto& x : v) {
    json j;
    j["rule"] = x.rule;
    j["node"] = x.node_id;
    j["detail"] = x.detail;
    arr.push_back(j);
  }
  return arr;
}

}  // namespace cyclic_slope
