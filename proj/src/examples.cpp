#include "cyclic_slope/examples.hpp"

#include <algorithm>
#include <string>

#include "cyclic_slope/error.hpp"

namespace cyclic_slope {

ProductExampleResult product_example(const ProductExampleParams& p) {
  if (p.n < 2 || p.h < 0 || p.N < 1 || p.M < 1)
    throw Error(Errc::PreconditionViolated, "need n >= 2, h >= 0, N >= 1, M >= 1");
  ProductExampleResult res;
  res.g = p.n * (p.n - 1) * p.M / 2 + p.n * (p.h - 1) + 1;
  if (res.g < 2)
    throw Error(Errc::DegenerateExample, "derived genus g = " + std::to_string(res.g) + " < 2");
  res.Kf2 = Rational(2 * p.n * (p.n - 1) * p.N) * (Rational((p.n - 1) * p.M) + 2 * (p.h - 1));
  res.chif = Rational(p.n * (p.n - 1) * p.N, 6) * (3 * (p.h - 1) + (2 * p.n - 1) * p.M);
  if (res.chif <= 0)
    throw Error(Errc::DegenerateExample, "chi_f = " + res.chif.str() + " is not positive");
  res.slope = res.Kf2 / res.chif;
  res.lambda = lambda_lower(res.g, p.h, p.n);
  if (res.slope != res.lambda)
    throw Error(Errc::IdentityViolation, "product example missed the lower bound");
  return res;
}

namespace {

// Subtree of the cluster as built by the enumerator. A child is free or a
// satellite with one of its parent's two host curves; everything needed by
// the germ-level constraints (proximity to the fiber, contact chains) is
// summarized while the subtree is assembled.
struct TNode {
  long long v = 0;     // branch material through the center (mult minus hosts)
  long long mult = 0;
  int sat = -1;        // -1 free, 0 with the parent's host1, 1 with its host2
  std::vector<TNode> children;
  int size = 1;
  long long sat_h1 = 0;    // satellites in the subtree resolving to context host1
  long long sat_h2 = 0;    // same for context host2
  long long sat_v_h1 = 0;  // v-sum over those satellites: contact consumed on host1
  long long sat_v_h2 = 0;  // same for context host2
  std::string enc;

  // A child subtree consumes its own v plus whatever its satellites spend
  // back on the curve it sits on.
  long long weight() const { return v + sat_v_h1; }
};

struct Ctx {
  bool h1_br = false;
  bool has_h2 = false;
  bool h2_br = false;
};

struct Enumerator {
  long long n = 2;
  long long r = 0;
  int max_nodes = 3;
  long long max_mult = 0;
  int max_depth = 8;
  const std::function<void(const FiberGerm&)>* sink = nullptr;

  bool gamma = false;
  long long root_limit = 0;

  void run() {
    const long long g = (n - 1) * (r - 2) / 2;
    const bool even_g_strict = (n == 2) && (g % 2 == 0);
    for (int gb = 0; gb <= 1; ++gb) {
      gamma = gb == 1;
      root_limit = std::min<long long>(max_mult,
                                       even_g_strict ? r / 2 : r / 2 + (gamma ? 1 : 0));
      const Ctx root_ctx{gamma, false, false};
      std::vector<TNode> catalog = subtree_catalog(root_ctx, max_nodes, max_depth, root_limit);
      std::vector<const TNode*> picked;
      pick_roots(catalog, 0, max_nodes, r, picked);
    }
  }

  // Multiset selection of root subtrees, non-increasing in the canonical
  // encoding so each unordered configuration appears once.
  void pick_roots(const std::vector<TNode>& catalog, std::size_t start, int nodes_left,
                  long long t_left, std::vector<const TNode*>& picked) {
    maybe_emit(picked);
    for (std::size_t i = start; i < catalog.size(); ++i) {
      const TNode& t = catalog[i];
      if (t.size > nodes_left || t.weight() > t_left) continue;
      picked.push_back(&t);
      pick_roots(catalog, i, nodes_left - t.size, t_left - t.weight(), picked);
      picked.pop_back();
    }
  }

  void maybe_emit(const std::vector<const TNode*>& roots) {
    if (gamma) {
      long long t_total = 0, prox_gamma = 0;
      for (const TNode* t : roots) {
        t_total += t->weight();
        prox_gamma += 1 + t->sat_h1;
      }
      if (t_total != r || prox_gamma == 0 || prox_gamma % n != 0) return;
    }
    FiberGerm germ;
    germ.n = n;
    germ.r = r;
    germ.gamma_in_branch = gamma;
    int next_id = 1;
    for (const TNode* t : roots) instantiate(*t, 0, kGamma, kFree, germ, next_id);
    (*sink)(germ);
  }

  // parent_h1/parent_h2 are the curve ids of the parent's hosts, used to
  // resolve this node's satellite target. The parent id doubles as the
  // curve id of the exceptional curve this node sits on (kGamma for roots).
  void instantiate(const TNode& t, int parent_id, int parent_h1, int parent_h2,
                   FiberGerm& germ, int& next_id) {
    GermNode nd;
    nd.id = next_id++;
    nd.parent = parent_id;
    nd.mult = t.mult;
    nd.satellite_with = t.sat == -1 ? kFree : (t.sat == 0 ? parent_h1 : parent_h2);
    germ.nodes.push_back(nd);
    for (const TNode& c : t.children)
      instantiate(c, nd.id, parent_id, nd.satellite_with, germ, next_id);
  }

  // All complete subtrees that can hang in the given context, any v, with
  // at most nodes_cap nodes. mult_cap allows the tighter root bound.
  std::vector<TNode> subtree_catalog(const Ctx& ctx, int nodes_cap, int depth_cap,
                                     long long mult_cap) {
    std::vector<TNode> out;
    const long long b = (ctx.h1_br ? 1 : 0) + (ctx.has_h2 && ctx.h2_br ? 1 : 0);
    for (long long v = std::max<long long>(0, 2 - b); v + b <= mult_cap; ++v)
      subtrees(v, ctx, nodes_cap, depth_cap, mult_cap,
               [&](const TNode& t) { out.push_back(t); });
    std::sort(out.begin(), out.end(),
              [](const TNode& a, const TNode& b2) { return a.enc > b2.enc; });
    return out;
  }

  void subtrees(long long v, const Ctx& ctx, int nodes_left, int depth_left, long long mult_cap,
                const std::function<void(const TNode&)>& yield) {
    const long long b = (ctx.h1_br ? 1 : 0) + (ctx.has_h2 && ctx.h2_br ? 1 : 0);
    const long long mult = v + b;
    if (mult < 2 || mult > mult_cap || (mult % n != 0 && mult % n != 1)) return;
    if (nodes_left < 1 || depth_left < 1) return;
    const bool in_br = mult % n == 1;

    children_sets(v, in_br, ctx, nodes_left - 1, depth_left - 1,
                  [&](const std::vector<TNode>& kids) {
                    long long prox = static_cast<long long>(kids.size());
                    for (const TNode& k : kids) prox += k.sat_h1;
                    if (in_br && (1 + prox) % n != 0) return;

                    TNode t;
                    t.v = v;
                    t.mult = mult;
                    t.children = kids;
                    for (const TNode& k : kids) {
                      t.size += k.size;
                      if (k.sat == 0) {
                        t.sat_h1 += 1 + k.sat_h2;
                        t.sat_v_h1 += k.v + k.sat_v_h2;
                      } else if (k.sat == 1) {
                        t.sat_h2 += 1 + k.sat_h2;
                        t.sat_v_h2 += k.v + k.sat_v_h2;
                      }
                    }
                    t.enc = "(" + std::to_string(mult);
                    for (const TNode& k : kids)
                      t.enc += "," + std::to_string(k.sat) + k.enc;
                    t.enc += ")";
                    yield(t);
                  });
  }

  // Children of a node whose exceptional curve is E (in branch iff in_br)
  // and whose own hosts are given by ctx: one optional satellite per host
  // corner, then a multiset of free children. Branches must be exhausted
  // exactly when E lies in the branch.
  void children_sets(long long v_budget, bool in_br, const Ctx& ctx, int nodes_left,
                     int depth_left, const std::function<void(const std::vector<TNode>&)>& yield) {
    const bool forced1 = in_br && ctx.h1_br;
    const bool forced2 = in_br && ctx.has_h2 && ctx.h2_br;

    auto with_slot2 = [&](const std::vector<TNode>& fixed, long long v_used, int n_used,
                          const std::function<void(const std::vector<TNode>&, long long, int)>& k) {
      if (!forced2) k(fixed, v_used, n_used);
      if (!ctx.has_h2) return;
      const Ctx sub{in_br, true, ctx.h2_br};
      for (long long v = 0; v_used + v <= v_budget; ++v)
        subtrees(v, sub, nodes_left - n_used, depth_left, max_mult, [&](const TNode& t) {
          if (v_used + t.weight() > v_budget) return;
          std::vector<TNode> next = fixed;
          next.push_back(t);
          next.back().sat = 1;
          k(next, v_used + t.weight(), n_used + t.size);
        });
    };

    auto with_frees = [&](const std::vector<TNode>& fixed, long long v_used, int n_used) {
      const Ctx free_ctx{in_br, false, false};
      const std::vector<TNode> catalog =
          subtree_catalog(free_ctx, nodes_left - n_used, depth_left, max_mult);
      std::vector<TNode> kids = fixed;
      pick_frees(catalog, 0, v_budget - v_used, nodes_left - n_used, in_br, kids, yield);
    };

    auto after_slot1 = [&](const std::vector<TNode>& fixed, long long v_used, int n_used) {
      with_slot2(fixed, v_used, n_used,
                 [&](const std::vector<TNode>& f2, long long v2, int n2) { with_frees(f2, v2, n2); });
    };

    if (!forced1) after_slot1({}, 0, 0);
    const Ctx sub1{in_br, true, ctx.h1_br};
    for (long long v = 0; v <= v_budget; ++v)
      subtrees(v, sub1, nodes_left, depth_left, max_mult, [&](const TNode& t) {
        if (t.weight() > v_budget) return;
        std::vector<TNode> fixed{t};
        fixed.back().sat = 0;
        after_slot1(fixed, t.weight(), t.size);
      });
  }

  void pick_frees(const std::vector<TNode>& catalog, std::size_t start, long long v_left,
                  int nodes_left, bool exact, std::vector<TNode>& kids,
                  const std::function<void(const std::vector<TNode>&)>& yield) {
    if (!exact || v_left == 0) yield(kids);
    for (std::size_t i = start; i < catalog.size(); ++i) {
      const TNode& t = catalog[i];
      if (t.weight() > v_left || t.size > nodes_left) continue;
      kids.push_back(t);
      kids.back().sat = -1;
      pick_frees(catalog, i, v_left - t.weight(), nodes_left - t.size, exact, kids, yield);
      kids.pop_back();
    }
  }
};

}  // namespace

void enumerate_germs(long long n, long long r, const EnumerationBudget& budget,
                     const std::function<void(const FiberGerm&)>& sink) {
  if (n < 2 || r <= 0 || r % n != 0)
    throw Error(Errc::PreconditionViolated, "need n >= 2 and r a positive multiple of n");
  if ((n - 1) * (r - 2) / 2 < 2)
    throw Error(Errc::PreconditionViolated, "genus (n-1)(r-2)/2 must be >= 2");
  Enumerator e;
  e.n = n;
  e.r = r;
  e.max_nodes = budget.max_nodes;
  e.max_mult = budget.max_mult > 0 ? budget.max_mult : r / 2 + 2;
  e.max_depth = budget.max_depth;
  e.sink = &sink;
  e.run();
}

std::vector<FiberGerm> enumerate_germs(long long n, long long r,
                                       const EnumerationBudget& budget) {
  std::vector<FiberGerm> out;
  enumerate_germs(n, r, budget, [&](const FiberGerm& g) { out.push_back(g); });
  return out;
}

}  // namespace cyclic_slope
