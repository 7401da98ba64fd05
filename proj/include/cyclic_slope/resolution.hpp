#pragma once

#include <map>
#include <utility>
#include <vector>

#include "cyclic_slope/cluster.hpp"

namespace cyclic_slope {

struct CurveLedgerEntry {
  int curve = kGamma;  // kGamma or the node id whose blow-up created it
  long long self_intersection = 0;
  bool in_branch = false;
  long long fiber_multiplicity = 1;  // coefficient in the total transform of the fiber
  long long branch_points = 0;  // distinct points of the branch on this curve
  long long a = 0;              // in-branch verticals end as (-an)-curves
  int family = -1;              // D^t index, -1 for curves outside the branch
};

/// Output ledger of the blow-up tower over one fiber germ.
struct ResolvedGerm {
  long long n = 2;
  long long r = 0;
  std::map<long long, long long> alpha;  // k >= 1 -> count of points of mult kn or kn+1
  long long alpha0_plus = 0;
  long long alpha0 = 0;  // alpha0_plus - 2 sum_{a>=2} j_a; may be negative
  long long eps = 0;     // = j_1
  long long eta = 0;     // number of vertical branch families
  long long iota = 0;    // corner points of two branch curves, type nZ
  long long kappa = 0;   // corner points of two branch curves, type nZ+1
  std::map<long long, long long> j;  // a -> number of (-an)-curves in the branch
  std::vector<CurveLedgerEntry> ledger;
  std::vector<std::pair<int, int>> corners;  // final intersections among fiber components
  long long ends_total = 0;
  long long fill = 0;
  long long declared_contacts = 0;

  long long sum_alpha() const;
  long long sum_j() const;
};

/// Executes the blow-up tower: every node in depth order, maintaining each
/// curve's self-intersection, branch membership and fiber multiplicity,
/// then extracts all singularity indices. The germ must validate cleanly.
ResolvedGerm resolve_germ(const FiberGerm& g);

struct VerticalFamily {
  std::vector<int> curves;             // kGamma or node ids, ascending
  std::map<long long, long long> j_a;  // per-family j_a^t
};

/// The unique decomposition of the vertical branch components over the
/// fiber into connected families.
std::vector<VerticalFamily> vertical_ledger(const ResolvedGerm& rg);

/// iota = j - eta plus both counting inequalities relating alpha0_plus,
/// the alpha indices and the family data.
bool check_jp_bounds(const ResolvedGerm& rg);

/// Relative Euler number of the fiber computed topologically from the
/// ledger: Euler numbers of the covering pieces over each fiber component
/// glued along the corner points, minus the general fiber, minus the
/// (-1)-curves contracted by the relatively minimal model. Independent of
/// the singularity-index formula, which euler_from_indices evaluates.
long long euler_local(const ResolvedGerm& rg);
long long euler_from_indices(const ResolvedGerm& rg);

json resolved_to_json(const ResolvedGerm& rg);

}  // namespace cyclic_slope
