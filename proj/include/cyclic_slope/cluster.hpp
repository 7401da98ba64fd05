#pragma once

#include <map>
#include <string>
#include <vector>

#include "json.hpp"

namespace cyclic_slope {

using json = nlohmann::ordered_json;

/// Curve ids: the fiber Gamma_p is curve 0, the exceptional curve of the
/// blow-up at node x is curve x.id (node ids are positive).
constexpr int kGamma = 0;
/// satellite_with value for a free point (general point of the parent's
/// exceptional curve).
constexpr int kFree = -1;

/// One infinitely near point of the branch divisor over a fiber. The center
/// lies on the fiber (parent = 0) or on the exceptional curve of `parent`.
/// A satellite point sits at the intersection with a second host curve,
/// which must be a host of the parent (kGamma or a node id).
struct GermNode {
  int id = 0;
  int parent = 0;
  long long mult = 0;  // multiplicity of the branch divisor, hosts included
  int satellite_with = kFree;
};

/// Branch data of one fiber germ: the cluster of infinitely near singular
/// points plus the contact orders of smooth horizontal branch germs with
/// the fiber away from singular points. Contacts of order 1 are implicit:
/// whatever is left of r is filled by transverse generic intersections.
struct FiberGerm {
  long long n = 2;
  long long r = 0;
  bool gamma_in_branch = false;
  std::vector<GermNode> nodes;
  std::vector<long long> horizontal_contacts;
};

struct Violation {
  std::string rule;
  int node_id = 0;  // 0 when the violation is germ-level
  std::string detail;
};

/// Indexed view of a germ with the derived combinatorics every consumer
/// needs: children lists, hosts, branch membership, virtual-branch counts
/// and proximity tallies. Never throws; structural defects are collected
/// and the derived data is only meaningful when structurally_sound().
class GermView {
 public:
  explicit GermView(const FiberGerm& g);

  const FiberGerm& germ() const { return *germ_; }
  bool structurally_sound() const { return structural_.empty(); }
  const std::vector<Violation>& structural_violations() const { return structural_; }

  int count() const { return static_cast<int>(germ_->nodes.size()); }
  const GermNode& node(int idx) const { return germ_->nodes[idx]; }
  int index_of(int id) const;  // -1 if absent
  const std::vector<int>& roots() const { return roots_; }
  const std::vector<int>& children(int idx) const { return children_[idx]; }
  const std::vector<int>& order() const { return order_; }
  long long depth(int idx) const { return depth_[idx]; }

  /// First host curve: kGamma for roots, otherwise the parent's curve.
  int host1_curve(int idx) const;
  /// Second host curve, kFree when the point is free.
  int host2_curve(int idx) const { return germ_->nodes[idx].satellite_with; }

  bool curve_in_branch(int curve_id) const;
  bool node_in_branch(int idx) const { return germ_->nodes[idx].mult % germ_->n == 1; }

  /// Number of in-branch host curves through the center.
  long long b(int idx) const;
  /// Number of virtual smooth branches through the center: mult - b.
  long long v(int idx) const { return germ_->nodes[idx].mult - b(idx); }

  /// Number of cluster points proximate to the curve (lying on it or on a
  /// proper transform of it).
  long long prox_of_curve(int curve_id) const;
  /// Branch material separating at generic points of E_x after its blow-up:
  /// v(x) minus what the children carry on and minus the contact consumed
  /// by satellites returning to E_x deeper in the cluster.
  long long ends_of_node(int idx) const;
  /// Total v over the satellite points lying on proper transforms of the
  /// curve (the deeper tangency/cusp consumption of its contact budget).
  long long satellite_v_of_curve(int curve_id) const;

  /// Contact order of the branch divisor minus hosts with the fiber at a
  /// root: the sum of v along the satellite-with-Gamma chain.
  long long t_of_root(int idx) const;
  long long t_total() const { return t_total_; }
  /// Implicit transverse intersections of horizontal branches with the
  /// fiber away from all declared data.
  long long fill() const;

  long long genus() const;  // (n-1)(r-2)/2

 private:
  const FiberGerm* germ_;
  std::vector<Violation> structural_;
  std::vector<int> roots_;
  std::vector<std::vector<int>> children_;
  std::vector<int> order_;
  std::vector<long long> depth_;
  std::map<int, int> index_;
  std::map<int, long long> prox_;   // curve id -> proximate point count
  std::map<int, long long> sat_v_;  // curve id -> v-sum over its satellites
  long long t_total_ = 0;
};

/// Checks every germ invariant: structure, the mod-n multiplicity rule,
/// virtual-branch conservation (proximity), forced continuation over
/// in-branch hosts, self-intersection divisibility of in-branch vertical
/// curves, separation of crossing branch curves, the fiber contact budget
/// and the standardized root multiplicity bound. Violations are data, not
/// exceptions; an empty list means the germ is valid.
std::vector<Violation> validate_germ(const FiberGerm& g);

/// Virtual local branches at one point of a host curve: s[k] branches with
/// contact order exactly k.
struct BranchProfile {
  std::map<long long, long long> s;
  long long i_max() const;
};

struct MultiplicitySequence {
  std::vector<long long> m;  // multiplicities > 1, in blow-up order
  std::vector<long long> d;  // floor(m/n)
  std::vector<bool> plus_one;  // true when m in nZ+1
  std::vector<long long> s;  // profile count at contact order j (1-based j)
  long long i_max = 0;
  long long i_bm = 0;  // = m.size()
};

/// Generates the multiplicity sequence of a point from its virtual-branch
/// profile: m_1 = sum s_k + 1, and m_{j+1} = sum_{k>=j+1} s_k + 1 or + 2
/// according to whether m_j lies in nZ or nZ+1. Throws InvalidProfile when
/// a generated multiplicity breaks the mod-n rule.
MultiplicitySequence multiplicity_sequence(const BranchProfile& p, long long n);

/// Monotonicity of a multiplicity sequence: m_j >= m_{j+1} for n >= 3 with
/// the stated equality conditions, m_j + 1 >= m_{j+1} for n = 2, strict
/// descent after an (nZ+1, nZ) step, and d_j - d_{j+1} >= n - 3 whenever
/// m_j is in nZ+1.
bool check_monotonicity(const MultiplicitySequence& seq, long long n);

enum class HostKind { Exceptional, Fiber };

struct TcReport {
  long long t = 0;
  long long c = 0;
  long long sum_ci = 0;
  long long sum_m = 0;
  long long sum_d = 0;
  long long a = 0;  // the host ends as a (-an)-curve
  bool ok = false;
};

/// Evaluates both displayed identities t + c + sum c_i = sum m_{i,j} and
/// (t + c)/n = sum d_{i,j} for the points of a host curve, together with
/// the host convention c = an - 1 (exceptional) or an (fiber).
TcReport check_tc_identities(const std::vector<BranchProfile>& points, HostKind kind,
                             long long n);

/// Per-host extraction from a full germ: the proximity chains of one
/// in-branch host curve, their profiles and sequences, and the identity
/// report. Used by the verification suites.
struct HostReport {
  int curve = 0;  // kGamma or node id
  HostKind kind = HostKind::Exceptional;
  std::vector<BranchProfile> profiles;
  std::vector<MultiplicitySequence> sequences;
  TcReport tc;
};

std::vector<HostReport> host_tc_reports(const FiberGerm& g);

/// Elementary transformation at a point of multiplicity m > r/2: returns
/// floor(m'/n) = r/n - floor(m/n) for the transformed multiplicity.
long long elementary_transform_step(long long m, long long r, long long n);

struct StandardizeResult {
  std::vector<long long> mults;
  int steps = 0;
};

/// Repeatedly applies the elementary transformation at offending points
/// until every multiplicity satisfies the standardized bound. With
/// fiber_in_branch the transformed multiplicity is n d' + 1 and the
/// terminal value r/2 + 1 is left alone.
StandardizeResult standardize(std::vector<long long> mults, long long r, long long n,
                              bool fiber_in_branch = false);

json germ_to_json(const FiberGerm& g);
FiberGerm germ_from_json(const json& j);
json violations_to_json(const std::vector<Violation>& v);

}  // namespace cyclic_slope
