#pragma once

#include <optional>
#include <utility>
#include <vector>

namespace cyclic_slope {

/// Type (k1, k2) of a fixed point of an order-n automorphism, read off the
/// eigenvalues (zeta^k1, zeta^k2) of the Jacobian. Stored with
/// 0 <= k1 <= k2 <= n-1; the eigendirections are interchangeable, so
/// (k1, k2) and (k2, k1) name the same type. k1 = 0 means the point lies on
/// a 1-dimensional fixed locus, k1 > 0 means it is isolated.
struct FixedPointType {
  int k1 = 0;
  int k2 = 1;
  int n = 2;

  bool is_isolated() const { return k1 > 0; }
  bool is_diagonal() const { return k1 == k2; }

  friend bool operator==(const FixedPointType&, const FixedPointType&) = default;
  friend auto operator<=>(const FixedPointType&, const FixedPointType&) = default;
};

/// Validates gcd(k1, k2, n) = 1 and k2 > 0; reduces mod n and orders the
/// pair. Throws InvalidType.
FixedPointType make_type(int k1, int k2, int n);

struct BlowupOutcome {
  enum class Kind { FixedCurve, TwoPoints };
  Kind kind = Kind::FixedCurve;
  std::vector<FixedPointType> children;  // empty for FixedCurve, two otherwise
};

/// Checks that no coprime residue pair (a, b) mod n has both a+2b and 2a+b
/// divisible by n. Exhaustive over residues; returns a witness on failure.
std::optional<std::pair<int, int>> coprime_shift_counterexample(int n);
bool coprime_shift_check(int n);

/// Blowing up a fixed point of type (k1, k2) yields a fixed exceptional
/// curve when k1 = k2, and otherwise two fixed points of types
/// (k1, k2 - k1) and (k1 - k2, k2) mod n on it. The same rule covers a
/// point on a fixed curve: type (0, l) yields (0, l) and (n - l, l).
BlowupOutcome blowup_transition(const FixedPointType& t);

/// True iff some finite tower of blow-ups starting at t removes every
/// isolated fixed point. Distinct fixed points blow up independently, so
/// the search decides each type once, with cycle detection standing in for
/// towers that never terminate.
bool resolvable_search(const FixedPointType& t);

}  // namespace cyclic_slope
