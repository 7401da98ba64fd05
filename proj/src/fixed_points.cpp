#include "cyclic_slope/fixed_points.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <string>

#include "cyclic_slope/error.hpp"

namespace cyclic_slope {

namespace {

int mod(int a, int n) {
  const int m = a % n;
  return m < 0 ? m + n : m;
}

}  // namespace

FixedPointType make_type(int k1, int k2, int n) {
  if (n < 2) throw Error(Errc::InvalidType, "order n must be >= 2");
  k1 = mod(k1, n);
  k2 = mod(k2, n);
  if (k1 > k2) std::swap(k1, k2);
  if (k2 == 0) throw Error(Errc::InvalidType, "type (0,0) would mean the identity");
  if (std::gcd(std::gcd(k1, k2), n) != 1)
    throw Error(Errc::InvalidType, "gcd(k1,k2,n) != 1 for (" + std::to_string(k1) + "," +
                                       std::to_string(k2) + ") mod " + std::to_string(n));
  return FixedPointType{k1, k2, n};
}

std::optional<std::pair<int, int>> coprime_shift_counterexample(int n) {
  if (n < 1) throw Error(Errc::PreconditionViolated, "n must be >= 1");
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      if (std::gcd(std::gcd(a, b), n) != 1) continue;
      if ((a + 2 * b) % n == 0 && (2 * a + b) % n == 0) return std::make_pair(a, b);
    }
  }
  if (n == 1) return std::make_pair(0, 0);  // everything is divisible by 1
  return std::nullopt;
}

bool coprime_shift_check(int n) { return !coprime_shift_counterexample(n).has_value(); }

BlowupOutcome blowup_transition(const FixedPointType& t) {
  const FixedPointType v = make_type(t.k1, t.k2, t.n);
  BlowupOutcome out;
  if (v.k1 == v.k2) {
    out.kind = BlowupOutcome::Kind::FixedCurve;
    return out;
  }
  out.kind = BlowupOutcome::Kind::TwoPoints;
  out.children.push_back(make_type(v.k1, mod(v.k2 - v.k1, v.n), v.n));
  out.children.push_back(make_type(mod(v.k1 - v.k2, v.n), v.k2, v.n));
  std::sort(out.children.begin(), out.children.end());
  return out;
}

namespace {

enum class Mark { InProgress, True, False };

bool resolvable_rec(const FixedPointType& t, std::map<std::pair<int, int>, Mark>& memo) {
  if (!t.is_isolated()) return true;  // lies on a fixed curve, nothing to remove
  if (t.is_diagonal()) return true;   // one blow-up yields a fixed curve
  const auto key = std::make_pair(t.k1, t.k2);
  if (auto it = memo.find(key); it != memo.end()) {
    if (it->second == Mark::InProgress) return false;  // the tower loops forever
    return it->second == Mark::True;
  }
  memo[key] = Mark::InProgress;
  bool ok = true;
  for (const auto& c : blowup_transition(t).children) ok = ok && resolvable_rec(c, memo);
  memo[key] = ok ? Mark::True : Mark::False;
  return ok;
}

}  // namespace

bool resolvable_search(const FixedPointType& t) {
  std::map<std::pair<int, int>, Mark> memo;
  return resolvable_rec(make_type(t.k1, t.k2, t.n), memo);
}

}  // namespace cyclic_slope
