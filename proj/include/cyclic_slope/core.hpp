#pragma once

#include "cyclic_slope/rational.hpp"

namespace cyclic_slope {

/// Data of a cyclic covering fibration: covering order n, fiber genus g,
/// quotient fiber genus h and the branch degree r on a general fiber.
/// r is always recomputed from (g, h, n), never taken as input.
struct FibrationParams {
  long long n = 2;
  long long g = 2;
  long long h = 0;
  long long r = 0;
};

/// r = 2(g - 1 - n(h-1)) / (n-1). Throws NonIntegralR when (n-1) does not
/// divide the numerator, NonPositiveR / NotMultipleOfN when the result is
/// not a positive multiple of n.
long long derive_r(long long g, long long h, long long n);

FibrationParams make_params(long long g, long long h, long long n);

/// Lower slope bound 24(n-1)(g-1) / (2(2n-1)(g-1) - n(n+1)(h-1)).
Rational lambda_lower(long long g, long long h, long long n);

/// For h >= 1 the lower bound theorem assumes g >= (2n-1)(2hn+n-1)/(n+1).
/// Reported as a flag, not an error, so certificates can explain failures.
bool genus_hypothesis_holds(long long g, long long h, long long n);

/// Constants of the upper bound estimate (h = 0, n >= 4).
struct SlopeConstants {
  Rational lambda;    // the lower bound lambda_{g,0,n}
  Rational mu;        // upper bound defect: lambda_upper = 12 - mu
  Rational mu_prime;  // (n-1) mu / (12(r-1))
  Rational A;
  Rational B;
  int delta = 0;  // 0 iff r in 2nZ
  long long r = 0;
  bool case_small_r = false;  // n <= r < n(n-1)
};

/// Upper slope bound for (g, 0, n), n >= 4. Throws UnsupportedOrder for
/// n in {2, 3}.
Rational lambda_upper(long long g, long long n);

SlopeConstants slope_constants(long long g, long long n);

}  // namespace cyclic_slope
