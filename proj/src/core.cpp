#include "cyclic_slope/core.hpp"

#include <string>

#include "cyclic_slope/error.hpp"

namespace cyclic_slope {

long long derive_r(long long g, long long h, long long n) {
  if (n < 2) throw Error(Errc::UnsupportedOrder, "covering order n must be >= 2");
  if (g < 2) throw Error(Errc::PreconditionViolated, "fiber genus g must be >= 2");
  if (h < 0) throw Error(Errc::PreconditionViolated, "quotient genus h must be >= 0");
  const long long num = 2 * (g - 1 - n * (h - 1));
  if (num % (n - 1) != 0)
    throw Error(Errc::NonIntegralR, "2(g-1-n(h-1)) = " + std::to_string(num) +
                                        " is not divisible by n-1 = " + std::to_string(n - 1));
  const long long r = num / (n - 1);
  if (r <= 0) throw Error(Errc::NonPositiveR, "branch degree r = " + std::to_string(r));
  if (r % n != 0)
    throw Error(Errc::NotMultipleOfN,
                "r = " + std::to_string(r) + " is not a multiple of n = " + std::to_string(n));
  return r;
}

FibrationParams make_params(long long g, long long h, long long n) {
  return FibrationParams{n, g, h, derive_r(g, h, n)};
}

Rational lambda_lower(long long g, long long h, long long n) {
  if (n < 2) throw Error(Errc::UnsupportedOrder, "covering order n must be >= 2");
  if (g < 2) throw Error(Errc::PreconditionViolated, "fiber genus g must be >= 2");
  const Rational num = Rational(24) * (n - 1) * (g - 1);
  const Rational den = Rational(2) * (2 * n - 1) * (g - 1) - Rational(n) * (n + 1) * (h - 1);
  if (den <= 0) throw Error(Errc::PreconditionViolated, "degenerate lambda denominator");
  return num / den;
}

bool genus_hypothesis_holds(long long g, long long h, long long n) {
  // g >= (2n-1)(2hn+n-1)/(n+1), compared exactly.
  return Rational(g) >= Rational((2 * n - 1) * (2 * h * n + n - 1), n + 1);
}

namespace {

SlopeConstants slope_constants_impl(long long g, long long n) {
  if (n < 4)
    throw Error(Errc::UnsupportedOrder,
                "upper bound constants require n >= 4, got n = " + std::to_string(n));
  const long long r = derive_r(g, 0, n);
  // r = n forces a smooth branch and the slope equals the lower bound
  // exactly; the defect formula degenerates there.
  if (r < 2 * n)
    throw Error(Errc::PreconditionViolated,
                "the upper bound formula requires r >= 2n; r = n has a smooth branch");
  SlopeConstants out;
  out.r = r;
  out.delta = (r % (2 * n) == 0) ? 0 : 1;
  out.case_small_r = r < n * (n - 1);
  out.lambda = lambda_lower(g, 0, n);
  if (out.case_small_r) {
    out.mu = Rational(48 * n * n * (r - 1)) /
             (Rational(n - 1) * (n + 1) * (Rational(r) * r - Rational(out.delta) * n * n));
  } else {
    const Rational den = Rational(n) * (n + 1) * r * r - Rational(8) * (2 * n - 1) * r +
                         Rational(24) * n - Rational(out.delta) * n * n * n * (n + 1);
    out.mu = Rational(48 * n * (n - 1) * (r - 1)) / den;
  }
  out.mu_prime = Rational(n - 1) * out.mu / Rational(12 * (r - 1));
  out.A = Rational(n - 1) - Rational(r * (2 * n - 1) - 3 * n, n) * out.mu_prime;
  out.B = Rational(n) -
          Rational(n + 1) * (Rational(r) * r - Rational(out.delta) * n * n) / Rational(4 * n) *
              out.mu_prime;
  return out;
}

}  // namespace

Rational lambda_upper(long long g, long long n) {
  return Rational(12) - slope_constants_impl(g, n).mu;
}

SlopeConstants slope_constants(long long g, long long n) { return slope_constants_impl(g, n); }

}  // namespace cyclic_slope
