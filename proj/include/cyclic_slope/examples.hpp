#pragma once

#include <functional>
#include <vector>

#include "cyclic_slope/cluster.hpp"
#include "cyclic_slope/core.hpp"

namespace cyclic_slope {

/// Covering of a product surface branched over a divisor of bidegree
/// (N, M): the family realizing the lower slope bound.
struct ProductExampleParams {
  long long n = 2;
  long long h = 1;
  long long N = 1;
  long long M = 1;
};

struct ProductExampleResult {
  long long g = 0;
  Rational Kf2;
  Rational chif;
  Rational slope;
  Rational lambda;  // always equal to slope
};

/// g = n(n-1)M/2 + n(h-1) + 1, K_f^2 = 2n(n-1)N((n-1)M + 2(h-1)) and
/// chi_f = n(n-1)N(3(h-1) + (2n-1)M)/6; the slope lands exactly on the
/// lower bound. Throws DegenerateExample when g < 2 or chi_f <= 0.
ProductExampleResult product_example(const ProductExampleParams& p);

struct EnumerationBudget {
  int max_nodes = 3;
  long long max_mult = 0;  // 0: defaults to r/2 + 2
  int max_depth = 8;
};

/// Exhaustively yields every valid fiber germ within the budget, one germ
/// per isomorphism class (siblings are unordered), in a deterministic
/// order. Every emitted germ passes validate_germ.
void enumerate_germs(long long n, long long r, const EnumerationBudget& budget,
                     const std::function<void(const FiberGerm&)>& sink);

std::vector<FiberGerm> enumerate_germs(long long n, long long r,
                                       const EnumerationBudget& budget);

}  // namespace cyclic_slope
