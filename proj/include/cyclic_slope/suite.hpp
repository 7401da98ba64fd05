#pragma once

#include <string>
#include <vector>

#include "cyclic_slope/examples.hpp"
#include "cyclic_slope/invariants.hpp"

namespace cyclic_slope {

struct SuiteCheck {
  std::string name;
  bool pass = true;
  long long checked = 0;
  std::string detail;  // first failure, empty otherwise
};

struct SuiteReport {
  long long n = 0;
  long long r = 0;
  long long g = 0;
  EnumerationBudget budget;
  long long germ_count = 0;
  long long model_count = 0;
  std::vector<SuiteCheck> checks;

  bool all_pass() const;
};

/// Runs every identity and inequality suite over the full enumeration for
/// (n, r): germ validation, multiplicity-sequence and t/c identities,
/// resolution-ledger identities, the family counting bounds, the
/// topological Euler cross-check, nonnegativity, the slope equality and
/// Noether on models built from the germs, the two-route invariant
/// computation, the two-route signature, and the upper bound certificate
/// when n >= 4. threads = 0 reads CYCLIC_SLOPE_THREADS, defaulting to the
/// hardware concurrency.
SuiteReport verify_suite(long long n, long long r, const EnumerationBudget& budget,
                         int threads = 0);

json suite_to_json(const SuiteReport& rep);

}  // namespace cyclic_slope
