#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "cyclic_slope/core.hpp"
#include "cyclic_slope/resolution.hpp"

namespace cyclic_slope {

/// Per-fiber singularity indices, the inputs of every closed formula.
struct GermIndices {
  std::map<long long, long long> alpha;  // k >= 1
  long long alpha0 = 0;
  long long eps = 0;

  long long sum_alpha() const;
};

GermIndices indices_of(const ResolvedGerm& rg);

/// Abstract model of a primitive cyclic covering fibration over a rational
/// base fiber genus h = 0: the class of the branch divisor is determined by
/// the half-integer M, singular fibers by their germs, and all remaining
/// branch ramification by generic_alpha0 simple transverse tangencies at
/// unlisted fibers.
struct GlobalModel {
  long long n = 2;
  long long g = 2;
  Rational M;
  long long generic_alpha0 = 0;
  std::vector<std::pair<std::string, FiberGerm>> germs;
};

/// M = (alpha0 + n sum k(nk-1) alpha_k - 2 eps) / (2(r-1)). Throws
/// NonHalfIntegralM when the result is not a half-integer.
Rational m_from_indices(long long n, long long r, long long alpha0,
                        const std::map<long long, long long>& alpha, long long eps);

/// Model-level validation: parameters, every germ, generic_alpha0 >= 0,
/// M a nonnegative half-integer and the exact alpha0 consistency identity
/// tying M to the global indices.
std::vector<Violation> validate_model(const GlobalModel& model);

struct ModelAnalysis {
  long long r = 0;
  std::vector<ResolvedGerm> resolved;  // aligned with model.germs
  GermIndices total;                   // germ sums, generic_alpha0 included in alpha0
};

ModelAnalysis analyze_model(const GlobalModel& model);

struct RelativeInvariants {
  Rational Kf2;
  Rational chif;
  Rational ef;
};

/// Exact K_f^2, chi_f, e_f of the model; Noether 12 chi = K^2 + e is
/// asserted and an IdentityViolation is thrown if it ever failed.
RelativeInvariants relative_invariants(const GlobalModel& model);

/// Nonnegative Horikawa index of one fiber germ.
Rational horikawa_index(long long n, long long r, const GermIndices& ind);

/// Local signature of one fiber germ.
Rational local_signature(long long n, long long r, const GermIndices& ind);

/// K_f^2 - lambda_{g,0,n} chi_f - sum Ind(F_p); exactly zero on every
/// valid model.
Rational slope_equality_residual(const GlobalModel& model);

/// Total signature computed two independent ways: summing local signatures
/// over fibers (generic fibers enter through generic_alpha0) and K^2 - 8chi.
std::pair<Rational, Rational> signature_total(const GlobalModel& model);

struct InvariantReport {
  long long n = 2, g = 2, r = 0;
  Rational Kf2, chif, ef, lambda;
  bool slope_defined = false;
  Rational slope;
  std::map<std::string, Rational> ind_per_fiber;
  std::map<std::string, Rational> sigma_per_fiber;
  Rational ind_total;
  Rational sign_total;
  Rational slope_residual;  // the slope equality defect, contractually zero
};

InvariantReport invariant_report(const GlobalModel& model);

/// Builds a model around the given germs: generic_alpha0 is derived from
/// the alpha0 identity for the chosen M. Throws InconsistentModel when that
/// would be negative.
GlobalModel build_model(long long n, long long g,
                        std::vector<std::pair<std::string, FiberGerm>> germs, const Rational& M);

/// Smallest half-integer M for which build_model succeeds.
Rational minimal_m(long long n, long long g,
                   const std::vector<std::pair<std::string, FiberGerm>>& germs);

json model_to_json(const GlobalModel& model);
GlobalModel model_from_json(const json& j);
json report_to_json(const InvariantReport& rep);

}  // namespace cyclic_slope
