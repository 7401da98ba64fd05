#pragma once

#include <string>
#include <vector>

#include "cyclic_slope/core.hpp"
#include "cyclic_slope/invariants.hpp"

namespace cyclic_slope {

/// Intersection numbers of {K_phi, d, Gamma} on the relatively minimal
/// quotient model W, together with chi_phi. Realizability is checked as
/// certificate hypotheses, never assumed.
struct SurfaceClassData {
  long long n = 2;
  long long h = 0;
  long long g = 2;
  Rational Kphi2;
  Rational KphiD;
  Rational D2;
  Rational chiPhi;
  Rational DGamma;      // must equal r/n
  Rational KphiGamma;   // must equal 2(h-1)
};

/// omega_{f'}^2 = n(K^2 + 2(n-1) K d + (n-1)^2 d^2) and
/// chi_{f'} = n chi + n(n-1)/4 K d + n(n-1)(2n-1)/12 d^2.
std::pair<Rational, Rational> wlevel_invariants(const SurfaceClassData& d);

struct BlowupList {
  std::vector<long long> mults;  // 0 allowed: centers off the branch
};

/// Corrections lost by the mod-n resolution:
/// omega^2 - K^2 drop n sum ((n-1)[m/n] - 1)^2 and
/// chi drop n(n-1)/12 sum [m/n]((2n-1)[m/n] - 3).
std::pair<Rational, Rational> blowup_corrections(const BlowupList& bl, long long n);

struct LowerCertificate {
  long long n = 0, h = 0, g = 0, r = 0;
  Rational lambda;
  bool genus_hypothesis = false;
  bool slope_inequality_phi = false;
  Rational hodge_determinant;
  bool hodge_nonnegative = false;
  bool data_consistent = false;
  Rational omega2, chi_prime, d_omega2, d_chi;
  Rational Kf2, chif;
  bool verdict = false;   // K_f^2 >= lambda chi_f
  bool equality = false;
  // Equality diagnostics.
  bool branch_nonsingular = false;  // all corrections vanish
  bool slope_equality_phi = false;
  bool hodge_singular = false;
};

/// Executable certificate for the lower slope bound: hypothesis booleans,
/// the exact invariant chain K_f^2 = omega^2 - corrections + eps, and the
/// verdict with equality diagnostics. Hypothesis failures are reported,
/// not thrown.
LowerCertificate lower_bound_certificate(const SurfaceClassData& d, const BlowupList& bl,
                                         long long eps);

struct FiberEstimate {
  std::string label;
  Rational lhs;    // A alpha0 + B sum alpha_k - (2A+1) eps on the fiber
  Rational chain;  // the family estimate it must dominate
  bool ok = false;
};

struct UpperCertificate {
  bool applicable = false;  // chi_f > 0
  long long n = 0, g = 0, r = 0;
  SlopeConstants constants;
  Rational lambda_upper;
  Rational Kf2, chif, slope;
  Rational residual;  // (12 - mu) chi_f - K_f^2
  bool decomposition_ok = false;
  Rational coeff_j1;     // -2A + nB - 1, zero for r >= n(n-1)
  Rational coeff_jeta;   // (n-2)A - 2B
  Rational coeff_kappa;  // 2(n-2)A - B
  bool signs_ok = false;
  std::vector<FiberEstimate> fibers;
  bool per_fiber_ok = false;
  bool verdict = false;  // slope <= lambda_upper
};

/// Certificate for the upper slope bound (h = 0, n >= 4): the exact
/// decomposition of (12 - mu) chi - K^2 in the singularity indices, the
/// per-fiber estimate chain with every coefficient evaluated exactly, and
/// the slope verdict. Throws UnsupportedOrder for n < 4.
UpperCertificate upper_bound_certificate(const GlobalModel& model);

/// Intersection data of the product examples and of the h = 0 ruled case,
/// as used by the certificates and tests.
SurfaceClassData product_surface_data(long long n, long long h, long long N, long long M);
SurfaceClassData ruled_surface_data(long long n, long long g, const Rational& M);

json lower_certificate_to_json(const LowerCertificate& c);
json upper_certificate_to_json(const UpperCertificate& c);

}  // namespace cyclic_slope
