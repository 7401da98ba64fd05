#include "cyclic_slope/bounds.hpp"

#include "cyclic_slope/error.hpp"

namespace cyclic_slope {

std::pair<Rational, Rational> wlevel_invariants(const SurfaceClassData& d) {
  const long long n = d.n;
  const Rational omega2 =
      Rational(n) * (d.Kphi2 + Rational(2 * (n - 1)) * d.KphiD + Rational((n - 1) * (n - 1)) * d.D2);
  const Rational chi = Rational(n) * d.chiPhi + Rational(n * (n - 1), 4) * d.KphiD +
                       Rational(n * (n - 1) * (2 * n - 1), 12) * d.D2;
  return {omega2, chi};
}

std::pair<Rational, Rational> blowup_corrections(const BlowupList& bl, long long n) {
  if (n < 2) throw Error(Errc::UnsupportedOrder, "n must be >= 2");
  Rational d_omega2, d_chi;
  for (long long m : bl.mults) {
    if (m < 0 || (m % n != 0 && m % n != 1))
      throw Error(Errc::ModNViolation,
                  "blow-up multiplicity " + std::to_string(m) + " not in nZ or nZ+1");
    const long long d = m / n;
    d_omega2 += Rational(n) * ((n - 1) * d - 1) * ((n - 1) * d - 1);
    d_chi += Rational(n * (n - 1), 12) * d * ((2 * n - 1) * d - 3);
  }
  return {d_omega2, d_chi};
}

LowerCertificate lower_bound_certificate(const SurfaceClassData& d, const BlowupList& bl,
                                         long long eps) {
  LowerCertificate c;
  c.n = d.n;
  c.h = d.h;
  c.g = d.g;
  c.r = derive_r(d.g, d.h, d.n);
  c.lambda = lambda_lower(d.g, d.h, d.n);
  c.genus_hypothesis = d.h == 0 || genus_hypothesis_holds(d.g, d.h, d.n);

  c.data_consistent =
      d.DGamma == Rational(c.r, d.n) && d.KphiGamma == Rational(2 * (d.h - 1));
  if (d.h >= 1) {
    // K_phi^2 >= 4(h-1)/h chi_phi; for h = 1 this reads K_phi^2 >= 0.
    c.slope_inequality_phi = Rational(d.h) * d.Kphi2 >= Rational(4 * (d.h - 1)) * d.chiPhi;
    c.slope_equality_phi = Rational(d.h) * d.Kphi2 == Rational(4 * (d.h - 1)) * d.chiPhi;
  } else {
    // h = 0: W is a P^1-bundle, both relative invariants vanish.
    c.slope_inequality_phi = d.Kphi2.is_zero() && d.chiPhi.is_zero();
    c.slope_equality_phi = c.slope_inequality_phi;
  }
  c.hodge_determinant = Rational(2) * d.KphiD * d.DGamma * d.KphiGamma -
                        d.D2 * d.KphiGamma * d.KphiGamma - d.DGamma * d.DGamma * d.Kphi2;
  c.hodge_nonnegative = c.hodge_determinant >= 0;
  c.hodge_singular = c.hodge_determinant.is_zero();

  const auto [omega2, chi_prime] = wlevel_invariants(d);
  const auto [d_omega2, d_chi] = blowup_corrections(bl, d.n);
  c.omega2 = omega2;
  c.chi_prime = chi_prime;
  c.d_omega2 = d_omega2;
  c.d_chi = d_chi;
  c.Kf2 = omega2 - d_omega2 + eps;
  c.chif = chi_prime - d_chi;
  c.verdict = c.Kf2 >= c.lambda * c.chif;
  c.equality = c.Kf2 == c.lambda * c.chif;
  c.branch_nonsingular = d_omega2.is_zero() && d_chi.is_zero();
  return c;
}

UpperCertificate upper_bound_certificate(const GlobalModel& model) {
  if (model.n < 4)
    throw Error(Errc::UnsupportedOrder, "the upper bound requires n >= 4");
  UpperCertificate c;
  c.n = model.n;
  c.g = model.g;
  c.constants = slope_constants(model.g, model.n);
  c.r = c.constants.r;
  c.lambda_upper = Rational(12) - c.constants.mu;

  const auto violations = validate_model(model);
  if (!violations.empty())
    throw Error(Errc::InconsistentModel,
                violations.front().rule + ": " + violations.front().detail);
  const auto an = analyze_model(model);
  const auto inv = relative_invariants(model);
  c.Kf2 = inv.Kf2;
  c.chif = inv.chif;
  c.applicable = inv.chif > 0;

  const long long n = model.n;
  const long long r = c.r;
  const Rational& A = c.constants.A;
  const Rational& B = c.constants.B;
  const Rational& mu_prime = c.constants.mu_prime;
  const Rational two_a_plus_one = Rational(2) * A + 1;

  // Q(k) = mu' n(n+1) ((k - r/2n)^2 - delta/4), nonnegative for every
  // integer k because r/n is an integer.
  auto q_of = [&](long long k) {
    const Rational shift = Rational(k) - Rational(r, 2 * n);
    return mu_prime * Rational(n) * (n + 1) *
           (shift * shift - Rational(c.constants.delta, 4));
  };

  // Exact decomposition of (12 - mu) chi_f - K_f^2.
  c.residual = (Rational(12) - c.constants.mu) * inv.chif - inv.Kf2;
  Rational decomposed = A * an.total.alpha0 - two_a_plus_one * an.total.eps;
  for (const auto& [k, cnt] : an.total.alpha) decomposed += (q_of(k) + B) * cnt;
  c.decomposition_ok = c.residual == decomposed;

  c.coeff_j1 = Rational(-2) * A + Rational(n) * B - 1;
  c.coeff_jeta = Rational(n - 2) * A - 2 * B;
  c.coeff_kappa = Rational(2 * (n - 2)) * A - B;
  bool signs = A > 0 && B >= 0 && c.coeff_jeta > 0 && c.coeff_kappa >= 0;
  if (!c.constants.case_small_r) signs = signs && c.coeff_j1.is_zero();
  bool q_ok = true;
  for (const auto& [k, cnt] : an.total.alpha) q_ok = q_ok && q_of(k) >= 0;
  c.signs_ok = signs && q_ok;

  c.per_fiber_ok = true;
  for (std::size_t i = 0; i < model.germs.size(); ++i) {
    const ResolvedGerm& rg = an.resolved[i];
    FiberEstimate fe;
    fe.label = model.germs[i].first;
    fe.lhs = A * rg.alpha0 + B * rg.sum_alpha() - two_a_plus_one * rg.eps;
    Rational chain;
    for (const auto& [a, cnt] : rg.j) {
      if (a == 1)
        chain += c.coeff_j1 * cnt;
      else
        chain += (Rational(-2) * A + Rational(a * n) * B) * cnt;
    }
    chain += c.coeff_jeta * (rg.sum_j() - rg.eta);
    chain += c.coeff_kappa * rg.kappa;
    fe.chain = chain;
    fe.ok = fe.lhs >= chain && chain >= 0;
    c.per_fiber_ok = c.per_fiber_ok && fe.ok;
    c.fibers.push_back(fe);
  }
  if (model.generic_alpha0 > 0) {
    FiberEstimate fe;
    fe.label = "generic";
    fe.lhs = A * model.generic_alpha0;
    fe.chain = Rational(0);
    fe.ok = fe.lhs >= 0;
    c.per_fiber_ok = c.per_fiber_ok && fe.ok;
    c.fibers.push_back(fe);
  }

  if (c.applicable) {
    c.slope = inv.Kf2 / inv.chif;
    c.verdict = c.slope <= c.lambda_upper;
  }
  return c;
}

SurfaceClassData product_surface_data(long long n, long long h, long long N, long long M) {
  SurfaceClassData d;
  d.n = n;
  d.h = h;
  d.g = n * (n - 1) * M / 2 + n * (h - 1) + 1;
  d.Kphi2 = Rational(0);
  d.KphiD = Rational(2 * (h - 1) * N);
  d.D2 = Rational(2 * N * M);
  d.chiPhi = Rational(0);
  d.DGamma = Rational(M);
  d.KphiGamma = Rational(2 * (h - 1));
  return d;
}

SurfaceClassData ruled_surface_data(long long n, long long g, const Rational& M) {
  SurfaceClassData d;
  d.n = n;
  d.h = 0;
  d.g = g;
  const long long r = derive_r(g, 0, n);
  d.Kphi2 = Rational(0);
  d.KphiD = Rational(-2, n) * M;
  d.D2 = Rational(2 * r, n * n) * M;
  d.chiPhi = Rational(0);
  d.DGamma = Rational(r, n);
  d.KphiGamma = Rational(-2);
  return d;
}

json lower_certificate_to_json(const LowerCertificate& c) {
  json j;
  j["n"] = c.n;
  j["h"] = c.h;
  j["g"] = c.g;
  j["r"] = c.r;
  j["lambda"] = c.lambda.str();
  j["hypotheses"]["genus"] = c.genus_hypothesis;
  j["hypotheses"]["slope_inequality_phi"] = c.slope_inequality_phi;
  j["hypotheses"]["hodge_determinant"] = c.hodge_determinant.str();
  j["hypotheses"]["hodge_nonnegative"] = c.hodge_nonnegative;
  j["hypotheses"]["data_consistent"] = c.data_consistent;
  j["omega_fprime2"] = c.omega2.str();
  j["chi_fprime"] = c.chi_prime.str();
  j["corrections"]["omega2"] = c.d_omega2.str();
  j["corrections"]["chi"] = c.d_chi.str();
  j["K_f2"] = c.Kf2.str();
  j["chi_f"] = c.chif.str();
  j["verdict"] = c.verdict;
  j["equality"] = c.equality;
  j["equality_diagnostics"]["branch_nonsingular"] = c.branch_nonsingular;
  j["equality_diagnostics"]["slope_equality_phi"] = c.slope_equality_phi;
  j["equality_diagnostics"]["hodge_singular"] = c.hodge_singular;
  return j;
}

json upper_certificate_to_json(const UpperCertificate& c) {
  json j;
  j["applicable"] = c.applicable;
  j["n"] = c.n;
  j["g"] = c.g;
  j["r"] = c.r;
  j["delta"] = c.constants.delta;
  j["case"] = c.constants.case_small_r ? "n <= r < n(n-1)" : "r >= n(n-1)";
  j["mu"] = c.constants.mu.str();
  j["mu_prime"] = c.constants.mu_prime.str();
  j["A"] = c.constants.A.str();
  j["B"] = c.constants.B.str();
  j["lambda_upper"] = c.lambda_upper.str();
  j["K_f2"] = c.Kf2.str();
  j["chi_f"] = c.chif.str();
  j["slope"] = c.applicable ? json(c.slope.str()) : json(nullptr);
  j["residual"] = c.residual.str();
  j["decomposition_ok"] = c.decomposition_ok;
  j["coefficients"]["j1"] = c.coeff_j1.str();
  j["coefficients"]["j_minus_eta"] = c.coeff_jeta.str();
  j["coefficients"]["kappa"] = c.coeff_kappa.str();
  j["signs_ok"] = c.signs_ok;
  j["fibers"] = json::array();
  for (const auto& f : c.fibers) {
    json jf;
    jf["label"] = f.label;
    jf["estimate"] = f.lhs.str();
    jf["chain"] = f.chain.str();
    jf["ok"] = f.ok;
    j["fibers"].push_back(jf);
  }
  j["per_fiber_ok"] = c.per_fiber_ok;
  j["verdict"] = c.applicable ? json(c.verdict) : json("not_applicable");
  return j;
}

}  // namespace cyclic_slope
