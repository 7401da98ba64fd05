#include "cyclic_slope/invariants.hpp"

#include <algorithm>

#include "cyclic_slope/error.hpp"

namespace cyclic_slope {

long long GermIndices::sum_alpha() const {
  long long s = 0;
  for (const auto& [k, c] : alpha) s += c;
  return s;
}

GermIndices indices_of(const ResolvedGerm& rg) {
  GermIndices ind;
  ind.alpha = rg.alpha;
  ind.alpha0 = rg.alpha0;
  ind.eps = rg.eps;
  return ind;
}

Rational m_from_indices(long long n, long long r, long long alpha0,
                        const std::map<long long, long long>& alpha, long long eps) {
  if (r < 2) throw Error(Errc::PreconditionViolated, "r must be >= 2");
  Rational num = alpha0 - 2 * eps;
  for (const auto& [k, c] : alpha) num += Rational(n) * k * (n * k - 1) * c;
  const Rational m = num / Rational(2 * (r - 1));
  if (m.denominator() != 1 && m.denominator() != 2)
    throw Error(Errc::NonHalfIntegralM, "M = " + m.str() + " is not a half-integer");
  return m;
}

namespace {

Rational alpha0_for_m(long long n, long long r, const Rational& m,
                      const std::map<long long, long long>& alpha, long long eps) {
  Rational a0 = Rational(2 * (r - 1)) * m + 2 * eps;
  for (const auto& [k, c] : alpha) a0 -= Rational(n) * k * (n * k - 1) * c;
  return a0;
}

}  // namespace

ModelAnalysis analyze_model(const GlobalModel& model) {
  ModelAnalysis out;
  out.r = derive_r(model.g, 0, model.n);
  for (const auto& [label, germ] : model.germs) {
    out.resolved.push_back(resolve_germ(germ));
    const ResolvedGerm& rg = out.resolved.back();
    for (const auto& [k, c] : rg.alpha) out.total.alpha[k] += c;
    out.total.alpha0 += rg.alpha0;
    out.total.eps += rg.eps;
  }
  out.total.alpha0 += model.generic_alpha0;
  return out;
}

std::vector<Violation> validate_model(const GlobalModel& model) {
  std::vector<Violation> out;
  long long r = 0;
  try {
    r = derive_r(model.g, 0, model.n);
  } catch (const Error& e) {
    out.push_back({"params", 0, e.what()});
    return out;
  }
  if (model.generic_alpha0 < 0)
    out.push_back({"model", 0, "generic_alpha0 must be nonnegative"});
  if (model.M < 0)
    out.push_back({"model", 0, "M must be nonnegative"});
  if (model.M.denominator() != 1 && model.M.denominator() != 2)
    out.push_back({"model", 0, "M = " + model.M.str() + " is not a half-integer"});

  GermIndices total;
  bool germs_ok = true;
  for (const auto& [label, germ] : model.germs) {
    if (germ.n != model.n || germ.r != r) {
      out.push_back({"model", 0, "germ '" + label + "' has mismatched n or r"});
      germs_ok = false;
      continue;
    }
    const auto v = validate_germ(germ);
    if (!v.empty()) {
      germs_ok = false;
      for (const auto& x : v)
        out.push_back({x.rule, x.node_id, "germ '" + label + "': " + x.detail});
      continue;
    }
    const ResolvedGerm rg = resolve_germ(germ);
    for (const auto& [k, c] : rg.alpha) total.alpha[k] += c;
    total.alpha0 += rg.alpha0;
    total.eps += rg.eps;
  }
  if (!germs_ok || !out.empty()) return out;

  total.alpha0 += model.generic_alpha0;
  const Rational expected = alpha0_for_m(model.n, r, model.M, total.alpha, total.eps);
  if (Rational(total.alpha0) != expected)
    out.push_back({"model", 0,
                   "global alpha0 = " + std::to_string(total.alpha0) +
                       " inconsistent with M = " + model.M.str() + " (expected " +
                       expected.str() + ")"});
  return out;
}

namespace {

ModelAnalysis checked_analysis(const GlobalModel& model) {
  const auto violations = validate_model(model);
  if (!violations.empty())
    throw Error(Errc::InconsistentModel, violations.front().rule + ": " + violations.front().detail);
  return analyze_model(model);
}

RelativeInvariants invariants_from(long long n, long long r, const GermIndices& ind) {
  Rational weighted;  // (n+1) sum k (r - nk) alpha_k
  for (const auto& [k, c] : ind.alpha) weighted += Rational(n + 1) * k * (r - n * k) * c;
  const Rational a0e = Rational(ind.alpha0) - 2 * ind.eps;

  RelativeInvariants out;
  out.Kf2 = Rational(n - 1, r - 1) * (Rational((n - 1) * r - 2 * n, n) * a0e + weighted) -
            Rational(n) * ind.sum_alpha() + ind.eps;
  out.chif = Rational(n - 1) / Rational(12 * (r - 1)) *
             (Rational((2 * n - 1) * r - 3 * n, n) * a0e + weighted);
  out.ef = Rational((n - 1) * ind.alpha0 + n * ind.sum_alpha() - (2 * n - 1) * ind.eps);
  if (Rational(12) * out.chif != out.Kf2 + out.ef)
    throw Error(Errc::IdentityViolation, "Noether 12 chi = K^2 + e failed");
  return out;
}

}  // namespace

RelativeInvariants relative_invariants(const GlobalModel& model) {
  const auto an = checked_analysis(model);
  return invariants_from(model.n, an.r, an.total);
}

Rational horikawa_index(long long n, long long r, const GermIndices& ind) {
  if (r < 2 * n && (!ind.alpha.empty() || ind.eps != 0))
    throw Error(Errc::PreconditionViolated,
                "singular germs require r >= 2n (r = n forces a smooth branch)");
  Rational total = Rational(ind.eps);
  const Rational den = Rational((2 * n - 1) * r - 3 * n);
  for (const auto& [k, c] : ind.alpha) {
    const Rational coeff = Rational((n + 1) * (n - 1) * (r - n * k) * k) / den - 1;
    total += Rational(n) * coeff * c;
  }
  return total;
}

Rational local_signature(long long n, long long r, const GermIndices& ind) {
  Rational total = Rational(-(n - 1) * (n + 1) * r, 3 * n * (r - 1)) * ind.alpha0;
  for (const auto& [k, c] : ind.alpha)
    total += (Rational((n - 1) * (n + 1) * (r * k - n * k * k), 3 * (r - 1)) - n) * c;
  total += Rational((n + 2) * (2 * n - 1) * r - 3 * n, 3 * n * (r - 1)) * ind.eps;
  return total;
}

Rational slope_equality_residual(const GlobalModel& model) {
  const auto an = checked_analysis(model);
  const auto inv = invariants_from(model.n, an.r, an.total);
  const Rational lambda = lambda_lower(model.g, 0, model.n);
  Rational ind_sum;
  for (const auto& rg : an.resolved) ind_sum += horikawa_index(model.n, an.r, indices_of(rg));
  return inv.Kf2 - lambda * inv.chif - ind_sum;
}

std::pair<Rational, Rational> signature_total(const GlobalModel& model) {
  const auto an = checked_analysis(model);
  const auto inv = invariants_from(model.n, an.r, an.total);
  Rational via_index;
  for (const auto& rg : an.resolved) via_index += local_signature(model.n, an.r, indices_of(rg));
  GermIndices generic;
  generic.alpha0 = model.generic_alpha0;
  via_index += local_signature(model.n, an.r, generic);
  return {via_index, inv.Kf2 - 8 * inv.chif};
}

InvariantReport invariant_report(const GlobalModel& model) {
  const auto an = checked_analysis(model);
  InvariantReport rep;
  rep.n = model.n;
  rep.g = model.g;
  rep.r = an.r;
  const auto inv = invariants_from(model.n, an.r, an.total);
  rep.Kf2 = inv.Kf2;
  rep.chif = inv.chif;
  rep.ef = inv.ef;
  rep.lambda = lambda_lower(model.g, 0, model.n);
  rep.slope_defined = inv.chif > 0;
  if (rep.slope_defined) rep.slope = inv.Kf2 / inv.chif;
  for (std::size_t i = 0; i < model.germs.size(); ++i) {
    const auto ind = indices_of(an.resolved[i]);
    rep.ind_per_fiber[model.germs[i].first] = horikawa_index(model.n, an.r, ind);
    rep.sigma_per_fiber[model.germs[i].first] = local_signature(model.n, an.r, ind);
    rep.ind_total += rep.ind_per_fiber[model.germs[i].first];
  }
  const auto sign = signature_total(model);
  if (sign.first != sign.second)
    throw Error(Errc::IdentityViolation, "signature computed two ways disagrees");
  rep.sign_total = sign.first;
  rep.slope_residual = rep.Kf2 - rep.lambda * rep.chif - rep.ind_total;
  return rep;
}

GlobalModel build_model(long long n, long long g,
                        std::vector<std::pair<std::string, FiberGerm>> germs, const Rational& M) {
  GlobalModel model;
  model.n = n;
  model.g = g;
  model.M = M;
  model.germs = std::move(germs);
  const long long r = derive_r(g, 0, n);

  GermIndices total;
  for (const auto& [label, germ] : model.germs) {
    const ResolvedGerm rg = resolve_germ(germ);
    for (const auto& [k, c] : rg.alpha) total.alpha[k] += c;
    total.alpha0 += rg.alpha0;
    total.eps += rg.eps;
  }
  const Rational generic = alpha0_for_m(n, r, M, total.alpha, total.eps) - total.alpha0;
  if (!generic.is_integer() || generic < 0)
    throw Error(Errc::InconsistentModel,
                "M = " + M.str() + " requires generic_alpha0 = " + generic.str());
  model.generic_alpha0 = static_cast<long long>(generic.numerator().convert_to<long long>());
  return model;
}

Rational minimal_m(long long n, long long g,
                   const std::vector<std::pair<std::string, FiberGerm>>& germs) {
  const long long r = derive_r(g, 0, n);
  GermIndices total;
  for (const auto& [label, germ] : germs) {
    const ResolvedGerm rg = resolve_germ(germ);
    for (const auto& [k, c] : rg.alpha) total.alpha[k] += c;
    total.alpha0 += rg.alpha0;
    total.eps += rg.eps;
  }
  // Smallest half-integer M with alpha0_for_m(M) >= germ alpha0 total.
  Rational bound = Rational(total.alpha0) - 2 * total.eps;
  for (const auto& [k, c] : total.alpha) bound += Rational(n) * k * (n * k - 1) * c;
  bound /= Rational(2 * (r - 1));
  // ceil(2 * bound) / 2, never negative
  Int twice = bound.numerator() * 2;
  Int den = bound.denominator();
  Int q = twice / den;
  if (q * den < twice) q += 1;
  if (q < 0) q = 0;
  return Rational(q, 2);
}

json model_to_json(const GlobalModel& model) {
  json j;
  j["n"] = model.n;
  j["g"] = model.g;
  j["M"] = model.M.str();
  j["generic_alpha0"] = model.generic_alpha0;
  j["germs"] = json::array();
  for (const auto& [label, germ] : model.germs) {
    json jg = germ_to_json(germ);
    json entry;
    entry["label"] = label;
    for (auto& [k, v] : jg.items()) entry[k] = v;
    j["germs"].push_back(entry);
  }
  return j;
}

GlobalModel model_from_json(const json& j) {
  if (!j.is_object()) throw Error(Errc::ParseError, "$: model must be a JSON object");
  GlobalModel model;
  auto get_int = [&](const char* key) {
    if (!j.contains(key)) throw Error(Errc::ParseError, std::string("$.") + key + ": missing");
    if (!j[key].is_number_integer())
      throw Error(Errc::ParseError, std::string("$.") + key + ": expected an integer");
    return j[key].get<long long>();
  };
  model.n = get_int("n");
  model.g = get_int("g");
  const long long r = derive_r(model.g, 0, model.n);
  if (j.contains("M")) {
    if (j["M"].is_number_integer())
      model.M = Rational(j["M"].get<long long>());
    else if (j["M"].is_string())
      model.M = Rational::parse(j["M"].get<std::string>());
    else
      throw Error(Errc::ParseError, "$.M: expected an integer or a rational string");
  }
  if (j.contains("generic_alpha0")) {
    if (!j["generic_alpha0"].is_number_integer())
      throw Error(Errc::ParseError, "$.generic_alpha0: expected an integer");
    model.generic_alpha0 = j["generic_alpha0"].get<long long>();
  }
  if (j.contains("germs")) {
    if (!j["germs"].is_array()) throw Error(Errc::ParseError, "$.germs: expected an array");
    int i = 0;
    for (const auto& entry : j["germs"]) {
      const std::string path = "$.germs[" + std::to_string(i) + "]";
      if (!entry.is_object()) throw Error(Errc::ParseError, path + ": expected an object");
      std::string label = "p" + std::to_string(i);
      if (entry.contains("label")) {
        if (!entry["label"].is_string())
          throw Error(Errc::ParseError, path + ".label: expected a string");
        label = entry["label"].get<std::string>();
      }
      json jg = entry;
      jg.erase("label");
      if (!jg.contains("n")) jg["n"] = model.n;
      if (!jg.contains("r")) jg["r"] = r;
      model.germs.emplace_back(label, germ_from_json(jg));
      ++i;
    }
  }
  return model;
}

json report_to_json(const InvariantReport& rep) {
  json j;
  j["n"] = rep.n;
  j["g"] = rep.g;
  j["r"] = rep.r;
  j["K_f2"] = rep.Kf2.str();
  j["chi_f"] = rep.chif.str();
  j["e_f"] = rep.ef.str();
  j["lambda"] = rep.lambda.str();
  j["slope"] = rep.slope_defined ? json(rep.slope.str()) : json(nullptr);
  json ind = json::object();
  for (const auto& [label, v] : rep.ind_per_fiber) ind[label] = v.str();
  j["ind_per_fiber"] = ind;
  json sig = json::object();
  for (const auto& [label, v] : rep.sigma_per_fiber) sig[label] = v.str();
  j["sigma_per_fiber"] = sig;
  j["ind_total"] = rep.ind_total.str();
  j["sign_total"] = rep.sign_total.str();
  j["slope_residual"] = rep.slope_residual.str();
  return j;
}

}  // namespace cyclic_slope
