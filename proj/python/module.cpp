#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "cyclic_slope/bounds.hpp"
#include "cyclic_slope/error.hpp"
#include "cyclic_slope/examples.hpp"
#include "cyclic_slope/fixed_points.hpp"
#include "cyclic_slope/invariants.hpp"
#include "cyclic_slope/suite.hpp"

namespace py = pybind11;
namespace cs = cyclic_slope;

namespace {

cs::json parse(const std::string& text, const char* what) {
  cs::json j = cs::json::parse(text, nullptr, false);
  if (j.is_discarded()) throw cs::Error(cs::Errc::ParseError, std::string(what) + ": malformed JSON");
  return j;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Branch data, exact invariants and slope bounds of primitive cyclic "
            "covering fibrations. Rationals cross the boundary as strings 'p/q'; "
            "germs, models and reports as JSON strings.";

  py::register_exception<cs::Error>(m, "CyclicSlopeError");

  m.def("derive_r", &cs::derive_r, py::arg("g"), py::arg("h"), py::arg("n"));
  m.def("lambda_lower",
        [](long long g, long long h, long long n) { return cs::lambda_lower(g, h, n).str(); },
        py::arg("g"), py::arg("h"), py::arg("n"));
  m.def("lambda_upper",
        [](long long g, long long n) { return cs::lambda_upper(g, n).str(); }, py::arg("g"),
        py::arg("n"));
  m.def("genus_hypothesis_holds", &cs::genus_hypothesis_holds, py::arg("g"), py::arg("h"),
        py::arg("n"));
  m.def("slope_constants", [](long long g, long long n) {
    const auto c = cs::slope_constants(g, n);
    py::dict d;
    d["r"] = c.r;
    d["delta"] = c.delta;
    d["lambda"] = c.lambda.str();
    d["mu"] = c.mu.str();
    d["mu_prime"] = c.mu_prime.str();
    d["A"] = c.A.str();
    d["B"] = c.B.str();
    d["case_small_r"] = c.case_small_r;
    return d;
  });

  m.def("coprime_shift_check", &cs::coprime_shift_check, py::arg("n"));
  m.def("coprime_shift_witness", [](int n) -> py::object {
    const auto w = cs::coprime_shift_counterexample(n);
    if (!w) return py::none();
    return py::make_tuple(w->first, w->second);
  });
  m.def("blowup_transition", [](int k1, int k2, int n) {
    const auto out = cs::blowup_transition(cs::make_type(k1, k2, n));
    py::dict d;
    d["kind"] = out.kind == cs::BlowupOutcome::Kind::FixedCurve ? "fixed_curve" : "two_points";
    py::list children;
    for (const auto& c : out.children) children.append(py::make_tuple(c.k1, c.k2));
    d["children"] = children;
    return d;
  });
  m.def("resolvable_search",
        [](int k1, int k2, int n) { return cs::resolvable_search(cs::make_type(k1, k2, n)); });

  m.def("multiplicity_sequence", [](const std::map<long long, long long>& s, long long n) {
    cs::BranchProfile p;
    p.s = s;
    const auto seq = cs::multiplicity_sequence(p, n);
    py::dict d;
    d["m"] = seq.m;
    d["d"] = seq.d;
    d["i_bm"] = seq.i_bm;
    d["i_max"] = seq.i_max;
    d["monotone"] = cs::check_monotonicity(seq, n);
    return d;
  });
  m.def("standardize", [](std::vector<long long> mults, long long r, long long n,
                          bool fiber_in_branch) {
    const auto res = cs::standardize(std::move(mults), r, n, fiber_in_branch);
    return py::make_tuple(res.mults, res.steps);
  }, py::arg("mults"), py::arg("r"), py::arg("n"), py::arg("fiber_in_branch") = false);

  m.def("product_example", [](long long n, long long h, long long N, long long M) {
    const auto res = cs::product_example({n, h, N, M});
    py::dict d;
    d["g"] = res.g;
    d["K_f2"] = res.Kf2.str();
    d["chi_f"] = res.chif.str();
    d["slope"] = res.slope.str();
    d["lambda"] = res.lambda.str();
    return d;
  });

  m.def("enumerate_germs",
        [](long long n, long long r, int max_nodes, long long max_mult, int max_depth) {
          cs::EnumerationBudget b;
          b.max_nodes = max_nodes;
          b.max_mult = max_mult;
          b.max_depth = max_depth;
          py::list out;
          for (const auto& g : cs::enumerate_germs(n, r, b))
            out.append(cs::germ_to_json(g).dump());
          return out;
        },
        py::arg("n"), py::arg("r"), py::arg("max_nodes"), py::arg("max_mult") = 0,
        py::arg("max_depth") = 8);

  m.def("validate_germ", [](const std::string& germ_json) {
    const auto g = cs::germ_from_json(parse(germ_json, "germ"));
    return cs::violations_to_json(cs::validate_germ(g)).dump();
  });
  m.def("resolve_germ", [](const std::string& germ_json) {
    const auto g = cs::germ_from_json(parse(germ_json, "germ"));
    return cs::resolved_to_json(cs::resolve_germ(g)).dump();
  });
  m.def("validate_model", [](const std::string& model_json) {
    const auto model = cs::model_from_json(parse(model_json, "model"));
    return cs::violations_to_json(cs::validate_model(model)).dump();
  });
  m.def("invariant_report", [](const std::string& model_json) {
    const auto model = cs::model_from_json(parse(model_json, "model"));
    return cs::report_to_json(cs::invariant_report(model)).dump();
  });
  m.def("upper_bound_certificate", [](const std::string& model_json) {
    const auto model = cs::model_from_json(parse(model_json, "model"));
    return cs::upper_certificate_to_json(cs::upper_bound_certificate(model)).dump();
  });

  m.def("verify_suite",
        [](long long n, long long r, int budget, long long max_mult, int max_depth, int threads) {
          cs::EnumerationBudget b;
          b.max_nodes = budget;
          b.max_mult = max_mult;
          b.max_depth = max_depth;
          return cs::suite_to_json(cs::verify_suite(n, r, b, threads)).dump();
        },
        py::arg("n"), py::arg("r"), py::arg("budget"), py::arg("max_mult") = 0,
        py::arg("max_depth") = 8, py::arg("threads") = 0);
}
