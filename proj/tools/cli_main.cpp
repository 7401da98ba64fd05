#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "cyclic_slope/bounds.hpp"
#include "cyclic_slope/error.hpp"
#include "cyclic_slope/examples.hpp"
#include "cyclic_slope/invariants.hpp"
#include "cyclic_slope/suite.hpp"

namespace cs = cyclic_slope;
using cs::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInvalidInput = 1;
constexpr int kExitIdentityViolation = 2;

std::string read_input(const std::string& path) {
  if (path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(path);
  if (!in) throw cs::Error(cs::Errc::ParseError, "cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

json parse_json(const std::string& text, const std::string& what) {
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded())
    throw cs::Error(cs::Errc::ParseError, what + ": malformed JSON");
  return j;
}

// Flat two-column rendering of a report; nested keys joined with dots,
// array elements indexed. Deterministic order: insertion order of the
// report object.
void flatten(const json& j, const std::string& prefix,
             std::vector<std::pair<std::string, std::string>>& rows) {
  if (j.is_object()) {
    for (const auto& [k, v] : j.items())
      flatten(v, prefix.empty() ? k : prefix + "." + k, rows);
  } else if (j.is_array()) {
    bool scalars = true;
    for (const auto& v : j) scalars = scalars && !v.is_structured();
    if (scalars) {
      std::string joined;
      for (const auto& v : j) {
        if (!joined.empty()) joined += " ";
        joined += v.is_string() ? v.get<std::string>() : v.dump();
      }
      rows.emplace_back(prefix, joined.empty() ? "-" : joined);
    } else {
      int i = 0;
      for (const auto& v : j) flatten(v, prefix + "[" + std::to_string(i++) + "]", rows);
    }
  } else {
    rows.emplace_back(prefix, j.is_string() ? j.get<std::string>() : j.dump());
  }
}

void print_report(const json& j, bool table) {
  if (!table) {
    std::cout << j.dump(2) << "\n";
    return;
  }
  std::vector<std::pair<std::string, std::string>> rows;
  flatten(j, "", rows);
  std::size_t width = 0;
  for (const auto& [k, v] : rows) width = std::max(width, k.size());
  for (const auto& [k, v] : rows)
    std::cout << k << std::string(width - k.size() + 2, ' ') << v << "\n";
}

int cmd_validate(const std::string& file) {
  const cs::GlobalModel model = cs::model_from_json(parse_json(read_input(file), file));
  const auto violations = cs::validate_model(model);
  json out;
  out["valid"] = violations.empty();
  out["violations"] = cs::violations_to_json(violations);
  std::cout << out.dump(2) << "\n";
  return violations.empty() ? kExitOk : kExitInvalidInput;
}

int cmd_invariants(const std::string& file, bool table) {
  const cs::GlobalModel model = cs::model_from_json(parse_json(read_input(file), file));
  const auto violations = cs::validate_model(model);
  if (!violations.empty()) {
    json out;
    out["valid"] = false;
    out["violations"] = cs::violations_to_json(violations);
    std::cout << out.dump(2) << "\n";
    return kExitInvalidInput;
  }
  print_report(cs::report_to_json(cs::invariant_report(model)), table);
  return kExitOk;
}

int cmd_resolve(const std::string& file, bool table) {
  const std::string text = read_input(file);
  // A single JSON object, or NDJSON with one germ per line.
  std::vector<json> inputs;
  json whole = json::parse(text, nullptr, false);
  if (!whole.is_discarded() && whole.is_object()) {
    inputs.push_back(whole);
  } else {
    std::istringstream lines(text);
    std::string line;
    int lineno = 0;
    while (std::getline(lines, line)) {
      ++lineno;
      if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
      inputs.push_back(parse_json(line, "line " + std::to_string(lineno)));
    }
  }
  if (inputs.empty()) throw cs::Error(cs::Errc::ParseError, "no germ in input");
  for (const auto& jg : inputs) {
    const cs::FiberGerm germ = cs::germ_from_json(jg);
    const auto violations = cs::validate_germ(germ);
    if (!violations.empty()) {
      json out;
      out["valid"] = false;
      out["violations"] = cs::violations_to_json(violations);
      std::cout << out.dump(2) << "\n";
      return kExitInvalidInput;
    }
    const json rep = cs::resolved_to_json(cs::resolve_germ(germ));
    if (inputs.size() == 1)
      print_report(rep, table);
    else
      std::cout << rep.dump() << "\n";
  }
  return kExitOk;
}

int cmd_bounds(long long g, long long h, long long n, bool table) {
  json out;
  out["g"] = g;
  out["h"] = h;
  out["n"] = n;
  out["r"] = cs::derive_r(g, h, n);
  out["lambda_lower"] = cs::lambda_lower(g, h, n).str();
  if (h >= 1) out["genus_hypothesis"] = cs::genus_hypothesis_holds(g, h, n);
  if (h == 0 && n >= 4) {
    const auto sc = cs::slope_constants(g, n);
    out["lambda_upper"] = cs::lambda_upper(g, n).str();
    out["delta"] = sc.delta;
    out["mu"] = sc.mu.str();
    out["mu_prime"] = sc.mu_prime.str();
    out["A"] = sc.A.str();
    out["B"] = sc.B.str();
  } else if (h == 0) {
    out["lambda_upper"] = nullptr;  // open for n = 2, 3
  }
  print_report(out, table);
  return kExitOk;
}

int cmd_sharp_example(long long n, long long h, long long N, long long M, bool table) {
  const auto res = cs::product_example({n, h, N, M});
  json out;
  out["n"] = n;
  out["h"] = h;
  out["N"] = N;
  out["M"] = M;
  out["g"] = res.g;
  out["K_f2"] = res.Kf2.str();
  out["chi_f"] = res.chif.str();
  out["slope"] = res.slope.str();
  out["lambda"] = res.lambda.str();
  print_report(out, table);
  return kExitOk;
}

int cmd_enumerate(long long n, long long r, int max_nodes, long long max_mult, int max_depth) {
  cs::EnumerationBudget budget;
  budget.max_nodes = max_nodes;
  budget.max_mult = max_mult;
  budget.max_depth = max_depth;
  cs::enumerate_germs(n, r, budget,
                      [](const cs::FiberGerm& g) { std::cout << cs::germ_to_json(g).dump() << "\n"; });
  return kExitOk;
}

int cmd_verify_suite(long long n, long long r, int budget_nodes, long long max_mult,
                     int max_depth, int threads, bool table) {
  cs::EnumerationBudget budget;
  budget.max_nodes = budget_nodes;
  budget.max_mult = max_mult;
  budget.max_depth = max_depth;
  const auto rep = cs::verify_suite(n, r, budget, threads);
  print_report(cs::suite_to_json(rep), table);
  if (!rep.all_pass()) {
    std::cerr << "verify-suite: identity violations detected\n";
    return kExitIdentityViolation;
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Branch data, invariants and slope bounds of primitive cyclic covering fibrations"};
  app.require_subcommand(1);
  // --h is a domain option below, so help must not claim the short -h.
  app.set_help_flag("--help", "print help");
  bool table = false;
  app.add_flag("--table", table, "render reports as text tables instead of JSON");

  std::string file;
  auto* validate = app.add_subcommand("validate", "validate a model file");
  validate->add_option("file", file, "model JSON file, or - for stdin")->required();

  auto* invariants = app.add_subcommand("invariants", "relative invariants of a model file");
  invariants->add_option("file", file, "model JSON file, or - for stdin")->required();

  auto* resolve = app.add_subcommand("resolve", "resolve fiber germs");
  resolve->add_option("file", file, "germ JSON or NDJSON file, or - for stdin")->required();

  long long g = 0, h = 0, n = 0, N = 0, M = 0, r = 0;
  auto* bounds = app.add_subcommand("bounds", "slope bounds for (g, h, n)");
  bounds->set_help_flag("--help", "print help");
  bounds->add_option("--g", g)->required();
  bounds->add_option("--h", h)->required();
  bounds->add_option("--n", n)->required();

  auto* sharp = app.add_subcommand("sharp-example", "the product example attaining the bound");
  sharp->set_help_flag("--help", "print help");
  sharp->add_option("--n", n)->required();
  sharp->add_option("--h", h)->required();
  sharp->add_option("--N", N)->required();
  sharp->add_option("--M", M)->required();

  int max_nodes = 3, max_depth = 8, threads = 0;
  long long max_mult = 0;
  auto* enumerate = app.add_subcommand("enumerate", "enumerate valid germs as NDJSON");
  enumerate->add_option("--n", n)->required();
  enumerate->add_option("--r", r)->required();
  enumerate->add_option("--max-nodes", max_nodes)->required();
  enumerate->add_option("--max-mult", max_mult);
  enumerate->add_option("--max-depth", max_depth);

  auto* verify = app.add_subcommand("verify-suite", "run every invariant suite over enumeration");
  verify->add_option("--n", n)->required();
  verify->add_option("--r", r)->required();
  verify->add_option("--budget", max_nodes)->required();
  verify->add_option("--max-mult", max_mult);
  verify->add_option("--max-depth", max_depth);
  verify->add_option("--threads", threads);

  // Let --table appear after the subcommand name as well.
  for (auto* sub : app.get_subcommands({})) sub->fallthrough();

  CLI11_PARSE(app, argc, argv);

  try {
    if (*validate) return cmd_validate(file);
    if (*invariants) return cmd_invariants(file, table);
    if (*resolve) return cmd_resolve(file, table);
    if (*bounds) return cmd_bounds(g, h, n, table);
    if (*sharp) return cmd_sharp_example(n, h, N, M, table);
    if (*enumerate) return cmd_enumerate(n, r, max_nodes, max_mult, max_depth);
    if (*verify) return cmd_verify_suite(n, r, max_nodes, max_mult, max_depth, threads, table);
  } catch (const cs::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.code() == cs::Errc::IdentityViolation ? kExitIdentityViolation : kExitInvalidInput;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInvalidInput;
  }
  return kExitOk;
}
