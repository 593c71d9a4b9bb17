// Command-line front end for the fifth-order KdV traveling-wave toolkit.
//
// Subcommands:
//   derive    write the 15 coefficient equations of the order-2 ansatz
//   verify    certify the six solution families against the full system
//   solve     run the numeric cascade solver for (a0, a2, b2, lambda)
//   eval      sample a closed-form solution on a space-time grid (CSV)
//   residual  measure the PDE residual two independent ways (JSON)
//   report    one document: A/B/C table, certified lambda forms, and
//             max residuals for every preset's printed catalog
//
// Exit codes: 0 success, 2 bad configuration, 3 no real solution
// (negative discriminant), 4 verification failed.
//
// JSON output carries a top-level "schema": 1 and sorted keys; rational
// values are strings ("p" or "p/q"), floating-point values are JSON
// numbers (shortest round-trip text). Identical configurations produce
// byte-identical output. When --output is not given, files go to
// $FKDV_OUTPUT_DIR/<subcommand>.<ext> if that variable is set, else to
// stdout.

#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "fkdv/balance.hpp"
#include "fkdv/families.hpp"
#include "fkdv/numeric_verify.hpp"
#include "fkdv/solution_forms.hpp"
#include "fkdv/solver.hpp"

using nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitBadConfig = 2;
constexpr int kExitNoRealSolution = 3;
constexpr int kExitVerificationFailed = 4;

// ---------------------------------------------------------------------
// Shared option blocks

struct ParamOpts {
  std::string preset;
  std::string alpha, beta, gamma, omega;
};

void add_param_options(CLI::App* cmd, ParamOpts& po) {
  cmd->add_option("--preset", po.preset,
                  "Named coefficient set: kk, sk, cdg, lax, or ito");
  cmd->add_option("--alpha", po.alpha, "Coefficient of u*u_xxx, rational p/q");
  cmd->add_option("--beta", po.beta, "Coefficient of u_x*u_xx, rational p/q");
  cmd->add_option("--gamma", po.gamma, "Coefficient of u^2*u_x, rational p/q (nonzero)");
  cmd->add_option("--omega", po.omega, "Coefficient of u_xxxxx, rational p/q (nonzero)");
}

fkdv::FkdvParams resolve_params(const ParamOpts& po) {
  const bool has_preset = !po.preset.empty();
  const bool has_any_explicit =
      !po.alpha.empty() || !po.beta.empty() || !po.gamma.empty() || !po.omega.empty();
  if (has_preset == has_any_explicit)
    throw std::invalid_argument(
        "give exactly one of --preset or the full --alpha/--beta/--gamma/--omega quadruple");
  if (has_preset) return fkdv::FkdvParams::preset(po.preset);
  if (po.alpha.empty() || po.beta.empty() || po.gamma.empty() || po.omega.empty())
    throw std::invalid_argument(
        "explicit coefficients require all four of --alpha/--beta/--gamma/--omega");
  return fkdv::FkdvParams::custom(
      fkdv::parse_rational(po.alpha), fkdv::parse_rational(po.beta),
      fkdv::parse_rational(po.gamma), fkdv::parse_rational(po.omega));
}

struct OutputOpts {
  std::string path;
  std::string format = "json";
};

void add_output_options(CLI::App* cmd, OutputOpts& oo,
                        const std::string& formats = "json,text") {
  cmd->add_option("--output,-o", oo.path,
                  "Output file (default: $FKDV_OUTPUT_DIR/<subcommand>.<ext>, else stdout)");
  if (!formats.empty()) {
    std::vector<std::string> allowed;
    std::stringstream ss(formats);
    for (std::string f; std::getline(ss, f, ',');) allowed.push_back(f);
    oo.format = allowed.front();
    cmd->add_option("--format", oo.format, "Output format")
        ->check(CLI::IsMember(allowed));
  }
}

void emit(const OutputOpts& oo, const std::string& default_name,
          const std::string& content) {
  std::string path = oo.path;
  if (path.empty()) {
    if (const char* dir = std::getenv("FKDV_OUTPUT_DIR"); dir && *dir) {
      const std::string ext = oo.format == "csv" ? ".csv"
                              : oo.format == "text" ? ".txt"
                                                    : ".json";
      path = std::string(dir) + "/" + default_name + ext;
    }
  }
  if (path.empty()) {
    std::cout << content;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::invalid_argument("cannot open output file: " + path);
  out << content;
}

// ---------------------------------------------------------------------
// Value formatting

std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

// Exact rational k from "p", "p/q", or decimal/scientific text (the
// decimal is converted through its exact binary double value).
fkdv::Rational parse_k(const std::string& text) {
  if (text.find('/') == std::string::npos &&
      (text.find('.') != std::string::npos || text.find('e') != std::string::npos ||
       text.find('E') != std::string::npos)) {
    char* end = nullptr;
    const double v = std::strtod(text.c_str(), &end);
    if (end == text.c_str() || *end != '\0')
      throw std::invalid_argument("malformed number: " + text);
    return fkdv::Rational(v);
  }
  return fkdv::parse_rational(text);
}

fkdv::Branch parse_branch(const std::string& name) {
  static const std::map<std::string, fkdv::Branch> table{
      {"tan", fkdv::Branch::Tan},       {"cot", fkdv::Branch::Cot},
      {"tanh", fkdv::Branch::Tanh},     {"coth", fkdv::Branch::Coth},
      {"csch", fkdv::Branch::CschForm}, {"csch-form", fkdv::Branch::CschForm},
      {"rational", fkdv::Branch::Rational}};
  const auto it = table.find(name);
  if (it == table.end()) throw std::invalid_argument("unknown branch: " + name);
  return it->second;
}

fkdv::Branch default_branch(double k) {
  if (k > 0) return fkdv::Branch::Tan;
  if (k < 0) return fkdv::Branch::Tanh;
  return fkdv::Branch::Rational;
}

json params_json(const fkdv::FkdvParams& params) {
  const auto v = params.numeric_values();
  return json{{"preset", params.preset_name},
              {"alpha", fkdv::rational_to_string(v[0])},
              {"beta", fkdv::rational_to_string(v[1])},
              {"gamma", fkdv::rational_to_string(v[2])},
              {"omega", fkdv::rational_to_string(v[3])}};
}

const fkdv::SolutionFamily& family_by_id(int id) {
  const auto& table = fkdv::family_table();
  if (id < 1 || id > static_cast<int>(table.size()))
    throw std::invalid_argument("family id must be in 1..6");
  return table[static_cast<size_t>(id - 1)];
}

// ---------------------------------------------------------------------
// derive

int run_derive(const fkdv::FkdvParams& params, const OutputOpts& oo) {
  const auto v = params.numeric_values();
  const fkdv::Bindings bind{
      {fkdv::Symbol::Alpha, fkdv::ExtScalar::from_rational(v[0])},
      {fkdv::Symbol::Beta, fkdv::ExtScalar::from_rational(v[1])},
      {fkdv::Symbol::Gamma, fkdv::ExtScalar::from_rational(v[2])},
      {fkdv::Symbol::Omega, fkdv::ExtScalar::from_rational(v[3])}};

  const auto& system = fkdv::order2_general_system();
  if (oo.format == "text") {
    std::ostringstream out;
    out << "Coefficient equations of the order-2 ansatz (" << system.entries.size()
        << " equations, preset " << params.preset_name << ")\n";
    for (const auto& e : system.entries)
      out << "  phi^" << e.power << ": " << substitute(e.lhs, bind).to_string()
          << " = 0\n";
    emit(oo, "derive", out.str());
    return kExitOk;
  }

  json eqs = json::array();
  for (const auto& e : system.entries)
    eqs.push_back(json{{"power", e.power},
                       {"equation", substitute(e.lhs, bind).to_string()}});
  const json doc{{"schema", 1},
                 {"command", "derive"},
                 {"params", params_json(params)},
                 {"ansatz_order", 2},
                 {"equations", eqs}};
  emit(oo, "derive", doc.dump(2) + "\n");
  return kExitOk;
}

// ---------------------------------------------------------------------
// verify

json abc_json(const fkdv::FkdvParams& params) {
  if (const auto exact = fkdv::abc_values_exact(params)) {
    return json{{"A", fkdv::rational_to_string(exact->A)},
                {"B", fkdv::rational_to_string(exact->B)},
                {"C", fkdv::rational_to_string(exact->C)},
                {"exact", true}};
  }
  const auto approx = fkdv::abc_values_double(params);
  return json{{"A", approx.A}, {"B", approx.B}, {"C", approx.C}, {"exact", false}};
}

int run_verify(const fkdv::FkdvParams& params, int family_id, const OutputOpts& oo) {
  std::vector<fkdv::FamilyCertificate> certs;
  if (family_id == 0) {
    for (const auto& fam : fkdv::family_table()) certs.push_back(fkdv::verify_family(fam));
  } else {
    certs.push_back(fkdv::verify_family(family_by_id(family_id)));
  }
  bool all_verified = true;
  for (const auto& c : certs) all_verified = all_verified && c.verified;

  if (oo.format == "text") {
    std::ostringstream out;
    const auto abc = abc_json(params);
    out << "Family certificates (preset " << params.preset_name << ", A = "
        << (abc["A"].is_string() ? abc["A"].get<std::string>() : format_double(abc["A"]))
        << ")\n";
    for (const auto& c : certs) {
      out << "  family " << c.family_id << ": "
          << (c.verified ? "verified" : "NOT VERIFIED") << ", lambda = " << c.lambda_text;
      if (!c.lambda_form.empty()) out << "  [" << c.lambda_form << "]";
      out << "\n";
      if (!c.verified)
        for (const auto& eq : c.equations)
          if (!eq.zero) out << "    phi^" << eq.power << " residual: " << eq.residual << "\n";
    }
    emit(oo, "verify", out.str());
    return all_verified ? kExitOk : kExitVerificationFailed;
  }

  json fams = json::array();
  for (const auto& c : certs) {
    json eqs = json::array();
    for (const auto& eq : c.equations)
      eqs.push_back(json{{"power", eq.power}, {"zero", eq.zero}, {"residual", eq.residual}});
    fams.push_back(json{{"family", c.family_id},
                        {"verified", c.verified},
                        {"lambda", c.lambda_text},
                        {"lambda_form", c.lambda_form},
                        {"equations", eqs}});
  }
  const json doc{{"schema", 1},
                 {"command", "verify"},
                 {"params", params_json(params)},
                 {"constants", abc_json(params)},
                 {"families", fams}};
  emit(oo, "verify", doc.dump(2) + "\n");
  return all_verified ? kExitOk : kExitVerificationFailed;
}

// ---------------------------------------------------------------------
// solve

int run_solve(const fkdv::FkdvParams& params, const std::string& k_text,
              const std::string& mode_text, const OutputOpts& oo) {
  fkdv::SolveMode mode = fkdv::SolveMode::Auto;
  if (mode_text == "exact") mode = fkdv::SolveMode::Exact;
  else if (mode_text == "floating") mode = fkdv::SolveMode::Floating;

  const fkdv::Rational k = parse_k(k_text);
  const auto result = fkdv::solve_restricted(params, k, mode);

  if (oo.format == "text") {
    std::ostringstream out;
    out << "Restricted-system solutions (preset " << params.preset_name << ", k = "
        << fkdv::rational_to_string(k) << ", " << (result.exact_path ? "exact" : "floating")
        << " path" << (result.degenerate ? ", degenerate quadratic" : "") << ")\n";
    for (const auto& t : result.tuples) {
      out << "  (a0, a2, b2, lambda) = (";
      if (t.exact)
        out << fkdv::rational_to_string(t.exact_values[0]) << ", "
            << fkdv::rational_to_string(t.exact_values[1]) << ", "
            << fkdv::rational_to_string(t.exact_values[2]) << ", "
            << fkdv::rational_to_string(t.exact_values[3]);
      else
        out << format_double(t.a0) << ", " << format_double(t.a2) << ", "
            << format_double(t.b2) << ", " << format_double(t.lambda);
      out << ")  residual " << format_double(t.residual_norm) << "  family "
          << t.family_id << "\n";
    }
    emit(oo, "solve", out.str());
    return kExitOk;
  }

  json tuples = json::array();
  for (const auto& t : result.tuples) {
    json jt{{"a0", t.a0},          {"a2", t.a2},
            {"b2", t.b2},          {"lambda", t.lambda},
            {"residual_norm", t.residual_norm}, {"family", t.family_id}};
    if (t.exact)
      jt["exact"] = json::array({fkdv::rational_to_string(t.exact_values[0]),
                                 fkdv::rational_to_string(t.exact_values[1]),
                                 fkdv::rational_to_string(t.exact_values[2]),
                                 fkdv::rational_to_string(t.exact_values[3])});
    tuples.push_back(jt);
  }
  const json doc{{"schema", 1},
                 {"command", "solve"},
                 {"params", params_json(params)},
                 {"k", fkdv::rational_to_string(k)},
                 {"exact_path", result.exact_path},
                 {"degenerate", result.degenerate},
                 {"residual_scale", result.residual_scale},
                 {"tuples", tuples}};
  emit(oo, "solve", doc.dump(2) + "\n");
  return kExitOk;
}

// ---------------------------------------------------------------------
// eval / residual

struct GridOpts {
  double x_min = -10.0;
  double x_max = 10.0;
  int nx = 2001;
  std::vector<double> t_values;
  double epsilon = -1.0;
};

void add_grid_options(CLI::App* cmd, GridOpts& go) {
  cmd->add_option("--x-min", go.x_min, "Grid start");
  cmd->add_option("--x-max", go.x_max, "Grid end");
  cmd->add_option("--nx", go.nx, "Number of grid points")->check(CLI::PositiveNumber);
  cmd->add_option("--t", go.t_values, "Time value (repeatable; default 0)");
  cmd->add_option("--epsilon", go.epsilon,
                  "Pole-exclusion radius in xi (default 1e-2 * pole spacing)");
}

fkdv::GridSpec to_grid(const GridOpts& go) {
  fkdv::GridSpec grid;
  grid.x_min = go.x_min;
  grid.x_max = go.x_max;
  grid.nx = go.nx;
  grid.t_values = go.t_values.empty() ? std::vector<double>{0.0} : go.t_values;
  grid.epsilon = go.epsilon;
  return grid;
}

fkdv::ClosedFormSolution make_solution(const fkdv::FkdvParams& params, int family_id,
                                       const std::string& branch_text, double k,
                                       bool principal_root) {
  const fkdv::Branch branch =
      branch_text.empty() ? default_branch(k) : parse_branch(branch_text);
  return fkdv::closed_form(family_by_id(family_id), branch, k, params, principal_root);
}

int run_eval(const fkdv::FkdvParams& params, int family_id, const std::string& branch_text,
             const std::string& k_text, bool conjugate_root, const GridOpts& go,
             const OutputOpts& oo) {
  const double k = fkdv::rational_to_double(parse_k(k_text));
  const auto sol = make_solution(params, family_id, branch_text, k, !conjugate_root);
  const auto samples = fkdv::eval_solution(sol, to_grid(go));

  std::ostringstream out;
  out << "x,t,u,mask\n";
  for (const auto& s : samples)
    out << format_double(s.x) << ',' << format_double(s.t) << ','
        << (s.masked ? "nan" : format_double(s.u)) << ',' << (s.masked ? 1 : 0) << "\n";
  emit(oo, "eval", out.str());
  return kExitOk;
}

json residual_report_json(const fkdv::ResidualReport& r) {
  return json{{"method", r.method},
              {"max_abs_residual", r.max_abs_residual},
              {"max_term_magnitude", r.max_term_magnitude},
              {"masked_fraction", r.masked_fraction}};
}

int run_residual(const fkdv::FkdvParams& params, int family_id,
                 const std::string& branch_text, const std::string& k_text,
                 bool conjugate_root, double h, const GridOpts& go, const OutputOpts& oo) {
  const double k = fkdv::rational_to_double(parse_k(k_text));
  const auto sol = make_solution(params, family_id, branch_text, k, !conjugate_root);
  const auto grid = to_grid(go);
  const auto riccati = fkdv::pde_residual_riccati(sol, grid);
  const auto fd = fkdv::pde_residual_fd(sol, grid, h);

  const bool riccati_ok =
      riccati.max_abs_residual <= 1e-8 * riccati.max_term_magnitude;
  const bool ok = riccati_ok && fd.within_envelope;

  json doc{{"schema", 1},
           {"command", "residual"},
           {"params", params_json(params)},
           {"family", sol.family_id},
           {"branch", fkdv::branch_name(sol.branch)},
           {"k", sol.k},
           {"lambda", sol.lambda},
           {"riccati_chain", residual_report_json(riccati)},
           {"finite_difference",
            {{"report", residual_report_json(fd.report)},
             {"h", fd.h},
             {"max_discrepancy", fd.max_discrepancy},
             {"max_discrepancy_far_field", fd.max_discrepancy_far},
             {"max_envelope", fd.max_envelope},
             {"within_envelope", fd.within_envelope}}},
           {"passes", ok}};
  emit(oo, "residual", doc.dump(2) + "\n");
  return ok ? kExitOk : kExitVerificationFailed;
}

// ---------------------------------------------------------------------
// report

int run_report(const OutputOpts& oo) {
  // Certificates are parameter-independent (fully symbolic); compute once.
  std::vector<fkdv::FamilyCertificate> certs;
  for (const auto& fam : fkdv::family_table()) certs.push_back(fkdv::verify_family(fam));
  bool all_verified = true;

  json presets = json::array();
  for (const auto& name : fkdv::FkdvParams::preset_names()) {
    const auto params = fkdv::FkdvParams::preset(name);
    json fams = json::array();
    for (size_t i = 0; i < certs.size(); ++i) {
      const auto& c = certs[i];
      all_verified = all_verified && c.verified;
      const auto values = fkdv::evaluate_family(fkdv::family_table()[i], params, -1.0);
      fams.push_back(json{{"family", c.family_id},
                          {"verified", c.verified},
                          {"lambda_form", c.lambda_form},
                          {"lambda_at_k_minus_1", values.lambda}});
    }

    json catalog = json::array();
    double max_rel_residual = 0, max_fd_far = 0, max_wave = 0;
    for (const auto& sol : fkdv::printed_catalog(params)) {
      fkdv::GridSpec grid;
      const auto riccati = fkdv::pde_residual_riccati(sol, grid);
      const auto fd = fkdv::pde_residual_fd(sol, grid, 0.05);
      const auto points = fkdv::sample_unmasked_points(sol, 0.3, 100, 20240815);
      const double wave = fkdv::traveling_wave_check(sol, 0.3, points);
      const double rel = riccati.max_term_magnitude > 0
                             ? riccati.max_abs_residual / riccati.max_term_magnitude
                             : 0.0;
      max_rel_residual = std::max(max_rel_residual, rel);
      max_fd_far = std::max(max_fd_far, fd.max_discrepancy_far);
      max_wave = std::max(max_wave, wave);
      catalog.push_back(json{{"label", sol.label},
                             {"family", sol.family_id},
                             {"branch", fkdv::branch_name(sol.branch)},
                             {"k", sol.k},
                             {"lambda", sol.lambda},
                             {"riccati_relative_residual", rel},
                             {"fd_within_envelope", fd.within_envelope},
                             {"fd_far_field_discrepancy", fd.max_discrepancy_far},
                             {"traveling_wave_deviation", wave}});
      all_verified = all_verified && fd.within_envelope && rel <= 1e-8;
    }

    presets.push_back(json{{"preset", name},
                           {"constants", abc_json(params)},
                           {"families", fams},
                           {"catalog", catalog},
                           {"max_riccati_relative_residual", max_rel_residual},
                           {"max_fd_far_field_discrepancy", max_fd_far},
                           {"max_traveling_wave_deviation", max_wave}});
  }

  const json doc{
      {"schema", 1}, {"command", "report"}, {"presets", presets}, {"passes", all_verified}};
  emit(oo, "report", doc.dump(2) + "\n");
  return all_verified ? kExitOk : kExitVerificationFailed;
}

}  // namespace

// ---------------------------------------------------------------------

int main(int argc, char** argv) {
  CLI::App app{
      "Traveling-wave toolkit for the fifth-order KdV equation\n"
      "u_t + omega*u_xxxxx + alpha*u*u_xxx + beta*u_x*u_xx + gamma*u^2*u_x = 0"};
  app.require_subcommand(1);

  ParamOpts derive_params, verify_params, solve_params, eval_params, residual_params;
  OutputOpts derive_out, verify_out, solve_out, eval_out, residual_out, report_out;
  std::string solve_k, eval_k = "-1", residual_k = "-1";
  std::string solve_mode = "auto", eval_branch, residual_branch;
  int verify_family_id = 0, eval_family = 0, residual_family = 0;
  bool eval_conjugate = false, residual_conjugate = false;
  GridOpts eval_grid, residual_grid;
  double residual_h = 0.05;

  auto* derive = app.add_subcommand(
      "derive", "Write the 15 coefficient equations of the order-2 ansatz");
  add_param_options(derive, derive_params);
  add_output_options(derive, derive_out);

  auto* verify = app.add_subcommand(
      "verify", "Certify the solution families against the full system");
  add_param_options(verify, verify_params);
  verify->add_option("--family", verify_family_id, "Family id 1..6 (default: all six)")
      ->check(CLI::Range(1, 6));
  add_output_options(verify, verify_out);

  auto* solve = app.add_subcommand(
      "solve", "Cascade-solve the restricted system at numeric parameters");
  add_param_options(solve, solve_params);
  solve->add_option("--k", solve_k, "Riccati constant, rational p/q or decimal (nonzero)")
      ->required();
  solve->add_option("--mode", solve_mode, "Arithmetic: auto, exact, or floating")
      ->check(CLI::IsMember({"auto", "exact", "floating"}));
  add_output_options(solve, solve_out);

  auto* eval = app.add_subcommand("eval", "Sample a closed-form solution on a grid (CSV)");
  add_param_options(eval, eval_params);
  eval->add_option("--family", eval_family, "Family id 1..6")->required()->check(
      CLI::Range(1, 6));
  eval->add_option("--branch", eval_branch,
                   "tan, cot, tanh, coth, csch, or rational (default from sign of k)");
  eval->add_option("--k", eval_k, "Riccati constant (default -1)");
  eval->add_flag("--conjugate-root", eval_conjugate, "Use the conjugate extension root");
  add_grid_options(eval, eval_grid);
  add_output_options(eval, eval_out, "csv");

  auto* residual = app.add_subcommand(
      "residual", "Measure the PDE residual by the Riccati chain and by finite differences");
  add_param_options(residual, residual_params);
  residual->add_option("--family", residual_family, "Family id 1..6")->required()->check(
      CLI::Range(1, 6));
  residual->add_option("--branch", residual_branch,
                       "tan, cot, tanh, coth, csch, or rational (default from sign of k)");
  residual->add_option("--k", residual_k, "Riccati constant (default -1)");
  residual->add_flag("--conjugate-root", residual_conjugate,
                     "Use the conjugate extension root");
  residual->add_option("--step", residual_h, "Finite-difference step h")->check(
      CLI::PositiveNumber);
  add_grid_options(residual, residual_grid);
  add_output_options(residual, residual_out, "json");

  auto* report = app.add_subcommand(
      "report", "Constants, certified lambda forms, and max residuals for all presets");
  add_output_options(report, report_out, "json");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitBadConfig;
  }

  try {
    if (derive->parsed()) return run_derive(resolve_params(derive_params), derive_out);
    if (verify->parsed())
      return run_verify(resolve_params(verify_params), verify_family_id, verify_out);
    if (solve->parsed())
      return run_solve(resolve_params(solve_params), solve_k, solve_mode, solve_out);
    if (eval->parsed())
      return run_eval(resolve_params(eval_params), eval_family, eval_branch, eval_k,
                      eval_conjugate, eval_grid, eval_out);
    if (residual->parsed())
      return run_residual(resolve_params(residual_params), residual_family, residual_branch,
                          residual_k, residual_conjugate, residual_h, residual_grid,
                          residual_out);
    if (report->parsed()) return run_report(report_out);
  } catch (const fkdv::NegativeDiscriminant& e) {
    std::cerr << "no real solution: " << e.what() << "\n";
    return kExitNoRealSolution;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBadConfig;
  }
  return kExitBadConfig;
}
