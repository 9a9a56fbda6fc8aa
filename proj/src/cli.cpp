#include "hyperlap/cli.hpp"

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "hyperlap/geometry.hpp"
#include "hyperlap/green.hpp"
#include "hyperlap/kernels.hpp"
#include "hyperlap/maximal.hpp"
#include "hyperlap/quadrature.hpp"
#include "hyperlap/verification.hpp"

namespace hyperlap {

namespace {

std::string fmt_full(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

// "lo:hi:count" (count >= 2, linear) or a single value.
std::vector<double> parse_range(const std::string& text) {
  const auto c1 = text.find(':');
  if (c1 == std::string::npos) return {std::stod(text)};
  const auto c2 = text.find(':', c1 + 1);
  if (c2 == std::string::npos)
    throw std::invalid_argument("range must be <value> or lo:hi:count: " +
                                text);
  const double lo = std::stod(text.substr(0, c1));
  const double hi = std::stod(text.substr(c1 + 1, c2 - c1 - 1));
  const long count = std::stol(text.substr(c2 + 1));
  if (count < 2)
    throw std::invalid_argument("range count must be >= 2: " + text);
  std::vector<double> out(count);
  for (long i = 0; i < count; ++i)
    out[i] = lo + (hi - lo) * static_cast<double>(i) / (count - 1);
  return out;
}

void write_text(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << text;
}

struct VerifyConfig {
  QuadratureSpec quad;
  std::uint64_t seed = 20240817;
  int cp2b_samples = 100;
};

VerifyConfig load_verify_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open config " + path);
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw std::runtime_error("config " + path + ": " + e.what());
  }
  if (!j.is_object())
    throw std::runtime_error("config " + path + ": top level must be an object");
  VerifyConfig cfg;
  for (const auto& [key, value] : j.items()) {
    if (key == "rel_tol")
      cfg.quad.rel_tol = value.get<double>();
    else if (key == "abs_tol")
      cfg.quad.abs_tol = value.get<double>();
    else if (key == "max_subdivisions")
      cfg.quad.max_subdivisions = value.get<int>();
    else if (key == "seed")
      cfg.seed = value.get<std::uint64_t>();
    else if (key == "cp2b_samples")
      cfg.cp2b_samples = value.get<int>();
    else
      throw std::runtime_error("config " + path + ": unknown key \"" + key +
                               "\"");
  }
  if (cfg.quad.rel_tol <= 0 || cfg.quad.abs_tol <= 0 ||
      cfg.quad.max_subdivisions < 1 || cfg.cp2b_samples < 2)
    throw std::runtime_error("config " + path + ": tolerances must be positive"
                             ", cp2b_samples >= 2");
  return cfg;
}

std::vector<SuiteFunction> load_suite_file(const std::string& path,
                                           const HalfSpaceGrid& g) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open suite " + path);
  nlohmann::json j;
  in >> j;
  std::vector<SuiteFunction> suite;
  for (const auto& item : j.at("functions")) {
    SuiteFunction f;
    f.name = item.at("name").get<std::string>();
    f.values = item.at("values").get<std::vector<double>>();
    if (f.values.size() != g.cells())
      throw std::runtime_error("suite " + path + ": function \"" + f.name +
                               "\" has " + std::to_string(f.values.size()) +
                               " values, grid has " +
                               std::to_string(g.cells()));
    suite.push_back(std::move(f));
  }
  if (suite.empty()) throw std::runtime_error("suite " + path + ": empty");
  return suite;
}

int run_kernel(const std::string& space, int n, int m, double t,
               const std::string& r_text, const std::string& out_path,
               const QuadratureSpec& quad) {
  std::string csv = "t,r,value\n";
  for (const double r : parse_range(r_text)) {
    double value = 0.0;
    if (space == "hn")
      value = hn_heat(n, t, r, quad);
    else if (space == "hc")
      value = hc_heat(n, t, r, quad);
    else
      value = an_heat(n, m, t, r, quad);
    csv += fmt_full(t) + "," + fmt_full(r) + "," + fmt_full(value) + "\n";
  }
  write_text(out_path, csv);
  return 0;
}

int run_green(const std::string& space, int n, double lambda,
              const std::string& r_text, const std::string& out_path,
              const QuadratureSpec& quad) {
  std::string csv = "lambda,r,value\n";
  for (const double r : parse_range(r_text)) {
    const double value = space == "hn" ? green_hn(n, lambda, r, quad)
                                       : green_hc(n, lambda, r, quad);
    csv += fmt_full(lambda) + "," + fmt_full(r) + "," + fmt_full(value) + "\n";
  }
  write_text(out_path, csv);
  return 0;
}

int run_volume(const std::string& space, int n, int m,
               const std::string& r_text, const std::string& out_path,
               const QuadratureSpec& quad) {
  std::string csv = "r,value\n";
  for (const double r : parse_range(r_text)) {
    double value = 0.0;
    if (space == "hn")
      value = hn_volume(n, r, quad);
    else if (space == "hc")
      value = vc_volume(n, r);
    else
      value = an_volume(n, m, r, quad);
    csv += fmt_full(r) + "," + fmt_full(value) + "\n";
  }
  write_text(out_path, csv);
  return 0;
}

int run_verify(const std::string& suite, const std::string& config_path,
               const std::string& out_path, const std::string& csv_path,
               std::optional<std::uint64_t> seed_flag) {
  VerifyConfig cfg;
  if (!config_path.empty()) cfg = load_verify_config(config_path);
  if (seed_flag) cfg.seed = *seed_flag;

  VerifyOptions opt;
  opt.quad = cfg.quad;
  opt.seed = cfg.seed;
  opt.cp2b_samples = cfg.cp2b_samples;

  const VerificationReport rep = run_suite(suite, opt);
  write_text(out_path, report_json(rep));

  std::string csv_target = csv_path;
  if (csv_target.empty() && !out_path.empty() && out_path != "-") {
    csv_target = out_path;
    const auto dot = csv_target.rfind('.');
    if (dot != std::string::npos) csv_target.resize(dot);
    csv_target += ".csv";
  }
  if (!csv_target.empty()) write_text(csv_target, report_csv(rep));
  return rep.pass ? 0 : 2;
}

int run_maximal(int n, double p, const std::string& suite_name,
                const std::string& out_path, const std::string& summary_path) {
  HalfSpaceGrid grid = standard_grid(n);
  const std::vector<SuiteFunction> suite =
      suite_name == "standard" ? standard_suite(grid)
                               : load_suite_file(suite_name, grid);
  const OpnormResult res = empirical_opnorm(grid, p, suite);

  std::string csv = "function,ratio\n";
  for (const auto& e : res.per_function)
    csv += e.name + "," + fmt_full(e.ratio) + "\n";
  write_text(out_path, csv);

  nlohmann::ordered_json summary;
  summary["space"] = "hn";
  summary["n"] = n;
  summary["p"] = p;
  summary["cells"] = grid.cells();
  summary["suite"] = suite_name;
  summary["worst_ratio"] = res.worst_ratio;
  write_text(summary_path, summary.dump(2) + "\n");
  return 0;
}

}  // namespace

int run_cli(int argc, char** argv) {
  CLI::App app{
      "hyperlap: heat kernels, Green functions, volumes and maximal "
      "operators on hyperbolic spaces and H-type AN groups"};
  app.require_subcommand(0, 1);

  bool list_suites = false;
  app.add_flag("--list", list_suites,
               "list verification suites and the inequality each one checks");

  QuadratureSpec quad;
  app.add_option("--rel-tol", quad.rel_tol, "quadrature relative tolerance")
      ->check(CLI::PositiveNumber);
  app.add_option("--abs-tol", quad.abs_tol, "quadrature absolute tolerance")
      ->check(CLI::PositiveNumber);

  // kernel
  auto* kernel = app.add_subcommand("kernel", "heat kernel values as CSV");
  std::string k_space = "hn";
  int k_n = 3;
  int k_m = 1;
  double k_t = 1.0;
  std::string k_r = "1";
  std::string k_out;
  kernel->add_option("--space", k_space)->check(CLI::IsMember({"hn", "hc", "an"}));
  kernel->add_option("--n", k_n, "dimension (hn: n, hc: complex n, an: 2n)")
      ->required();
  kernel->add_option("--m", k_m, "center dimension (an only)");
  kernel->add_option("--t", k_t, "time")->required();
  kernel->add_option("--r", k_r, "radius: value or lo:hi:count")->required();
  kernel->add_option("--output", k_out, "CSV path (default stdout)");

  // green
  auto* green = app.add_subcommand("green", "Green function values as CSV");
  std::string g_space = "hn";
  int g_n = 3;
  double g_lambda = 0.0;
  std::string g_r = "1";
  std::string g_out;
  green->add_option("--space", g_space)->check(CLI::IsMember({"hn", "hc"}));
  green->add_option("--n", g_n)->required();
  green->add_option("--lambda", g_lambda, "spectral parameter")->required();
  green->add_option("--r", g_r, "radius: value or lo:hi:count")->required();
  green->add_option("--output", g_out, "CSV path (default stdout)");

  // volume
  auto* volume = app.add_subcommand("volume", "ball volumes as CSV");
  std::string v_space = "hn";
  int v_n = 3;
  int v_m = 1;
  std::string v_r = "1";
  std::string v_out;
  volume->add_option("--space", v_space)->check(CLI::IsMember({"hn", "hc", "an"}));
  volume->add_option("--n", v_n)->required();
  volume->add_option("--m", v_m, "center dimension (an only)");
  volume->add_option("--r", v_r, "radius: value or lo:hi:count")->required();
  volume->add_option("--output", v_out, "CSV path (default stdout)");

  // verify
  auto* verify = app.add_subcommand("verify", "run a verification suite");
  std::string suite;
  std::string config_path;
  std::string report_path;
  std::string csv_path;
  std::uint64_t seed_value = 0;
  verify->add_option("suite", suite, "one of the --list names")->required();
  verify->add_option("--config", config_path,
                     "JSON config {rel_tol, abs_tol, max_subdivisions, seed, "
                     "cp2b_samples}");
  verify->add_option("--output", report_path, "report JSON path (default stdout)");
  verify->add_option("--csv", csv_path, "per-point margin CSV path");
  auto* seed_opt = verify->add_option("--seed", seed_value, "randomized scan seed");

  // maximal
  auto* maximal = app.add_subcommand("maximal",
                                     "empirical maximal-operator ratios");
  std::string m_space = "hn";
  int m_n = 2;
  double m_p = 1.5;
  std::string m_suite = "standard";
  std::string m_out;
  std::string m_summary;
  maximal->add_option("--space", m_space)->check(CLI::IsMember({"hn"}));
  maximal->add_option("--n", m_n)->check(CLI::IsMember({2, 3}))->required();
  maximal->add_option("--p", m_p)->check(CLI::Range(1.0, 64.0));
  maximal->add_option("--suite", m_suite, "\"standard\" or a JSON suite file");
  maximal->add_option("--output", m_out, "ratio CSV path (default stdout)");
  maximal->add_option("--summary", m_summary, "summary JSON path (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (list_suites) {
      std::string out;
      for (const auto& name : verification_suites())
        out += name + "  " + suite_statement(name) + "\n";
      std::cout << out;
      return 0;
    }
    if (*kernel) return run_kernel(k_space, k_n, k_m, k_t, k_r, k_out, quad);
    if (*green) return run_green(g_space, g_n, g_lambda, g_r, g_out, quad);
    if (*volume) return run_volume(v_space, v_n, v_m, v_r, v_out, quad);
    if (*verify)
      return run_verify(suite, config_path, report_path, csv_path,
                        seed_opt->count() > 0
                            ? std::optional<std::uint64_t>(seed_value)
                            : std::nullopt);
    if (*maximal) return run_maximal(m_n, m_p, m_suite, m_out, m_summary);
    std::cerr << app.help();
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace hyperlap
