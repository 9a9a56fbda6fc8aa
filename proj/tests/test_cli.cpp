#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "hyperlap/cli.hpp"

namespace {

int run(std::vector<std::string> args) {
  args.insert(args.begin(), "hyperlap");
  std::vector<char*> argv;
  argv.reserve(args.size());
  for (std::string& s : args) argv.push_back(s.data());
  return hyperlap::run_cli(static_cast<int>(argv.size()), argv.data());
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  REQUIRE(static_cast<bool>(in));
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

std::vector<std::vector<double>> csv_rows(const std::string& text) {
  std::vector<std::vector<double>> rows;
  std::istringstream lines(text);
  std::string line;
  std::getline(lines, line);  // header
  while (std::getline(lines, line)) {
    if (line.empty()) continue;
    std::vector<double> row;
    std::istringstream cells(line);
    std::string cell;
    while (std::getline(cells, cell, ',')) row.push_back(std::stod(cell));
    rows.push_back(std::move(row));
  }
  return rows;
}

struct TempFile {
  std::string path;
  explicit TempFile(std::string p) : path(std::move(p)) {}
  ~TempFile() { std::remove(path.c_str()); }
};

}  // namespace

TEST_CASE("kernel subcommand emits closed-form values") {
  TempFile out("cli_kernel_tmp.csv");
  REQUIRE(run({"kernel", "--space", "hn", "--n", "3", "--t", "1", "--r", "1",
               "--output", out.path}) == 0);
  const auto rows = csv_rows(slurp(out.path));
  REQUIRE(rows.size() == 1);
  REQUIRE(rows[0].size() == 3);
  CHECK(rows[0][0] == 1.0);
  CHECK(rows[0][1] == 1.0);
  const double pi = std::numbers::pi;
  const double expected = std::exp(-1.0) * std::pow(4.0 * pi, -1.5) /
                          std::sinh(1.0) * std::exp(-0.25);
  CHECK(rows[0][2] == doctest::Approx(expected).epsilon(1e-12));
}

TEST_CASE("kernel output is byte-identical across runs") {
  TempFile a("cli_det_a_tmp.csv");
  TempFile b("cli_det_b_tmp.csv");
  const std::vector<std::string> args{"kernel", "--space", "hn",  "--n", "2",
                                      "--t",    "0.5",     "--r", "0.5:2:4"};
  auto with_output = [&](const std::string& path) {
    std::vector<std::string> full = args;
    full.push_back("--output");
    full.push_back(path);
    return full;
  };
  REQUIRE(run(with_output(a.path)) == 0);
  REQUIRE(run(with_output(b.path)) == 0);
  const std::string ta = slurp(a.path);
  CHECK(ta == slurp(b.path));
  CHECK(csv_rows(ta).size() == 4);
}

TEST_CASE("green subcommand emits the three-dimensional closed form") {
  TempFile out("cli_green_tmp.csv");
  REQUIRE(run({"green", "--space", "hn", "--n", "3", "--lambda", "1", "--r",
               "1", "--output", out.path}) == 0);
  const auto rows = csv_rows(slurp(out.path));
  REQUIRE(rows.size() == 1);
  const double expected = std::exp(-std::sqrt(2.0)) /
                          (4.0 * std::numbers::pi * std::sinh(1.0));
  CHECK(rows[0][0] == 1.0);
  CHECK(rows[0][1] == 1.0);
  CHECK(rows[0][2] == doctest::Approx(expected).epsilon(1e-10));
}

TEST_CASE("volume subcommand expands radius ranges") {
  TempFile out("cli_volume_tmp.csv");
  REQUIRE(run({"volume", "--space", "hn", "--n", "3", "--r", "0.5:1.5:3",
               "--output", out.path}) == 0);
  const auto rows = csv_rows(slurp(out.path));
  REQUIRE(rows.size() == 3);
  CHECK(rows[0][0] == 0.5);
  CHECK(rows[1][0] == 1.0);
  CHECK(rows[2][0] == 1.5);
  const double pi = std::numbers::pi;
  for (const auto& row : rows) {
    const double r = row[0];
    CHECK(row[1] ==
          doctest::Approx(pi * (std::sinh(2.0 * r) - 2.0 * r)).epsilon(1e-10));
  }
  CHECK(run({"volume", "--space", "hn", "--n", "3", "--r", "1:2"}) == 1);
}

TEST_CASE("verify subcommand reports and gates") {
  TempFile rep("cli_verify_tmp.json");
  TempFile csv("cli_verify_tmp.csv");
  REQUIRE(run({"verify", "lemma31", "--output", rep.path}) == 0);
  const nlohmann::json j = nlohmann::json::parse(slurp(rep.path));
  CHECK(j.at("lemma") == "lemma31");
  CHECK(j.at("pass") == true);
  CHECK(j.at("points").is_array());
  CHECK(!slurp(csv.path).empty());  // margin CSV lands next to the JSON

  CHECK(run({"verify", "no_such_suite"}) == 1);
}

TEST_CASE("verify config file is validated") {
  TempFile cfg("cli_config_tmp.json");
  {
    std::ofstream out(cfg.path);
    out << "{\"bogus\": 1}\n";
  }
  CHECK(run({"verify", "phi", "--config", cfg.path}) == 1);
  {
    std::ofstream out(cfg.path);
    out << "{\"rel_tol\": 1e-8}\n";
  }
  CHECK(run({"verify", "phi", "--config", cfg.path}) == 0);
}

TEST_CASE("usage surface") {
  CHECK(run({"--list"}) == 0);
  CHECK(run({"kernel", "--space", "hn"}) == 1);   // required flags missing
  CHECK(run({"kernel", "--n", "3", "--t", "1", "--r", "1", "--space",
             "nowhere"}) == 1);
  CHECK(run({}) == 1);  // no subcommand prints help
}
