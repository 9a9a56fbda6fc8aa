#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "hyperlap/quadrature.hpp"

namespace hyperlap {

struct ReportPoint {
  std::string label;  // parameter point, e.g. "n=5 alpha=0.3 r=1.2"
  double margin;      // nonnegative when the statement holds there
};

/// Outcome of one verification scan.  The statement field spells out the
/// checked inequality; worst_margin is the minimum over the scan points.
struct VerificationReport {
  std::string suite;
  std::string statement;
  std::string grid;
  double worst_margin = 0.0;
  bool pass = false;
  std::vector<std::pair<std::string, double>> extra;
  std::vector<ReportPoint> points;
};

std::string report_json(const VerificationReport&);
std::string report_csv(const VerificationReport&);

/// Measured constants shared between scans, persisted under fixtures/ so a
/// rerun can be compared against the recorded values.
struct Calibration {
  double c_o = 0.0;     // largest admissible beta from the dyadic scan
  double c_fit = 0.0;   // fitted fourth-order constant of the beta scan
  double volume_sandwich_max = 0.0;  // worst two-sided volume-comparison ratio
  double local_constant = 0.0;       // local comparison constant at A = 1
  double slice_constant_n4 = 0.0;    // ball-slice ratio bound, n = 4
  double slice_constant_n8 = 0.0;    // ball-slice ratio bound, n = 8
  double tail_prefactor_hc = 0.0;    // measured constant in the 10^2 slot
  double opnorm_budget_n2 = 0.0;     // maximal-operator ratio budgets, p = 1.5
  double opnorm_budget_n3 = 0.0;
};

/// fixtures/calibration.json next to the sources, overridable through the
/// HYPERLAP_FIXTURES environment variable.
std::string default_fixture_path();
bool calibration_exists(const std::string& path);
Calibration load_calibration(const std::string& path);
void save_calibration(const std::string& path, const Calibration&);

/// Recomputes every calibrated constant from scratch.  The operator-norm
/// budgets dominate the cost; pass include_opnorm = false to skip them
/// (their fields are then left at zero).
Calibration compute_calibration(const QuadratureSpec& spec, std::uint64_t seed,
                                bool include_opnorm);

struct VerifyOptions {
  QuadratureSpec quad;
  std::uint64_t seed = 20240817;
  int cp2b_samples = 100;
  bool reuse_fixtures = true;  // compare against persisted constants
  std::string fixture_path;    // empty selects default_fixture_path()
};

const std::vector<std::string>& verification_suites();
std::string suite_statement(const std::string& suite);

/// Dispatch by suite name; throws std::invalid_argument for unknown names.
VerificationReport run_suite(const std::string& suite, const VerifyOptions&);

VerificationReport run_lemma31(const VerifyOptions&);
VerificationReport run_phi(const VerifyOptions&);
VerificationReport run_lemma42(const VerifyOptions&);
VerificationReport run_lemma52(const VerifyOptions&);
VerificationReport run_prop43(const VerifyOptions&);
VerificationReport run_prop45(const VerifyOptions&);
VerificationReport run_prop53(const VerifyOptions&);
VerificationReport run_cp2b(const VerifyOptions&);

}  // namespace hyperlap
