#include "hyperlap/verification.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <limits>
#include <stdexcept>

#include <json.hpp>

#include "hyperlap/geometry.hpp"
#include "hyperlap/green.hpp"
#include "hyperlap/inequalities.hpp"
#include "hyperlap/maximal.hpp"
#include "hyperlap/rng.hpp"
#include "hyperlap/special.hpp"

namespace hyperlap {

namespace {

std::string fmt_full(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%g", v);
  return buf;
}

double clamp_margin(double m) {
  if (std::isnan(m)) return m;
  return std::clamp(m, -1e300, 1e300);
}

// pass <=> every margin finite and above min_margin, plus the suite's own
// side conditions collected in extra_ok.
void finalize(VerificationReport& rep, bool extra_ok, double min_margin) {
  bool finite = true;
  double worst = std::numeric_limits<double>::infinity();
  for (auto& p : rep.points) {
    if (!std::isfinite(p.margin)) finite = false;
    worst = std::min(worst, p.margin);
  }
  if (rep.points.empty()) {
    worst = 0.0;
    finite = false;
  }
  rep.worst_margin = worst;
  rep.pass = finite && extra_ok && worst > min_margin;
}

struct FixtureView {
  bool present = false;
  Calibration cal;
};

FixtureView fixtures_for(const VerifyOptions& opt) {
  FixtureView v;
  if (!opt.reuse_fixtures) return v;
  const std::string path =
      opt.fixture_path.empty() ? default_fixture_path() : opt.fixture_path;
  if (!calibration_exists(path)) return v;
  v.cal = load_calibration(path);
  v.present = true;
  return v;
}

QuadratureSpec scan_spec(const VerifyOptions& opt) {
  QuadratureSpec spec = opt.quad;
  spec.rel_tol = std::max(spec.rel_tol, 1e-8);
  return spec;
}

// Worst two-sided ratio of the ball volume against its comparison shape,
// over n in 2..60 and a log grid of radii.
double volume_sandwich_scan(const QuadratureSpec& spec) {
  double worst = 1.0;
  for (int n = 2; n <= 60; ++n) {
    for (int i = 0; i < 40; ++i) {
      const double r = 0.01 * std::pow(1000.0, i / 39.0);
      const double ratio = hn_volume_sandwich(n, r, spec);
      worst = std::max(worst, std::max(ratio, 1.0 / ratio));
    }
  }
  return worst;
}

constexpr const char* kVolumeSandwichGrid =
    "n in 2..60, r log-spaced on [0.01, 10] (40 points)";

// ---------------------------------------------------------------------------
// Local comparison scan (shared by run_prop45 and the calibration pass).
// ---------------------------------------------------------------------------

struct LocalPoint {
  std::string label;
  double lhs;
  double rhs_base;
  bool edge;
};

constexpr const char* kLocalGrid =
    "n in {5,9,17}, eps = (A/(n-1/2))^{1/4}, A = 1, 5 product profiles, "
    "y in {1, 1.7}";

std::vector<LocalPoint> local_scan(const QuadratureSpec& spec) {
  struct Profile {
    const char* name;
    ProductProfile p;
  };
  const auto one = [](double) { return 1.0; };
  std::vector<Profile> profiles;
  profiles.push_back({"flat", {one, one, 1.0, 0.0, 8.0}});
  profiles.push_back(
      {"upper_window",
       {[](double v) { return v >= 1.0 && v <= 3.5 ? 1.0 : 0.0; }, one, 1.0,
        1.0, 3.5}});
  profiles.push_back(
      {"log_gauss",
       {[](double v) {
          const double l = std::log(v);
          return std::exp(-2.0 * l * l);
        },
        [](double w) { return std::exp(-w * w); }, 4.0, 0.0, 8.0}});
  profiles.push_back(
      {"ramp",
       {[](double v) {
          if (v > 4.0) return 0.0;
          return std::clamp(v - 0.5, 0.0, 1.0);
        },
        [](double w) { return w <= 1.0 ? 1.0 : 0.0; }, 1.0, 0.5, 4.0}});
  profiles.push_back(
      {"offcenter",
       {[](double v) {
          const double l = std::log(v) - 0.5;
          return std::exp(-4.0 * l * l);
        },
        one, 1.0, 0.0, 8.0}});

  std::vector<LocalPoint> out;
  const double A = 1.0;
  for (const int n : {5, 9, 17}) {
    const double eps = std::pow(A / (n - 0.5), 0.25);
    for (const auto& profile : profiles) {
      std::vector<double> ys{1.0};
      if (std::string(profile.name) == "flat") ys.push_back(1.7);
      for (const double y : ys) {
        const LocalComparisonResult res =
            local_maximal_comparison(n, eps, y, profile.p, spec);
        out.push_back({"n=" + std::to_string(n) + " f=" + profile.name +
                           " y=" + fmt(y),
                       res.lhs, res.rhs_base, res.s_grid_edge});
      }
    }
  }
  return out;
}

double local_constant_of(const std::vector<LocalPoint>& pts) {
  double c = 0.0;
  for (const auto& p : pts) c = std::max(c, p.lhs / p.rhs_base);
  return c;
}

// ---------------------------------------------------------------------------
// Part-at-infinity scan on the complex space (shared by run_prop53 and the
// calibration pass).
// ---------------------------------------------------------------------------

struct TailRow {
  std::string label;
  double lhs;       // S_eps f at the center
  double rhs_base;  // 2n(2n-2) resolvent, without the 10^2 slot
};

struct TailScan {
  int n_p = 0;
  int n_scan = 0;
  double eps = 0.0;
  double prefactor = 0.0;  // max lhs / rhs_base: measured slot-in constant
  std::vector<TailRow> rows;
};

constexpr const char* kTailGrid =
    "p = 1.5, n = least admissible with eps floor < 1, 3 radial profiles "
    "around the eps boundary";

TailScan tail_scan(const QuadratureSpec& spec) {
  TailScan out;
  const double p = 1.5;
  const ThresholdsC th = thresholds_hc(p);
  out.n_p = th.n_p;

  // The eps floor carries a bracket^{-1/2} while the n(p) predicate carries
  // bracket^{-1/4}; at n_p the floor can exceed 1 and the admissible window
  // is empty, so walk n upward until it opens.
  const double bracket =
      0.25 * phi(0.25) * (1.0 - 1.0 / std::sqrt(p));
  int n = th.n_p;
  auto floor_at = [&](int nn) {
    const double rho_c = 0.5 * nn;
    return std::sqrt(std::log(rho_c) / rho_c / bracket);
  };
  while (floor_at(n) >= 0.999) ++n;
  out.n_scan = n;
  const double eps = floor_at(n);
  out.eps = eps;

  const double rho_c = 0.5 * n;
  const double pprime = p / (p - 1.0);
  const double lambda = -rho_c * rho_c / pprime;
  const double base_const = 2.0 * n * (2.0 * n - 2.0);

  struct Fn {
    const char* name;
    std::function<double(double)> f;
    double lo;
    double hi;
  };
  std::vector<Fn> fns;
  fns.push_back({"ind_eps_2eps",
                 [eps](double s) { return s >= eps && s <= 2.0 * eps ? 1.0 : 0.0; },
                 eps, 2.0 * eps});
  fns.push_back({"bump",
                 [eps](double s) {
                   const double u = (s - 1.5 * eps) / eps;
                   return std::exp(-8.0 * u * u);
                 },
                 0.5 * eps, 3.0 * eps});
  fns.push_back({"wedge",
                 [eps](double s) {
                   return std::max(0.0, 1.0 - std::abs(s - 1.5 * eps) /
                                              (0.5 * eps));
                 },
                 eps, 2.0 * eps});

  for (const auto& fn : fns) {
    const double lhs = s_epsilon_radial_hc(n, eps, fn.f, fn.lo, fn.hi, spec);
    const double res =
        resolvent_apply_radial_hc(n, lambda, fn.f, fn.lo, fn.hi, spec);
    out.rows.push_back({std::string("p=1.5 f=") + fn.name, lhs,
                        base_const * res});
  }
  for (const auto& row : out.rows)
    out.prefactor = std::max(out.prefactor, row.lhs / row.rhs_base);
  return out;
}

}  // namespace

// ---------------------------------------------------------------------------
// Reports.
// ---------------------------------------------------------------------------

std::string report_json(const VerificationReport& rep) {
  nlohmann::ordered_json j;
  j["lemma"] = rep.suite;
  j["statement"] = rep.statement;
  j["grid"] = rep.grid;
  j["worst_margin"] = rep.worst_margin;
  j["pass"] = rep.pass;
  nlohmann::ordered_json extra = nlohmann::ordered_json::object();
  for (const auto& [key, value] : rep.extra) extra[key] = value;
  j["extra"] = extra;
  nlohmann::ordered_json points = nlohmann::ordered_json::array();
  for (const auto& p : rep.points) {
    nlohmann::ordered_json row;
    row["point"] = p.label;
    row["margin"] = p.margin;
    points.push_back(row);
  }
  j["points"] = points;
  return j.dump(2) + "\n";
}

std::string report_csv(const VerificationReport& rep) {
  std::string out = "point,margin\n";
  for (const auto& p : rep.points)
    out += p.label + "," + fmt_full(p.margin) + "\n";
  return out;
}

// ---------------------------------------------------------------------------
// Calibration fixtures.
// ---------------------------------------------------------------------------

std::string default_fixture_path() {
  if (const char* env = std::getenv("HYPERLAP_FIXTURES")) return env;
  return std::string(HYPERLAP_SOURCE_DIR) + "/fixtures/calibration.json";
}

bool calibration_exists(const std::string& path) {
  return std::filesystem::exists(path);
}

Calibration load_calibration(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("load_calibration: cannot open " + path);
  nlohmann::json j;
  in >> j;
  Calibration c;
  c.c_o = j.at("small_beta").at("c_o").get<double>();
  c.c_fit = j.at("small_beta").at("c_fit").get<double>();
  c.volume_sandwich_max =
      j.at("volume_sandwich").at("max_two_sided").get<double>();
  c.local_constant = j.at("local_constant").at("value").get<double>();
  c.slice_constant_n4 = j.at("ball_slice").at("n4").get<double>();
  c.slice_constant_n8 = j.at("ball_slice").at("n8").get<double>();
  c.tail_prefactor_hc = j.at("tail_prefactor_hc").at("value").get<double>();
  c.opnorm_budget_n2 = j.at("opnorm_budget").at("n2").get<double>();
  c.opnorm_budget_n3 = j.at("opnorm_budget").at("n3").get<double>();
  return c;
}

void save_calibration(const std::string& path, const Calibration& c) {
  nlohmann::ordered_json j;
  j["small_beta"] = {{"c_o", c.c_o},
                     {"c_fit", c.c_fit},
                     {"grid", "beta dyadic 2^0 .. 2^-14"}};
  j["volume_sandwich"] = {{"max_two_sided", c.volume_sandwich_max},
                          {"grid", kVolumeSandwichGrid}};
  j["local_constant"] = {
      {"A", 1.0}, {"value", c.local_constant}, {"grid", kLocalGrid}};
  j["ball_slice"] = {{"A", 1.0},
                     {"n4", c.slice_constant_n4},
                     {"n8", c.slice_constant_n8},
                     {"samples", 100},
                     {"seed", 20240817}};
  j["tail_prefactor_hc"] = {{"value", c.tail_prefactor_hc},
                            {"grid", kTailGrid}};
  j["opnorm_budget"] = {{"p", 1.5},
                        {"n2", c.opnorm_budget_n2},
                        {"n3", c.opnorm_budget_n3},
                        {"suite", "standard"},
                        {"slack", 1.10}};
  const std::filesystem::path fp(path);
  if (fp.has_parent_path()) std::filesystem::create_directories(fp.parent_path());
  std::ofstream outf(path);
  if (!outf) throw std::runtime_error("save_calibration: cannot write " + path);
  outf << j.dump(2) << "\n";
}

Calibration compute_calibration(const QuadratureSpec& spec0,
                                std::uint64_t seed, bool include_opnorm) {
  QuadratureSpec spec = spec0;
  spec.rel_tol = std::max(spec.rel_tol, 1e-8);

  Calibration c;
  const SmallBetaCalibration sb = calibrate_small_beta();
  c.c_o = sb.c_o;
  c.c_fit = sb.c_fit;
  c.volume_sandwich_max = volume_sandwich_scan(spec);
  c.local_constant = local_constant_of(local_scan(spec));

  const CounterRng rng(seed);
  c.slice_constant_n4 = ball_slice_scan(4, 1.0, 100, rng, spec).worst_ratio;
  c.slice_constant_n8 = ball_slice_scan(8, 1.0, 100, rng, spec).worst_ratio;

  c.tail_prefactor_hc = tail_scan(spec).prefactor;

  if (include_opnorm) {
    for (const int n : {2, 3}) {
      const HalfSpaceGrid grid = standard_grid(n);
      const OpnormResult r = empirical_opnorm(grid, 1.5, standard_suite(grid));
      (n == 2 ? c.opnorm_budget_n2 : c.opnorm_budget_n3) =
          1.10 * r.worst_ratio;
    }
  }
  return c;
}

// ---------------------------------------------------------------------------
// Suites.
// ---------------------------------------------------------------------------

const std::vector<std::string>& verification_suites() {
  static const std::vector<std::string> names{"lemma31", "phi",    "lemma42",
                                              "lemma52", "prop43", "prop45",
                                              "prop53",  "cp2b"};
  return names;
}

std::string suite_statement(const std::string& s) {
  if (s == "lemma31")
    return "sup_{0<s<beta} [(s/beta)^2 + ln(1 - sinh^2(s)/sinh^2(beta))] lies "
           "in (0, c beta^4] with maximizer s_o ~ beta^2/sqrt(3)";
  if (s == "phi")
    return "Phi(s) = ln(cosh s)/s^2 extends to Phi(0+) = 1/2 and decreases "
           "strictly on (0, 10]";
  if (s == "lemma42")
    return "G_{n}(-(1-a^2) rho^2; r) >= [n(n-2) Omega_n]^{-1} "
           "(sinh r)^{-(n-2)} cosh(r/2)^{2 rho (1-a) - 2} for a rho > 1/2, "
           "(1-a) rho >= 1";
  if (s == "lemma52")
    return "Gc_{n}(-(1-a^2) rho_c^2; s) >= [2n(2n-2)]^{-1} [2^{2n} "
           "Omega_{2n}]^{-1} sinh(s/2)^{-(2n-2)} cosh(s/4)^{2(1-a)n - 4} for "
           "a rho_c > 1/4, (1-a) rho_c >= 1";
  if (s == "prop43")
    return "S_eps f(o) <= 8 C n (n-2) [(-rho^2/p') - Laplacian]^{-1} |f|(o) "
           "for radial f, eps at its admissible floor, C the volume-sandwich "
           "calibration";
  if (s == "prop45")
    return "sup_{0<r<eps} ball average of product f at (y, x) <= c(A) "
           "sup_{s>0} e^{s L_{n-1}} [M_euclid(psi) phi](y)";
  if (s == "prop53")
    return "S_eps f(o) <= 10^2 2n (2n-2) [(-rho_c^2/p') - Laplacian]^{-1} "
           "|f|(o) for radial f on the complex space";
  if (s == "cp2b")
    return "slice volume / (Omega_{2n} (2 sinh(r/2))^{2n-1}) <= C(A) "
           "sqrt(n-1) (ah)^{n/2} exp(-(n-1) tau^2/r^2) "
           "exp(-n^2 r^2/(16(n-1))) for |ln(h/a)| < r <= A (n-1/2)^{-1/4}";
  throw std::invalid_argument("unknown verification suite: " + s);
}

VerificationReport run_suite(const std::string& suite,
                             const VerifyOptions& opt) {
  if (suite == "lemma31") return run_lemma31(opt);
  if (suite == "phi") return run_phi(opt);
  if (suite == "lemma42") return run_lemma42(opt);
  if (suite == "lemma52") return run_lemma52(opt);
  if (suite == "prop43") return run_prop43(opt);
  if (suite == "prop45") return run_prop45(opt);
  if (suite == "prop53") return run_prop53(opt);
  if (suite == "cp2b") return run_cp2b(opt);
  throw std::invalid_argument("unknown verification suite: " + suite);
}

VerificationReport run_lemma31(const VerifyOptions& opt) {
  VerificationReport rep;
  rep.suite = "lemma31";
  rep.statement = suite_statement(rep.suite);

  const SmallBetaCalibration cal = calibrate_small_beta();
  rep.grid = "beta dyadic from " + fmt(cal.c_o) + " down to 2^-14";

  double max_ratio = 0.0;
  for (double beta = cal.c_o; beta > 0x1p-14 * 0.75; beta *= 0.5) {
    const FBetaMax m = s_o_solve(beta);
    const double ratio = m.value / std::pow(beta, 4);
    max_ratio = std::max(max_ratio, ratio);
    double margin = m.value;
    if (beta <= 0.01) {
      const double target = beta * beta / std::sqrt(3.0);
      margin = std::min(margin, 0.02 - std::abs(m.s_o / target - 1.0));
    }
    rep.points.push_back({"beta=" + fmt(beta), clamp_margin(margin)});
  }
  rep.extra.emplace_back("c_o", cal.c_o);
  rep.extra.emplace_back("c_fit", cal.c_fit);
  rep.extra.emplace_back("max_ratio_beta4", max_ratio);

  bool extra_ok = true;
  const FixtureView fix = fixtures_for(opt);
  if (fix.present) {
    const double drift = std::abs(cal.c_o / fix.cal.c_o - 1.0);
    rep.extra.emplace_back("fixture_c_o", fix.cal.c_o);
    rep.extra.emplace_back("fixture_drift", drift);
    extra_ok = extra_ok && drift <= 0.01;
  }
  finalize(rep, extra_ok, 0.0);
  return rep;
}

VerificationReport run_phi(const VerifyOptions&) {
  VerificationReport rep;
  rep.suite = "phi";
  rep.statement = suite_statement(rep.suite);
  rep.grid = "s = 0.01 .. 10.00 step 0.01, limit probe at s = 1e-6";

  const double limit_error = std::abs(phi(1e-6) - 0.5);
  rep.extra.emplace_back("limit_error", limit_error);
  for (int i = 1; i < 1000; ++i) {
    const double s = 0.01 * i;
    const double margin = phi(s) - phi(s + 0.01);
    rep.points.push_back({"s=" + fmt(s), clamp_margin(margin)});
  }
  finalize(rep, limit_error <= 1e-9, 0.0);
  return rep;
}

VerificationReport run_lemma42(const VerifyOptions& opt) {
  VerificationReport rep;
  rep.suite = "lemma42";
  rep.statement = suite_statement(rep.suite);
  // At (1 - alpha) rho = 1 the bound is an identity (the right side is then
  // the exact Green function of lambda = -(n-2)), so the top grid point
  // stays strictly inside the admissible region to keep margins positive.
  rep.grid =
      "n in {5,7,9,15}; alpha 5 points with alpha rho > 1/2 and "
      "(1-alpha) rho >= 1.05; r in {0.1,0.25,0.5,1,2,3.5,5}";
  const QuadratureSpec quad = scan_spec(opt);

  for (const int n : {5, 7, 9, 15}) {
    const double rho = 0.5 * (n - 1);
    const double a_lo = 0.5 / rho;
    const double a_hi = 1.0 - 1.05 / rho;
    for (int i = 1; i <= 5; ++i) {
      const double alpha = a_lo + (a_hi - a_lo) * i / 5.0;
      const double lambda = -(1.0 - alpha * alpha) * rho * rho;
      for (const double r : {0.1, 0.25, 0.5, 1.0, 2.0, 3.5, 5.0}) {
        const double margin =
            std::expm1(log_green_hn(n, lambda, r, quad) -
                       log_green_lower_bound_hn(n, alpha, r));
        rep.points.push_back({"n=" + std::to_string(n) +
                                  " alpha=" + fmt(alpha) + " r=" + fmt(r),
                              clamp_margin(margin)});
      }
    }
  }
  finalize(rep, true, 0.0);
  return rep;
}

VerificationReport run_lemma52(const VerifyOptions& opt) {
  VerificationReport rep;
  rep.suite = "lemma52";
  rep.statement = suite_statement(rep.suite);
  rep.grid =
      "n in {3,4,6}; alpha 5 points inside (1/(2n), 1 - 2/n]; "
      "s in {0.1,0.25,0.5,1,2,3.5,5}";
  const QuadratureSpec quad = scan_spec(opt);

  for (const int n : {3, 4, 6}) {
    const double a_lo = 0.5 / n;  // alpha rho_c > 1/4 with rho_c = n/2
    const double a_hi = 1.0 - 2.0 / n;
    for (int i = 1; i <= 5; ++i) {
      const double alpha = a_lo + (a_hi - a_lo) * i / 5.0;
      const double rho_c = 0.5 * n;
      const double lambda = -(1.0 - alpha * alpha) * rho_c * rho_c;
      for (const double s : {0.1, 0.25, 0.5, 1.0, 2.0, 3.5, 5.0}) {
        const double margin =
            std::expm1(log_green_hc(n, lambda, s, quad) -
                       log_green_lower_bound_hc(n, alpha, s));
        rep.points.push_back({"n=" + std::to_string(n) +
                                  " alpha=" + fmt(alpha) + " s=" + fmt(s),
                              clamp_margin(margin)});
      }
    }
  }
  finalize(rep, true, 0.0);
  return rep;
}

VerificationReport run_prop43(const VerifyOptions& opt) {
  VerificationReport rep;
  rep.suite = "prop43";
  rep.statement = suite_statement(rep.suite);
  rep.grid =
      "p in {1.25, 1.5, 1.75}; n = n(p), eps at its floor; 5 radial "
      "profiles supported in [0.3, 3.1]";
  const QuadratureSpec quad = scan_spec(opt);

  const FixtureView fix = fixtures_for(opt);
  const double c_star = fix.present ? fix.cal.volume_sandwich_max
                                    : volume_sandwich_scan(quad);
  rep.extra.emplace_back("volume_sandwich_max", c_star);

  bool extra_ok = true;
  for (const double p : {1.25, 1.5, 1.75}) {
    const Thresholds th = thresholds(p);
    const int n = th.n_p;
    const double eps = th.eps_lower;
    const double rho = 0.5 * (n - 1);
    const double alpha = 1.0 / std::sqrt(p);
    const double pprime = p / (p - 1.0);
    const double lambda = -rho * rho / pprime;

    const std::string tag = "p=" + fmt(p);
    rep.extra.emplace_back("n_" + tag, n);
    rep.extra.emplace_back("eps_" + tag, eps);
    rep.extra.emplace_back("slack_alpha_rho_" + tag, alpha * rho - 0.5);
    rep.extra.emplace_back("slack_one_minus_alpha_rho_" + tag,
                           (1.0 - alpha) * rho - 1.0);
    rep.extra.emplace_back("slack_phi_threshold_" + tag, 0.5 - eps);
    extra_ok = extra_ok && eps < 1.0 && alpha * rho > 0.5 &&
               (1.0 - alpha) * rho >= 1.0;

    struct Fn {
      const char* name;
      std::function<double(double)> f;
      double lo;
      double hi;
    };
    std::vector<Fn> fns;
    fns.push_back({"ind_eps_2eps",
                   [eps](double r) {
                     return r >= eps && r <= 2.0 * eps ? 1.0 : 0.0;
                   },
                   eps, 2.0 * eps});
    fns.push_back(
        {"ind_1_2", [](double r) { return r >= 1.0 && r <= 2.0 ? 1.0 : 0.0; },
         1.0, 2.0});
    fns.push_back({"exp_decay",
                   [eps](double r) { return std::exp(-3.0 * (r - eps)); },
                   eps, eps + 2.5});
    fns.push_back({"bump",
                   [](double r) {
                     const double u = r - 1.0;
                     return std::exp(-8.0 * u * u);
                   },
                   0.3, 2.0});
    fns.push_back({"wedge",
                   [](double r) {
                     return std::max(0.0, 1.0 - std::abs(r - 1.5));
                   },
                   0.5, 2.5});

    for (const auto& fn : fns) {
      const double lhs = s_epsilon_radial(n, eps, fn.f, fn.lo, fn.hi, quad);
      const double res =
          resolvent_apply_radial(n, lambda, fn.f, fn.lo, fn.hi, quad);
      const double rhs = 8.0 * c_star * n * (n - 2.0) * res;
      rep.points.push_back(
          {tag + " f=" + fn.name, clamp_margin(rhs / lhs - 1.0)});
    }
  }
  finalize(rep, extra_ok, 0.0);
  return rep;
}

VerificationReport run_prop45(const VerifyOptions& opt) {
  VerificationReport rep;
  rep.suite = "prop45";
  rep.statement = suite_statement(rep.suite);
  rep.grid = kLocalGrid;
  const QuadratureSpec quad = scan_spec(opt);

  const std::vector<LocalPoint> pts = local_scan(quad);
  const double measured = local_constant_of(pts);
  rep.extra.emplace_back("local_constant", measured);

  bool extra_ok = true;
  int edge_count = 0;
  for (const auto& p : pts) {
    if (p.edge) ++edge_count;
    const double margin = measured * p.rhs_base / p.lhs - 1.0;
    rep.points.push_back({p.label, clamp_margin(margin)});
  }
  rep.extra.emplace_back("s_grid_edge_count", edge_count);
  extra_ok = extra_ok && edge_count == 0;

  const FixtureView fix = fixtures_for(opt);
  if (fix.present) {
    const double drift = std::abs(measured / fix.cal.local_constant - 1.0);
    rep.extra.emplace_back("fixture_local_constant", fix.cal.local_constant);
    rep.extra.emplace_back("fixture_drift", drift);
    extra_ok = extra_ok && drift <= 0.01;
  }
  finalize(rep, extra_ok, -1e-9);
  return rep;
}

VerificationReport run_prop53(const VerifyOptions& opt) {
  VerificationReport rep;
  rep.suite = "prop53";
  rep.statement = suite_statement(rep.suite);
  rep.grid = kTailGrid;
  const QuadratureSpec quad = scan_spec(opt);

  const TailScan scan = tail_scan(quad);
  rep.extra.emplace_back("n_p", scan.n_p);
  rep.extra.emplace_back("n_scan", scan.n_scan);
  rep.extra.emplace_back("eps", scan.eps);
  rep.extra.emplace_back("measured_prefactor", scan.prefactor);

  for (const auto& row : scan.rows) {
    const double margin = 100.0 * row.rhs_base / row.lhs - 1.0;
    rep.points.push_back({row.label, clamp_margin(margin)});
  }

  const FixtureView fix = fixtures_for(opt);
  if (fix.present)
    rep.extra.emplace_back("fixture_prefactor", fix.cal.tail_prefactor_hc);
  finalize(rep, true, 0.0);
  return rep;
}

VerificationReport run_cp2b(const VerifyOptions& opt) {
  VerificationReport rep;
  rep.suite = "cp2b";
  rep.statement = suite_statement(rep.suite);
  rep.grid = "n in {4, 8}, A = 1, " + std::to_string(opt.cp2b_samples) +
             " samples of (a, tau, r) per n, paired across n by seed";
  const QuadratureSpec quad = scan_spec(opt);

  const CounterRng rng(opt.seed);
  const BallSliceScan s4 = ball_slice_scan(4, 1.0, opt.cp2b_samples, rng, quad);
  const BallSliceScan s8 = ball_slice_scan(8, 1.0, opt.cp2b_samples, rng, quad);
  const double c_max = std::max(s4.worst_ratio, s8.worst_ratio);

  for (std::size_t i = 0; i < s4.ratios.size(); ++i)
    rep.points.push_back({"n=4 sample=" + std::to_string(i),
                          clamp_margin(c_max - s4.ratios[i])});
  for (std::size_t i = 0; i < s8.ratios.size(); ++i)
    rep.points.push_back({"n=8 sample=" + std::to_string(i),
                          clamp_margin(c_max - s8.ratios[i])});

  const double stability = std::abs(std::log(s4.worst_ratio / s8.worst_ratio));
  rep.extra.emplace_back("slice_constant_n4", s4.worst_ratio);
  rep.extra.emplace_back("slice_constant_n8", s8.worst_ratio);
  rep.extra.emplace_back("stability_log_ratio", stability);

  bool extra_ok = std::isfinite(c_max) && stability <= std::log(2.0);
  const FixtureView fix = fixtures_for(opt);
  if (fix.present && opt.cp2b_samples == 100) {
    const double d4 = std::abs(s4.worst_ratio / fix.cal.slice_constant_n4 - 1.0);
    const double d8 = std::abs(s8.worst_ratio / fix.cal.slice_constant_n8 - 1.0);
    rep.extra.emplace_back("fixture_drift_n4", d4);
    rep.extra.emplace_back("fixture_drift_n8", d8);
    extra_ok = extra_ok && d4 <= 0.01 && d8 <= 0.01;
  }
  finalize(rep, extra_ok, -1e-9);
  return rep;
}

}  // namespace hyperlap
