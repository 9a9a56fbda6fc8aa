// Acceptance gate: one timed pass/fail line per criterion, exit 0 when all
// hold.  Tolerances and parameter grids are fixed here on purpose; loosening
// them is a library regression, not a test tweak.
#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "hyperlap/geometry.hpp"
#include "hyperlap/green.hpp"
#include "hyperlap/inequalities.hpp"
#include "hyperlap/kernels.hpp"
#include "hyperlap/maximal.hpp"
#include "hyperlap/quadrature.hpp"
#include "hyperlap/rng.hpp"
#include "hyperlap/special.hpp"
#include "hyperlap/verification.hpp"

using namespace hyperlap;

namespace {

const QuadratureSpec spec;

bool timed(int id, const char* label, double budget_s,
           const std::function<bool(std::string&)>& body, bool& all_pass) {
  std::string detail;
  bool ok = false;
  const auto start = std::chrono::steady_clock::now();
  try {
    ok = body(detail);
  } catch (const std::exception& e) {
    ok = false;
    detail = std::string("exception: ") + e.what();
  }
  const double elapsed =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
          .count();
  if (ok && budget_s > 0.0 && elapsed > budget_s) {
    ok = false;
    detail = "over time budget";
  }
  std::printf("%s criterion %d: %s (%.1fs)%s%s\n", ok ? "PASS" : "FAIL", id,
              label, elapsed, detail.empty() ? "" : " -- ", detail.c_str());
  std::fflush(stdout);
  all_pass = all_pass && ok;
  return ok;
}

bool suite_passes(const char* name, std::string& detail) {
  const VerificationReport rep = run_suite(name, VerifyOptions{});
  if (!rep.pass)
    detail += std::string(name) + " worst margin " +
              std::to_string(rep.worst_margin) + "; ";
  return rep.pass;
}

double rel_err(double value, double reference) {
  return std::abs(value - reference) / std::abs(reference);
}

}  // namespace

int main() {
  bool all = true;

  timed(1, "resolvent closed form vs heat-transform oracle", 60.0,
        [](std::string& detail) {
          double worst = 0.0;
          for (int n : {3, 4, 5, 7})
            for (double lambda : {0.0, 1.0})
              for (double r : {0.5, 1.0, 2.0, 4.0})
                worst = std::max(
                    worst, rel_err(green_hn(n, lambda, r, spec),
                                   green_hn_oracle(n, lambda, r, spec)));
          detail = "worst rel " + std::to_string(worst);
          return worst < 1e-3;
        },
        all);

  timed(2, "plane heat kernel descent vs direct integral", 10.0,
        [](std::string& detail) {
          double worst = 0.0;
          for (double t : {0.5, 1.0})
            for (double r : {0.5, 1.0, 2.0})
              worst = std::max(worst, rel_err(hn_heat(2, t, r, spec),
                                              k2_direct(t, r, spec)));
          detail = "worst rel " + std::to_string(worst);
          return worst <= 1e-6;
        },
        all);

  timed(3, "heat kernel masses equal 1", 60.0,
        [](std::string& detail) {
          double worst_hn = 0.0;
          for (int n : {2, 3, 5})
            for (double t : {0.1, 1.0})
              worst_hn = std::max(
                  worst_hn, std::abs(hn_heat_mass(n, t, spec) - 1.0));
          double worst_hc = 0.0;
          for (double t : {0.5, 1.0})
            worst_hc =
                std::max(worst_hc, std::abs(hc_heat_mass(2, t, spec) - 1.0));
          detail = "hn dev " + std::to_string(worst_hn) + ", hc dev " +
                   std::to_string(worst_hc);
          return worst_hn <= 1e-5 && worst_hc <= 1e-4;
        },
        all);

  timed(4, "verification suite lemma31", 5.0,
        [](std::string& detail) { return suite_passes("lemma31", detail); },
        all);

  timed(5, "verification suites lemma42 and lemma52", 120.0,
        [](std::string& detail) {
          const bool a = suite_passes("lemma42", detail);
          const bool b = suite_passes("lemma52", detail);
          return a && b;
        },
        all);

  timed(6, "verification suite prop43", 120.0,
        [](std::string& detail) { return suite_passes("prop43", detail); },
        all);

  timed(7, "verification suite prop45 with persisted constant", 0.0,
        [](std::string& detail) {
          if (!calibration_exists(default_fixture_path())) {
            detail = "missing calibration fixture";
            return false;
          }
          return suite_passes("prop45", detail);
        },
        all);

  timed(8, "verification suite cp2b and region volume vs Monte Carlo", 0.0,
        [](std::string& detail) {
          if (!suite_passes("cp2b", detail)) return false;

          const HTypeDescriptor d = HTypeDescriptor::heisenberg(2);
          const double exact = region_volume(d, 1.0, 1.0, 1.0, spec);
          const double kap = kappa(1.0, 1.0, 1.0);
          const double wmax = std::sqrt(8.0 * (std::sqrt(1.0 + kap / 4.0) - 1.0));
          const double umax = std::sqrt(kap);
          const double box = 4.0 * wmax * wmax * 2.0 * umax;
          const CounterRng rng(20240817);
          const long long samples = 10000000;
          long long hits = 0;
          for (long long i = 0; i < samples; ++i) {
            const std::uint64_t c = 4ull * static_cast<std::uint64_t>(i);
            const double w1 = rng.uniform(c, -wmax, wmax);
            const double w2 = rng.uniform(c + 1, -wmax, wmax);
            const double u = rng.uniform(c + 2, -umax, umax);
            const double w2n = w1 * w1 + w2 * w2;
            if (w2n + w2n * w2n / 16.0 + u * u < kap) ++hits;
          }
          const double mc =
              box * static_cast<double>(hits) / static_cast<double>(samples);
          const double rel = rel_err(exact, mc);
          detail += "volume rel dev " + std::to_string(rel);
          return rel <= 0.005;
        },
        all);

  timed(9, "verification suite phi", 0.0,
        [](std::string& detail) { return suite_passes("phi", detail); },
        all);

  timed(10, "group operations exact on randomized inputs", 0.0,
        [](std::string& detail) {
          for (int k : {2, 4, 6}) HTypeDescriptor::heisenberg(k).validate();
          for (int m : {1, 2, 3}) HTypeDescriptor::quaternionic(m).validate();

          const HTypeDescriptor ds[2] = {HTypeDescriptor::heisenberg(4),
                                         HTypeDescriptor::quaternionic(2)};
          const CounterRng rng(20240817);
          const double tol = 1e-10;
          long long ball_checked = 0;
          long long bad = 0;

          const auto diff = [](const HTypePoint& a, const HTypePoint& b) {
            double worst = 0.0;
            for (std::size_t i = 0; i < a.x.size(); ++i)
              worst = std::max(worst, std::abs(a.x[i] - b.x[i]));
            for (std::size_t j = 0; j < a.rho.size(); ++j)
              worst = std::max(worst, std::abs(a.rho[j] - b.rho[j]));
            return worst;
          };
          const auto draw = [&](const HTypeDescriptor& d, std::uint64_t base) {
            HTypePoint p;
            for (int i = 0; i < d.two_n; ++i)
              p.x.push_back(rng.uniform(base + static_cast<std::uint64_t>(i),
                                        -1.5, 1.5));
            for (int j = 0; j < d.m; ++j)
              p.rho.push_back(rng.uniform(
                  base + static_cast<std::uint64_t>(d.two_n + j), -1.5, 1.5));
            return p;
          };

          for (int i = 0; i < 10000; ++i) {
            const HTypeDescriptor& d = ds[i % 2];
            const std::uint64_t c = 64ull * static_cast<std::uint64_t>(i);
            const HTypePoint p = draw(d, c);
            const HTypePoint q = draw(d, c + 8);
            const HTypePoint r = draw(d, c + 16);

            if (diff(htype_mul(d, htype_mul(d, p, q), r),
                     htype_mul(d, p, htype_mul(d, q, r))) > tol)
              ++bad;
            HTypePoint e = htype_mul(d, p, htype_inverse(p));
            HTypePoint zero;
            zero.x.assign(p.x.size(), 0.0);
            zero.rho.assign(p.rho.size(), 0.0);
            if (diff(e, zero) > tol) ++bad;
            const double s = std::exp(rng.uniform(c + 24, -0.7, 0.7));
            if (diff(htype_mul(d, htype_dilate(p, s), htype_dilate(q, s)),
                     htype_dilate(htype_mul(d, p, q), s)) > tol)
              ++bad;

            ANPoint g{std::exp(rng.uniform(c + 25, -0.7, 0.7)), p};
            ANPoint h{std::exp(rng.uniform(c + 26, -0.7, 0.7)), q};
            ANPoint w{std::exp(rng.uniform(c + 27, -0.7, 0.7)), r};
            const ANPoint lhs = an_mul(d, an_mul(d, g, h), w);
            const ANPoint rhs = an_mul(d, g, an_mul(d, h, w));
            if (std::abs(lhs.a - rhs.a) > tol ||
                diff(lhs.n_part, rhs.n_part) > tol)
              ++bad;
            const ANPoint ge = an_mul(d, g, an_inverse(g));
            if (std::abs(ge.a - 1.0) > tol || diff(ge.n_part, zero) > tol)
              ++bad;

            BallSpec ball;
            ball.center = h;
            ball.radius = rng.uniform(c + 28, 0.3, 2.0);
            const double dist = an_distance(d, h, g);
            if (std::abs(dist - ball.radius) > 1e-9) {
              ++ball_checked;
              if (ball_contains(d, ball, g) != (dist < ball.radius)) ++bad;
            }
          }
          detail = std::to_string(bad) + " violations, " +
                   std::to_string(ball_checked) + " ball cases";
          return bad == 0 && ball_checked > 9900;
        },
        all);

  timed(11, "discrete maximal operator on the standard grids", 600.0,
        [](std::string& detail) {
          bool ok = true;
          for (int n : {2, 3}) {
            HalfSpaceGrid g = standard_grid(n);
            const std::size_t nx = g.x_axis.size();
            std::size_t center = g.log_y.size() / 2;
            for (int k = 1; k < n; ++k) center = center * nx + nx / 2;
            const std::vector<double> radii = default_radius_grid(g);

            std::fill(g.values.begin(), g.values.end(), 2.0);
            if (std::abs(hn_discrete_maximal(g, center, radii) - 2.0) > 1e-12)
              ok = false;
            std::fill(g.values.begin(), g.values.end(), 0.0);
            g.values[center] = 5.0;
            if (hn_discrete_maximal(g, center, radii) != 5.0) ok = false;
          }
          if (!ok) {
            detail = "exactness on constants or spikes failed";
            return false;
          }

          const Calibration cal = load_calibration(default_fixture_path());
          const HalfSpaceGrid g2 = standard_grid(2);
          const HalfSpaceGrid g3 = standard_grid(3);
          const double r2 =
              empirical_opnorm(g2, 1.5, standard_suite(g2)).worst_ratio;
          const double r3 =
              empirical_opnorm(g3, 1.5, standard_suite(g3)).worst_ratio;
          detail = "ratios " + std::to_string(r2) + " / " +
                   std::to_string(r3) + ", budgets " +
                   std::to_string(cal.opnorm_budget_n2) + " / " +
                   std::to_string(cal.opnorm_budget_n3);
          return r2 <= cal.opnorm_budget_n2 && r3 <= cal.opnorm_budget_n3 &&
                 r3 <= 2.0 * r2 && r2 <= 2.0 * r3;
        },
        all);

  timed(12, "derivative coefficient table and expansion identity", 0.0,
        [](std::string& detail) {
          const CkjTable table = ckj_table(12);
          bool ok = table.at(2, 1) == 1 && table.at(2, 2) == 1 &&
                    table.at(3, 1) == 3 && table.at(3, 2) == 3 &&
                    table.at(3, 3) == 1 && table.at(4, 2) == 15 &&
                    table.at(4, 3) == 6;
          for (int k = 2; k <= 10 && ok; ++k)
            ok = table.at(k, 1) == odd_double_factorial(k) &&
                 table.at(k, k) == 1;
          if (!ok) {
            detail = "coefficient table mismatch";
            return false;
          }
          double worst = 0.0;
          const RadialKernelExpr expr = an_operator_expr(2, 2);
          for (double r : {0.5, 1.0, 2.0})
            for (double t : {0.5, 1.0})
              worst = std::max(worst,
                               rel_err(expr.evaluate(t, r),
                                       an_expansion_sum(2, 2, table, t, r)));
          detail = "worst rel " + std::to_string(worst);
          return worst <= 1e-8;
        },
        all);

  std::printf("%s\n", all ? "ALL CRITERIA PASS" : "ACCEPTANCE FAILED");
  return all ? 0 : 1;
}
