#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "hyperlap/geometry.hpp"
#include "hyperlap/green.hpp"
#include "hyperlap/kernel_expr.hpp"
#include "hyperlap/kernels.hpp"
#include "hyperlap/rng.hpp"
#include "hyperlap/special.hpp"

using namespace hyperlap;

namespace {
const QuadratureSpec spec;
const double pi = std::numbers::pi;

double k3_closed(double t, double r) {
  const double shape = (r == 0.0) ? 1.0 : r / std::sinh(r);
  return std::exp(-t) * std::pow(4.0 * pi * t, -1.5) * shape *
         std::exp(-r * r / (4.0 * t));
}

// One more derivation applied to the closed K_3 by hand.
double k5_closed(double t, double r) {
  const double sh = std::sinh(r), ch = std::cosh(r);
  const double bracket =
      r * ch / (sh * sh * sh) - 1.0 / (sh * sh) + r * r / (2.0 * t * sh * sh);
  return std::exp(-4.0 * t) * std::pow(4.0 * pi * t, -1.5) / (2.0 * pi) *
         std::exp(-r * r / (4.0 * t)) * bracket;
}
}  // namespace

TEST_CASE("line kernel normalization") {
  CHECK(k1(1.0 / (4.0 * pi), 0.0) == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(k1(1.0, 0.0) ==
        doctest::Approx(1.0 / std::sqrt(4.0 * pi)).epsilon(1e-14));
  for (double t : {0.25, 1.0})
    CHECK(integrate_real_line([t](double s) { return k1(t, std::fabs(s)); },
                              0.0, spec) ==
          doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("three-dimensional kernel closed form") {
  CHECK(odd_heat_expr(3).evaluate(1.0, 1.0) ==
        doctest::Approx(std::exp(-1.0) * std::pow(4.0 * pi, -1.5) /
                        std::sinh(1.0) * std::exp(-0.25))
            .epsilon(1e-13));
  for (double t : {0.3, 1.0})
    for (double r : {0.2, 1.0, 2.5})
      CHECK(hn_heat(3, t, r, spec) ==
            doctest::Approx(k3_closed(t, r)).epsilon(1e-13));
}

TEST_CASE("five-dimensional kernel against a hand derivation") {
  for (double t : {0.5, 1.0})
    for (double r : {0.5, 1.2, 3.0})
      CHECK(hn_heat(5, t, r, spec) ==
            doctest::Approx(k5_closed(t, r)).epsilon(1e-12));
}

TEST_CASE("recursion step against a finite-difference oracle") {
  const double t = 0.5, r = 2.0, h = 1e-5;
  const double fd =
      std::exp(-3.0 * t) * (-1.0 / (2.0 * pi * std::sinh(r))) *
      (k3_closed(t, r + h) - k3_closed(t, r - h)) / (2.0 * h);
  CHECK(hn_heat(5, t, r, spec) == doctest::Approx(fd).epsilon(1e-6));
}

TEST_CASE("kernel expressions stay finite and continuous at the origin") {
  const RadialKernelExpr e = odd_heat_expr(5);
  const double at_zero = e.evaluate(1.0, 0.0);
  CHECK(at_zero > 0.0);
  CHECK(std::isfinite(at_zero));
  const double f = e.origin_floor();
  REQUIRE(f > 0.0);
  CHECK(e.evaluate(1.0, 0.999 * f) ==
        doctest::Approx(e.evaluate(1.0, 1.001 * f)).epsilon(1e-8));
  CHECK(e.evaluate(1.0, 2.0 * f) ==
        doctest::Approx(at_zero).epsilon(1e-6));
  CHECK(hn_heat(5, 0.5, 0.0, spec) ==
        doctest::Approx(hn_heat(5, 0.5, 1e-6, spec)).epsilon(1e-9));
}

TEST_CASE("plane kernel by descent and by the direct integral") {
  for (double t : {0.5, 1.0})
    for (double r : {0.5, 1.0, 2.0})
      CHECK(even_heat(2, t, r, spec) ==
            doctest::Approx(k2_direct(t, r, spec)).epsilon(1e-9));
  CHECK(hn_heat(2, 1.0, 1.0, spec) ==
        doctest::Approx(even_heat(2, 1.0, 1.0, spec)).epsilon(1e-14));
  const double far = even_heat(2, 1.0, 20.0, spec);
  CHECK(far > 0.0);
  CHECK(far < 1e-12);
  CHECK_THROWS_AS(even_heat(3, 1.0, 1.0, spec), std::domain_error);
  CHECK_THROWS_AS(hn_heat(0, 1.0, 1.0, spec), std::domain_error);
}

TEST_CASE("radial masses equal one") {
  CHECK(hn_heat_mass(2, 0.5, spec) == doctest::Approx(1.0).epsilon(1e-8));
  CHECK(hn_heat_mass(3, 1.0, spec) == doctest::Approx(1.0).epsilon(1e-10));
  CHECK(hn_heat_mass(5, 0.1, spec) == doctest::Approx(1.0).epsilon(1e-10));
  CHECK(hc_heat_mass(2, 0.5, spec) == doctest::Approx(1.0).epsilon(1e-8));
  CHECK(hc_heat_mass(2, 1.0, spec) == doctest::Approx(1.0).epsilon(1e-6));
}

TEST_CASE("positivity, decay in radius, decay in dimension") {
  for (int n : {2, 3, 5}) {
    double prev = hn_heat(n, 0.7, 0.0, spec);
    CHECK(prev > 0.0);
    for (double r = 0.3; r <= 3.0; r += 0.3) {
      const double cur = hn_heat(n, 0.7, r, spec);
      CHECK(cur > 0.0);
      CHECK(cur < prev);
      prev = cur;
    }
  }
  double prev = hn_heat(2, 1.0, 1.5, spec);
  for (int n : {3, 4, 5}) {
    const double cur = hn_heat(n, 1.0, 1.5, spec);
    CHECK(cur < prev);
    prev = cur;
  }
  for (double r = 0.2; r <= 2.0; r += 0.6)
    CHECK(hc_heat(2, 0.8, r, spec) > 0.0);
}

TEST_CASE("semigroup identity under geodesic polar convolution") {
  QuadratureSpec loose = spec;
  loose.rel_tol = 1e-7;
  const double t = 0.5, s = 0.5, d = 1.0;

  // cosh of the distance from the moving point (r, angle) to the far point.
  auto cosh_leg = [&](double r, double cang) {
    return std::max(1.0, std::cosh(r) * std::cosh(d) -
                             std::sinh(r) * std::sinh(d) * cang);
  };

  for (int n : {2, 3}) {
    auto kernel = [&](double tt, double rr) {
      return hn_heat(n, tt, rr, loose);
    };
    auto angular = [&](double r) {
      if (n == 2)
        return integrate(
            [&](double phi) {
              return kernel(s, std::acosh(cosh_leg(r, std::cos(phi))));
            },
            0.0, 2.0 * pi, loose);
      return 2.0 * pi *
             integrate(
                 [&](double th) {
                   return kernel(s, std::acosh(cosh_leg(r, std::cos(th)))) *
                          std::sin(th);
                 },
                 0.0, pi, loose);
    };
    const double conv = integrate_to_infinity(
        [&](double r) {
          return kernel(t, r) * angular(r) *
                 std::pow(std::sinh(r), n - 1);
        },
        0.0, loose);
    CHECK(conv == doctest::Approx(kernel(t + s, d)).epsilon(1e-3));
  }
}

TEST_CASE("vertical kernel closed cases and symmetry") {
  CHECK(sl_kernel(2.0, 1.0, 1.0, 1.0) ==
        doctest::Approx(std::exp(-1.0) / std::sqrt(4.0 * pi))
            .epsilon(1e-13));
  CounterRng rng(47);
  for (int i = 0; i < 50; ++i) {
    const double alpha = rng.uniform(4ull * i, 1.5, 6.0);
    const double t = rng.uniform(4ull * i + 1, 0.1, 2.0);
    const double y = rng.uniform(4ull * i + 2, 0.5, 3.0);
    const double v = rng.uniform(4ull * i + 3, 0.5, 3.0);
    CHECK(sl_kernel(alpha, t, y, v) ==
          doctest::Approx(sl_kernel(alpha, t, v, y)).epsilon(1e-12));
  }
}

TEST_CASE("vertical kernel has unit mass") {
  auto mass = [&](double alpha, double t, double y) {
    return integrate_real_line(
        [&](double u) {
          return sl_kernel(alpha, t, y, std::exp(u)) *
                 std::exp(-alpha * u);
        },
        std::log(y) - alpha * t, spec);
  };
  CHECK(mass(3.0, 0.5, 1.0) == doctest::Approx(1.0).epsilon(1e-10));
  CHECK(mass(5.0, 1.0, 2.0) == doctest::Approx(1.0).epsilon(1e-10));
  CounterRng rng(48);
  for (int i = 0; i < 10; ++i) {
    const double alpha = rng.uniform(4ull * i, 1.5, 6.0);
    const double t = rng.uniform(4ull * i + 1, 0.1, 2.0);
    const double y = rng.uniform(4ull * i + 2, 0.5, 3.0);
    CHECK(mass(alpha, t, y) == doctest::Approx(1.0).epsilon(1e-9));
  }
}

TEST_CASE("vertical semigroup application") {
  CHECK(sl_apply(3.0, 0.7, [](double) { return 1.0; }, 1.3, spec) ==
        doctest::Approx(1.0).epsilon(1e-10));
  // Values of a bounded monotone profile stay inside its range.
  auto sigmoid = [](double v) { return 1.0 / (1.0 + 1.0 / v); };
  const double mid = sl_apply(2.5, 0.5, sigmoid, 1.0, spec);
  CHECK(mid > 0.0);
  CHECK(mid < 1.0);
  // Composition of two steps equals one long step.
  auto f = [](double v) {
    const double u = std::log(v);
    return std::exp(-u * u);
  };
  QuadratureSpec inner = spec;
  inner.rel_tol = 1e-8;
  const double alpha = 3.0, y = 1.2;
  const double two_step = sl_apply(
      alpha, 0.4,
      [&](double v) { return sl_apply(alpha, 0.3, f, v, inner); }, y, inner);
  CHECK(two_step ==
        doctest::Approx(sl_apply(alpha, 0.7, f, y, spec)).epsilon(1e-5));
}

TEST_CASE("complex kernel domain and half-angle identity") {
  CHECK_THROWS_AS(hc_heat(1, 1.0, 1.0, spec), std::domain_error);
  // (pi t)^{-1/2} (Dhalf)^2 gaussian = pi^2 e^t K_5(t/4, s/2) at (1, 1).
  const double lhs =
      std::pow(pi * 1.0, -0.5) * an_operator_expr(2, 0).evaluate(1.0, 1.0);
  const double rhs =
      pi * pi * std::exp(1.0) * odd_heat_expr(5).evaluate(0.25, 0.5);
  CHECK(lhs == doctest::Approx(rhs).epsilon(1e-8));
}

TEST_CASE("derivation coefficient table") {
  const CkjTable table = ckj_table(10);
  CHECK(table.at(1, 1) == 1);
  CHECK(table.at(2, 1) == 1);
  CHECK(table.at(2, 2) == 1);
  CHECK(table.at(3, 1) == 3);
  CHECK(table.at(3, 2) == 3);
  CHECK(table.at(3, 3) == 1);
  CHECK(table.at(4, 1) == 15);
  CHECK(table.at(4, 2) == 15);
  CHECK(table.at(4, 3) == 6);
  CHECK(table.at(4, 4) == 1);
  for (int k = 1; k <= 10; ++k) {
    CHECK(table.at(k, k) == 1);
    for (int j = 1; j <= k; ++j) CHECK(table.at(k, j) >= 1);
  }
  for (int k = 2; k <= 10; ++k)
    CHECK(table.at(k, 1) == odd_double_factorial(k));
  CHECK_THROWS_AS(table.at(0, 1), std::out_of_range);
  CHECK_THROWS_AS(table.at(3, 4), std::out_of_range);
  CHECK_THROWS_AS(table.at(11, 1), std::out_of_range);
}

TEST_CASE("mixed-derivation expansion identity") {
  const CkjTable table = ckj_table(4);
  const RadialKernelExpr direct = an_operator_expr(2, 2);
  for (double r : {0.5, 1.0, 2.0})
    CHECK(an_expansion_sum(2, 2, table, 1.0, r) ==
          doctest::Approx(direct.evaluate(1.0, r)).epsilon(1e-8));
}

TEST_CASE("solvable-extension kernel reproduces the complex kernel") {
  // H(2, 1) carries the n = 2 complex geometry; the ratio of the two
  // kernel routes is constant across (t, r), and that constant is 1.
  const double base = an_heat(2, 1, 0.5, 0.5, spec) /
                      hc_heat(2, 0.5, 0.5, spec);
  for (double t : {0.5, 1.0})
    for (double r : {0.5, 1.0, 2.0}) {
      const double ratio =
          an_heat(2, 1, t, r, spec) / hc_heat(2, t, r, spec);
      CHECK(ratio == doctest::Approx(base).epsilon(1e-10));
    }
  CHECK(base == doctest::Approx(1.0).epsilon(1e-10));
}

TEST_CASE("solvable-extension kernel masses") {
  CHECK(an_heat_mass(2, 1, 1.0, spec) ==
        doctest::Approx(1.0).epsilon(1e-6));
  CHECK(an_heat_mass(4, 1, 0.5, spec) ==
        doctest::Approx(1.0).epsilon(1e-6));
  CHECK(an_heat_mass(2, 2, 0.5, spec) ==
        doctest::Approx(1.0).epsilon(1e-9));
  CHECK(an_heat_mass(4, 2, 0.5, spec) ==
        doctest::Approx(1.0).epsilon(1e-9));
  // Deep derivation stacks carry a cancellation noise floor; the caller
  // loosens the target accordingly.
  QuadratureSpec loose = spec;
  loose.rel_tol = 1e-8;
  CHECK(an_heat_mass(4, 3, 0.5, loose) ==
        doctest::Approx(1.0).epsilon(1e-4));
}

TEST_CASE("mixed-derivative lower bound margins") {
  for (double t : {0.5, 1.0})
    for (double r : {0.5, 1.0, 3.0}) {
      CHECK(eq_an_bound_margin(1, 1, t, r) >= -1e-12);
      CHECK(eq_an_bound_margin(2, 1, t, r) >= -1e-12);
      CHECK(eq_an_bound_margin(2, 2, t, r) >= -1e-12);
    }
}
