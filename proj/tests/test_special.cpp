#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "hyperlap/special.hpp"

using namespace hyperlap;

namespace {
const QuadratureSpec spec;
const double pi = std::numbers::pi;

// Direct trapezoid evaluation of the defining integral of legendre_q,
//   2^{-eta-1} Gamma(eta+gamma+1)/Gamma(eta+1) (sinh r)^{-gamma}
//     int_0^pi (z + cos t)^{gamma-eta-1} (sin t)^{2 eta + 1} dt,
// usable as an oracle whenever the integrand stays bounded.
double legendre_q_trapezoid(double eta, double gamma, double z, int nodes) {
  const double h = pi / nodes;
  double acc = 0.0;
  for (int i = 1; i < nodes; ++i) {
    const double t = i * h;
    acc += std::pow(z + std::cos(t), gamma - eta - 1.0) *
           std::pow(std::sin(t), 2.0 * eta + 1.0);
  }
  acc *= h;  // integrand vanishes at both endpoints
  const double r = std::acosh(z);
  return std::exp(-(eta + 1.0) * std::numbers::ln2 +
                  log_gamma(eta + gamma + 1.0) - log_gamma(eta + 1.0) -
                  gamma * std::log(std::sinh(r))) *
         acc;
}
}  // namespace

TEST_CASE("log-gamma at factorial and half-integer points") {
  CHECK(log_gamma(1.0) == doctest::Approx(0.0).epsilon(1e-14));
  CHECK(log_gamma(2.0) == doctest::Approx(0.0).epsilon(1e-14));
  CHECK(log_gamma(5.0) == doctest::Approx(std::log(24.0)).epsilon(1e-14));
  CHECK(log_gamma(0.5) ==
        doctest::Approx(0.5 * std::log(pi)).epsilon(1e-14));
  for (double x : {0.1, 0.73, 3.5, 12.0, 47.25, 180.0})
    CHECK(log_gamma(x) == doctest::Approx(std::lgamma(x)).epsilon(1e-13));
  CHECK_THROWS_AS(log_gamma(0.0), std::domain_error);
  CHECK_THROWS_AS(log_gamma(-1.5), std::domain_error);
}

TEST_CASE("sphere areas and ball volumes") {
  CHECK(sphere_area(1) == doctest::Approx(2.0).epsilon(1e-14));
  CHECK(sphere_area(2) == doctest::Approx(2.0 * pi).epsilon(1e-14));
  CHECK(sphere_area(3) == doctest::Approx(4.0 * pi).epsilon(1e-14));
  CHECK(sphere_area(4) == doctest::Approx(2.0 * pi * pi).epsilon(1e-14));
  CHECK(ball_volume(1) == doctest::Approx(2.0).epsilon(1e-14));
  CHECK(ball_volume(2) == doctest::Approx(pi).epsilon(1e-14));
  CHECK(ball_volume(3) == doctest::Approx(4.0 * pi / 3.0).epsilon(1e-14));
  for (int n = 1; n <= 50; ++n) {
    CHECK(sphere_area(n) ==
          doctest::Approx(n * ball_volume(n)).epsilon(1e-14));
    CHECK(std::exp(log_sphere_area(n)) ==
          doctest::Approx(sphere_area(n)).epsilon(1e-13));
    CHECK(std::exp(log_ball_volume(n)) ==
          doctest::Approx(ball_volume(n)).epsilon(1e-13));
  }
}

TEST_CASE("odd double factorial values and overflow guard") {
  CHECK(odd_double_factorial(2) == 1);
  CHECK(odd_double_factorial(3) == 3);
  CHECK(odd_double_factorial(4) == 15);
  CHECK(odd_double_factorial(5) == 105);
  CHECK(odd_double_factorial(6) == 945);
  CHECK_THROWS_AS(odd_double_factorial(40), std::overflow_error);
}

TEST_CASE("legendre function against order-zero closed forms") {
  // Q_1(z) = (z/2) ln((z+1)/(z-1)) - 1.
  CHECK(legendre_q({1.0, 0.0, 2.0}, spec) ==
        doctest::Approx(std::log(3.0) - 1.0).epsilon(1e-11));
  // Q_2(z) = P_2(z)/2 ln((z+1)/(z-1)) - 3z/2 with P_2 = (3z^2 - 1)/2.
  const double z = 1.5;
  const double q2 = 0.5 * (3.0 * z * z - 1.0) / 2.0 * std::log(5.0) - 1.5 * z;
  CHECK(legendre_q({2.0, 0.0, z}, spec) == doctest::Approx(q2).epsilon(1e-11));
}

TEST_CASE("legendre function against the half-integer closed form") {
  // Q_eta^{1/2}(cosh r) with the phase stripped equals
  // sqrt(pi/(2 sinh r)) e^{-(eta+1/2) r}.
  const double r = 1.3, eta = 0.7;
  const double expected =
      0.5 * std::log(pi / (2.0 * std::sinh(r))) - (eta + 0.5) * r;
  CHECK(log_legendre_q({eta, 0.5, std::cosh(r)}, spec) ==
        doctest::Approx(expected).epsilon(1e-11));
}

TEST_CASE("legendre function against a trapezoid oracle") {
  CHECK(legendre_q({0.5, 0.0, std::cosh(1.0)}, spec) ==
        doctest::Approx(legendre_q_trapezoid(0.5, 0.0, std::cosh(1.0),
                                             1000000))
            .epsilon(1e-8));
  CHECK(legendre_q({1.5, 0.5, std::cosh(2.0)}, spec) ==
        doctest::Approx(legendre_q_trapezoid(1.5, 0.5, std::cosh(2.0),
                                             1000000))
            .epsilon(1e-8));
}

TEST_CASE("legendre function decreases in the argument") {
  const LegendreParams lo{1.5, 0.5, std::cosh(1.0)};
  const LegendreParams hi{1.5, 0.5, std::cosh(2.0)};
  CHECK(legendre_q(lo, spec) > legendre_q(hi, spec));
  double prev = legendre_q({0.8, 0.3, std::cosh(0.5)}, spec);
  for (double r = 1.0; r <= 5.0; r += 0.5) {
    const double cur = legendre_q({0.8, 0.3, std::cosh(r)}, spec);
    CHECK(cur < prev);
    prev = cur;
  }
}
