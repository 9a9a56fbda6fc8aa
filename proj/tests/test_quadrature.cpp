#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>

#include "hyperlap/quadrature.hpp"

using namespace hyperlap;

namespace {
const QuadratureSpec spec;
}

TEST_CASE("polynomials and smooth integrands on finite intervals") {
  CHECK(integrate([](double x) { return x * x * x; }, 0.0, 1.0, spec) ==
        doctest::Approx(0.25).epsilon(1e-14));
  CHECK(integrate([](double x) { return std::sin(x); }, 0.0,
                  std::numbers::pi, spec) ==
        doctest::Approx(2.0).epsilon(1e-14));
  // erf tail beyond 10 is ~1e-44, far below the comparison tolerance.
  CHECK(integrate([](double x) { return std::exp(-x * x); }, 0.0, 10.0,
                  spec) ==
        doctest::Approx(0.5 * std::sqrt(std::numbers::pi)).epsilon(1e-13));
}

TEST_CASE("subdivision budget exhaustion throws") {
  QuadratureSpec tight = spec;
  tight.max_subdivisions = 1;
  CHECK_THROWS_AS(
      integrate([](double x) { return std::sin(1000.0 * x); }, 0.0, 10.0,
                tight),
      QuadratureError);
}

TEST_CASE("half-line integrals") {
  CHECK(integrate_to_infinity([](double x) { return std::exp(-x); }, 0.0,
                              spec) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(integrate_to_infinity([](double x) { return x * std::exp(-x); }, 0.0,
                              spec) == doctest::Approx(1.0).epsilon(1e-12));
  // Shifted start: int_2^inf e^{-x} = e^{-2}.
  CHECK(integrate_to_infinity([](double x) { return std::exp(-x); }, 2.0,
                              spec) ==
        doctest::Approx(std::exp(-2.0)).epsilon(1e-12));
}

TEST_CASE("whole-line integral split at the peak") {
  const double v = integrate_real_line(
      [](double x) { return std::exp(-(x - 3.0) * (x - 3.0)); }, 3.0, spec);
  CHECK(v == doctest::Approx(std::sqrt(std::numbers::pi)).epsilon(1e-12));
}

TEST_CASE("repeated evaluation is bitwise deterministic") {
  auto f = [](double x) { return std::exp(-x) * std::cos(3.0 * x); };
  const double a = integrate_to_infinity(f, 0.0, spec);
  const double b = integrate_to_infinity(f, 0.0, spec);
  CHECK(a == b);
  const double c = integrate(f, 0.0, 7.0, spec);
  const double d = integrate(f, 0.0, 7.0, spec);
  CHECK(c == d);
}
