#include "hyperlap/special.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace hyperlap {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kLn2 = std::numbers::ln2;
constexpr double kLnPi = 1.1447298858494001741;

}  // namespace

double log_gamma(double x) {
  if (!(x > 0.0)) throw std::domain_error("log_gamma: requires x > 0");
  // Lanczos, g = 607/128, 14 coefficients.
  static const double c[14] = {
      57.1562356658629235,     -59.5979603554754912,
      14.1360979747417471,     -0.491913816097620199,
      0.339946499848118887e-4, 0.465236289270485756e-4,
      -0.983744753048795646e-4, 0.158088703224912494e-3,
      -0.210264441724104883e-3, 0.217439618115212643e-3,
      -0.164318106536763890e-3, 0.844182239838527433e-4,
      -0.261908384015814087e-4, 0.368991826595316234e-5};
  double y = x;
  const double tmp0 = x + 5.24218750000000000;
  const double tmp = (x + 0.5) * std::log(tmp0) - tmp0;
  double ser = 0.999999999999997092;
  for (int j = 0; j < 14; ++j) ser += c[j] / ++y;
  return tmp + std::log(2.5066282746310005 * ser / x);
}

double log_sphere_area(int n) {
  if (n < 1) throw std::domain_error("log_sphere_area: requires n >= 1");
  return kLn2 + 0.5 * n * kLnPi - log_gamma(0.5 * n);
}

double sphere_area(int n) { return std::exp(log_sphere_area(n)); }

double log_ball_volume(int n) {
  if (n < 1) throw std::domain_error("log_ball_volume: requires n >= 1");
  return 0.5 * n * kLnPi - log_gamma(0.5 * n + 1.0);
}

double ball_volume(int n) { return std::exp(log_ball_volume(n)); }

std::uint64_t odd_double_factorial(int k) {
  if (k < 2) throw std::domain_error("odd_double_factorial: requires k >= 2");
  std::uint64_t acc = 1;
  for (int j = 3; j <= 2 * k - 3; j += 2) {
    std::uint64_t next;
    if (__builtin_mul_overflow(acc, static_cast<std::uint64_t>(j), &next))
      throw std::overflow_error("odd_double_factorial: uint64 overflow");
    acc = next;
  }
  return acc;
}

double log_legendre_q(const LegendreParams& p, const QuadratureSpec& spec) {
  if (!(p.eta > 0.0))
    throw std::domain_error("log_legendre_q: requires eta > 0");
  if (!(p.gamma_order >= 0.0))
    throw std::domain_error("log_legendre_q: requires gamma_order >= 0");
  if (!(p.z > 1.0)) throw std::domain_error("log_legendre_q: requires z > 1");

  const double e1 = p.gamma_order - p.eta - 1.0;
  const double e2 = 2.0 * p.eta + 1.0;
  auto logf = [&](double t) {
    const double s = std::sin(t);
    if (s <= 0.0) return -std::numeric_limits<double>::infinity();
    return e1 * std::log(p.z + std::cos(t)) + e2 * std::log(s);
  };

  // Peak of the log-integrand, coarse grid then golden-section refinement.
  const int kGrid = 512;
  double tbest = 0.5 * kPi, hbest = logf(tbest);
  for (int i = 0; i < kGrid; ++i) {
    const double t = kPi * (i + 0.5) / kGrid;
    const double h = logf(t);
    if (h > hbest) {
      hbest = h;
      tbest = t;
    }
  }
  {
    const double gr = 0.5 * (std::sqrt(5.0) - 1.0);
    double lo = std::max(0.0, tbest - kPi / kGrid);
    double hi = std::min(kPi, tbest + kPi / kGrid);
    double x1 = hi - gr * (hi - lo), x2 = lo + gr * (hi - lo);
    double f1 = logf(x1), f2 = logf(x2);
    for (int it = 0; it < 80 && hi - lo > 1e-12; ++it) {
      if (f1 < f2) {
        lo = x1;
        x1 = x2;
        f1 = f2;
        x2 = lo + gr * (hi - lo);
        f2 = logf(x2);
      } else {
        hi = x2;
        x2 = x1;
        f2 = f1;
        x1 = hi - gr * (hi - lo);
        f1 = logf(x1);
      }
    }
    const double tm = 0.5 * (lo + hi);
    const double hm = logf(tm);
    if (hm > hbest) {
      hbest = hm;
      tbest = tm;
    }
  }

  auto g = [&](double t) { return std::exp(logf(t) - hbest); };

  bool substitute = e1 < 0.0;
  if (spec.endpoint_substitution == EndpointSubstitution::none)
    substitute = false;
  if (spec.endpoint_substitution == EndpointSubstitution::sqrt_)
    substitute = true;

  double integral;
  if (substitute) {
    // Direct on [0, pi/2]; t = pi - u^2 on the upper half, where the
    // (z + cos t)^{e1} factor concentrates as z -> 1.
    const double half = 0.5 * kPi;
    const double tail = integrate(
        [&](double u) {
          const double t = kPi - u * u;
          return 2.0 * u * g(t);
        },
        0.0, std::sqrt(kPi - half), spec);
    integral = integrate(g, 0.0, half, spec) + tail;
  } else {
    // Split at the peak so the adaptive pass starts on each flank.
    integral = integrate(g, 0.0, tbest, spec) + integrate(g, tbest, kPi, spec);
  }
  if (!(integral > 0.0))
    throw QuadratureError("log_legendre_q: integral evaluated to zero");

  const double log_sinh_r = 0.5 * std::log((p.z - 1.0) * (p.z + 1.0));
  return -(p.eta + 1.0) * kLn2 + log_gamma(p.eta + p.gamma_order + 1.0) -
         log_gamma(p.eta + 1.0) - p.gamma_order * log_sinh_r + hbest +
         std::log(integral);
}

double legendre_q(const LegendreParams& p, const QuadratureSpec& spec) {
  return std::exp(log_legendre_q(p, spec));
}

}  // namespace hyperlap
