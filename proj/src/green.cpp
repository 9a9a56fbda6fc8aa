#include "hyperlap/green.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "hyperlap/geometry.hpp"
#include "hyperlap/kernels.hpp"
#include "hyperlap/special.hpp"

namespace hyperlap {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kLn2 = std::numbers::ln2;

double require_positive_radius(double r, const char* who) {
  if (!(r > 0.0)) throw std::domain_error(std::string(who) + ": requires r > 0");
  return r;
}

}  // namespace

double spectral_gap_sq_hn(int n) {
  if (n < 2) throw std::domain_error("spectral_gap_sq_hn: requires n >= 2");
  const double rho = 0.5 * (n - 1);
  return rho * rho;
}

double spectral_gap_sq_hc(int n) {
  if (n < 2) throw std::domain_error("spectral_gap_sq_hc: requires n >= 2");
  return 0.25 * n * n;
}

double theta_hn(int n, double lambda) {
  const double rho_sq = spectral_gap_sq_hn(n);
  if (!(lambda > -rho_sq))
    throw std::domain_error("theta_hn: requires lambda > -rho^2");
  return std::sqrt(lambda + rho_sq) - 0.5;
}

double log_green_hn(int n, double lambda, double r,
                    const QuadratureSpec& spec) {
  require_positive_radius(r, "green_hn");
  const double eta = theta_hn(n, lambda);
  if (!(eta > 0.0))
    throw std::domain_error(
        "green_hn: Legendre representation needs theta > 0 "
        "(lambda > 1/4 - rho^2); use green_hn_oracle instead");
  LegendreParams p;
  p.eta = eta;
  p.gamma_order = 0.5 * (n - 2);
  p.z = std::cosh(r);
  return -0.5 * n * std::log(2.0 * kPi) -
         0.5 * (n - 2) * std::log(std::sinh(r)) + log_legendre_q(p, spec);
}

double green_hn(int n, double lambda, double r, const QuadratureSpec& spec) {
  return std::exp(log_green_hn(n, lambda, r, spec));
}

double green_hn_oracle(int n, double lambda, double r,
                       const QuadratureSpec& spec) {
  require_positive_radius(r, "green_hn_oracle");
  const double rho_sq = spectral_gap_sq_hn(n);
  if (!(lambda > -rho_sq))
    throw std::domain_error("green_hn_oracle: requires lambda > -rho^2");
  QuadratureSpec inner = spec;
  inner.rel_tol = std::max(spec.rel_tol * 0.1, 1e-12);
  auto integrand = [&](double tau) {
    const double t = std::exp(tau);
    const double v = hn_heat(n, t, r, inner);
    return v <= 0.0 ? 0.0 : v * std::exp(-lambda * t + tau);
  };
  // Coarse scan for the peak in tau = ln t.
  double center = 0.0, best = -1.0;
  for (int i = 0; i <= 100; ++i) {
    const double tau = -30.0 + 40.0 * i / 100.0;
    const double v = integrand(tau);
    if (v > best) {
      best = v;
      center = tau;
    }
  }
  return integrate_real_line(integrand, center, spec);
}

double log_green_lower_bound_hn(int n, double alpha, double r) {
  if (n < 3) throw std::domain_error("green_lower_bound_hn: requires n >= 3");
  if (!(alpha > 0.0 && alpha < 1.0))
    throw std::domain_error("green_lower_bound_hn: requires 0 < alpha < 1");
  require_positive_radius(r, "green_lower_bound_hn");
  const double rho = 0.5 * (n - 1);
  return -std::log(static_cast<double>(n) * (n - 2)) - log_ball_volume(n) -
         (n - 2) * std::log(std::sinh(r)) +
         (2.0 * rho * (1.0 - alpha) - 2.0) * std::log(std::cosh(0.5 * r));
}

double green_lower_bound_hn(int n, double alpha, double r) {
  return std::exp(log_green_lower_bound_hn(n, alpha, r));
}

double log_green_hc(int n, double lambda, double varsigma,
                    const QuadratureSpec& spec) {
  if (n < 2) throw std::domain_error("green_hc: requires n >= 2");
  require_positive_radius(varsigma, "green_hc");
  const double gap_upper = spectral_gap_sq_hn(2 * n + 1);  // = n^2
  if (!(4.0 * lambda > 0.25 - gap_upper))
    throw std::domain_error(
        "green_hc: descent needs theta_{2n+1}(4 lambda) > 0");
  const double sh = std::sinh(0.5 * varsigma);
  const double sh2 = sh * sh;
  QuadratureSpec inner = spec;
  inner.rel_tol = std::max(spec.rel_tol * 0.1, 1e-12);
  auto log_integrand = [&](double u) {
    const double w = sh2 + u * u;
    const double rp = std::asinh(std::sqrt(w));
    return log_green_hn(2 * n + 1, 4.0 * lambda, rp, inner) -
           0.5 * std::log1p(w);
  };
  // Factor out the u = 0 value; the integrand decreases away from it.
  const double peak = log_integrand(0.0);
  auto integrand = [&](double u) { return std::exp(log_integrand(u) - peak); };
  const double I = integrate_to_infinity(integrand, 0.0, spec);
  return 3.0 * kLn2 - 2.0 * n * kLn2 + peak + std::log(I);
}

double green_hc(int n, double lambda, double varsigma,
                const QuadratureSpec& spec) {
  return std::exp(log_green_hc(n, lambda, varsigma, spec));
}

double log_green_lower_bound_hc(int n, double alpha, double varsigma) {
  if (n < 2) throw std::domain_error("green_lower_bound_hc: requires n >= 2");
  if (!(alpha > 0.0 && alpha < 1.0))
    throw std::domain_error("green_lower_bound_hc: requires 0 < alpha < 1");
  require_positive_radius(varsigma, "green_lower_bound_hc");
  return -std::log(2.0 * n * (2.0 * n - 2.0)) - 2.0 * n * kLn2 -
         log_ball_volume(2 * n) -
         (2.0 * n - 2.0) * std::log(std::sinh(0.5 * varsigma)) +
         (2.0 * (1.0 - alpha) * n - 4.0) * std::log(std::cosh(0.25 * varsigma));
}

double green_lower_bound_hc(int n, double alpha, double varsigma) {
  return std::exp(log_green_lower_bound_hc(n, alpha, varsigma));
}

double resolvent_apply_radial(int n, double lambda,
                              const std::function<double(double)>& f,
                              double lo, double hi,
                              const QuadratureSpec& spec) {
  if (!(lo >= 0.0) || !(hi > lo))
    throw std::domain_error("resolvent_apply_radial: bad support bounds");
  QuadratureSpec inner = spec;
  inner.rel_tol = std::max(spec.rel_tol * 0.1, 1e-12);
  const double log_area = log_sphere_area(n);
  auto integrand = [&](double r) {
    const double fv = f(r);
    if (fv == 0.0 || r <= 0.0) return 0.0;
    return fv * std::exp(log_green_hn(n, lambda, r, inner) + log_area +
                         (n - 1) * std::log(std::sinh(r)));
  };
  return integrate(integrand, lo, hi, spec);
}

double s_epsilon_radial(int n, double eps,
                        const std::function<double(double)>& f, double lo,
                        double hi, const QuadratureSpec& spec) {
  if (!(eps > 0.0)) throw std::domain_error("s_epsilon_radial: eps > 0");
  const double a = std::max(eps, lo);
  if (!(hi > a)) return 0.0;
  QuadratureSpec inner = spec;
  inner.rel_tol = std::max(spec.rel_tol * 0.1, 1e-12);
  const double log_area = log_sphere_area(n);
  auto integrand = [&](double r) {
    const double fv = f(r);
    if (fv == 0.0 || r <= 0.0) return 0.0;
    return fv * std::exp(log_area + (n - 1) * std::log(std::sinh(r)) -
                         log_hn_volume(n, r, inner));
  };
  return integrate(integrand, a, hi, spec);
}

double resolvent_apply_radial_hc(int n, double lambda,
                                 const std::function<double(double)>& f,
                                 double lo, double hi,
                                 const QuadratureSpec& spec) {
  if (!(lo >= 0.0) || !(hi > lo))
    throw std::domain_error("resolvent_apply_radial_hc: bad support bounds");
  QuadratureSpec inner = spec;
  inner.rel_tol = std::max(spec.rel_tol * 0.1, 1e-11);
  // V_c'(s) = 2^{2n-1} omega_{2n-1} sinh^{2n-1}(s/2) cosh(s/2).
  const double log_density_const =
      (2.0 * n - 1.0) * kLn2 + log_sphere_area(2 * n);
  auto integrand = [&](double s) {
    const double fv = f(s);
    if (fv == 0.0 || s <= 0.0) return 0.0;
    return fv * std::exp(log_green_hc(n, lambda, s, inner) +
                         log_density_const +
                         (2.0 * n - 1.0) * std::log(std::sinh(0.5 * s)) +
                         std::log(std::cosh(0.5 * s)));
  };
  return integrate(integrand, lo, hi, spec);
}

double s_epsilon_radial_hc(int n, double eps,
                           const std::function<double(double)>& f, double lo,
                           double hi, const QuadratureSpec& spec) {
  if (!(eps > 0.0)) throw std::domain_error("s_epsilon_radial_hc: eps > 0");
  const double a = std::max(eps, lo);
  if (!(hi > a)) return 0.0;
  const double log_density_const =
      (2.0 * n - 1.0) * kLn2 + log_sphere_area(2 * n);
  auto integrand = [&](double s) {
    const double fv = f(s);
    if (fv == 0.0 || s <= 0.0) return 0.0;
    return fv * std::exp(log_density_const +
                         (2.0 * n - 1.0) * std::log(std::sinh(0.5 * s)) +
                         std::log(std::cosh(0.5 * s)) - log_vc_volume(n, s));
  };
  return integrate(integrand, a, hi, spec);
}

double eq_an_bound_margin(int n_half, int k_full, double t, double r) {
  if (!(t > 0.0) || !(r > 0.0))
    throw std::domain_error("eq_an_bound_margin: requires t, r > 0");
  const double lhs = an_operator_expr(n_half, k_full).evaluate(t, r);
  const int big = n_half + k_full;
  const double rhs = std::sqrt(kPi * t) *
                     std::pow(2.0 * std::cosh(0.5 * r), -k_full) *
                     std::pow(kPi, big) * std::exp(0.25 * big * big * t) *
                     odd_heat_expr(2 * big + 1).evaluate(0.25 * t, 0.5 * r);
  return lhs - rhs;
}

}  // namespace hyperlap
