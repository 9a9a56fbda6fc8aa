#pragma once

#include <cstdint>

#include "hyperlap/quadrature.hpp"

namespace hyperlap {

/// ln Gamma(x) for x > 0 via a fixed 14-term Lanczos approximation.
/// Throws std::domain_error for x <= 0.
double log_gamma(double x);

/// Surface measure of the unit sphere S^{n-1} in R^n: 2 pi^{n/2}/Gamma(n/2).
double sphere_area(int n);
double log_sphere_area(int n);

/// Volume of the unit ball in R^n: pi^{n/2}/Gamma(n/2 + 1).
double ball_volume(int n);
double log_ball_volume(int n);

/// (2k-3)!! for k >= 2 ((2*2-3)!! == 1).  Throws std::overflow_error when the
/// product leaves the uint64 range.
std::uint64_t odd_double_factorial(int k);

/// Parameters of the associated Legendre function of the second kind on the
/// cut, order `gamma_order`, degree `eta`, argument z = cosh(r) > 1.
struct LegendreParams {
  double eta;          // degree, must be > 0 for the integral representation
  double gamma_order;  // order, >= 0
  double z;            // argument, > 1
};

/// log of exp(-i pi gamma) Q_eta^gamma(z), which is real and positive for
/// z > 1, eta > 0, gamma >= 0.  Computed from the integral representation
///   2^{-eta-1} Gamma(eta+gamma+1)/Gamma(eta+1) (sinh r)^{-gamma}
///     int_0^pi (z + cos t)^{gamma-eta-1} (sin t)^{2 eta + 1} dt
/// with the peak of the integrand factored out so that large parameters never
/// overflow.  When gamma - eta - 1 < 0 the sharp endpoint concentration at
/// t = pi is regularized by the substitution t = pi - u^2 (the sqrt_
/// substitution; none disables it, automatic_ applies it exactly in that
/// parameter range).
double log_legendre_q(const LegendreParams& p, const QuadratureSpec& spec);
double legendre_q(const LegendreParams& p, const QuadratureSpec& spec);

}  // namespace hyperlap
