#pragma once

#include <functional>

#include "hyperlap/quadrature.hpp"

namespace hyperlap {

/// Square of the L^2 spectral gap: ((n-1)/2)^2 for H^n, (n/2)^2 for H_c^n.
double spectral_gap_sq_hn(int n);
double spectral_gap_sq_hc(int n);

/// Degree parameter sqrt(lambda + rho^2) - 1/2 of the resolvent kernel of
/// H^n; requires lambda > -rho^2.
double theta_hn(int n, double lambda);

/// Resolvent kernel (lambda - Delta)^{-1} of H^n at distance r, through the
/// Legendre-function closed form
///   (2 pi)^{-n/2} (sinh r)^{-(n-2)/2} e^{-i pi (n-2)/2} Q_theta^{(n-2)/2}.
/// Valid when theta_hn(n, lambda) > 0, i.e. lambda > 1/4 - rho^2; outside
/// that range use green_hn_oracle.  Computed in log space so it survives
/// n in the thousands.
double log_green_hn(int n, double lambda, double r, const QuadratureSpec&);
double green_hn(int n, double lambda, double r, const QuadratureSpec&);

/// Laplace-transform route int_0^inf e^{-lambda t} K_n(t, r) dt, integrated
/// in tau = ln t.  Slow but independent of the Legendre representation.
double green_hn_oracle(int n, double lambda, double r, const QuadratureSpec&);

/// Lower barrier for the H^n resolvent at lambda = -(1 - alpha^2) rho^2:
///   [n (n-2) Omega_n]^{-1} (sinh r)^{-(n-2)} cosh(r/2)^{2 rho (1-alpha) - 2}.
/// The barrier statement assumes alpha rho > 1/2 and (1 - alpha) rho >= 1;
/// the formula itself only needs n >= 3, 0 < alpha < 1, r > 0.
double log_green_lower_bound_hn(int n, double alpha, double r);
double green_lower_bound_hn(int n, double alpha, double r);

/// Resolvent kernel of H_c^n by one descent from H^{2n+1}:
///   8 * 2^{-2n} int_{s/2}^inf sinh(r') / sqrt(sinh^2 r' - sinh^2(s/2))
///                G(2n+1, 4 lambda, r') dr',
/// in the variable u^2 = sinh^2 r' - sinh^2(s/2).
double log_green_hc(int n, double lambda, double varsigma,
                    const QuadratureSpec&);
double green_hc(int n, double lambda, double varsigma, const QuadratureSpec&);

/// Lower barrier for the H_c^n resolvent at lambda = -(1-alpha^2) rho_c^2:
///   [2n (2n-2)]^{-1} [2^{2n} Omega_{2n}]^{-1} sinh(s/2)^{-(2n-2)}
///     cosh(s/4)^{2 (1-alpha) n - 4}.
double log_green_lower_bound_hc(int n, double alpha, double varsigma);
double green_lower_bound_hc(int n, double alpha, double varsigma);

/// (lambda - Delta)^{-1} |f| evaluated at the center of a radial profile f
/// supported in [lo, hi]:
///   int f(r) G(n, lambda, r) omega_{n-1} sinh^{n-1}(r) dr.
/// The Green factor, the sphere constant, and the density are combined in
/// log space before exponentiation so large n cannot overflow.
double resolvent_apply_radial(int n, double lambda,
                              const std::function<double(double)>& f,
                              double lo, double hi, const QuadratureSpec&);

/// Part-at-infinity average sum int_{r >= eps} f(r) / V(r) dmu at the center
/// of a radial profile supported in [lo, hi].
double s_epsilon_radial(int n, double eps,
                        const std::function<double(double)>& f, double lo,
                        double hi, const QuadratureSpec&);

/// Complex-space analogues against the H_c^n ball volume and density.
double resolvent_apply_radial_hc(int n, double lambda,
                                 const std::function<double(double)>& f,
                                 double lo, double hi, const QuadratureSpec&);
double s_epsilon_radial_hc(int n, double eps,
                           const std::function<double(double)>& f, double lo,
                           double hi, const QuadratureSpec&);

/// Margin of the mixed-derivative lower bound
///   (Dfull)^k (Dhalf)^n e^{-r^2/4t}
///     >= sqrt(pi t) (2 cosh(r/2))^{-k} pi^{n+k} e^{(n+k)^2 t/4}
///        K_{2(n+k)+1}(t/4, r/2),
/// returned as LHS - RHS (nonnegative when the bound holds).
double eq_an_bound_margin(int n_half, int k_full, double t, double r);

}  // namespace hyperlap
