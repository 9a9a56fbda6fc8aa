#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "hyperlap/kernel_expr.hpp"
#include "hyperlap/quadrature.hpp"

namespace hyperlap {

/// Euclidean line kernel (4 pi t)^{-1/2} exp(-r^2/4t).
double k1(double t, double r);

/// Closed expression for the heat kernel of H^n, n odd, generated by the
/// recursion K_{n+2} = e^{-n t} (-(1/2pi)(1/sinh r) d/dr) K_n starting from
/// k1.  Carries the accumulated spectral factor e^{-j^2 t}, j = (n-1)/2.
RadialKernelExpr odd_heat_expr(int n_odd);

/// Heat kernel of H^n for even n by one descent step from n+1:
///   K_n(t, r) = sqrt(2) e^{(2n-1)t/4}
///               int_r^inf K_{n+1}(t, s) sinh s / sqrt(cosh s - cosh r) ds,
/// integrated in the variable u^2 = cosh s - cosh r which removes the
/// endpoint singularity exactly.
double even_heat(int n_even, double t, double r, const QuadratureSpec& spec);

/// Heat kernel of H^n at distance r: dispatches to the odd closed form or
/// the even descent integral.  n = 1 gives k1.
double hn_heat(int n, double t, double r, const QuadratureSpec& spec);

/// Direct evaluation of the printed plane formula
///   K_2 = sqrt(2) (4 pi t)^{-3/2} e^{-t/4}
///         int_r^inf s e^{-s^2/4t} / sqrt(cosh s - cosh r) ds,
/// used to cross-check the generic descent route.
double k2_direct(double t, double r, const QuadratureSpec& spec);

/// Sturm-Liouville kernel of L_alpha = y^2 d^2/dy^2 - (alpha - 1) y d/dy on
/// L^2(R^+, y^{-alpha-1} dy):
///   (4 pi t)^{-1/2} (y v)^{alpha/2} e^{-alpha^2 t/4} e^{-ln^2(v/y)/4t}.
double sl_kernel(double alpha, double t, double y, double v);

/// e^{t L_alpha} f(y) = int_0^inf sl_kernel(alpha,t,y,v) f(v) v^{-alpha-1} dv,
/// computed in the substitution u = ln(v/y) where the weight collapses to a
/// unit Gaussian centered at -alpha t.
double sl_apply(double alpha, double t, const std::function<double(double)>& f,
                double y, const QuadratureSpec& spec);

/// Heat kernel of complex hyperbolic space H_c^n (spectral gap n^2/4):
///   2^{-2n} int_r^inf sinh(s/2)/sqrt(sinh^2(s/2) - sinh^2(r/2))
///                     K_{2n+1}(t/4, s/2) ds,
/// via u^2 = sinh^2(s/2) - sinh^2(r/2).
double hc_heat(int n, double t, double r, const QuadratureSpec& spec);

/// Triangular coefficient table with C(k, k) = 1, C(k, 0) = 0 and
/// C(k+1, j) = (2k - j) C(k, j) + C(k, j - 1); entries checked against
/// uint64 overflow.
struct CkjTable {
  int k_max = 0;
  std::vector<std::vector<std::uint64_t>> rows;  // rows[k][j], 1 <= j <= k
  std::uint64_t at(int k, int j) const;
};
CkjTable ckj_table(int k_max);

/// (Dfull)^k (Dhalf)^n exp(-r^2/4t) as a half-angle expression, where
/// Dhalf = -(1/sinh(r/2)) d/dr and Dfull = -(1/sinh r) d/dr.
RadialKernelExpr an_operator_expr(int n_half, int k_full);

/// Right-hand side of the mixed-derivative expansion
///   (Dfull)^k (Dhalf)^n e^{-r^2/4t}
///     = (2 cosh(r/2))^{-k} sum_{j=1}^k C(k,j) (2cosh(r/2))^{j-k}
///       (Dhalf)^{n+j} e^{-r^2/4t}.
double an_expansion_sum(int n_half, int k_full, const CkjTable& table,
                        double t, double r);

/// Heat kernel of the solvable extension of an H-type group with horizontal
/// dimension two_n and center dimension m (Q = two_n/2 + m):
///   m even:  2^{-two_n - m/2 - 1} pi^{-(two_n+m+1)/2} t^{-1/2} e^{-Q^2 t/4}
///            (Dfull)^{m/2} (Dhalf)^{two_n/2} e^{-r^2/4t}
///   m odd:   same with pi^{-(two_n+m+2)/2}, one extra Dfull, and the
///            Abel-type integral int_r^inf sinh s/sqrt(cosh s - cosh r) ...
double an_heat(int two_n, int m, double t, double r,
               const QuadratureSpec& spec);

/// Mass of a radial kernel against the volume density of the matching space,
/// used by the stochastic completeness checks.
double hn_heat_mass(int n, double t, const QuadratureSpec& spec);
double hc_heat_mass(int n, double t, const QuadratureSpec& spec);
double an_heat_mass(int two_n, int m, double t, const QuadratureSpec& spec);

}  // namespace hyperlap
