#pragma once

#include <vector>

namespace hyperlap {

/// Whether hyperbolic factors in a term use the whole angle (cosh r, sinh r)
/// or the half angle (cosh(r/2), sinh(r/2)).
enum class AngleScale { full, half };

/// One term of a radial kernel expression:
///   coeff * r^{r_pow} * t^{-t_inv_half_pow/2}
///         * cosh(u)^{cosh_pow} * sinh(u)^{sinh_pow}
/// with u = r or r/2 according to the expression's scale.  Every term is
/// implicitly multiplied by exp(-r^2 / (4 t)).
struct KernelTerm {
  double coeff = 0.0;
  int r_pow = 0;
  int t_inv_half_pow = 0;  // >= 0, power of t^{-1/2}
  int cosh_pow = 0;
  int sinh_pow = 0;  // usually <= 0 (inverse powers)
};

/// Sum of KernelTerms times a global exp(-exp_rate * t).  The family is
/// closed under the two derivations used by the heat-kernel recursions:
///   -(1/sinh u) d/dr   (own-scale derivation)
///   -(1/sinh r) d/dr   (whole-angle derivation applied to half-angle
///                       expressions, via sinh r = 2 sinh(r/2) cosh(r/2)).
struct RadialKernelExpr {
  AngleScale scale = AngleScale::full;
  double exp_rate = 0.0;
  std::vector<KernelTerm> terms;

  /// Gaussian seed coeff * t^{-t_inv_half_pow/2} * exp(-r^2/4t).
  static RadialKernelExpr gaussian(double coeff, int t_inv_half_pow,
                                   AngleScale scale);

  /// -(1/sinh u) d/dr with u at the expression's own scale.
  RadialKernelExpr neg_inv_sinh_deriv() const;

  /// -(1/sinh r) d/dr.  For full-scale expressions this is the same as
  /// neg_inv_sinh_deriv; for half-scale ones it divides by
  /// 2 sinh(r/2) cosh(r/2).
  RadialKernelExpr neg_inv_sinh_full_deriv() const;

  void scale_coeffs(double c);
  void add_exp_rate(double rate) { exp_rate += rate; }

  /// Merges terms with identical exponent tuples and drops exact zeros.
  void canonicalize();

  /// Value at (t, r), t > 0.  Requests with r below the cancellation floor
  /// (see origin_floor) use an even quadratic interpolant through the two
  /// nearest reliable radii; the kernel expressions represented here are
  /// smooth at r = 0, so the substitution error is O(floor^4).
  double evaluate(double t, double r) const;

  /// Radius below which term-wise evaluation loses more accuracy to
  /// cancellation than the O(r^2) proximal substitution costs.
  double origin_floor() const;
};

}  // namespace hyperlap
