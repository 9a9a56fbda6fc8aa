#pragma once

#include <string>
#include <vector>

#include "hyperlap/quadrature.hpp"

namespace hyperlap {

// ---------------------------------------------------------------------------
// Real hyperbolic space in half-space coordinates (y, x), y > 0, x in
// R^{n-1}, with metric (dy^2 + dx^2)/y^2 and measure y^{-n} dy dx.
// ---------------------------------------------------------------------------

struct HnPoint {
  double y = 1.0;
  std::vector<double> x;  // n-1 horizontal coordinates
};

/// Geodesic distance: arccosh((y^2 + v^2 + |x - w|^2) / (2 y v)).
double hn_distance(const HnPoint& g, const HnPoint& h);

// ---------------------------------------------------------------------------
// H-type groups.  Underlying set R^{2n} x R^m with product
//   (x, rho)(w, u) = (x + w, rho + u + <x, U w>/2),
// where <x, U w>_j = x^T U^(j) w and the maps U^(j) are skew-symmetric,
// orthogonal, and pairwise anticommuting.
// ---------------------------------------------------------------------------

struct HTypeDescriptor {
  int two_n = 0;  // horizontal dimension, even and positive
  int m = 0;      // center dimension
  // m matrices, each row-major with two_n * two_n entries.
  std::vector<std::vector<double>> U;

  /// Checks shape, skew-symmetry, orthogonality, and the anticommutation
  /// relations entrywise to `tol`; throws std::invalid_argument on failure.
  void validate(double tol = 1e-12) const;

  /// Standard Heisenberg-type descriptor H(two_n, 1): block-diagonal
  /// quarter-turn rotations, so <x, U w> is the symplectic form matching
  /// Im<x, w> under the complex identification (x1, x2, x3, x4, ...) ->
  /// (x1 + i x2, x3 + i x4, ...).
  static HTypeDescriptor heisenberg(int two_n);

  /// Quaternionic model on R^4 with m in {1, 2, 3}: left multiplication by
  /// i, j, k.  Useful as a genuinely anticommuting family for m >= 2.
  static HTypeDescriptor quaternionic(int m);
};

std::string descriptor_to_json(const HTypeDescriptor& d);
HTypeDescriptor descriptor_from_json(const std::string& text);
HTypeDescriptor descriptor_from_file(const std::string& path);

/// Whether (two_n, m) is realizable as an H-type group: with
/// two_n = (2l+1) 2^{4p+q}, 0 <= q <= 3, requires m < 8p + 2^q.
bool kecman_admissible(int two_n, int m);

struct HTypePoint {
  std::vector<double> x;    // two_n entries
  std::vector<double> rho;  // m entries
};

HTypePoint htype_mul(const HTypeDescriptor& d, const HTypePoint& g,
                     const HTypePoint& h);
HTypePoint htype_inverse(const HTypePoint& g);
/// Anisotropic dilation (x, rho) -> (r x, r^2 rho).
HTypePoint htype_dilate(const HTypePoint& g, double r);

// ---------------------------------------------------------------------------
// Solvable extension A N = R^+ x H-type with product
//   (a, nu)(h, mu) = (a h, nu * delta_{sqrt a}(mu))
// and left Haar measure a^{-Q-1} da dx drho, Q = two_n/2 + m.
// ---------------------------------------------------------------------------

struct ANPoint {
  double a = 1.0;
  HTypePoint n_part;
};

ANPoint an_mul(const HTypeDescriptor& d, const ANPoint& g, const ANPoint& h);
ANPoint an_inverse(const ANPoint& g);

/// cosh d(g, e) = [ (|x|^2/4)^2 + |rho|^2 + 1 + a^2 + (|x|^2/2)(1 + a) ]
///                / (2a); distances between two points go through g^{-1} h.
double an_distance(const HTypeDescriptor& d, const ANPoint& g,
                   const ANPoint& h);

struct BallSpec {
  ANPoint center;
  double radius = 1.0;
};

/// Membership test written directly from the two ball conditions
///   e^{-r} < h/a < e^r   and
///   |x-w|^2/(2a) (1 + h/a) + |x-w|^4/(16 a^2)
///     + | u/a - rho/a - <x, U w>/(2a) |^2  <  2 (h/a) cosh r - 1 - h^2/a^2,
/// equivalent to an_distance(center, point) < radius.
bool ball_contains(const HTypeDescriptor& d, const BallSpec& ball,
                   const ANPoint& p);

/// 2 (h/a) cosh r - (1 + h^2/a^2), the slice bound appearing on the right of
/// the ball condition.  Requires e^{-r} < h/a < e^r so the value is positive.
double kappa(double a, double h, double r);

/// Volume of delta_{sqrt a}(E) where, with gamma = h/a and kap =
/// kappa(a, h, r),
///   E = { (w, u) : (|w|^2/2)(1 + gamma) + |w|^4/16 + u^2 < kap },
/// w in R^{two_n}, u scalar (descriptor must have m = 1).  Computed by the
/// radial reduction with the sin substitution (|w|^2/4 + 1 + gamma =
/// sqrt(kap + (1+gamma)^2) sin theta) removing the endpoint singularity.
double region_volume(const HTypeDescriptor& d, double a, double h, double r,
                     const QuadratureSpec& spec);

// ---------------------------------------------------------------------------
// Volumes of geodesic balls.
// ---------------------------------------------------------------------------

/// H^n ball volume omega_{n-1} int_0^r sinh^{n-1} s ds, accumulated in log
/// space; hn_volume overflows to +inf when the value leaves double range.
double log_hn_volume(int n, double r, const QuadratureSpec& spec);
double hn_volume(int n, double r, const QuadratureSpec& spec);

/// Ratio V(r) / (Omega_n Psi(r)) with Psi(r) = sinh^{n-1}(r) min(1, sinh r);
/// bounded above and below uniformly in n and r.
double hn_volume_sandwich(int n, double r, const QuadratureSpec& spec);

/// Complex hyperbolic ball volume 2^{2n} Omega_{2n} sinh^{2n}(r/2).
double vc_volume(int n, double r);
double log_vc_volume(int n, double r);

/// AN ball volume 2^{two_n+m} omega_{two_n+m} int_0^r sinh^{two_n+m}(s/2)
/// cosh^m(s/2) ds.
double log_an_volume(int two_n, int m, double r, const QuadratureSpec& spec);
double an_volume(int two_n, int m, double r, const QuadratureSpec& spec);

/// Ratio of an_volume to the closed comparison shape
/// 2^{two_n+m+1} Omega_{two_n+m+1} sinh^{two_n+m+1}(r/2) cosh^{m-1}(r/2).
double an_volume_sandwich(int two_n, int m, double r,
                          const QuadratureSpec& spec);

}  // namespace hyperlap
