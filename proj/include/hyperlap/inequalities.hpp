#pragma once

#include <functional>
#include <vector>

#include "hyperlap/quadrature.hpp"
#include "hyperlap/rng.hpp"

namespace hyperlap {

/// F_beta(s) = (s/beta)^2 + ln(1 - sinh^2 s / sinh^2 beta) on (0, beta).
/// Assembled with log1p so the fourth-order cancellation at small beta
/// survives in doubles.
double f_beta(double beta, double s);

/// F_beta'(s) = 2 s / beta^2 - sinh(2s) / (sinh^2 beta - sinh^2 s).
double f_beta_deriv(double beta, double s);

struct FBetaMax {
  double s_o;    // interior maximizer of F_beta
  double value;  // F_beta(s_o) > 0
};

/// Locates the interior maximizer by bisection on F_beta' with interval
/// tolerance `tol`.  F_beta starts flat-increasing at 0 and dives to -inf at
/// beta, so a sign change always exists.
FBetaMax s_o_solve(double beta, double tol = 1e-14);

/// Phi(s) = ln(cosh s) / s^2, continuously extended by 1/2 at s = 0; strictly
/// decreasing on (0, inf).
double phi(double s);

/// Dyadic calibration of the small-beta regime: fits the constant
/// c = max of sup F_beta / beta^4 over beta = 2^{-k}, k in [k_fit_lo, k_hi],
/// then reports the largest dyadic beta whose ratio still sits within 2c.
struct SmallBetaCalibration {
  double c_o;     // largest admissible dyadic beta
  double c_fit;   // fitted fourth-order constant
  std::vector<double> betas;
  std::vector<double> ratios;  // sup F_beta / beta^4 per beta
};
SmallBetaCalibration calibrate_small_beta();

/// Fallback admissible radius when no calibration is wanted.
inline constexpr double kDefaultSmallBeta = 0.05;

/// Dimension and radius thresholds for the part-at-infinity /
/// part-near-zero split, all driven by p in (1, 2) and the calibrated c_o.
struct Thresholds {
  double p;
  int n_p;           // least n >= 100 with the eps_o floor below 1/2
  double eps_lower;  // admissible eps_o floor at n = n_p
  int n_A;           // least n >= 100 with A (n-1)^{-1/4} / 2 <= c_o
  // The radius-split threshold runs into the billions for p near 1, hence
  // the wider integers.
  long long n_star_p;       // least n >= 100 from which r_star is admissible
  double r_star;            // radius split at n = n_star_p, bracket power -1
  long long n_star_p_sqrt;  // same with the bracket raised to -1/2
  double r_star_sqrt;
};

/// The two r_star variants use [2^{-1} Phi(2^{-1}) (1 - p^{-1/2})] raised to
/// -1 (as the radius split is displayed) and to -1/2 (matching the n_*(p)
/// selection rule); both are computed and reported so the discrepancy stays
/// visible.  Admissibility of n for r_star means
/// r_star(n) <= (n-1)^{-1/4} <= 2 c_o, which is eventually monotone, so the
/// least n is found by bisection over a monotone predicate.
Thresholds thresholds(double p, double A = 1.0, double c_o = kDefaultSmallBeta);

/// Complex-case dimension threshold: least n >= 100 with
/// [4^{-1} Phi(4^{-1}) (1 - p^{-1/2})]^{-1/4} sqrt(ln(n/2)/(n/2)) < 1/2,
/// and the matching eps_o floor (bracket power -1/2) at that n.
struct ThresholdsC {
  double p;
  int n_p;
  double eps_lower;
};
ThresholdsC thresholds_hc(double p);

/// One scanned point of the local maximal comparison on H^n = R^+ x R^{n-1}:
/// ball averages of a product profile phi(v) psi(|w|) at (y, 0), reduced to
/// a 1-D slice integral bounded through the Euclidean maximal value of psi,
/// against sup_s e^{s L_{n-1}} applied to the same reduction.
struct ProductProfile {
  std::function<double(double)> phi_vertical;  // profile in v = y-coordinate
  std::function<double(double)> psi_radial;    // radial profile in |w|
  double psi_support = 1.0;   // radius beyond which psi vanishes
  double phi_lo = 0.0;        // support of phi_vertical
  double phi_hi = 8.0;
};

struct LocalComparisonResult {
  double lhs;          // sup over r in (0, eps_o) of the reduced ball average
  double rhs_base;     // sup over the s-grid of the semigroup side, no constant
  bool s_grid_edge;    // maximizing s hit the top of the grid (truncation)
};

/// pre: n >= 3, eps_o > 0 with (n-1) eps_o^4 <= A.  `y` is the height of the
/// evaluation point.
LocalComparisonResult local_maximal_comparison(int n, double eps_o, double y,
                                               const ProductProfile& profile,
                                               const QuadratureSpec& spec);

/// One sample of the concentrated ball-slice bound on the solvable extension
/// of H(2(n-1), 1): ratio of the exact dilated-region volume, normalized by
/// Omega_{2n} (2 sinh(r/2))^{2n-1}, to the concentration profile
/// sqrt(n-1) (a h)^{n/2} e^{-(n-1) tau^2 / r^2} e^{-n^2 r^2 / (16 (n-1))}.
double ball_slice_ratio(int n, double a, double h, double r,
                        const QuadratureSpec& spec);

struct BallSliceScan {
  double worst_ratio;  // max over samples; finite when the bound form holds
  std::vector<double> ratios;
};

/// Random scan of ball_slice_ratio over |ln(h/a)| < r <= A (n - 1/2)^{-1/4}.
BallSliceScan ball_slice_scan(int n, double A, int samples,
                              const CounterRng& rng,
                              const QuadratureSpec& spec);

}  // namespace hyperlap
