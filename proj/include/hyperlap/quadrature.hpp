#pragma once

#include <cmath>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

namespace hyperlap {

/// Endpoint regularization applied by operations that integrate up to a
/// vanishing or near-singular endpoint.  `automatic` lets the operation pick
/// the substitution it was designed around; the other values force a choice.
enum class EndpointSubstitution { automatic_, none, sqrt_, sin_ };

struct QuadratureSpec {
  double rel_tol = 1e-10;
  double abs_tol = 1e-13;
  int max_subdivisions = 400;
  EndpointSubstitution endpoint_substitution = EndpointSubstitution::automatic_;
};

class QuadratureError : public std::runtime_error {
 public:
  explicit QuadratureError(const std::string& what) : std::runtime_error(what) {}
};

/// Adaptive Gauss-Kronrod (G7,K15) on [a, b].  Subdivides the interval with
/// the worst local error estimate until the summed error meets
/// max(abs_tol, rel_tol*|I|), and throws QuadratureError when
/// max_subdivisions splits were not enough.
double integrate(const std::function<double(double)>& f, double a, double b,
                 const QuadratureSpec& spec);

/// Integral over [a, +inf).  The upper limit is truncated where the integrand
/// has dropped below abs_tol*1e-3 relative to the peak seen on a geometric
/// probe sequence, then the truncation point is doubled until two consecutive
/// truncated integrals agree within tolerance.
double integrate_to_infinity(const std::function<double(double)>& f, double a,
                             const QuadratureSpec& spec);

/// Integral over the whole line, split at `center` (ideally near the peak).
double integrate_real_line(const std::function<double(double)>& f,
                           double center, const QuadratureSpec& spec);

}  // namespace hyperlap
