#include "hyperlap/kernel_expr.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <stdexcept>
#include <tuple>

namespace hyperlap {

namespace {

long double ipow(long double base, int e) {
  if (e == 0) return 1.0L;
  bool inv = e < 0;
  unsigned n = static_cast<unsigned>(inv ? -e : e);
  long double acc = 1.0L, b = base;
  while (n) {
    if (n & 1u) acc *= b;
    b *= b;
    n >>= 1;
  }
  return inv ? 1.0L / acc : acc;
}

}  // namespace

RadialKernelExpr RadialKernelExpr::gaussian(double coeff, int t_inv_half_pow,
                                            AngleScale scale) {
  RadialKernelExpr e;
  e.scale = scale;
  e.terms.push_back(KernelTerm{coeff, 0, t_inv_half_pow, 0, 0});
  return e;
}

RadialKernelExpr RadialKernelExpr::neg_inv_sinh_deriv() const {
  // d/dr of coeff r^a t^{-b/2} cosh^c(u) sinh^d(u) e^{-r^2/4t}, u = sc*r:
  //   a r^{a-1} ...                         (power rule)
  //   + d*sc r^a cosh^{c+1} sinh^{d-1}      (sinh factor)
  //   + c*sc r^a cosh^{c-1} sinh^{d+1}      (cosh factor)
  //   - (1/2) r^{a+1} t^{-(b+2)/2} ...      (Gaussian)
  // then multiply by -1/sinh(u): sinh_pow -= 1, coeff negated.
  const double sc = (scale == AngleScale::half) ? 0.5 : 1.0;
  RadialKernelExpr out;
  out.scale = scale;
  out.exp_rate = exp_rate;
  out.terms.reserve(terms.size() * 4);
  for (const auto& t : terms) {
    if (t.r_pow > 0)
      out.terms.push_back(KernelTerm{-t.coeff * t.r_pow, t.r_pow - 1,
                                     t.t_inv_half_pow, t.cosh_pow,
                                     t.sinh_pow - 1});
    if (t.sinh_pow != 0)
      out.terms.push_back(KernelTerm{-t.coeff * t.sinh_pow * sc, t.r_pow,
                                     t.t_inv_half_pow, t.cosh_pow + 1,
                                     t.sinh_pow - 2});
    if (t.cosh_pow != 0)
      out.terms.push_back(KernelTerm{-t.coeff * t.cosh_pow * sc, t.r_pow,
                                     t.t_inv_half_pow, t.cosh_pow - 1,
                                     t.sinh_pow});
    out.terms.push_back(KernelTerm{0.5 * t.coeff, t.r_pow + 1,
                                   t.t_inv_half_pow + 2, t.cosh_pow,
                                   t.sinh_pow - 1});
  }
  out.canonicalize();
  return out;
}

RadialKernelExpr RadialKernelExpr::neg_inv_sinh_full_deriv() const {
  if (scale == AngleScale::full) return neg_inv_sinh_deriv();
  // 1/sinh(r) = 1/(2 sinh(r/2) cosh(r/2)); reuse the own-scale derivation
  // and shift the cosh power.
  RadialKernelExpr out = neg_inv_sinh_deriv();
  for (auto& t : out.terms) {
    t.coeff *= 0.5;
    t.cosh_pow -= 1;
  }
  return out;
}

void RadialKernelExpr::scale_coeffs(double c) {
  for (auto& t : terms) t.coeff *= c;
}

void RadialKernelExpr::canonicalize() {
  std::map<std::tuple<int, int, int, int>, double> acc;
  for (const auto& t : terms)
    acc[{t.r_pow, t.t_inv_half_pow, t.cosh_pow, t.sinh_pow}] += t.coeff;
  terms.clear();
  for (const auto& [key, coeff] : acc) {
    if (coeff == 0.0) continue;
    terms.push_back(KernelTerm{coeff, std::get<0>(key), std::get<1>(key),
                               std::get<2>(key), std::get<3>(key)});
  }
}

double RadialKernelExpr::origin_floor() const {
  // Inverse sinh powers make individual terms blow up at r = 0 even when
  // their sum stays finite, so those expressions keep a positive floor no
  // matter how well-conditioned the combined powers are.
  int worst = 0;
  bool singular = false;
  for (const auto& t : terms) {
    if (t.sinh_pow < 0) singular = true;
    worst = std::max(worst, -t.sinh_pow - t.r_pow);
  }
  if (!singular) return 0.0;
  return std::pow(std::numeric_limits<double>::epsilon(),
                  1.0 / (std::max(worst, 0) + 2));
}

double RadialKernelExpr::evaluate(double t, double r) const {
  if (!(t > 0.0)) throw std::domain_error("kernel expr: requires t > 0");
  if (r < 0.0) throw std::domain_error("kernel expr: requires r >= 0");
  const double floor = origin_floor();
  if (r < floor) {
    // The kernel is even and smooth in r, so interpolate in r^2 through the
    // two nearest radii where term-wise evaluation is still reliable.  This
    // keeps the value continuous at the floor for integrands sampled there.
    const double k1 = evaluate(t, floor);
    const double k2 = evaluate(t, 2.0 * floor);
    const double slope = (k2 - k1) / (3.0 * floor * floor);
    return k1 + slope * (r * r - floor * floor);
  }
  // Repeated derivations build coefficients of both signs whose partial sums
  // dwarf the kernel value, so the term sum runs in extended precision.
  const long double rr = r;
  const long double sc = (scale == AngleScale::half) ? 0.5L : 1.0L;
  const long double su = sinhl(sc * rr);
  const long double cu = coshl(sc * rr);
  const long double sqrt_inv_t = 1.0L / sqrtl(static_cast<long double>(t));
  long double sum = 0.0L;
  for (const auto& term : terms) {
    sum += term.coeff * ipow(rr, term.r_pow) *
           ipow(sqrt_inv_t, term.t_inv_half_pow) * ipow(cu, term.cosh_pow) *
           ipow(su, term.sinh_pow);
  }
  return static_cast<double>(
      sum * expl(-exp_rate * static_cast<long double>(t) -
                 rr * rr / (4.0L * static_cast<long double>(t))));
}

}  // namespace hyperlap
