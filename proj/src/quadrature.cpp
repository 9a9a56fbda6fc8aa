#include "hyperlap/quadrature.hpp"

#include <algorithm>
#include <cstdio>

namespace hyperlap {

namespace {

// 15-point Kronrod extension of the 7-point Gauss rule, nodes in [0, 1).
const double kKronrodNode[8] = {
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144838258730,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000};

const double kKronrodWeight[8] = {
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714};

// Gauss weights for the odd-indexed Kronrod nodes.
const double kGaussWeight[4] = {
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327};

struct Segment {
  double a, b;
  double integral;
  double error;
};

Segment evaluate_segment(const std::function<double(double)>& f, double a,
                         double b) {
  const double c = 0.5 * (a + b);
  const double h = 0.5 * (b - a);
  double fv[15];
  for (int i = 0; i < 7; ++i) {
    fv[i] = f(c - h * kKronrodNode[i]);
    fv[14 - i] = f(c + h * kKronrodNode[i]);
  }
  fv[7] = f(c);
  double kronrod = kKronrodWeight[7] * fv[7];
  double gauss = kGaussWeight[3] * fv[7];
  for (int i = 0; i < 7; ++i) {
    kronrod += kKronrodWeight[i] * (fv[i] + fv[14 - i]);
    if (i % 2 == 1) gauss += kGaussWeight[i / 2] * (fv[i] + fv[14 - i]);
  }
  kronrod *= h;
  gauss *= h;
  double err = std::abs(kronrod - gauss);
  // QUADPACK-style sharpening of the raw difference.
  double resasc = 0.0;
  const double mean = kronrod / (b - a);
  for (int i = 0; i < 15; ++i) {
    int k = (i < 7) ? i : 14 - i;
    resasc += kKronrodWeight[k] * std::abs(fv[i] - mean);
  }
  resasc *= h;
  if (resasc != 0.0 && err != 0.0) {
    double scale = std::pow(200.0 * err / resasc, 1.5);
    if (scale < 1.0) err = resasc * scale;
  }
  return Segment{a, b, kronrod, err};
}

}  // namespace

double integrate(const std::function<double(double)>& f, double a, double b,
                 const QuadratureSpec& spec) {
  if (!(a <= b)) throw std::domain_error("integrate: requires a <= b");
  if (a == b) return 0.0;
  std::vector<Segment> segs;
  segs.push_back(evaluate_segment(f, a, b));
  for (int splits = 0;; ++splits) {
    double total = 0.0, err = 0.0;
    for (const auto& s : segs) {
      total += s.integral;
      err += s.error;
    }
    if (!std::isfinite(total))
      throw QuadratureError("integrate: non-finite integrand value");
    if (err <= std::max(spec.abs_tol, spec.rel_tol * std::abs(total)))
      return total;
    if (splits >= spec.max_subdivisions) {
      char buf[160];
      std::snprintf(buf, sizeof buf,
                    "integrate: no convergence on [%g, %g] after %d "
                    "subdivisions (err=%.3e, value=%.6e)",
                    a, b, splits, err, total);
      throw QuadratureError(buf);
    }
    std::size_t worst = 0;
    for (std::size_t i = 1; i < segs.size(); ++i)
      if (segs[i].error > segs[worst].error) worst = i;
    Segment s = segs[worst];
    const double mid = 0.5 * (s.a + s.b);
    if (mid <= s.a || mid >= s.b)
      throw QuadratureError("integrate: interval collapsed below resolution");
    segs[worst] = evaluate_segment(f, s.a, mid);
    segs.push_back(evaluate_segment(f, mid, s.b));
  }
}

double integrate_to_infinity(const std::function<double(double)>& f, double a,
                             const QuadratureSpec& spec) {
  // Probe on a geometric ladder to find the peak and the point beyond which
  // the integrand is negligible against it.
  double peak = 0.0;
  double cutoff = a + 1.0;
  bool found = false;
  double step = 0.25;
  for (int k = 0; k < 75; ++k) {
    const double x = a + step;
    const double v = std::abs(f(x));
    if (v > peak) peak = v;
    if (peak > 0.0 && v <= peak * spec.abs_tol * 1e-3) {
      cutoff = x;
      found = true;
      break;
    }
    step *= 2.0;
  }
  if (!found) cutoff = a + step;
  if (peak == 0.0) {
    // Nothing seen on the ladder; integrate a modest window to be sure.
    return integrate(f, a, a + 64.0, spec);
  }
  double b = cutoff;
  double total = integrate(f, a, b, spec);
  for (int pass = 0; pass < 16; ++pass) {
    const double b2 = a + 2.0 * (b - a);
    const double tail = integrate(f, b, b2, spec);
    const double total2 = total + tail;
    if (std::abs(total2 - total) <=
        std::max(spec.abs_tol, spec.rel_tol * std::abs(total2)))
      return total2;
    total = total2;
    b = b2;
  }
  throw QuadratureError(
      "integrate_to_infinity: truncated integrals did not stabilize");
}

double integrate_real_line(const std::function<double(double)>& f,
                           double center, const QuadratureSpec& spec) {
  const double right = integrate_to_infinity(
      [&](double u) { return f(center + u); }, 0.0, spec);
  const double left = integrate_to_infinity(
      [&](double u) { return f(center - u); }, 0.0, spec);
  return left + right;
}

}  // namespace hyperlap
