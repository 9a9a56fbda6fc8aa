#include "hyperlap/kernels.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "hyperlap/special.hpp"

namespace hyperlap {

namespace {

constexpr double kPi = std::numbers::pi;

double sqrt_4pi_t(double t) { return std::sqrt(4.0 * kPi * t); }

}  // namespace

double k1(double t, double r) {
  if (!(t > 0.0)) throw std::domain_error("k1: requires t > 0");
  return std::exp(-r * r / (4.0 * t)) / sqrt_4pi_t(t);
}

RadialKernelExpr odd_heat_expr(int n_odd) {
  if (n_odd < 1 || n_odd % 2 == 0)
    throw std::domain_error("odd_heat_expr: requires odd n >= 1");
  RadialKernelExpr e = RadialKernelExpr::gaussian(
      1.0 / std::sqrt(4.0 * kPi), 1, AngleScale::full);
  for (int n = 1; n < n_odd; n += 2) {
    e = e.neg_inv_sinh_deriv();
    e.scale_coeffs(1.0 / (2.0 * kPi));
    e.add_exp_rate(static_cast<double>(n));
  }
  return e;
}

double even_heat(int n_even, double t, double r, const QuadratureSpec& spec) {
  if (n_even < 2 || n_even % 2 != 0)
    throw std::domain_error("even_heat: requires even n >= 2");
  if (!(t > 0.0)) throw std::domain_error("even_heat: requires t > 0");
  if (r < 0.0) throw std::domain_error("even_heat: requires r >= 0");
  const RadialKernelExpr upper = odd_heat_expr(n_even + 1);
  const double cr = std::cosh(r);
  // u^2 = cosh s - cosh r turns sinh s ds / sqrt(cosh s - cosh r) into 2 du.
  auto integrand = [&](double u) {
    return 2.0 * upper.evaluate(t, std::acosh(cr + u * u));
  };
  const double I = integrate_to_infinity(integrand, 0.0, spec);
  if (I <= 0.0) return 0.0;
  // Log space: the prefactor alone overflows near t = 2836/(2n-1) while the
  // integral underflows to compensate.
  return std::exp(0.5 * std::numbers::ln2 +
                  0.25 * (2.0 * n_even - 1.0) * t + std::log(I));
}

double hn_heat(int n, double t, double r, const QuadratureSpec& spec) {
  if (n < 1) throw std::domain_error("hn_heat: requires n >= 1");
  if (n == 1) return k1(t, r);
  if (n % 2 == 1) return odd_heat_expr(n).evaluate(t, r);
  return even_heat(n, t, r, spec);
}

double k2_direct(double t, double r, const QuadratureSpec& spec) {
  if (!(t > 0.0)) throw std::domain_error("k2_direct: requires t > 0");
  const double cr = std::cosh(r);
  auto integrand = [&](double u) {
    const double s = std::acosh(cr + u * u);
    return 2.0 * s * std::exp(-s * s / (4.0 * t)) / std::sinh(s);
  };
  const double I = integrate_to_infinity(integrand, 0.0, spec);
  return std::sqrt(2.0) * std::pow(4.0 * kPi * t, -1.5) *
         std::exp(-0.25 * t) * I;
}

double sl_kernel(double alpha, double t, double y, double v) {
  if (!(alpha > 1.0)) throw std::domain_error("sl_kernel: requires alpha > 1");
  if (!(t > 0.0) || !(y > 0.0) || !(v > 0.0))
    throw std::domain_error("sl_kernel: requires t, y, v > 0");
  const double lr = std::log(v / y);
  return std::exp(0.5 * alpha * (std::log(y) + std::log(v)) -
                  0.25 * alpha * alpha * t - lr * lr / (4.0 * t)) /
         sqrt_4pi_t(t);
}

double sl_apply(double alpha, double t, const std::function<double(double)>& f,
                double y, const QuadratureSpec& spec) {
  if (!(alpha > 1.0)) throw std::domain_error("sl_apply: requires alpha > 1");
  if (!(t > 0.0) || !(y > 0.0))
    throw std::domain_error("sl_apply: requires t, y > 0");
  // With u = ln(v/y) the kernel times the weight v^{-alpha-1} dv becomes
  // (4 pi t)^{-1/2} exp(-(u + alpha t)^2 / 4t) du: a Markov average of
  // v = y e^u values.
  auto integrand = [&](double u) {
    const double z = u + alpha * t;
    return std::exp(-z * z / (4.0 * t)) * f(y * std::exp(u));
  };
  return integrate_real_line(integrand, -alpha * t, spec) / sqrt_4pi_t(t);
}

double hc_heat(int n, double t, double r, const QuadratureSpec& spec) {
  if (n < 2) throw std::domain_error("hc_heat: requires n >= 2");
  if (!(t > 0.0)) throw std::domain_error("hc_heat: requires t > 0");
  if (r < 0.0) throw std::domain_error("hc_heat: requires r >= 0");
  const RadialKernelExpr odd = odd_heat_expr(2 * n + 1);
  const double sh = std::sinh(0.5 * r);
  const double sh2 = sh * sh;
  // u^2 = sinh^2(s/2) - sinh^2(r/2); the half-angle arc is
  // s/2 = arcsinh(sqrt(sh2 + u^2)) and a 1/cosh(s/2) factor remains.
  auto integrand = [&](double u) {
    const double w = sh2 + u * u;
    const double half_s = std::asinh(std::sqrt(w));
    return 2.0 * odd.evaluate(0.25 * t, half_s) / std::sqrt(1.0 + w);
  };
  const double I = integrate_to_infinity(integrand, 0.0, spec);
  return std::exp(-2.0 * n * std::numbers::ln2) * I;
}

std::uint64_t CkjTable::at(int k, int j) const {
  if (k < 1 || k > k_max || j < 1 || j > k)
    throw std::out_of_range("CkjTable::at: indices out of range");
  return rows[k - 1][j - 1];
}

CkjTable ckj_table(int k_max) {
  if (k_max < 1) throw std::domain_error("ckj_table: requires k_max >= 1");
  CkjTable t;
  t.k_max = k_max;
  t.rows.assign(k_max, {});
  t.rows[0] = {1};
  for (int k = 1; k < k_max; ++k) {
    // row k+1 from row k via C(k+1,j) = (2k - j) C(k,j) + C(k,j-1),
    // with C(k, 0) = 0 and C(k+1, k+1) = 1.
    const auto& prev = t.rows[k - 1];
    std::vector<std::uint64_t> row(k + 1, 0);
    for (int j = 1; j <= k; ++j) {
      std::uint64_t scaled;
      if (__builtin_mul_overflow(prev[j - 1],
                                 static_cast<std::uint64_t>(2 * k - j),
                                 &scaled))
        throw std::overflow_error("ckj_table: uint64 overflow");
      const std::uint64_t carry = (j >= 2) ? prev[j - 2] : 0;
      if (__builtin_add_overflow(scaled, carry, &row[j - 1]))
        throw std::overflow_error("ckj_table: uint64 overflow");
    }
    row[k] = 1;
    t.rows[k] = std::move(row);
  }
  return t;
}

RadialKernelExpr an_operator_expr(int n_half, int k_full) {
  if (n_half < 0 || k_full < 0)
    throw std::domain_error("an_operator_expr: negative operator powers");
  RadialKernelExpr e = RadialKernelExpr::gaussian(1.0, 0, AngleScale::half);
  for (int i = 0; i < n_half; ++i) e = e.neg_inv_sinh_deriv();
  for (int i = 0; i < k_full; ++i) e = e.neg_inv_sinh_full_deriv();
  return e;
}

double an_expansion_sum(int n_half, int k_full, const CkjTable& table,
                        double t, double r) {
  if (k_full < 1) throw std::domain_error("an_expansion_sum: requires k >= 1");
  const double two_ch = 2.0 * std::cosh(0.5 * r);
  double sum = 0.0;
  for (int j = 1; j <= k_full; ++j) {
    RadialKernelExpr e = RadialKernelExpr::gaussian(1.0, 0, AngleScale::half);
    for (int i = 0; i < n_half + j; ++i) e = e.neg_inv_sinh_deriv();
    sum += static_cast<double>(table.at(k_full, j)) *
           std::pow(two_ch, j - k_full) * e.evaluate(t, r);
  }
  return std::pow(two_ch, -k_full) * sum;
}

double an_heat(int two_n, int m, double t, double r,
               const QuadratureSpec& spec) {
  if (two_n <= 0 || two_n % 2 != 0)
    throw std::domain_error("an_heat: requires even two_n > 0");
  if (m <= 0) throw std::domain_error("an_heat: requires m > 0");
  if (!(t > 0.0)) throw std::domain_error("an_heat: requires t > 0");
  if (r < 0.0) throw std::domain_error("an_heat: requires r >= 0");
  const int nn = two_n / 2;
  const double q = nn + m;
  const double log2 = std::numbers::ln2;
  const double lpi = std::log(kPi);
  if (m % 2 == 0) {
    const RadialKernelExpr e = an_operator_expr(nn, m / 2);
    const double pref =
        std::exp(-(two_n + 0.5 * m + 1.0) * log2 -
                 0.5 * (two_n + m + 1.0) * lpi - 0.25 * q * q * t) /
        std::sqrt(t);
    return pref * e.evaluate(t, r);
  }
  const RadialKernelExpr e = an_operator_expr(nn, (m + 1) / 2);
  const double cr = std::cosh(r);
  auto integrand = [&](double u) {
    return 2.0 * e.evaluate(t, std::acosh(cr + u * u));
  };
  const double I = integrate_to_infinity(integrand, 0.0, spec);
  const double pref =
      std::exp(-(two_n + 0.5 * m + 1.0) * log2 -
               0.5 * (two_n + m + 2.0) * lpi - 0.25 * q * q * t) /
      std::sqrt(t);
  return pref * I;
}

double hn_heat_mass(int n, double t, const QuadratureSpec& spec) {
  if (n < 2) throw std::domain_error("hn_heat_mass: requires n >= 2");
  const double area = sphere_area(n);
  if (n % 2 == 1) {
    const RadialKernelExpr e = odd_heat_expr(n);
    auto integrand = [&](double r) {
      return e.evaluate(t, r) * area * std::pow(std::sinh(r), n - 1);
    };
    return integrate_to_infinity(integrand, 0.0, spec);
  }
  // One tolerance decade of headroom for the inner descent integral.
  QuadratureSpec inner = spec;
  inner.rel_tol = std::max(spec.rel_tol * 0.1, 1e-13);
  auto integrand = [&](double r) {
    return even_heat(n, t, r, inner) * area * std::pow(std::sinh(r), n - 1);
  };
  return integrate_to_infinity(integrand, 0.0, spec);
}

double hc_heat_mass(int n, double t, const QuadratureSpec& spec) {
  if (n < 2) throw std::domain_error("hc_heat_mass: requires n >= 2");
  // V_c'(r) = 2^{2n-1} omega_{2n-1} sinh^{2n-1}(r/2) cosh(r/2) with
  // omega_{2n-1} the area of the unit sphere in R^{2n}.
  const double area = sphere_area(2 * n);
  const double pref = std::exp((2.0 * n - 1.0) * std::numbers::ln2);
  QuadratureSpec inner = spec;
  inner.rel_tol = std::max(spec.rel_tol * 0.1, 1e-13);
  auto integrand = [&](double r) {
    return hc_heat(n, t, r, inner) * pref * area *
           std::pow(std::sinh(0.5 * r), 2 * n - 1) * std::cosh(0.5 * r);
  };
  return integrate_to_infinity(integrand, 0.0, spec);
}

double an_heat_mass(int two_n, int m, double t, const QuadratureSpec& spec) {
  const double area = sphere_area(two_n + m + 1);
  const double pref = std::exp((two_n + m) * std::numbers::ln2);
  QuadratureSpec inner = spec;
  inner.rel_tol = std::max(spec.rel_tol * 0.1, 1e-13);
  auto integrand = [&](double r) {
    return an_heat(two_n, m, t, r, inner) * pref * area *
           std::pow(std::sinh(0.5 * r), two_n + m) *
           std::pow(std::cosh(0.5 * r), m);
  };
  return integrate_to_infinity(integrand, 0.0, spec);
}

}  // namespace hyperlap
