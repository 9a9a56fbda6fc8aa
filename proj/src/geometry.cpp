#include "hyperlap/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "hyperlap/special.hpp"

namespace hyperlap {

namespace {

double sq(double v) { return v * v; }

double dist2(const std::vector<double>& a, const std::vector<double>& b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += sq(a[i] - b[i]);
  return s;
}

double norm2(const std::vector<double>& a) {
  double s = 0.0;
  for (double v : a) s += v * v;
  return s;
}

// x^T M w for a row-major square matrix.
double bilinear(const std::vector<double>& M, const std::vector<double>& x,
                const std::vector<double>& w) {
  const std::size_t n = x.size();
  double s = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    double row = 0.0;
    for (std::size_t j = 0; j < n; ++j) row += M[i * n + j] * w[j];
    s += x[i] * row;
  }
  return s;
}

void check_point(const HTypeDescriptor& d, const HTypePoint& g,
                 const char* who) {
  if (static_cast<int>(g.x.size()) != d.two_n ||
      static_cast<int>(g.rho.size()) != d.m)
    throw std::invalid_argument(std::string(who) +
                                ": point dimensions do not match descriptor");
}

}  // namespace

double hn_distance(const HnPoint& g, const HnPoint& h) {
  if (g.x.size() != h.x.size())
    throw std::invalid_argument("hn_distance: mismatched dimensions");
  if (!(g.y > 0.0) || !(h.y > 0.0))
    throw std::domain_error("hn_distance: requires y > 0");
  const double arg =
      (sq(g.y) + sq(h.y) + dist2(g.x, h.x)) / (2.0 * g.y * h.y);
  return std::acosh(std::max(1.0, arg));
}

void HTypeDescriptor::validate(double tol) const {
  if (two_n <= 0 || two_n % 2 != 0)
    throw std::invalid_argument("descriptor: two_n must be even and positive");
  if (m <= 0) throw std::invalid_argument("descriptor: m must be positive");
  if (static_cast<int>(U.size()) != m)
    throw std::invalid_argument("descriptor: expected m matrices");
  const std::size_t n = static_cast<std::size_t>(two_n);
  for (const auto& M : U)
    if (M.size() != n * n)
      throw std::invalid_argument("descriptor: matrix has wrong shape");
  auto entry = [&](int j, std::size_t r, std::size_t c) {
    return U[j][r * n + c];
  };
  for (int j = 0; j < m; ++j) {
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c) {
        if (std::abs(entry(j, r, c) + entry(j, c, r)) > tol)
          throw std::invalid_argument("descriptor: U not skew-symmetric");
        // (U^T U)_{rc} = sum_k U_{kr} U_{kc}
        double dot = 0.0;
        for (std::size_t k = 0; k < n; ++k)
          dot += entry(j, k, r) * entry(j, k, c);
        const double want = (r == c) ? 1.0 : 0.0;
        if (std::abs(dot - want) > tol)
          throw std::invalid_argument("descriptor: U not orthogonal");
      }
  }
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j)
      for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) {
          double s = 0.0;
          for (std::size_t k = 0; k < n; ++k)
            s += entry(i, r, k) * entry(j, k, c) +
                 entry(j, r, k) * entry(i, k, c);
          if (std::abs(s) > tol)
            throw std::invalid_argument(
                "descriptor: U matrices do not anticommute");
        }
}

HTypeDescriptor HTypeDescriptor::heisenberg(int two_n) {
  if (two_n <= 0 || two_n % 2 != 0)
    throw std::invalid_argument("heisenberg: two_n must be even and positive");
  HTypeDescriptor d;
  d.two_n = two_n;
  d.m = 1;
  const std::size_t n = static_cast<std::size_t>(two_n);
  std::vector<double> M(n * n, 0.0);
  for (std::size_t b = 0; b + 1 < n; b += 2) {
    M[b * n + (b + 1)] = -1.0;
    M[(b + 1) * n + b] = 1.0;
  }
  d.U.push_back(std::move(M));
  return d;
}

HTypeDescriptor HTypeDescriptor::quaternionic(int m) {
  if (m < 1 || m > 3)
    throw std::invalid_argument("quaternionic: m must be 1, 2, or 3");
  HTypeDescriptor d;
  d.two_n = 4;
  d.m = m;
  // Left multiplication by i, j, k on (1, i, j, k) coordinates.
  const double I[16] = {0, -1, 0, 0, 1, 0, 0, 0, 0, 0, 0, -1, 0, 0, 1, 0};
  const double J[16] = {0, 0, -1, 0, 0, 0, 0, 1, 1, 0, 0, 0, 0, -1, 0, 0};
  const double K[16] = {0, 0, 0, -1, 0, 0, -1, 0, 0, 1, 0, 0, 1, 0, 0, 0};
  const double* mats[3] = {I, J, K};
  for (int j = 0; j < m; ++j)
    d.U.emplace_back(mats[j], mats[j] + 16);
  return d;
}

std::string descriptor_to_json(const HTypeDescriptor& d) {
  nlohmann::json j;
  j["two_n"] = d.two_n;
  j["m"] = d.m;
  j["U"] = d.U;
  return j.dump(2);
}

HTypeDescriptor descriptor_from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("descriptor: bad JSON: ") +
                                e.what());
  }
  if (!j.is_object() || !j.contains("two_n") || !j.contains("m") ||
      !j.contains("U"))
    throw std::invalid_argument(
        "descriptor: expected object with two_n, m, U");
  HTypeDescriptor d;
  try {
    d.two_n = j.at("two_n").get<int>();
    d.m = j.at("m").get<int>();
    d.U = j.at("U").get<std::vector<std::vector<double>>>();
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("descriptor: bad field type: ") +
                                e.what());
  }
  d.validate();
  return d;
}

HTypeDescriptor descriptor_from_file(const std::string& path) {
  std::ifstream in(path);
  if (!in)
    throw std::invalid_argument("descriptor: cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return descriptor_from_json(ss.str());
}

bool kecman_admissible(int two_n, int m) {
  if (two_n <= 0 || two_n % 2 != 0 || m <= 0) return false;
  int v = two_n, e = 0;
  while (v % 2 == 0) {
    v /= 2;
    ++e;
  }
  const int p = e / 4, q = e % 4;
  return m < 8 * p + (1 << q);
}

HTypePoint htype_mul(const HTypeDescriptor& d, const HTypePoint& g,
                     const HTypePoint& h) {
  check_point(d, g, "htype_mul");
  check_point(d, h, "htype_mul");
  HTypePoint out;
  out.x.resize(g.x.size());
  for (std::size_t i = 0; i < g.x.size(); ++i) out.x[i] = g.x[i] + h.x[i];
  out.rho.resize(g.rho.size());
  for (int j = 0; j < d.m; ++j)
    out.rho[j] = g.rho[j] + h.rho[j] + 0.5 * bilinear(d.U[j], g.x, h.x);
  return out;
}

HTypePoint htype_inverse(const HTypePoint& g) {
  HTypePoint out = g;
  for (double& v : out.x) v = -v;
  for (double& v : out.rho) v = -v;
  return out;
}

HTypePoint htype_dilate(const HTypePoint& g, double r) {
  if (!(r > 0.0)) throw std::domain_error("htype_dilate: requires r > 0");
  HTypePoint out = g;
  for (double& v : out.x) v *= r;
  for (double& v : out.rho) v *= r * r;
  return out;
}

ANPoint an_mul(const HTypeDescriptor& d, const ANPoint& g, const ANPoint& h) {
  if (!(g.a > 0.0) || !(h.a > 0.0))
    throw std::domain_error("an_mul: requires a > 0");
  ANPoint out;
  out.a = g.a * h.a;
  out.n_part =
      htype_mul(d, g.n_part, htype_dilate(h.n_part, std::sqrt(g.a)));
  return out;
}

ANPoint an_inverse(const ANPoint& g) {
  if (!(g.a > 0.0)) throw std::domain_error("an_inverse: requires a > 0");
  ANPoint out;
  out.a = 1.0 / g.a;
  out.n_part = htype_dilate(htype_inverse(g.n_part), 1.0 / std::sqrt(g.a));
  return out;
}

double an_distance(const HTypeDescriptor& d, const ANPoint& g,
                   const ANPoint& h) {
  const ANPoint rel = an_mul(d, an_inverse(g), h);
  const double xx = norm2(rel.n_part.x);
  const double arg = (sq(xx / 4.0) + norm2(rel.n_part.rho) + 1.0 +
                      sq(rel.a) + (xx / 2.0) * (1.0 + rel.a)) /
                     (2.0 * rel.a);
  return std::acosh(std::max(1.0, arg));
}

double kappa(double a, double h, double r) {
  if (!(a > 0.0) || !(h > 0.0))
    throw std::domain_error("kappa: requires a, h > 0");
  if (!(r > 0.0)) throw std::domain_error("kappa: requires r > 0");
  const double gamma = h / a;
  if (!(gamma > std::exp(-r) && gamma < std::exp(r)))
    throw std::domain_error("kappa: requires exp(-r) < h/a < exp(r)");
  return 2.0 * gamma * std::cosh(r) - (1.0 + gamma * gamma);
}

bool ball_contains(const HTypeDescriptor& d, const BallSpec& ball,
                   const ANPoint& p) {
  const ANPoint& g = ball.center;
  check_point(d, g.n_part, "ball_contains");
  check_point(d, p.n_part, "ball_contains");
  if (!(ball.radius > 0.0))
    throw std::domain_error("ball_contains: requires radius > 0");
  const double a = g.a, h = p.a, r = ball.radius;
  if (!(a > 0.0) || !(h > 0.0))
    throw std::domain_error("ball_contains: requires a > 0");
  const double gamma = h / a;
  if (!(gamma > std::exp(-r) && gamma < std::exp(r))) return false;

  const std::vector<double>& x = g.n_part.x;
  const std::vector<double>& w = p.n_part.x;
  double dx2 = dist2(x, w);
  double lhs = dx2 / (2.0 * a) * (1.0 + gamma) + sq(dx2) / (16.0 * a * a);
  for (int j = 0; j < d.m; ++j) {
    const double comp = p.n_part.rho[j] / a - g.n_part.rho[j] / a -
                        bilinear(d.U[j], x, w) / (2.0 * a);
    lhs += sq(comp);
  }
  return lhs < 2.0 * gamma * std::cosh(r) - (1.0 + gamma * gamma);
}

double region_volume(const HTypeDescriptor& d, double a, double h, double r,
                     const QuadratureSpec& spec) {
  if (d.m != 1)
    throw std::invalid_argument("region_volume: descriptor must have m = 1");
  const double kap = kappa(a, h, r);
  const double b = 1.0 + h / a;
  const double c = std::sqrt(kap + b * b);
  // 2 omega_{two_n - 1} int_0^{rho_max} sqrt(c^2 - (rho^2/4 + b)^2)
  //   rho^{two_n - 1} d rho, then scaled by a^{two_n/2 + 1}.
  const int tn = d.two_n;
  const double theta0 = std::asin(std::min(1.0, b / c));
  const double half_pi = std::asin(1.0);
  bool use_sin = spec.endpoint_substitution != EndpointSubstitution::none;
  double vol;
  if (use_sin) {
    // rho^2/4 + b = c sin(theta) turns the vanishing square root into
    // c cos^2(theta) and keeps the integrand smooth at both ends.
    auto integrand = [&](double th) {
      const double s = c * std::sin(th) - b;
      if (s <= 0.0) return 0.0;
      const double cs = std::cos(th);
      return cs * cs * std::pow(4.0 * s, 0.5 * tn - 1.0);
    };
    vol = 2.0 * sphere_area(tn) * 2.0 * c * c *
          integrate(integrand, theta0, half_pi, spec);
  } else {
    const double rho_max = 2.0 * std::sqrt(c - b);
    auto integrand = [&](double rho) {
      const double q = rho * rho / 4.0 + b;
      const double under = c * c - q * q;
      if (under <= 0.0) return 0.0;
      return std::sqrt(under) * std::pow(rho, tn - 1);
    };
    vol = 2.0 * sphere_area(tn) * integrate(integrand, 0.0, rho_max, spec);
  }
  return std::pow(a, 0.5 * tn + 1.0) * vol;
}

double log_hn_volume(int n, double r, const QuadratureSpec& spec) {
  if (n < 2) throw std::domain_error("hn_volume: requires n >= 2");
  if (!(r > 0.0)) throw std::domain_error("hn_volume: requires r > 0");
  // Factor out the endpoint value of sinh^{n-1} so the integrand lives in
  // (0, 1] regardless of n.
  const double peak = (n - 1) * std::log(std::sinh(r));
  auto integrand = [&](double s) {
    if (s <= 0.0) return 0.0;
    return std::exp((n - 1) * std::log(std::sinh(s)) - peak);
  };
  const double I = integrate(integrand, 0.0, r, spec);
  return log_sphere_area(n) + peak + std::log(I);
}

double hn_volume(int n, double r, const QuadratureSpec& spec) {
  return std::exp(log_hn_volume(n, r, spec));
}

double hn_volume_sandwich(int n, double r, const QuadratureSpec& spec) {
  const double log_psi = (n - 1) * std::log(std::sinh(r)) +
                         std::log(std::min(1.0, std::sinh(r)));
  return std::exp(log_hn_volume(n, r, spec) - log_ball_volume(n) - log_psi);
}

double log_vc_volume(int n, double r) {
  if (n < 2) throw std::domain_error("vc_volume: requires n >= 2");
  if (!(r > 0.0)) throw std::domain_error("vc_volume: requires r > 0");
  return 2.0 * n * std::numbers::ln2 + log_ball_volume(2 * n) +
         2.0 * n * std::log(std::sinh(0.5 * r));
}

double vc_volume(int n, double r) { return std::exp(log_vc_volume(n, r)); }

double log_an_volume(int two_n, int m, double r, const QuadratureSpec& spec) {
  if (two_n <= 0 || two_n % 2 != 0 || m <= 0)
    throw std::domain_error("an_volume: requires even two_n > 0 and m > 0");
  if (!(r > 0.0)) throw std::domain_error("an_volume: requires r > 0");
  const int s_pow = two_n + m;
  const double peak = s_pow * std::log(std::sinh(0.5 * r)) +
                      m * std::log(std::cosh(0.5 * r));
  auto integrand = [&](double s) {
    if (s <= 0.0) return 0.0;
    return std::exp(s_pow * std::log(std::sinh(0.5 * s)) +
                    m * std::log(std::cosh(0.5 * s)) - peak);
  };
  const double I = integrate(integrand, 0.0, r, spec);
  return s_pow * std::numbers::ln2 + log_sphere_area(s_pow + 1) + peak +
         std::log(I);
}

double an_volume(int two_n, int m, double r, const QuadratureSpec& spec) {
  return std::exp(log_an_volume(two_n, m, r, spec));
}

double an_volume_sandwich(int two_n, int m, double r,
                          const QuadratureSpec& spec) {
  const double log_shape = (two_n + m + 1) * std::numbers::ln2 +
                           log_ball_volume(two_n + m + 1) +
                           (two_n + m + 1) * std::log(std::sinh(0.5 * r)) +
                           (m - 1) * std::log(std::cosh(0.5 * r));
  return std::exp(log_an_volume(two_n, m, r, spec) - log_shape);
}

}  // namespace hyperlap
