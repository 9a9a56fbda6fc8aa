#include "hyperlap/maximal.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <numbers>
#include <numeric>
#include <stdexcept>

#include "hyperlap/parallel.hpp"
#include "hyperlap/special.hpp"

namespace hyperlap {

namespace {

constexpr double kGolden = 0.6180339887498949;

double golden_max(const std::function<double(double)>& f, double a, double b,
                  int iterations) {
  double x1 = b - kGolden * (b - a);
  double x2 = a + kGolden * (b - a);
  double f1 = f(x1);
  double f2 = f(x2);
  for (int i = 0; i < iterations; ++i) {
    if (f1 < f2) {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + kGolden * (b - a);
      f2 = f(x2);
    } else {
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = b - kGolden * (b - a);
      f1 = f(x1);
    }
  }
  return std::max(f1, f2);
}

}  // namespace

double euclid_maximal_radial(int d, const std::function<double(double)>& psi,
                             double t, const QuadratureSpec& spec) {
  if (d < 1) throw std::domain_error("euclid_maximal_radial: needs d >= 1");
  if (t < 0.0)
    throw std::domain_error("euclid_maximal_radial: t must be nonnegative");

  const auto average = [&](double r) -> double {
    if (d == 1) {
      // Fold the |s| kink out of the panel when the ball straddles zero.
      double raw = 0.0;
      if (r > t)
        raw = integrate(psi, 0.0, r - t, spec) +
              integrate(psi, 0.0, r + t, spec);
      else
        raw = integrate([&](double s) { return psi(std::abs(s)); }, t - r,
                        t + r, spec);
      return raw / (2.0 * r);
    }
    if (t == 0.0) {
      const double raw = integrate(
          [&](double s) { return psi(s) * std::pow(s, d - 1); }, 0.0, r, spec);
      return d * raw / std::pow(r, d);
    }
    // Slice the off-center ball into the spherical caps it cuts out of each
    // radius-s sphere.
    QuadratureSpec inner = spec;
    inner.rel_tol = std::max(spec.rel_tol, 1e-9);
    const double rim = sphere_area(d - 1);
    const auto slice = [&](double s) {
      if (s <= 0.0) return 0.0;
      // 1 + ((s-t)^2 - r^2)/(2st) equals the law-of-cosines ratio without
      // the s^2 - r^2 cancellation that dominates when r is large.
      const double gap = s - t;
      double c = 1.0 + (gap * gap - r * r) / (2.0 * s * t);
      c = std::clamp(c, -1.0, 1.0);
      const double alpha = std::acos(c);
      if (alpha <= 0.0) return 0.0;
      const double cap = integrate(
          [&](double u) { return std::pow(std::sin(u), d - 2); }, 0.0, alpha,
          inner);
      return psi(s) * std::pow(s, d - 1) * rim * cap;
    };
    // Spheres below r - t sit entirely inside the ball; integrating them as
    // their own panel keeps the cap transition from hiding at the far end of
    // a single panel where the quadrature would sample right past it.
    double raw = 0.0;
    if (r > t)
      raw = integrate(slice, 0.0, r - t, spec) +
            integrate(slice, r - t, t + r, spec);
    else
      raw = integrate(slice, t - r, t + r, spec);
    return raw / std::exp(log_ball_volume(d) + d * std::log(r));
  };

  const double lo_exp = -4.0;
  const double hi_exp = 3.0;
  const int total = static_cast<int>((hi_exp - lo_exp) * 64.0) + 1;
  const auto radius_at = [&](int i) {
    return std::pow(10.0, lo_exp + (hi_exp - lo_exp) * i / (total - 1.0));
  };
  double best = 0.0;
  int arg = -1;
  for (int i = 0; i < total; ++i) {
    const double v = average(radius_at(i));
    if (v > best) {
      best = v;
      arg = i;
    }
  }
  if (arg >= 0) {
    const double a = radius_at(std::max(0, arg - 1));
    const double b = radius_at(std::min(total - 1, arg + 1));
    best = std::max(best, golden_max(average, a, b, 40));
  }
  return best;
}

// ---------------------------------------------------------------------------
// Half-space grids.
// ---------------------------------------------------------------------------

std::size_t HalfSpaceGrid::cells() const {
  std::size_t count = log_y.size();
  for (int k = 1; k < n; ++k) count *= x_axis.size();
  return count;
}

HnPoint HalfSpaceGrid::point(std::size_t flat) const {
  const std::size_t nx = x_axis.size();
  HnPoint p;
  p.x.resize(static_cast<std::size_t>(n) - 1);
  for (int k = n - 2; k >= 0; --k) {
    p.x[static_cast<std::size_t>(k)] = x_axis[flat % nx];
    flat /= nx;
  }
  p.y = std::exp(log_y[flat]);
  return p;
}

double HalfSpaceGrid::weight(std::size_t flat) const {
  const std::size_t nx = x_axis.size();
  for (int k = 0; k < n - 1; ++k) flat /= nx;
  const double dly = log_y[1] - log_y[0];
  const double dx = x_axis[1] - x_axis[0];
  return std::exp(-(n - 1.0) * log_y[flat]) * dly *
         std::pow(dx, static_cast<double>(n - 1));
}

HalfSpaceGrid make_half_space_grid(int n, std::size_t y_cells,
                                   double log_y_half_width,
                                   std::size_t x_cells, double x_half_width) {
  if (n != 2 && n != 3)
    throw std::invalid_argument("make_half_space_grid: n must be 2 or 3");
  if (y_cells < 2 || x_cells < 2)
    throw std::invalid_argument("make_half_space_grid: needs >= 2 cells per axis");
  if (!(log_y_half_width > 0.0) || !(x_half_width > 0.0))
    throw std::invalid_argument("make_half_space_grid: widths must be positive");

  HalfSpaceGrid g;
  g.n = n;
  g.log_y.resize(y_cells);
  for (std::size_t i = 0; i < y_cells; ++i)
    g.log_y[i] = -log_y_half_width +
                 2.0 * log_y_half_width * static_cast<double>(i) /
                     static_cast<double>(y_cells - 1);
  g.x_axis.resize(x_cells);
  for (std::size_t i = 0; i < x_cells; ++i)
    g.x_axis[i] = -x_half_width + 2.0 * x_half_width * static_cast<double>(i) /
                                      static_cast<double>(x_cells - 1);
  g.values.assign(g.cells(), 0.0);
  return g;
}

HalfSpaceGrid standard_grid(int n) {
  if (n == 2) return make_half_space_grid(2, 81, 2.5, 81, 6.0);
  if (n == 3) return make_half_space_grid(3, 31, 2.0, 31, 4.0);
  throw std::invalid_argument("standard_grid: n must be 2 or 3");
}

void fill_grid(HalfSpaceGrid& g,
               const std::function<double(const HnPoint&)>& f) {
  const std::size_t count = g.cells();
  g.values.resize(count);
  for (std::size_t i = 0; i < count; ++i) g.values[i] = f(g.point(i));
}

double lp_norm(const HalfSpaceGrid& g, const std::vector<double>& f,
               double p) {
  if (!(p >= 1.0)) throw std::domain_error("lp_norm: needs p >= 1");
  if (f.size() != g.cells())
    throw std::invalid_argument("lp_norm: value count does not match the grid");
  long double acc = 0.0L;
  for (std::size_t i = 0; i < f.size(); ++i)
    acc += std::pow(std::abs(f[i]), p) * static_cast<long double>(g.weight(i));
  return static_cast<double>(std::pow(acc, 1.0L / p));
}

std::vector<double> default_radius_grid(const HalfSpaceGrid& g) {
  const double dly = g.log_y[1] - g.log_y[0];
  const double dx = g.x_axis[1] - g.x_axis[0];
  const double r_min = 0.5 * std::min(dly, dx);
  const double r_max = 5.0;
  const int count =
      static_cast<int>(std::ceil(64.0 * std::log10(r_max / r_min))) + 1;
  std::vector<double> r(static_cast<std::size_t>(count));
  for (int i = 0; i < count; ++i)
    r[static_cast<std::size_t>(i)] =
        r_min * std::pow(r_max / r_min, i / (count - 1.0));
  return r;
}

// ---------------------------------------------------------------------------
// Sorted-class engine.  Every centered ball the grid can realize is a prefix
// of the cells sorted by distance, cut at a complete tie class; sorting once
// per center therefore yields every operator at that center in one sweep.
// ---------------------------------------------------------------------------

namespace {

struct GridCoords {
  std::vector<double> y;  // per cell
  std::vector<double> x;  // per cell, xdim consecutive entries
  std::vector<double> w;  // per cell
  int xdim = 1;
};

GridCoords coords_of(const HalfSpaceGrid& g) {
  const std::size_t count = g.cells();
  GridCoords c;
  c.xdim = g.n - 1;
  c.y.resize(count);
  c.x.resize(count * static_cast<std::size_t>(c.xdim));
  c.w.resize(count);
  for (std::size_t i = 0; i < count; ++i) {
    const HnPoint p = g.point(i);
    c.y[i] = p.y;
    for (int k = 0; k < c.xdim; ++k)
      c.x[i * static_cast<std::size_t>(c.xdim) + static_cast<std::size_t>(k)] =
          p.x[static_cast<std::size_t>(k)];
    c.w[i] = g.weight(i);
  }
  return c;
}

struct CenterSort {
  std::vector<std::uint32_t> order;  // cells sorted by distance
  std::vector<double> key;           // cosh d, aligned with order
  std::vector<double> weight;        // cell weight, aligned with order
};

void sort_around(const GridCoords& c, std::size_t center, CenterSort& s,
                 std::vector<double>& raw) {
  const std::size_t count = c.y.size();
  const std::size_t xd = static_cast<std::size_t>(c.xdim);
  const double cy = c.y[center];
  const double* cx = &c.x[center * xd];
  raw.resize(count);
  for (std::size_t i = 0; i < count; ++i) {
    double d2 = 0.0;
    const double* xi = &c.x[i * xd];
    for (std::size_t k = 0; k < xd; ++k) {
      const double diff = cx[k] - xi[k];
      d2 += diff * diff;
    }
    raw[i] = (cy * cy + c.y[i] * c.y[i] + d2) / (2.0 * cy * c.y[i]);
  }
  s.order.resize(count);
  std::iota(s.order.begin(), s.order.end(), 0u);
  std::sort(s.order.begin(), s.order.end(),
            [&](std::uint32_t a, std::uint32_t b) { return raw[a] < raw[b]; });
  s.key.resize(count);
  s.weight.resize(count);
  for (std::size_t j = 0; j < count; ++j) {
    s.key[j] = raw[s.order[j]];
    s.weight[j] = c.w[s.order[j]];
  }
}

struct SweepOutput {
  double m_full = 0.0;
  double m_local = 0.0;
  double s_tail = 0.0;
};

// One pass over the distance classes, for several functions at once.
// cosh_eps separates the local prefix {d < eps} from the tail {d >= eps}.
void sweep_center(const CenterSort& s,
                  const std::vector<const std::vector<double>*>& fs,
                  double cosh_eps, SweepOutput* out) {
  const std::size_t count = s.key.size();
  const std::size_t nf = fs.size();
  std::vector<long double> total_fw(nf, 0.0L);
  std::vector<long double> class_fw(nf, 0.0L);
  long double total_w = 0.0L;
  for (std::size_t i = 0; i < nf; ++i) out[i] = SweepOutput{};

  std::size_t j = 0;
  while (j < count) {
    const double k = s.key[j];
    long double class_w = 0.0L;
    std::fill(class_fw.begin(), class_fw.end(), 0.0L);
    while (j < count && s.key[j] == k) {
      const std::uint32_t cell = s.order[j];
      class_w += s.weight[j];
      for (std::size_t i = 0; i < nf; ++i)
        class_fw[i] += static_cast<long double>((*fs[i])[cell]) * s.weight[j];
      ++j;
    }
    total_w += class_w;
    const bool local = k < cosh_eps;
    for (std::size_t i = 0; i < nf; ++i) {
      total_fw[i] += class_fw[i];
      const double avg = static_cast<double>(total_fw[i] / total_w);
      out[i].m_full = std::max(out[i].m_full, avg);
      if (local)
        out[i].m_local = std::max(out[i].m_local, avg);
      else
        out[i].s_tail += static_cast<double>(class_fw[i] / total_w);
    }
  }
}

}  // namespace

double hn_discrete_maximal(const HalfSpaceGrid& g, std::size_t center,
                           const std::vector<double>& r_grid) {
  if (center >= g.cells())
    throw std::invalid_argument("hn_discrete_maximal: center out of range");
  if (g.values.size() != g.cells())
    throw std::invalid_argument("hn_discrete_maximal: grid has no sampled values");

  const GridCoords c = coords_of(g);
  CenterSort s;
  std::vector<double> raw;
  sort_around(c, center, s, raw);

  // class-cumulative tables
  std::vector<double> class_key;
  std::vector<double> cum_w;
  std::vector<double> cum_fw;
  long double w = 0.0L;
  long double fw = 0.0L;
  std::size_t j = 0;
  while (j < s.key.size()) {
    const double k = s.key[j];
    while (j < s.key.size() && s.key[j] == k) {
      w += s.weight[j];
      fw += static_cast<long double>(g.values[s.order[j]]) * s.weight[j];
      ++j;
    }
    class_key.push_back(k);
    cum_w.push_back(static_cast<double>(w));
    cum_fw.push_back(static_cast<double>(fw));
  }

  double best = 0.0;
  for (const double r : r_grid) {
    if (!(r > 0.0)) continue;
    const double threshold = std::cosh(r);
    const auto it =
        std::lower_bound(class_key.begin(), class_key.end(), threshold);
    if (it == class_key.begin()) continue;  // no cell strictly inside
    const std::size_t idx =
        static_cast<std::size_t>(it - class_key.begin()) - 1;
    best = std::max(best, cum_fw[idx] / cum_w[idx]);
  }
  return best;
}

MaximalDecomposition maximal_decomposition(const HalfSpaceGrid& g,
                                           std::size_t center, double eps) {
  if (center >= g.cells())
    throw std::invalid_argument("maximal_decomposition: center out of range");
  if (!(eps > 0.0))
    throw std::domain_error("maximal_decomposition: eps must be positive");
  const GridCoords c = coords_of(g);
  CenterSort s;
  std::vector<double> raw;
  sort_around(c, center, s, raw);
  SweepOutput out;
  const std::vector<const std::vector<double>*> fs{&g.values};
  sweep_center(s, fs, std::cosh(eps), &out);
  return {out.m_full, out.m_local, out.s_tail};
}

DecompositionField decomposition_field(const HalfSpaceGrid& g, double eps) {
  if (!(eps > 0.0))
    throw std::domain_error("decomposition_field: eps must be positive");
  const GridCoords c = coords_of(g);
  const std::size_t count = g.cells();
  DecompositionField field;
  field.m_full.resize(count);
  field.m_local.resize(count);
  field.s_tail.resize(count);
  const double cosh_eps = std::cosh(eps);
  const std::vector<const std::vector<double>*> fs{&g.values};
  parallel_for(count, [&](std::size_t center) {
    thread_local CenterSort s;
    thread_local std::vector<double> raw;
    sort_around(c, center, s, raw);
    SweepOutput out;
    sweep_center(s, fs, cosh_eps, &out);
    field.m_full[center] = out.m_full;
    field.m_local[center] = out.m_local;
    field.s_tail[center] = out.s_tail;
  });
  return field;
}

std::vector<double> maximal_field(const HalfSpaceGrid& g,
                                  const std::vector<double>& f) {
  if (f.size() != g.cells())
    throw std::invalid_argument("maximal_field: value count does not match the grid");
  const GridCoords c = coords_of(g);
  const std::size_t count = g.cells();
  std::vector<double> field(count);
  const std::vector<const std::vector<double>*> fs{&f};
  parallel_for(count, [&](std::size_t center) {
    thread_local CenterSort s;
    thread_local std::vector<double> raw;
    sort_around(c, center, s, raw);
    SweepOutput out;
    sweep_center(s, fs, 2.0, &out);
    field[center] = out.m_full;
  });
  return field;
}

std::vector<SuiteFunction> standard_suite(const HalfSpaceGrid& g) {
  const std::size_t count = g.cells();
  HnPoint base;
  base.y = 1.0;
  base.x.assign(static_cast<std::size_t>(g.n) - 1, 0.0);
  HnPoint offset;
  offset.y = std::exp(0.8);
  offset.x.assign(static_cast<std::size_t>(g.n) - 1, 0.0);
  offset.x[0] = 1.0;

  std::vector<double> dist(count);
  std::vector<double> dist_offset(count);
  std::size_t nearest = 0;
  double nearest_d = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < count; ++i) {
    const HnPoint p = g.point(i);
    dist[i] = hn_distance(base, p);
    dist_offset[i] = hn_distance(offset, p);
    if (dist[i] < nearest_d) {
      nearest_d = dist[i];
      nearest = i;
    }
  }

  std::vector<SuiteFunction> suite;
  suite.push_back({"constant", std::vector<double>(count, 1.0)});
  {
    std::vector<double> v(count, 0.0);
    v[nearest] = 1.0;
    suite.push_back({"spike", std::move(v)});
  }
  {
    std::vector<double> v(count);
    for (std::size_t i = 0; i < count; ++i) v[i] = dist[i] < 0.5 ? 1.0 : 0.0;
    suite.push_back({"ball_half", std::move(v)});
  }
  {
    std::vector<double> v(count);
    for (std::size_t i = 0; i < count; ++i)
      v[i] = dist_offset[i] < 0.5 ? 1.0 : 0.0;
    suite.push_back({"ball_offset", std::move(v)});
  }
  {
    std::vector<double> v(count);
    for (std::size_t i = 0; i < count; ++i) v[i] = std::exp(-2.0 * dist[i]);
    suite.push_back({"exp_tail", std::move(v)});
  }
  {
    std::vector<double> v(count);
    for (std::size_t i = 0; i < count; ++i)
      v[i] = std::exp(-dist[i] * dist[i]);
    suite.push_back({"gauss_bump", std::move(v)});
  }
  return suite;
}

OpnormResult empirical_opnorm(const HalfSpaceGrid& g, double p,
                              const std::vector<SuiteFunction>& suite) {
  if (suite.empty())
    throw std::invalid_argument("empirical_opnorm: empty suite");
  const std::size_t count = g.cells();
  const std::size_t nf = suite.size();
  std::vector<const std::vector<double>*> fs(nf);
  for (std::size_t i = 0; i < nf; ++i) {
    if (suite[i].values.size() != count)
      throw std::invalid_argument(
          "empirical_opnorm: suite entry does not match the grid");
    fs[i] = &suite[i].values;
  }

  const GridCoords c = coords_of(g);
  std::vector<std::vector<double>> m(nf, std::vector<double>(count));
  parallel_for(count, [&](std::size_t center) {
    thread_local CenterSort s;
    thread_local std::vector<double> raw;
    thread_local std::vector<SweepOutput> out;
    out.resize(nf);
    sort_around(c, center, s, raw);
    sweep_center(s, fs, 2.0, out.data());
    for (std::size_t i = 0; i < nf; ++i) m[i][center] = out[i].m_full;
  });

  OpnormResult result;
  for (std::size_t i = 0; i < nf; ++i) {
    const double ratio =
        lp_norm(g, m[i], p) / lp_norm(g, suite[i].values, p);
    result.per_function.push_back({suite[i].name, ratio});
    result.worst_ratio = std::max(result.worst_ratio, ratio);
  }
  return result;
}

// ---------------------------------------------------------------------------
// Spherical maximal function on H(2, 1).
// ---------------------------------------------------------------------------

SphereQuadrature SphereQuadrature::circle(int points) {
  if (points < 1)
    throw std::invalid_argument("SphereQuadrature::circle: needs points >= 1");
  SphereQuadrature q;
  q.dim = 2;
  const double w = 2.0 * std::numbers::pi / points;
  q.nodes.reserve(static_cast<std::size_t>(points));
  q.weights.assign(static_cast<std::size_t>(points), w);
  for (int i = 0; i < points; ++i) {
    const double th = 2.0 * std::numbers::pi * i / points;
    q.nodes.push_back({std::cos(th), std::sin(th)});
  }
  return q;
}

namespace {

// Uniform-axis bracket: index i and fraction f with v between nodes i, i+1.
bool locate(const std::vector<double>& axis, double v, std::size_t& i,
            double& f) {
  if (v < axis.front() || v > axis.back()) return false;
  const double step = axis[1] - axis[0];
  double u = (v - axis.front()) / step;
  std::size_t idx = static_cast<std::size_t>(u);
  if (idx >= axis.size() - 1) idx = axis.size() - 2;
  i = idx;
  f = std::clamp(u - static_cast<double>(idx), 0.0, 1.0);
  return true;
}

}  // namespace

double HeisenbergField::at(double x1, double x2, double rho) const {
  std::size_t i1;
  std::size_t i2;
  std::size_t ir;
  double f1;
  double f2;
  double fr;
  if (!locate(x_axis, x1, i1, f1) || !locate(x_axis, x2, i2, f2) ||
      !locate(rho_axis, rho, ir, fr))
    return 0.0;
  const std::size_t nx = x_axis.size();
  const std::size_t nr = rho_axis.size();
  const auto v = [&](std::size_t a, std::size_t b, std::size_t c) {
    return values[(a * nx + b) * nr + c];
  };
  double out = 0.0;
  for (int da = 0; da <= 1; ++da) {
    for (int db = 0; db <= 1; ++db) {
      for (int dc = 0; dc <= 1; ++dc) {
        const double weight = (da ? f1 : 1.0 - f1) * (db ? f2 : 1.0 - f2) *
                              (dc ? fr : 1.0 - fr);
        out += weight * v(i1 + static_cast<std::size_t>(da),
                          i2 + static_cast<std::size_t>(db),
                          ir + static_cast<std::size_t>(dc));
      }
    }
  }
  return out;
}

HeisenbergField make_heisenberg_field(std::size_t x_cells, double x_half_width,
                                      std::size_t rho_cells,
                                      double rho_half_width) {
  if (x_cells < 2 || rho_cells < 2)
    throw std::invalid_argument("make_heisenberg_field: needs >= 2 cells per axis");
  HeisenbergField f;
  f.x_axis.resize(x_cells);
  for (std::size_t i = 0; i < x_cells; ++i)
    f.x_axis[i] = -x_half_width + 2.0 * x_half_width * static_cast<double>(i) /
                                      static_cast<double>(x_cells - 1);
  f.rho_axis.resize(rho_cells);
  for (std::size_t i = 0; i < rho_cells; ++i)
    f.rho_axis[i] = -rho_half_width +
                    2.0 * rho_half_width * static_cast<double>(i) /
                        static_cast<double>(rho_cells - 1);
  f.values.assign(x_cells * x_cells * rho_cells, 0.0);
  return f;
}

void fill_heisenberg_field(
    HeisenbergField& f,
    const std::function<double(double, double, double)>& fn) {
  const std::size_t nx = f.x_axis.size();
  const std::size_t nr = f.rho_axis.size();
  f.values.resize(nx * nx * nr);
  for (std::size_t a = 0; a < nx; ++a)
    for (std::size_t b = 0; b < nx; ++b)
      for (std::size_t c = 0; c < nr; ++c)
        f.values[(a * nx + b) * nr + c] =
            fn(f.x_axis[a], f.x_axis[b], f.rho_axis[c]);
}

double heisenberg_spherical_maximal(const HTypeDescriptor& d,
                                    const HeisenbergField& f,
                                    const HTypePoint& at,
                                    const std::vector<double>& r_grid,
                                    const SphereQuadrature& sphere) {
  if (d.two_n != 2 || d.m != 1)
    throw std::invalid_argument(
        "heisenberg_spherical_maximal: descriptor must be H(2, 1)");
  if (sphere.dim != 2)
    throw std::invalid_argument(
        "heisenberg_spherical_maximal: needs a circle quadrature");
  if (at.x.size() != 2 || at.rho.size() != 1)
    throw std::invalid_argument(
        "heisenberg_spherical_maximal: point does not live on H(2, 1)");

  const double total = sphere_area(2);
  double best = 0.0;
  HTypePoint step;
  step.x.resize(2);
  step.rho.assign(1, 0.0);
  for (const double r : r_grid) {
    if (!(r > 0.0)) continue;
    long double acc = 0.0L;
    for (std::size_t i = 0; i < sphere.nodes.size(); ++i) {
      step.x[0] = r * sphere.nodes[i][0];
      step.x[1] = r * sphere.nodes[i][1];
      const HTypePoint moved = htype_mul(d, at, step);
      acc += sphere.weights[i] *
             std::abs(f.at(moved.x[0], moved.x[1], moved.rho[0]));
    }
    best = std::max(best, static_cast<double>(acc) / total);
  }
  return best;
}

}  // namespace hyperlap
