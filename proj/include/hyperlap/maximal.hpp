#pragma once

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "hyperlap/geometry.hpp"
#include "hyperlap/quadrature.hpp"

namespace hyperlap {

/// Centered Hardy-Littlewood maximal value of a radial profile psi >= 0 on
/// R^d, evaluated at a point of norm t:
///   sup_r |B|^{-1} int_{B(x_o, r)} psi(|w|) dw.
/// At t = 0 the averages collapse to (d/r^d) int_0^r psi(s) s^{d-1} ds; for
/// t > 0 the ball is sliced into spherical caps.  The sup runs over a log
/// radius grid followed by a local golden-section refinement.
double euclid_maximal_radial(int d, const std::function<double(double)>& psi,
                             double t, const QuadratureSpec& spec);

// ---------------------------------------------------------------------------
// Discrete half-space grids.  Cells sit at the nodes of a uniform grid in
// (ln y, x), each carrying the measure weight e^{-(n-1) ln y} dly dx^{n-1},
// the cell-sized chunk of y^{-n} dy dx.  The grid with these weights is an
// exact finite measure space; every operator identity below is exact on it,
// while its fidelity to the continuum depends on resolution as usual.
// ---------------------------------------------------------------------------

struct HalfSpaceGrid {
  int n = 2;                   // 2 or 3
  std::vector<double> log_y;   // ascending, uniform
  std::vector<double> x_axis;  // ascending, uniform, shared by all x axes
  std::vector<double> values;  // sampled function, flattened y-major

  std::size_t cells() const;
  HnPoint point(std::size_t flat) const;
  double weight(std::size_t flat) const;
};

HalfSpaceGrid make_half_space_grid(int n, std::size_t y_cells,
                                   double log_y_half_width,
                                   std::size_t x_cells, double x_half_width);

/// Default desk-scale geometries: 81^2 cells for n = 2, 31^3 for n = 3.
HalfSpaceGrid standard_grid(int n);

void fill_grid(HalfSpaceGrid& g,
               const std::function<double(const HnPoint&)>& f);

/// (sum |f_i|^p w_i)^{1/p} against the grid measure.
double lp_norm(const HalfSpaceGrid& g, const std::vector<double>& f, double p);

/// Radius grid used by the CLI: log-spaced, 64 points per decade from the
/// smallest cell scale up to 5.
std::vector<double> default_radius_grid(const HalfSpaceGrid& g);

/// sup over the given radii of the ball average of g.values around the
/// center cell.  Balls are the exact membership sets {d < r} (compared via
/// cosh d, which is monotone and needs no acosh per cell).
double hn_discrete_maximal(const HalfSpaceGrid& g, std::size_t center,
                           const std::vector<double>& r_grid);

/// The three operators of the split M <= M_eps + S_eps at one center, taken
/// over every realizable ball (cells sorted by distance, complete tie
/// classes):
///   m_full  = max over all balls {d < r} of the f-average,
///   m_local = same but only balls with r <= eps,
///   s_tail  = sum over cells with d >= eps of f w / W(d), where W(d) is the
///             closed-ball weight through the tie class of d.
/// The inequality m_full <= m_local + s_tail holds cell by cell by
/// construction: any ball with r > eps splits into its {d < eps} part, whose
/// average is at most m_local, and tail cells, each of whose 1/W factors
/// dominates the 1/(ball weight) it replaces.
struct MaximalDecomposition {
  double m_full = 0.0;
  double m_local = 0.0;
  double s_tail = 0.0;
};
MaximalDecomposition maximal_decomposition(const HalfSpaceGrid& g,
                                           std::size_t center, double eps);

struct DecompositionField {
  std::vector<double> m_full;
  std::vector<double> m_local;
  std::vector<double> s_tail;
};
DecompositionField decomposition_field(const HalfSpaceGrid& g, double eps);

/// Exact discrete maximal function of f at every center (sup over all
/// realizable balls).  Parallel over centers.
std::vector<double> maximal_field(const HalfSpaceGrid& g,
                                  const std::vector<double>& f);

struct SuiteFunction {
  std::string name;
  std::vector<double> values;
};

/// Fixed probe family: constant, center spike, two ball indicators, an
/// exponential tail, and a Gaussian bump.
std::vector<SuiteFunction> standard_suite(const HalfSpaceGrid& g);

struct OpnormEntry {
  std::string name;
  double ratio;  // ||Mf||_p / ||f||_p
};
struct OpnormResult {
  double worst_ratio = 0.0;
  std::vector<OpnormEntry> per_function;
};

/// Empirical lower probe of the operator norm: the distance sort is done
/// once per center and shared across the whole suite.
OpnormResult empirical_opnorm(const HalfSpaceGrid& g, double p,
                              const std::vector<SuiteFunction>& suite);

// ---------------------------------------------------------------------------
// Spherical maximal function on H(2, 1).
// ---------------------------------------------------------------------------

struct SphereQuadrature {
  int dim = 2;  // sphere S^{dim-1} in R^{dim}
  std::vector<std::vector<double>> nodes;
  std::vector<double> weights;  // sum to sphere_area(dim)

  static SphereQuadrature circle(int points);
};

/// Function sampled on a uniform (x1, x2, rho) box, read back by trilinear
/// interpolation; points outside the box evaluate to 0 (truncation is part
/// of the contract, not an error).
struct HeisenbergField {
  std::vector<double> x_axis;    // shared by both horizontal coordinates
  std::vector<double> rho_axis;
  std::vector<double> values;    // (ix1 * nx + ix2) * n_rho + i_rho

  double at(double x1, double x2, double rho) const;
};

HeisenbergField make_heisenberg_field(std::size_t x_cells, double x_half_width,
                                      std::size_t rho_cells,
                                      double rho_half_width);
void fill_heisenberg_field(
    HeisenbergField& f,
    const std::function<double(double, double, double)>& fn);

/// sup over r_grid of the sphere average of f((x, rho) . delta_r(theta, 0)),
/// the dilated-circle maximal function; descriptor must be H(2, 1).
double heisenberg_spherical_maximal(const HTypeDescriptor& d,
                                    const HeisenbergField& f,
                                    const HTypePoint& at,
                                    const std::vector<double>& r_grid,
                                    const SphereQuadrature& sphere);

}  // namespace hyperlap
