#pragma once

#include <functional>
#include <limits>
#include <vector>

#include "bargkit/bargmann.hpp"
#include "bargkit/weights.hpp"

namespace bargkit {

// Uniform grid on phase space R^{2d}; axes ordered x_1..x_d, xi_1..xi_d,
// values stored row-major with the last axis fastest.
struct AxisSpec {
  double min = 0.0;
  double step = 1.0;
  int count = 2;
};

struct PlaneGridSpec {
  int dim = 1;
  std::vector<AxisSpec> x_axes;
  std::vector<AxisSpec> xi_axes;
  std::size_t total_points() const;
};

struct PlaneGrid {
  PlaneGridSpec spec;
  std::vector<Complex> values;
};

void validate(const PlaneGridSpec& spec);
PlaneGrid tabulate_plane(const PlaneGridSpec& spec, const PlaneFunction& f);

// Mixed L^{p,q} norm: a p-norm in x for each fixed xi, then a q-norm of the
// results in xi.  Riemann sums with trapezoid end weights; an infinite
// exponent takes a sup without volume factors.
inline const double p_infinity = std::numeric_limits<double>::infinity();
double mixed_norm(const PlaneGrid& grid, double p, double q);

// Sequence-side weighted norm (sum_a |c_a vartheta(a)|^2)^{1/2}, in log space.
double a2_weighted_norm_series(const HermiteExpansion& e, const SequenceWeight& theta);

// Quadrature-side norm (pi^{-d} integral |F w0|^2 dlambda)^{1/2} over the
// polydisk of the given radius, with the radial profile w0 given as log w0 on
// R_+^d in the variables t_j = |z_j|^2.  Rejects runs whose outermost radial
// panel carries more than 1e-8 of the integral.
double a2_weighted_norm_quadrature(
    const EntireFunctionHandle& F,
    const std::function<double(const std::vector<double>&)>& log_omega0, double radius = 8.0,
    int quad_order = 0);

Complex a2_inner_quadrature(const EntireFunctionHandle& F, const EntireFunctionHandle& G,
                            double radius = 8.0, int quad_order = 0);

// Modulation-style norm: mixed L^{p,q} norm of V(x, xi) * w(x + i xi) where V
// is the Gaussian-window transform of the expansion.
double modulation_norm(const HermiteExpansion& e, const WeightSpec& w, double p, double q,
                       const PlaneGridSpec& grid);

// sup over 0 <= N <= N_sup of ||H^N e||_{L^2} / (h^N (N!)^{2s}).
struct SeminormResult {
  double value = 0.0;
  int maximizer = 0;
};
SeminormResult pilipovic_seminorm(const HermiteExpansion& e, double h, double s, int N_sup = 60);

// Weighted L^1 comparison for the reproducing projection: with
// M(z) = |x|^{1/t} + |xi|^{1/s},
//   lhs = integral |Pi F(z)| e^{-|z|^2/2 - h2 M(z)} dlambda,
//   rhs = integral |F(z)|    e^{-|z|^2/2 - h1 M(z)} dlambda,
// both over the polydisk of the given radius.  Requires 0 < 2 h1 <= h2, and
// h2 < 1/2 whenever s or t equals 1/2.
struct ProjectionComparison {
  double lhs = 0.0;
  double rhs = 0.0;
  double ratio = 0.0;
};
ProjectionComparison pi_a_weighted_l1_check(const EntireFunctionHandle& F, double s, double t,
                                            double h1, double h2, double radius = 5.0);

}  // namespace bargkit
