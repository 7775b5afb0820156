#pragma once

#include <complex>
#include <functional>
#include <vector>

namespace bargkit {

// Nodes x_i and "total" weights w_i such that
//     integral_R g(y) dy  ~=  sum_i w_i g(x_i),
// exact whenever g(y) = P(y) e^{-y^2} with deg P <= 2n-1.  The weights carry
// the e^{+x_i^2} factor implicitly, so integrands keep their own Gaussian
// damping and neither the weights nor the node values overflow.
struct GaussHermiteRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};
GaussHermiteRule gauss_hermite_rule(int n);

// Plain Gauss-Legendre on [-1, 1].
struct GaussLegendreRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};
GaussLegendreRule gauss_legendre_rule(int n);

// Composite Gauss-Legendre on [a, b]: n_panels equal panels, a fixed-order
// rule on each.
struct PanelRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};
PanelRule composite_legendre(double a, double b, int n_panels, int nodes_per_panel = 16);

// Orthonormal Hermite function values [h_0(x), ..., h_{max_order}(x)], built
// by the normalized three-term recurrence seeded with pi^{-1/4} e^{-x^2/2}.
std::vector<double> hermite_function_values(int max_order, double x);

// Integral of g over the polydisk {|z_j| <= radius} in C^d with respect to
// Lebesgue measure.  Each coordinate is integrated in polar form: the radial
// direction in t = |z_j|^2 by composite Gauss-Legendre (radial_nodes total
// points in panels of 16), the angular direction by the angular_nodes-point
// trapezoid rule.  shell_fraction is the relative magnitude of the
// contribution from points whose largest t_j falls in the outermost radial
// panel; a non-negligible value means the radius truncates the integrand.
struct PolarResult {
  std::complex<double> value{0.0, 0.0};
  double shell_fraction = 0.0;
};
PolarResult polar_integrate(
    int d, double radius, int radial_nodes, int angular_nodes,
    const std::function<std::complex<double>(const std::vector<std::complex<double>>&)>& g);

}  // namespace bargkit
