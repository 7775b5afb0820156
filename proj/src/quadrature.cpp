#include "bargkit/quadrature.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace bargkit {

std::vector<double> hermite_function_values(int max_order, double x) {
  std::vector<double> v(static_cast<size_t>(max_order) + 1);
  v[0] = std::pow(std::numbers::pi, -0.25) * std::exp(-0.5 * x * x);
  if (max_order >= 1) v[1] = std::sqrt(2.0) * x * v[0];
  for (int k = 1; k < max_order; ++k) {
    v[static_cast<size_t>(k) + 1] = x * std::sqrt(2.0 / (k + 1)) * v[static_cast<size_t>(k)] -
                                    std::sqrt(static_cast<double>(k) / (k + 1)) * v[static_cast<size_t>(k) - 1];
  }
  return v;
}

GaussHermiteRule gauss_hermite_rule(int n) {
  if (n < 1) throw std::invalid_argument("quadrature order must be positive");
  Eigen::VectorXd diag = Eigen::VectorXd::Zero(n);
  Eigen::VectorXd sub(n - 1 > 0 ? n - 1 : 0);
  for (int k = 1; k < n; ++k) sub[k - 1] = std::sqrt(0.5 * k);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es;
  es.computeFromTridiagonal(diag, sub, Eigen::EigenvaluesOnly);
  GaussHermiteRule rule;
  rule.nodes.resize(static_cast<size_t>(n));
  rule.weights.resize(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) {
    double x = es.eigenvalues()[i];
    // Two Newton polish steps on h_n(x) = 0; h_n'(x) = sqrt(2n) h_{n-1}(x) - x h_n(x).
    for (int it = 0; it < 2; ++it) {
      auto h = hermite_function_values(n, x);
      double d = std::sqrt(2.0 * n) * h[static_cast<size_t>(n) - 1] - x * h[static_cast<size_t>(n)];
      if (d != 0.0) x -= h[static_cast<size_t>(n)] / d;
    }
    auto h = hermite_function_values(n - 1, x);
    double s = 0.0;
    for (double hv : h) s += hv * hv;
    rule.nodes[static_cast<size_t>(i)] = x;
    rule.weights[static_cast<size_t>(i)] = 1.0 / s;
  }
  return rule;
}

GaussLegendreRule gauss_legendre_rule(int n) {
  if (n < 1) throw std::invalid_argument("quadrature order must be positive");
  GaussLegendreRule rule;
  rule.nodes.resize(static_cast<size_t>(n));
  rule.weights.resize(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) {
    double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
    double pn = 0.0, dpn = 0.0;
    for (int it = 0; it < 64; ++it) {
      double p0 = 1.0, p1 = x;
      for (int k = 1; k < n; ++k) {
        double p2 = ((2.0 * k + 1.0) * x * p1 - k * p0) / (k + 1.0);
        p0 = p1;
        p1 = p2;
      }
      pn = p1;
      dpn = n * (x * p1 - p0) / (x * x - 1.0);
      double dx = pn / dpn;
      x -= dx;
      if (std::abs(dx) < 1e-15) break;
    }
    rule.nodes[static_cast<size_t>(i)] = x;
    rule.weights[static_cast<size_t>(i)] = 2.0 / ((1.0 - x * x) * dpn * dpn);
  }
  return rule;
}

PanelRule composite_legendre(double a, double b, int n_panels, int nodes_per_panel) {
  if (!(b > a)) throw std::invalid_argument("composite rule needs b > a");
  if (n_panels < 1 || nodes_per_panel < 1) throw std::invalid_argument("composite rule needs positive sizes");
  GaussLegendreRule base = gauss_legendre_rule(nodes_per_panel);
  PanelRule rule;
  rule.nodes.reserve(static_cast<size_t>(n_panels) * static_cast<size_t>(nodes_per_panel));
  rule.weights.reserve(rule.nodes.capacity());
  double len = (b - a) / n_panels;
  for (int p = 0; p < n_panels; ++p) {
    double lo = a + p * len;
    for (int i = 0; i < nodes_per_panel; ++i) {
      rule.nodes.push_back(lo + 0.5 * len * (base.nodes[static_cast<size_t>(i)] + 1.0));
      rule.weights.push_back(0.5 * len * base.weights[static_cast<size_t>(i)]);
    }
  }
  return rule;
}

PolarResult polar_integrate(
    int d, double radius, int radial_nodes, int angular_nodes,
    const std::function<std::complex<double>(const std::vector<std::complex<double>>&)>& g) {
  if (d < 1 || d > 3) throw std::invalid_argument("polar integration supports d in {1,2,3}");
  if (!(radius > 0.0)) throw std::invalid_argument("polar integration needs a positive radius");
  const int per_panel = 16;
  int n_panels = std::max(1, (radial_nodes + per_panel - 1) / per_panel);
  double tmax = radius * radius;
  PanelRule radial = composite_legendre(0.0, tmax, n_panels, per_panel);
  double outer_lo = tmax * (n_panels - 1) / n_panels;

  struct Node {
    std::complex<double> z;
    double weight;
    bool outer;
  };
  std::vector<Node> coord;
  coord.reserve(radial.nodes.size() * static_cast<size_t>(angular_nodes));
  double dtheta = 2.0 * std::numbers::pi / angular_nodes;
  for (size_t m = 0; m < radial.nodes.size(); ++m) {
    double t = radial.nodes[m];
    double rho = std::sqrt(t);
    // dlambda = rho drho dtheta = (1/2) dt dtheta
    double w = 0.5 * radial.weights[m] * dtheta;
    bool outer = t >= outer_lo;
    for (int k = 0; k < angular_nodes; ++k) {
      double th = k * dtheta;
      coord.push_back({std::complex<double>(rho * std::cos(th), rho * std::sin(th)), w, outer});
    }
  }

  const size_t per_coord = coord.size();
  std::vector<size_t> idx(static_cast<size_t>(d), 0);
  std::vector<std::complex<double>> z(static_cast<size_t>(d));
  std::complex<double> total{0.0, 0.0};
  std::complex<double> shell{0.0, 0.0};
  bool done = false;
  while (!done) {
    double w = 1.0;
    bool outer = false;
    for (int j = 0; j < d; ++j) {
      const Node& nd = coord[idx[static_cast<size_t>(j)]];
      z[static_cast<size_t>(j)] = nd.z;
      w *= nd.weight;
      outer = outer || nd.outer;
    }
    std::complex<double> term = w * g(z);
    total += term;
    if (outer) shell += term;
    int j = d - 1;
    while (j >= 0) {
      if (++idx[static_cast<size_t>(j)] < per_coord) break;
      idx[static_cast<size_t>(j)] = 0;
      --j;
    }
    done = j < 0;
  }
  PolarResult res;
  res.value = total;
  double denom = std::abs(total);
  res.shell_fraction = denom > 0.0 ? std::abs(shell) / denom : std::abs(shell);
  return res;
}

}  // namespace bargkit
