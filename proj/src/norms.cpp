#include "bargkit/norms.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "bargkit/quadrature.hpp"

namespace bargkit {

std::size_t PlaneGridSpec::total_points() const {
  std::size_t n = 1;
  for (const auto& ax : x_axes) n *= static_cast<std::size_t>(ax.count);
  for (const auto& ax : xi_axes) n *= static_cast<std::size_t>(ax.count);
  return n;
}

void validate(const PlaneGridSpec& spec) {
  if (spec.dim < 1 || spec.dim > 3)
    throw std::invalid_argument("plane grid: dimension must be 1, 2 or 3");
  if (static_cast<int>(spec.x_axes.size()) != spec.dim ||
      static_cast<int>(spec.xi_axes.size()) != spec.dim)
    throw std::invalid_argument("plane grid: need one x axis and one xi axis per dimension");
  for (const auto& ax : spec.x_axes)
    if (ax.count < 2 || ax.step <= 0.0)
      throw std::invalid_argument("plane grid: each axis needs count >= 2 and step > 0");
  for (const auto& ax : spec.xi_axes)
    if (ax.count < 2 || ax.step <= 0.0)
      throw std::invalid_argument("plane grid: each axis needs count >= 2 and step > 0");
}

PlaneGrid tabulate_plane(const PlaneGridSpec& spec, const PlaneFunction& f) {
  validate(spec);
  const int d = spec.dim;
  PlaneGrid grid;
  grid.spec = spec;
  grid.values.resize(spec.total_points());
  std::vector<int> idx(2 * d, 0);
  std::vector<double> x(d), xi(d);
  std::size_t flat = 0;
  while (true) {
    for (int j = 0; j < d; ++j) x[j] = spec.x_axes[j].min + spec.x_axes[j].step * idx[j];
    for (int j = 0; j < d; ++j) xi[j] = spec.xi_axes[j].min + spec.xi_axes[j].step * idx[d + j];
    grid.values[flat++] = f(x, xi);
    int ax = 2 * d - 1;
    while (ax >= 0) {
      int count = ax < d ? spec.x_axes[ax].count : spec.xi_axes[ax - d].count;
      if (++idx[ax] < count) break;
      idx[ax--] = 0;
    }
    if (ax < 0) break;
  }
  return grid;
}

namespace {

// Trapezoid weight of the grid point with the given flat index along a block
// of axes, together with the block's total point count.
double block_weight(const std::vector<AxisSpec>& axes, std::size_t flat) {
  double w = 1.0;
  for (auto it = axes.rbegin(); it != axes.rend(); ++it) {
    int i = static_cast<int>(flat % static_cast<std::size_t>(it->count));
    flat /= static_cast<std::size_t>(it->count);
    w *= it->step * ((i == 0 || i == it->count - 1) ? 0.5 : 1.0);
  }
  return w;
}

std::size_t block_size(const std::vector<AxisSpec>& axes) {
  std::size_t n = 1;
  for (const auto& ax : axes) n *= static_cast<std::size_t>(ax.count);
  return n;
}

}  // namespace

double mixed_norm(const PlaneGrid& grid, double p, double q) {
  validate(grid.spec);
  if (grid.values.size() != grid.spec.total_points())
    throw std::invalid_argument("mixed_norm: value table does not match the grid");
  const bool p_inf = std::isinf(p);
  const bool q_inf = std::isinf(q);
  if ((!p_inf && p <= 0.0) || (!q_inf && q <= 0.0))
    throw std::invalid_argument("mixed_norm: exponents must be positive or infinite");

  const std::size_t nx = block_size(grid.spec.x_axes);
  const std::size_t nxi = block_size(grid.spec.xi_axes);
  std::vector<double> inner(nxi, 0.0);
  for (std::size_t ix = 0; ix < nx; ++ix) {
    double wx = p_inf ? 1.0 : block_weight(grid.spec.x_axes, ix);
    const Complex* row = grid.values.data() + ix * nxi;
    for (std::size_t ixi = 0; ixi < nxi; ++ixi) {
      double v = std::abs(row[ixi]);
      if (p_inf)
        inner[ixi] = std::max(inner[ixi], v);
      else
        inner[ixi] += wx * std::pow(v, p);
    }
  }
  double outer = 0.0;
  for (std::size_t ixi = 0; ixi < nxi; ++ixi) {
    double reduced = p_inf ? inner[ixi] : std::pow(inner[ixi], 1.0 / p);
    if (q_inf)
      outer = std::max(outer, reduced);
    else
      outer += block_weight(grid.spec.xi_axes, ixi) * std::pow(reduced, q);
  }
  return q_inf ? outer : std::pow(outer, 1.0 / q);
}

double a2_weighted_norm_series(const HermiteExpansion& e, const SequenceWeight& theta) {
  if (!theta) throw std::invalid_argument("a2_weighted_norm_series: weight is empty");
  double max_log = -std::numeric_limits<double>::infinity();
  std::vector<double> logs;
  logs.reserve(e.coeffs().size());
  for (const auto& [a, c] : e.coeffs()) {
    double mag = std::abs(c);
    double th = theta(a);
    if (mag == 0.0 || th == 0.0) continue;
    double lg = 2.0 * (std::log(mag) + std::log(th));
    logs.push_back(lg);
    max_log = std::max(max_log, lg);
  }
  if (logs.empty()) return 0.0;
  double acc = 0.0;
  for (double lg : logs) acc += std::exp(lg - max_log);
  return std::exp(0.5 * (max_log + std::log(acc)));
}

double a2_weighted_norm_quadrature(
    const EntireFunctionHandle& F,
    const std::function<double(const std::vector<double>&)>& log_omega0, double radius,
    int quad_order) {
  if (!log_omega0) throw std::invalid_argument("a2_weighted_norm_quadrature: profile is empty");
  const int d = F.dim;
  int radial = quad_order > 0 ? quad_order : 16 * static_cast<int>(std::ceil(radius * radius / 4.0));
  std::vector<double> t(d);
  PolarResult res = polar_integrate(d, radius, radial, 64, [&](const ComplexVec& w) -> Complex {
    for (int j = 0; j < d; ++j) t[j] = std::norm(w[j]);
    double mag = std::abs(handle_eval(F, w));
    if (mag == 0.0) return Complex(0.0, 0.0);
    return Complex(std::exp(2.0 * (std::log(mag) + log_omega0(t))), 0.0);
  });
  if (res.shell_fraction > 1e-8)
    throw std::runtime_error(
        "a2_weighted_norm_quadrature: outer radial panel carries " +
        std::to_string(res.shell_fraction) + " of the integral; enlarge the radius");
  double val = res.value.real() * std::exp(-d * std::log(M_PI));
  return std::sqrt(std::max(0.0, val));
}

Complex a2_inner_quadrature(const EntireFunctionHandle& F, const EntireFunctionHandle& G,
                            double radius, int quad_order) {
  if (F.dim != G.dim) throw std::invalid_argument("a2_inner_quadrature: dimension mismatch");
  const int d = F.dim;
  int radial = quad_order > 0 ? quad_order : 16 * static_cast<int>(std::ceil(radius * radius / 4.0));
  PolarResult res = polar_integrate(d, radius, radial, 64, [&](const ComplexVec& w) -> Complex {
    double t = 0.0;
    for (int j = 0; j < d; ++j) t += std::norm(w[j]);
    return handle_eval(F, w) * std::conj(handle_eval(G, w)) * std::exp(-t);
  });
  if (res.shell_fraction > 1e-8)
    throw std::runtime_error("a2_inner_quadrature: outer radial panel carries " +
                             std::to_string(res.shell_fraction) +
                             " of the integral; enlarge the radius");
  return res.value * std::exp(-d * std::log(M_PI));
}

double modulation_norm(const HermiteExpansion& e, const WeightSpec& w, double p, double q,
                       const PlaneGridSpec& grid) {
  validate(w);
  validate(grid);
  if (grid.dim != e.dim())
    throw std::invalid_argument("modulation_norm: grid dimension does not match the expansion");
  PlaneGrid table =
      tabulate_plane(grid, [&](const std::vector<double>& x, const std::vector<double>& xi) {
        ComplexVec z = from_phase_space(x, xi);
        return stft_gaussian(e, x, xi) * weight_eval(w, z);
      });
  return mixed_norm(table, p, q);
}

SeminormResult pilipovic_seminorm(const HermiteExpansion& e, double h, double s, int N_sup) {
  if (h <= 0.0 || s <= 0.0) throw std::invalid_argument("pilipovic_seminorm: need h > 0 and s > 0");
  if (N_sup < 0) throw std::invalid_argument("pilipovic_seminorm: N_sup must be >= 0");
  std::vector<double> log_lambda, log_mag2;
  for (const auto& [a, c] : e.coeffs()) {
    double mag = std::abs(c);
    if (mag == 0.0) continue;
    log_lambda.push_back(std::log(2.0 * a.order() + e.dim()));
    log_mag2.push_back(2.0 * std::log(mag));
  }
  SeminormResult result;
  if (log_lambda.empty()) return result;
  double best = -std::numeric_limits<double>::infinity();
  const double log_h = std::log(h);
  for (int N = 0; N <= N_sup; ++N) {
    double max_term = -std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < log_lambda.size(); ++i)
      max_term = std::max(max_term, 2.0 * N * log_lambda[i] + log_mag2[i]);
    double acc = 0.0;
    for (std::size_t i = 0; i < log_lambda.size(); ++i)
      acc += std::exp(2.0 * N * log_lambda[i] + log_mag2[i] - max_term);
    double log_norm = 0.5 * (max_term + std::log(acc));
    double value = log_norm - N * log_h - 2.0 * s * std::lgamma(N + 1.0);
    if (value > best) {
      best = value;
      result.maximizer = N;
    }
  }
  result.value = std::exp(best);
  return result;
}

ProjectionComparison pi_a_weighted_l1_check(const EntireFunctionHandle& F, double s, double t,
                                            double h1, double h2, double radius) {
  if (s < 0.5 || t < 0.5)
    throw std::invalid_argument("pi_a_weighted_l1_check: s and t must be >= 1/2");
  if (!(h1 > 0.0) || !(2.0 * h1 <= h2))
    throw std::invalid_argument("pi_a_weighted_l1_check: need 0 < 2 h1 <= h2");
  if ((s == 0.5 || t == 0.5) && !(h2 < 0.5))
    throw std::invalid_argument("pi_a_weighted_l1_check: need h2 < 1/2 when s or t equals 1/2");
  const int d = F.dim;

  auto big_m = [&](const ComplexVec& z) {
    double sx = 0.0, sxi = 0.0;
    for (const auto& zj : z) {
      sx += zj.real() * zj.real();
      sxi += zj.imag() * zj.imag();
    }
    return std::pow(std::sqrt(sx), 1.0 / t) + std::pow(std::sqrt(sxi), 1.0 / s);
  };
  auto damping = [&](const ComplexVec& z, double h) {
    double t2 = 0.0;
    for (const auto& zj : z) t2 += std::norm(zj);
    return std::exp(-0.5 * t2 - h * big_m(z));
  };

  const int outer_radial = 16 * static_cast<int>(std::ceil(radius * radius / 4.0));
  PolarResult rhs = polar_integrate(d, radius, outer_radial, 32, [&](const ComplexVec& z) {
    return Complex(std::abs(handle_eval(F, z)) * damping(z, h1), 0.0);
  });
  PolarResult lhs = polar_integrate(d, radius, 48, 16, [&](const ComplexVec& z) {
    ProjectionResult proj = reproducing_project(F, z, radius);
    return Complex(std::abs(proj.value) * damping(z, h2), 0.0);
  });

  ProjectionComparison cmp;
  cmp.rhs = rhs.value.real();
  cmp.lhs = lhs.value.real();
  cmp.ratio = cmp.rhs > 0.0 ? cmp.lhs / cmp.rhs : std::numeric_limits<double>::infinity();
  return cmp;
}

}  // namespace bargkit
