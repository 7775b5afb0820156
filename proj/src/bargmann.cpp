#include "bargkit/bargmann.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace bargkit {

namespace {

constexpr double kPi = std::numbers::pi;

void check_point(const ComplexVec& z, int d, const char* who) {
  if (static_cast<int>(z.size()) != d)
    throw std::invalid_argument(std::string(who) + ": point dimension mismatch");
}

// Tensorized Gauss-Hermite sum of g over R^d.
Complex gh_integrate(int d, int n, const std::function<Complex(const std::vector<double>&)>& g) {
  GaussHermiteRule rule = gauss_hermite_rule(n);
  std::vector<size_t> idx(static_cast<size_t>(d), 0);
  std::vector<double> y(static_cast<size_t>(d));
  Complex acc{0.0, 0.0};
  bool done = false;
  while (!done) {
    double w = 1.0;
    for (int j = 0; j < d; ++j) {
      w *= rule.weights[idx[static_cast<size_t>(j)]];
      y[static_cast<size_t>(j)] = rule.nodes[idx[static_cast<size_t>(j)]];
    }
    acc += w * g(y);
    int j = d - 1;
    while (j >= 0) {
      if (++idx[static_cast<size_t>(j)] < rule.nodes.size()) break;
      idx[static_cast<size_t>(j)] = 0;
      --j;
    }
    done = j < 0;
  }
  return acc;
}

Complex phi1(Complex w) {
  if (std::abs(w) < 1e-4)
    return 1.0 + w * (1.0 / 2.0 + w * (1.0 / 6.0 + w * (1.0 / 24.0 + w / 120.0)));
  return (std::exp(w) - 1.0) / w;
}

}  // namespace

ComplexVec from_phase_space(const std::vector<double>& x, const std::vector<double>& xi) {
  if (x.size() != xi.size()) throw std::invalid_argument("phase-space point needs matching x and xi");
  ComplexVec z(x.size());
  for (size_t j = 0; j < x.size(); ++j) z[j] = Complex{x[j], xi[j]};
  return z;
}

Complex bargmann_kernel(const ComplexVec& z, const std::vector<double>& y) {
  if (z.size() != y.size()) throw std::invalid_argument("bargmann_kernel: dimension mismatch");
  const int d = static_cast<int>(z.size());
  Complex expo{0.0, 0.0};
  for (int j = 0; j < d; ++j) {
    Complex zj = z[static_cast<size_t>(j)];
    double yj = y[static_cast<size_t>(j)];
    expo += -0.5 * (zj * zj + yj * yj) + std::sqrt(2.0) * zj * yj;
  }
  return std::pow(kPi, -0.25 * d) * std::exp(expo);
}

Complex bargmann_quadrature(const FunctionSpec& f, const ComplexVec& z, int quad_order) {
  validate(f);
  const int d = spec_dim(f);
  check_point(z, d, "bargmann_quadrature");
  if (std::holds_alternative<CoefficientRuleSpec>(f))
    throw std::invalid_argument("bargmann_quadrature: coefficient rules have no pointwise form");
  const int n = quad_order > 0 ? quad_order : 80;
  return gh_integrate(d, n, [&](const std::vector<double>& y) {
    return bargmann_kernel(z, y) * eval_pointwise(f, y);
  });
}

Complex e_alpha(const MultiIndex& a, const ComplexVec& z) {
  check_point(z, a.dim(), "e_alpha");
  double logmag = -0.5 * a.log_factorial();
  double phase = 0.0;
  for (int j = 0; j < a.dim(); ++j) {
    if (a[j] == 0) continue;
    double m = std::abs(z[static_cast<size_t>(j)]);
    if (m == 0.0) return {0.0, 0.0};
    logmag += a[j] * std::log(m);
    phase += a[j] * std::arg(z[static_cast<size_t>(j)]);
  }
  return std::polar(std::exp(logmag), phase);
}

Complex bargmann_series(const HermiteExpansion& e, const ComplexVec& z) {
  check_point(z, e.dim(), "bargmann_series");
  Complex acc{0.0, 0.0};
  for (const auto& [a, c] : e.coeffs()) acc += c * e_alpha(a, z);
  return acc;
}

namespace {

Complex stft_prefactor(const std::vector<double>& x, const std::vector<double>& xi) {
  const int d = static_cast<int>(x.size());
  double norm2 = 0.0, dot = 0.0;
  for (int j = 0; j < d; ++j) {
    norm2 += x[static_cast<size_t>(j)] * x[static_cast<size_t>(j)] +
             xi[static_cast<size_t>(j)] * xi[static_cast<size_t>(j)];
    dot += x[static_cast<size_t>(j)] * xi[static_cast<size_t>(j)];
  }
  return std::pow(2.0 * kPi, -0.5 * d) * std::exp(Complex{-0.25 * norm2, -0.5 * dot});
}

}  // namespace

Complex stft_gaussian(const HermiteExpansion& e, const std::vector<double>& x,
                      const std::vector<double>& xi) {
  if (x.size() != xi.size() || static_cast<int>(x.size()) != e.dim())
    throw std::invalid_argument("stft_gaussian: point dimension mismatch");
  ComplexVec z(x.size());
  for (size_t j = 0; j < x.size(); ++j)
    z[j] = Complex{x[j] / std::sqrt(2.0), -xi[j] / std::sqrt(2.0)};
  return stft_prefactor(x, xi) * bargmann_series(e, z);
}

Complex stft_gaussian(const FunctionSpec& f, const std::vector<double>& x,
                      const std::vector<double>& xi, const AnalyzeOptions& opt) {
  return stft_gaussian(analyze(f, opt).expansion, x, xi);
}

Complex stft_direct(const FunctionSpec& f, const std::vector<double>& x,
                    const std::vector<double>& xi, int quad_order) {
  validate(f);
  const int d = spec_dim(f);
  if (static_cast<int>(x.size()) != d || static_cast<int>(xi.size()) != d)
    throw std::invalid_argument("stft_direct: point dimension mismatch");
  if (std::holds_alternative<CoefficientRuleSpec>(f))
    throw std::invalid_argument("stft_direct: coefficient rules have no pointwise form");
  const int n = quad_order > 0 ? quad_order : 80;
  const double c = std::pow(2.0 * kPi, -0.5 * d) * std::pow(kPi, -0.25 * d);
  return c * gh_integrate(d, n, [&](const std::vector<double>& y) {
    double expo = 0.0, dot = 0.0;
    for (int j = 0; j < d; ++j) {
      double dy = y[static_cast<size_t>(j)] - x[static_cast<size_t>(j)];
      expo -= 0.5 * dy * dy;
      dot += y[static_cast<size_t>(j)] * xi[static_cast<size_t>(j)];
    }
    return eval_pointwise(f, y) * std::exp(Complex{expo, -dot});
  });
}

namespace {

Complex plane_factor(const std::vector<double>& x, const std::vector<double>& xi, double log_const) {
  double norm2 = 0.0, dot = 0.0;
  for (size_t j = 0; j < x.size(); ++j) {
    norm2 += x[j] * x[j] + xi[j] * xi[j];
    dot += x[j] * xi[j];
  }
  return std::exp(Complex{log_const + 0.5 * norm2, -dot});
}

std::pair<std::vector<double>, std::vector<double>> stretch(const std::vector<double>& x,
                                                            const std::vector<double>& xi) {
  std::vector<double> xs(x.size()), xis(xi.size());
  for (size_t j = 0; j < x.size(); ++j) {
    xs[j] = std::sqrt(2.0) * x[j];
    xis[j] = -std::sqrt(2.0) * xi[j];
  }
  return {xs, xis};
}

}  // namespace

Complex uv_apply(const PlaneFunction& F, const std::vector<double>& x, const std::vector<double>& xi) {
  if (x.size() != xi.size()) throw std::invalid_argument("uv_apply: point dimension mismatch");
  auto [xs, xis] = stretch(x, xi);
  const double d = static_cast<double>(x.size());
  return plane_factor(x, xi, 0.5 * d * std::log(2.0 * kPi)) * F(xs, xis);
}

Complex groechenig_lift(const PlaneFunction& F, const std::vector<double>& x, const std::vector<double>& xi) {
  if (x.size() != xi.size()) throw std::invalid_argument("groechenig_lift: point dimension mismatch");
  auto [xs, xis] = stretch(x, xi);
  const double d = static_cast<double>(x.size());
  return plane_factor(x, xi, 0.25 * d * std::log(2.0 * kPi * kPi * kPi)) * F(xs, xis);
}

Complex handle_eval(const EntireFunctionHandle& F, const ComplexVec& w) {
  check_point(w, F.dim, "handle_eval");
  if (std::holds_alternative<HermiteExpansion>(F.form))
    return bargmann_series(std::get<HermiteExpansion>(F.form), w);
  if (std::holds_alternative<BoxLiftForm>(F.form)) {
    double norm2 = 0.0;
    for (const auto& wj : w) {
      if (wj.real() < 0.0 || wj.real() > 1.0 || wj.imag() < 0.0 || wj.imag() > 1.0) return {0.0, 0.0};
      norm2 += std::norm(wj);
    }
    return std::exp(Complex{norm2, 0.0});
  }
  return std::get<std::function<Complex(const ComplexVec&)>>(F.form)(w);
}

ProjectionResult reproducing_project(const EntireFunctionHandle& F, const ComplexVec& z,
                                     double radius, int quad_order) {
  const int d = F.dim;
  check_point(z, d, "reproducing_project");
  if (!(radius > 0.0)) throw std::invalid_argument("reproducing_project: radius must be positive");

  if (std::holds_alternative<BoxLiftForm>(F.form)) {
    // On the support of the boxed exponential the e^{|w|^2} factor cancels the
    // Gaussian of the measure, leaving per-coordinate 1-d integrals of
    // e^{z u} over [0,1] in the real part and e^{-i z v} in the imaginary one.
    GaussLegendreRule gl = gauss_legendre_rule(24);
    Complex prod{1.0, 0.0};
    for (int j = 0; j < d; ++j) {
      Complex zj = z[static_cast<size_t>(j)];
      Complex iu{0.0, 0.0}, iv{0.0, 0.0};
      for (size_t i = 0; i < gl.nodes.size(); ++i) {
        double u = 0.5 * (gl.nodes[i] + 1.0);
        double w = 0.5 * gl.weights[i];
        iu += w * std::exp(zj * u);
        iv += w * std::exp(Complex{0.0, -1.0} * zj * u);
      }
      prod *= iu * iv;
    }
    ProjectionResult res;
    res.value = std::pow(kPi, -d) * prod;
    return res;
  }

  const int radial = quad_order > 0
                         ? quad_order
                         : 16 * std::max(1, static_cast<int>(std::ceil(radius * radius / 4.0)));
  PolarResult pr = polar_integrate(d, radius, radial, 64, [&](const ComplexVec& w) {
    Complex expo{0.0, 0.0};
    for (int j = 0; j < d; ++j) {
      expo += z[static_cast<size_t>(j)] * std::conj(w[static_cast<size_t>(j)]);
      expo -= std::norm(w[static_cast<size_t>(j)]);
    }
    return handle_eval(F, w) * std::exp(expo);
  });
  ProjectionResult res;
  res.value = std::pow(kPi, -d) * pr.value;
  res.shell_fraction = pr.shell_fraction;
  res.radius_ok = pr.shell_fraction <= 1e-8;
  return res;
}

Complex pi_a_box_closed_form(const ComplexVec& z) {
  const int d = static_cast<int>(z.size());
  Complex prod{1.0, 0.0};
  for (const auto& zj : z) prod *= phi1(zj) * phi1(Complex{0.0, -1.0} * zj);
  return std::pow(kPi, -d) * prod;
}

}  // namespace bargkit
