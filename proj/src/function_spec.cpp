#include "bargkit/function_spec.hpp"

#include <cmath>
#include <stdexcept>

#include "bargkit/quadrature.hpp"

namespace bargkit {

namespace {

void validate_gaussian(const GaussianSpec& g) {
  const auto d = g.A.rows();
  if (d < 1 || d > 3) throw std::invalid_argument("gaussian: dimension must be 1, 2 or 3");
  if (g.A.cols() != d) throw std::invalid_argument("gaussian: A must be square");
  if (g.L.size() != d) throw std::invalid_argument("gaussian: L must match the dimension of A");
  double scale = 1.0 + g.A.cwiseAbs().maxCoeff();
  if ((g.A - g.A.transpose()).cwiseAbs().maxCoeff() > 1e-10 * scale)
    throw std::invalid_argument("gaussian: A must be symmetric");
  Eigen::MatrixXd re = g.A.real();
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(re);
  if (es.eigenvalues().minCoeff() <= 0.0)
    throw std::invalid_argument("gaussian: Re A must be positive definite");
}

void validate_rule(const CoefficientRuleSpec& r) {
  if (r.dim < 1 || r.dim > 3) throw std::invalid_argument("coefficient_rule: dimension must be 1, 2 or 3");
  auto need = [&](const char* key) {
    if (!r.params.count(key))
      throw std::invalid_argument(std::string("coefficient_rule: missing parameter '") + key + "'");
    return r.params.at(key);
  };
  if (r.rule == "stretched_exp") {
    if (need("s") <= 0.0) throw std::invalid_argument("coefficient_rule: s must be positive");
    need("r");
  } else if (r.rule == "factorial" || r.rule == "factorial_growth") {
    if (need("R") <= 0.0) throw std::invalid_argument("coefficient_rule: R must be positive");
  } else {
    throw std::invalid_argument("coefficient_rule: unknown rule '" + r.rule + "'");
  }
}

void validate_sampled(const SampledSpec& s) {
  if (s.axes.empty() || s.axes.size() > 3)
    throw std::invalid_argument("sampled: dimension must be 1, 2 or 3");
  size_t expect = 1;
  for (const auto& ax : s.axes) {
    if (ax.count < 4) throw std::invalid_argument("sampled: each axis needs at least 4 samples");
    if (!(ax.step > 0.0)) throw std::invalid_argument("sampled: axis step must be positive");
    expect *= static_cast<size_t>(ax.count);
  }
  if (s.values.size() != expect)
    throw std::invalid_argument("sampled: value count does not match the grid shape");
}

// 4-point Lagrange weights for interpolation at fractional position u
// relative to integer offsets {0,1,2,3}.
void lagrange4(double u, double w[4]) {
  w[0] = -(u - 1.0) * (u - 2.0) * (u - 3.0) / 6.0;
  w[1] = u * (u - 2.0) * (u - 3.0) / 2.0;
  w[2] = -u * (u - 1.0) * (u - 3.0) / 2.0;
  w[3] = u * (u - 1.0) * (u - 2.0) / 6.0;
}

Complex sampled_eval(const SampledSpec& s, const std::vector<double>& x) {
  const int d = static_cast<int>(s.axes.size());
  int base[3];
  double w[3][4];
  for (int j = 0; j < d; ++j) {
    const auto& ax = s.axes[static_cast<size_t>(j)];
    double u = (x[static_cast<size_t>(j)] - ax.min) / ax.step;
    if (u < 0.0 || u > ax.count - 1) return {0.0, 0.0};
    int b = static_cast<int>(std::floor(u)) - 1;
    if (b < 0) b = 0;
    if (b > ax.count - 4) b = ax.count - 4;
    base[j] = b;
    lagrange4(u - b, w[j]);
  }
  std::vector<size_t> stride(static_cast<size_t>(d), 1);
  for (int j = d - 2; j >= 0; --j)
    stride[static_cast<size_t>(j)] =
        stride[static_cast<size_t>(j) + 1] * static_cast<size_t>(s.axes[static_cast<size_t>(j) + 1].count);
  Complex acc{0.0, 0.0};
  int n0 = d > 0 ? 4 : 1, n1 = d > 1 ? 4 : 1, n2 = d > 2 ? 4 : 1;
  for (int i0 = 0; i0 < n0; ++i0)
    for (int i1 = 0; i1 < n1; ++i1)
      for (int i2 = 0; i2 < n2; ++i2) {
        double ww = w[0][i0];
        size_t off = (static_cast<size_t>(base[0] + i0)) * stride[0];
        if (d > 1) {
          ww *= w[1][i1];
          off += static_cast<size_t>(base[1] + i1) * stride[1];
        }
        if (d > 2) {
          ww *= w[2][i2];
          off += static_cast<size_t>(base[2] + i2) * stride[2];
        }
        acc += ww * s.values[off];
      }
  return acc;
}

}  // namespace

int spec_dim(const FunctionSpec& f) {
  return std::visit(
      [](const auto& v) -> int {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, GaussianSpec>)
          return static_cast<int>(v.A.rows());
        else if constexpr (std::is_same_v<T, HermiteComboSpec>)
          return v.dim;
        else if constexpr (std::is_same_v<T, CoefficientRuleSpec>)
          return v.dim;
        else
          return static_cast<int>(v.axes.size());
      },
      f);
}

void validate(const FunctionSpec& f) {
  std::visit(
      [](const auto& v) {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, GaussianSpec>) {
          validate_gaussian(v);
        } else if constexpr (std::is_same_v<T, HermiteComboSpec>) {
          if (v.dim < 1 || v.dim > 3)
            throw std::invalid_argument("hermite_combo: dimension must be 1, 2 or 3");
          for (const auto& [a, c] : v.terms) {
            (void)c;
            if (a.dim() != v.dim)
              throw std::invalid_argument("hermite_combo: term dimension mismatch");
          }
        } else if constexpr (std::is_same_v<T, CoefficientRuleSpec>) {
          validate_rule(v);
        } else {
          validate_sampled(v);
        }
      },
      f);
}

Complex eval_pointwise(const FunctionSpec& f, const std::vector<double>& x) {
  if (static_cast<int>(x.size()) != spec_dim(f))
    throw std::invalid_argument("eval_pointwise: point dimension mismatch");
  if (std::holds_alternative<GaussianSpec>(f)) {
    const auto& g = std::get<GaussianSpec>(f);
    const auto d = g.A.rows();
    Complex expo{0.0, 0.0};
    for (Eigen::Index i = 0; i < d; ++i) {
      expo += g.L[i] * x[static_cast<size_t>(i)];
      for (Eigen::Index j = 0; j < d; ++j)
        expo -= 0.5 * g.A(i, j) * x[static_cast<size_t>(i)] * x[static_cast<size_t>(j)];
    }
    return g.C * std::exp(expo);
  }
  if (std::holds_alternative<HermiteComboSpec>(f)) {
    const auto& combo = std::get<HermiteComboSpec>(f);
    int max_order = 0;
    for (const auto& [a, c] : combo.terms) {
      (void)c;
      for (int j = 0; j < a.dim(); ++j) max_order = std::max(max_order, a[j]);
    }
    std::vector<std::vector<double>> axis_vals;
    axis_vals.reserve(x.size());
    for (double xj : x) axis_vals.push_back(hermite_function_values(max_order, xj));
    Complex acc{0.0, 0.0};
    for (const auto& [a, c] : combo.terms) {
      double prod = 1.0;
      for (int j = 0; j < a.dim(); ++j) prod *= axis_vals[static_cast<size_t>(j)][static_cast<size_t>(a[j])];
      acc += c * prod;
    }
    return acc;
  }
  if (std::holds_alternative<SampledSpec>(f)) return sampled_eval(std::get<SampledSpec>(f), x);
  throw std::invalid_argument("eval_pointwise: coefficient rules have no pointwise form");
}

double coefficient_rule_value(const CoefficientRuleSpec& rule, const MultiIndex& a) {
  double k = static_cast<double>(a.order());
  if (rule.rule == "stretched_exp") {
    double s = rule.params.at("s");
    double r = rule.params.at("r");
    return std::exp(-r * std::pow(k, 1.0 / (2.0 * s)));
  }
  if (rule.rule == "factorial") {
    double R = rule.params.at("R");
    return std::exp(k * std::log(R) - 0.5 * a.log_factorial());
  }
  if (rule.rule == "factorial_growth") {
    double R = rule.params.at("R");
    return std::exp(k * std::log(R) + 0.5 * a.log_factorial());
  }
  throw std::invalid_argument("coefficient_rule: unknown rule '" + rule.rule + "'");
}

}  // namespace bargkit
