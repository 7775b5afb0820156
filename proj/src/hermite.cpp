#include "bargkit/hermite.hpp"

#include <cmath>
#include <stdexcept>

#include "bargkit/quadrature.hpp"

namespace bargkit {

HermiteExpansion::HermiteExpansion(int dim, int cutoff) : dim_(dim), cutoff_(cutoff) {
  if (dim < 1 || dim > 3) throw std::invalid_argument("expansion dimension must be 1, 2 or 3");
  if (cutoff < 0) throw std::invalid_argument("expansion cutoff must be non-negative");
}

void HermiteExpansion::set(const MultiIndex& a, Complex c) {
  if (a.dim() != dim_) throw std::invalid_argument("coefficient index dimension mismatch");
  if (a.order() > cutoff_) throw std::invalid_argument("coefficient index exceeds the cutoff");
  if (std::abs(c) < 1e-300) {
    coeffs_.erase(a);
    return;
  }
  coeffs_[a] = c;
}

Complex HermiteExpansion::coeff(const MultiIndex& a) const {
  auto it = coeffs_.find(a);
  return it == coeffs_.end() ? Complex{0.0, 0.0} : it->second;
}

double hermite_eval(const MultiIndex& a, const std::vector<double>& x) {
  if (a.dim() != static_cast<int>(x.size()))
    throw std::invalid_argument("hermite_eval: point dimension mismatch");
  double prod = 1.0;
  for (int j = 0; j < a.dim(); ++j) {
    auto vals = hermite_function_values(a[j], x[static_cast<size_t>(j)]);
    prod *= vals[static_cast<size_t>(a[j])];
  }
  return prod;
}

namespace {

AnalysisResult analyze_rule(const CoefficientRuleSpec& rule, int cutoff) {
  AnalysisResult res{HermiteExpansion(rule.dim, cutoff), {}};
  for (const auto& a : multi_indices_up_to(rule.dim, cutoff))
    res.expansion.set(a, Complex{coefficient_rule_value(rule, a), 0.0});
  return res;
}

void check_sampled_coverage(const SampledSpec& s, std::vector<std::string>& warnings) {
  double vmax = 0.0;
  for (const auto& v : s.values) vmax = std::max(vmax, std::abs(v));
  if (vmax == 0.0) return;
  const int d = static_cast<int>(s.axes.size());
  std::vector<size_t> stride(static_cast<size_t>(d), 1);
  for (int j = d - 2; j >= 0; --j)
    stride[static_cast<size_t>(j)] =
        stride[static_cast<size_t>(j) + 1] * static_cast<size_t>(s.axes[static_cast<size_t>(j) + 1].count);
  for (int j = 0; j < d; ++j) {
    double edge = 0.0;
    for (size_t flat = 0; flat < s.values.size(); ++flat) {
      size_t ij = (flat / stride[static_cast<size_t>(j)]) % static_cast<size_t>(s.axes[static_cast<size_t>(j)].count);
      if (ij == 0 || ij + 1 == static_cast<size_t>(s.axes[static_cast<size_t>(j)].count))
        edge = std::max(edge, std::abs(s.values[flat]));
    }
    if (edge > 1e-8 * vmax) {
      warnings.push_back("sampled grid may not cover the effective support along axis " + std::to_string(j));
      return;
    }
  }
}

}  // namespace

AnalysisResult analyze(const FunctionSpec& f, const AnalyzeOptions& opt) {
  validate(f);
  if (opt.cutoff < 0) throw std::invalid_argument("analyze: cutoff must be non-negative");
  if (std::holds_alternative<CoefficientRuleSpec>(f))
    return analyze_rule(std::get<CoefficientRuleSpec>(f), opt.cutoff);
  if (std::holds_alternative<HermiteComboSpec>(f)) {
    // The projection of a finite combination is the combination itself.
    AnalysisResult res{expansion_from_combo(std::get<HermiteComboSpec>(f), opt.cutoff), {}};
    for (const auto& [a, c] : std::get<HermiteComboSpec>(f).terms)
      if (a.order() > opt.cutoff && std::abs(c) > 0.0) {
        res.warnings.push_back("combo term beyond the cutoff was dropped");
        break;
      }
    return res;
  }

  const int d = spec_dim(f);
  const int K = opt.cutoff + 1;
  const int n = opt.quad_order > 0 ? opt.quad_order : 2 * opt.cutoff + 20;
  GaussHermiteRule rule = gauss_hermite_rule(n);

  AnalysisResult res{HermiteExpansion(d, opt.cutoff), {}};
  if (std::holds_alternative<SampledSpec>(f))
    check_sampled_coverage(std::get<SampledSpec>(f), res.warnings);

  // Per-axis collocation matrix W[k][i] = w_i h_k(x_i).
  std::vector<std::vector<double>> W(static_cast<size_t>(K), std::vector<double>(static_cast<size_t>(n)));
  for (int i = 0; i < n; ++i) {
    auto h = hermite_function_values(opt.cutoff, rule.nodes[static_cast<size_t>(i)]);
    for (int k = 0; k < K; ++k)
      W[static_cast<size_t>(k)][static_cast<size_t>(i)] = rule.weights[static_cast<size_t>(i)] * h[static_cast<size_t>(k)];
  }

  // Tensor of point values, row-major, last axis fastest.
  size_t npts = 1;
  for (int j = 0; j < d; ++j) npts *= static_cast<size_t>(n);
  std::vector<Complex> cur(npts);
  std::vector<double> x(static_cast<size_t>(d));
  for (size_t flat = 0; flat < npts; ++flat) {
    size_t rem = flat;
    for (int j = d - 1; j >= 0; --j) {
      x[static_cast<size_t>(j)] = rule.nodes[rem % static_cast<size_t>(n)];
      rem /= static_cast<size_t>(n);
    }
    cur[flat] = eval_pointwise(f, x);
  }

  // Contract one axis at a time: (K,..,K,n,..,n) -> (K,..,K,K,n,..,n).
  for (int axis = 0; axis < d; ++axis) {
    size_t outer = 1;
    for (int j = 0; j < axis; ++j) outer *= static_cast<size_t>(K);
    size_t inner = 1;
    for (int j = axis + 1; j < d; ++j) inner *= static_cast<size_t>(n);
    std::vector<Complex> next(outer * static_cast<size_t>(K) * inner);
    for (size_t o = 0; o < outer; ++o) {
      for (int k = 0; k < K; ++k) {
        for (size_t r = 0; r < inner; ++r) {
          Complex acc{0.0, 0.0};
          const double* wk = W[static_cast<size_t>(k)].data();
          for (int i = 0; i < n; ++i)
            acc += wk[i] * cur[(o * static_cast<size_t>(n) + static_cast<size_t>(i)) * inner + r];
          next[(o * static_cast<size_t>(K) + static_cast<size_t>(k)) * inner + r] = acc;
        }
      }
    }
    cur.swap(next);
  }

  for (const auto& a : multi_indices_up_to(d, opt.cutoff)) {
    size_t flat = 0;
    for (int j = 0; j < d; ++j) flat = flat * static_cast<size_t>(K) + static_cast<size_t>(a[j]);
    res.expansion.set(a, cur[flat]);
  }
  return res;
}

Complex synthesize(const HermiteExpansion& e, const std::vector<double>& x) {
  if (static_cast<int>(x.size()) != e.dim())
    throw std::invalid_argument("synthesize: point dimension mismatch");
  std::vector<std::vector<double>> axis_vals;
  axis_vals.reserve(x.size());
  for (double xj : x) axis_vals.push_back(hermite_function_values(e.cutoff(), xj));
  Complex acc{0.0, 0.0};
  for (const auto& [a, c] : e.coeffs()) {
    double prod = 1.0;
    for (int j = 0; j < e.dim(); ++j) prod *= axis_vals[static_cast<size_t>(j)][static_cast<size_t>(a[j])];
    acc += c * prod;
  }
  return acc;
}

HermiteExpansion apply_H(const HermiteExpansion& e, int N) {
  if (N < 0) throw std::invalid_argument("apply_H: N must be non-negative");
  HermiteExpansion out(e.dim(), e.cutoff());
  for (const auto& [a, c] : e.coeffs()) {
    double lam = 2.0 * a.order() + e.dim();
    Complex v = c;
    if (N * std::log(lam) < 690.0) {
      for (int i = 0; i < N; ++i) v *= lam;
    } else {
      v *= std::exp(N * std::log(lam));
    }
    out.set(a, v);
  }
  return out;
}

Complex l2_inner(const HermiteExpansion& a, const HermiteExpansion& b) {
  if (a.dim() != b.dim()) throw std::invalid_argument("l2_inner: dimension mismatch");
  Complex acc{0.0, 0.0};
  for (const auto& [idx, ca] : a.coeffs()) {
    Complex cb = b.coeff(idx);
    if (cb != Complex{0.0, 0.0}) acc += ca * std::conj(cb);
  }
  return acc;
}

HermiteExpansion expansion_from_combo(const HermiteComboSpec& combo, int cutoff) {
  HermiteExpansion out(combo.dim, cutoff);
  for (const auto& [a, c] : combo.terms) {
    if (a.order() > cutoff) continue;
    out.set(a, out.coeff(a) + c);
  }
  return out;
}

}  // namespace bargkit
