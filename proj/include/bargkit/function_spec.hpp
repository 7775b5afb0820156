#pragma once

#include <Eigen/Dense>
#include <complex>
#include <map>
#include <string>
#include <variant>
#include <vector>

#include "bargkit/multi_index.hpp"

namespace bargkit {

using Complex = std::complex<double>;

// phi(x) = C exp(-<Ax,x>/2 + <L,x>) with bilinear pairings.  A must be
// complex symmetric with positive definite real part.
struct GaussianSpec {
  Eigen::MatrixXcd A;
  Eigen::VectorXcd L;
  Complex C{1.0, 0.0};
};

struct HermiteComboSpec {
  int dim = 1;
  std::vector<std::pair<MultiIndex, Complex>> terms;
};

// Named coefficient laws, evaluated per multi-index:
//   stretched_exp     c_alpha = exp(-r |alpha|^{1/(2s)})      params: s, r
//   factorial         c_alpha = R^{|alpha|} / sqrt(alpha!)    params: R
//   factorial_growth  c_alpha = R^{|alpha|} * sqrt(alpha!)    params: R
// Negative r in stretched_exp gives growth instead of decay.
struct CoefficientRuleSpec {
  int dim = 1;
  std::string rule;
  std::map<std::string, double> params;
};

struct SampledAxis {
  double min = 0.0;
  double step = 1.0;
  int count = 0;
};

// Tensor grid of samples; evaluated by 4-point Lagrange interpolation per
// axis and zero outside the grid.  Values are row-major with the last axis
// fastest.
struct SampledSpec {
  std::vector<SampledAxis> axes;
  std::vector<Complex> values;
};

using FunctionSpec = std::variant<GaussianSpec, HermiteComboSpec, CoefficientRuleSpec, SampledSpec>;

int spec_dim(const FunctionSpec& f);

// Throws std::invalid_argument when a spec is malformed (asymmetric or
// non-positive-definite Gaussian, unknown rule name, bad grid, ...).
void validate(const FunctionSpec& f);

// Pointwise evaluation.  Coefficient rules have no pointwise form and are
// rejected.
Complex eval_pointwise(const FunctionSpec& f, const std::vector<double>& x);

double coefficient_rule_value(const CoefficientRuleSpec& rule, const MultiIndex& a);

}  // namespace bargkit
