#pragma once

#include <map>
#include <string>
#include <vector>

#include "bargkit/function_spec.hpp"
#include "bargkit/multi_index.hpp"

namespace bargkit {

// Finite table of Hermite coefficients up to a total-order cutoff.  Absent
// indices are exact zeros; magnitudes below 1e-300 are flushed to zero when
// stored.  Iteration over coeffs() runs in increasing |alpha|, which fixes
// the summation order of every downstream reduction.
class HermiteExpansion {
 public:
  using CoeffMap = std::map<MultiIndex, Complex, GradedLexLess>;

  HermiteExpansion(int dim, int cutoff);

  int dim() const { return dim_; }
  int cutoff() const { return cutoff_; }
  const CoeffMap& coeffs() const { return coeffs_; }

  void set(const MultiIndex& a, Complex c);
  Complex coeff(const MultiIndex& a) const;
  size_t support_size() const { return coeffs_.size(); }

 private:
  int dim_;
  int cutoff_;
  CoeffMap coeffs_;
};

struct AnalyzeOptions {
  int cutoff = 16;
  int quad_order = 0;  // 0 means the default 2*cutoff + 20
};

struct AnalysisResult {
  HermiteExpansion expansion;
  std::vector<std::string> warnings;
};

// Product of 1-d Hermite functions h_{alpha_j}(x_j).
double hermite_eval(const MultiIndex& a, const std::vector<double>& x);

// Coefficients c_alpha = (f, h_alpha) by tensorized Gauss-Hermite quadrature.
// Coefficient rules are materialized directly (there is nothing to
// integrate); sampled inputs whose grid visibly truncates the function get a
// warning attached.
AnalysisResult analyze(const FunctionSpec& f, const AnalyzeOptions& opt);

// sum_alpha c_alpha h_alpha(x), accumulated in increasing |alpha|.
Complex synthesize(const HermiteExpansion& e, const std::vector<double>& x);

// N-fold application of the harmonic oscillator: multiplies c_alpha by
// (2|alpha| + d)^N.  Applied as N successive scalar multiplications so that
// apply_H(e, m + n) reproduces apply_H(apply_H(e, m), n) bit for bit.
HermiteExpansion apply_H(const HermiteExpansion& e, int N);

// l2 pairing sum c_alpha(a) * conj(c_alpha(b)).
Complex l2_inner(const HermiteExpansion& a, const HermiteExpansion& b);

// Direct expansion of an explicit Hermite combination (no quadrature).
HermiteExpansion expansion_from_combo(const HermiteComboSpec& combo, int cutoff);

}  // namespace bargkit
