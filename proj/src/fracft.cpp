#include "bargkit/fracft.hpp"

#include <cmath>
#include <stdexcept>

namespace bargkit {

Complex fracft_phase(const std::vector<double>& r, const MultiIndex& a) {
  if (static_cast<int>(r.size()) != a.dim())
    throw std::invalid_argument("fracft_phase: order vector does not match the index dimension");
  double theta = 0.0;
  for (int j = 0; j < a.dim(); ++j) theta += r[j] * a[j];
  double rounded = std::nearbyint(theta);
  if (theta == rounded && std::abs(theta) < 9.0e15) {
    long long n = static_cast<long long>(rounded) % 4;
    if (n < 0) n += 4;
    switch (n) {
      case 0: return Complex(1.0, 0.0);
      case 1: return Complex(0.0, -1.0);
      case 2: return Complex(-1.0, 0.0);
      default: return Complex(0.0, 1.0);
    }
  }
  return std::polar(1.0, -0.5 * M_PI * theta);
}

HermiteExpansion fractional_ft(const HermiteExpansion& e, const std::vector<double>& r) {
  if (static_cast<int>(r.size()) != e.dim())
    throw std::invalid_argument("fractional_ft: need one order parameter per axis");
  HermiteExpansion out(e.dim(), e.cutoff());
  for (const auto& [a, c] : e.coeffs()) out.set(a, c * fracft_phase(r, a));
  return out;
}

CommutationReport verify_commutes_with_H(const HermiteExpansion& e, const std::vector<double>& r,
                                         int N) {
  HermiteExpansion left = apply_H(fractional_ft(e, r), N);
  HermiteExpansion right = fractional_ft(apply_H(e, N), r);
  CommutationReport report;
  for (const auto& [a, c] : left.coeffs())
    report.max_abs_diff = std::max(report.max_abs_diff, std::abs(c - right.coeff(a)));
  for (const auto& [a, c] : right.coeffs())
    report.max_abs_diff = std::max(report.max_abs_diff, std::abs(c - left.coeff(a)));
  report.exact = report.max_abs_diff == 0.0;
  return report;
}

IsometryReport verify_isometry(const HermiteExpansion& e, const std::vector<double>& r,
                               const WeightSpec& w, double p, const PlaneGridSpec& grid) {
  if (!weight_is_radial(w))
    throw std::invalid_argument("verify_isometry: invariance requires a radial weight");
  IsometryReport report;
  report.norm_before = modulation_norm(e, w, p, p, grid);
  report.norm_after = modulation_norm(fractional_ft(e, r), w, p, p, grid);
  double denom = std::max(report.norm_before, 1e-300);
  report.rel_deviation = std::abs(report.norm_after - report.norm_before) / denom;
  return report;
}

PlaneGridSpec default_isometry_grid(int dim) {
  PlaneGridSpec spec;
  spec.dim = dim;
  AxisSpec ax{-8.0, 0.25, 65};
  spec.x_axes.assign(dim, ax);
  spec.xi_axes.assign(dim, ax);
  return spec;
}

}  // namespace bargkit
