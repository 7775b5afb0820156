#pragma once

#include <vector>

#include "bargkit/hermite.hpp"
#include "bargkit/norms.hpp"

namespace bargkit {

// Phase e^{-i pi <r, alpha> / 2}.  When <r, alpha> is an integer the value is
// taken from the exact table {1, -i, -1, i}.
Complex fracft_phase(const std::vector<double>& r, const MultiIndex& a);

// Fractional Fourier transform with one order parameter per axis, acting on
// Hermite coefficients as c_a -> e^{-i pi <r, alpha>/2} c_a.  r = (1, ..., 1)
// is the Fourier transform; the map has period 4 in every component.
HermiteExpansion fractional_ft(const HermiteExpansion& e, const std::vector<double>& r);

struct CommutationReport {
  double max_abs_diff = 0.0;
  bool exact = false;
};
// Compares H^N applied before and after the transform, coefficient by
// coefficient.
CommutationReport verify_commutes_with_H(const HermiteExpansion& e, const std::vector<double>& r,
                                         int N);

struct IsometryReport {
  double norm_before = 0.0;
  double norm_after = 0.0;
  double rel_deviation = 0.0;
};
// Modulation-norm invariance under the transform for a radial weight; rejects
// non-radial weights.
IsometryReport verify_isometry(const HermiteExpansion& e, const std::vector<double>& r,
                               const WeightSpec& w, double p, const PlaneGridSpec& grid);

PlaneGridSpec default_isometry_grid(int dim);

}  // namespace bargkit
