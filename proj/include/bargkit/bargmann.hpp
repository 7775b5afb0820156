#pragma once

#include <functional>
#include <variant>

#include "bargkit/hermite.hpp"
#include "bargkit/quadrature.hpp"

namespace bargkit {

using ComplexVec = std::vector<Complex>;

// z = x + i xi read off a phase-space point.
ComplexVec from_phase_space(const std::vector<double>& x, const std::vector<double>& xi);

// Kernel A_d(z, y) = pi^{-d/4} exp(-(<z,z> + |y|^2)/2 + sqrt(2) <z,y>) with
// the bilinear pairing <z,w> = sum z_j w_j.  The exponent is assembled first
// and exponentiated once; overflow surfaces as an infinite magnitude.
Complex bargmann_kernel(const ComplexVec& z, const std::vector<double>& y);

// integral A_d(z, y) f(y) dy by tensorized Gauss-Hermite quadrature.
// quad_order 0 selects the default of 80 nodes per axis.
Complex bargmann_quadrature(const FunctionSpec& f, const ComplexVec& z, int quad_order = 0);

// Monomial e_alpha(z) = z^alpha / sqrt(alpha!), evaluated through
// log-magnitude and accumulated phase.
Complex e_alpha(const MultiIndex& a, const ComplexVec& z);

// sum over stored coefficients of c_alpha e_alpha(z), in increasing |alpha|.
Complex bargmann_series(const HermiteExpansion& e, const ComplexVec& z);

// Gaussian-window STFT with window pi^{-d/4} e^{-|x|^2/2}.
// stft_gaussian routes through the entire-series side:
//   V(x, xi) = (2 pi)^{-d/2} e^{-(|x|^2+|xi|^2)/4} e^{-i<x,xi>/2} B(z),
// with B the series evaluation at z = (x - i xi)/sqrt(2).
Complex stft_gaussian(const HermiteExpansion& e, const std::vector<double>& x,
                      const std::vector<double>& xi);
Complex stft_gaussian(const FunctionSpec& f, const std::vector<double>& x,
                      const std::vector<double>& xi, const AnalyzeOptions& opt = {24, 0});

// Independent route: the defining integral
//   V(x, xi) = (2 pi)^{-d/2} integral f(y) conj(phi(y - x)) e^{-i<y,xi>} dy
// by Gauss-Hermite quadrature.
Complex stft_direct(const FunctionSpec& f, const std::vector<double>& x,
                    const std::vector<double>& xi, int quad_order = 0);

// Functions on phase space R^d x R^d.
using PlaneFunction = std::function<Complex(const std::vector<double>& x, const std::vector<double>& xi)>;

// (U F)(x, xi) = (2 pi)^{d/2} e^{(|x|^2+|xi|^2)/2} e^{-i<x,xi>} F(sqrt2 x, -sqrt2 xi).
Complex uv_apply(const PlaneFunction& F, const std::vector<double>& x, const std::vector<double>& xi);

// Lift F0(x, xi) = (2 pi^3)^{d/4} F(sqrt2 x, -sqrt2 xi) e^{(|x|^2+|xi|^2)/2} e^{-i<x,xi>}.
Complex groechenig_lift(const PlaneFunction& F, const std::vector<double>& x, const std::vector<double>& xi);

// Function on C^d handed to the projection: an entire series, the boxed
// exponential F(w) = e^{|w|^2} 1_{[0,1]^{2d}}(w), or an arbitrary callable.
struct BoxLiftForm {};
struct EntireFunctionHandle {
  int dim = 1;
  std::variant<HermiteExpansion, BoxLiftForm, std::function<Complex(const ComplexVec&)>> form;
};
Complex handle_eval(const EntireFunctionHandle& F, const ComplexVec& w);

// Projection (P F)(z) = pi^{-d} integral F(w) e^{(z,w)} e^{-|w|^2} dlambda(w)
// over {|w_j| <= radius}, with the sesquilinear pairing (z,w) = sum z_j
// conj(w_j).  Polar product grid: 64 angles per coordinate, quad_order radial
// nodes (0 selects panels of length 4 in t = |w_j|^2).  The compactly
// supported box form is integrated over its support instead.  radius_ok turns
// false when the outermost radial shell still contributes more than 1e-8 of
// the estimate.
struct ProjectionResult {
  Complex value{0.0, 0.0};
  double shell_fraction = 0.0;
  bool radius_ok = true;
};
ProjectionResult reproducing_project(const EntireFunctionHandle& F, const ComplexVec& z,
                                     double radius = 8.0, int quad_order = 0);

// Closed form of the projection of the boxed exponential:
//   pi^{-d} prod_j [(e^{z_j} - 1)/z_j] [(1 - e^{-i z_j})/(i z_j)],
// with the series branch of (e^w - 1)/w engaged for |w| < 1e-4.
Complex pi_a_box_closed_form(const ComplexVec& z);

}  // namespace bargkit
