#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <string>
#include <variant>

#include "bargkit/bargmann.hpp"

namespace bargkit {

// Weight families on C^d ~ R^{2d}, z = x + i xi:
//   gs        e^{|z|^2/2 + r (|x|^{1/t} + |xi|^{1/s})},  s, t >= 1/2
//   quadratic e^{(1-2h)|z|^2/2}
//   flat_exp  e^{|z|^2/4 - R(|x| + |xi|)}
//   poly      (1 + |z|^2)^{r/2}
//   radial    e^{|z|^2/2} w0(|z|^2) for a caller-supplied radial profile
struct GSWeight {
  double s = 1.0, t = 1.0, r = 0.0;
};
struct QuadraticWeight {
  double h = 0.5;
};
struct FlatExpWeight {
  double R = 1.0;
};
struct PolyWeight {
  double r = 0.0;
};
struct RadialWeight {
  std::function<double(double)> log_omega0;
  std::string description;
};
using WeightSpec = std::variant<GSWeight, QuadraticWeight, FlatExpWeight, PolyWeight, RadialWeight>;

void validate(const WeightSpec& w);
double weight_log_eval(const WeightSpec& w, const ComplexVec& z);
double weight_eval(const WeightSpec& w, const ComplexVec& z);

// True when the weight depends only on (|z_1|, ..., |z_d|).
bool weight_is_radial(const WeightSpec& w);

// Sequence weight vartheta(alpha) paired with coefficient-side norms.
using SequenceWeight = std::function<double(const MultiIndex&)>;

// vartheta(alpha) = ( (1/(|alpha|+d-1)!) integral_0^inf w0(r)^2 r^{|alpha|+d-1} dr )^{1/2}
// for the radial profile given as log w0.  Adaptive: the truncation point T
// doubles until the integrand falls below 1e-16 of the running integral, and
// the panel count doubles until the relative change is below 1e-10.  A tail
// that refuses to decay is rejected.
double theta_from_radial(const std::function<double(double)>& log_omega0, const MultiIndex& a, int d);
double theta_from_radial(const std::function<double(double)>& log_omega0, int order, int d);

// vartheta(alpha) = ( (1/alpha!) integral_{R_+^d} w0(r)^2 r^alpha dr )^{1/2}
// for a profile on R_+^d given as log w0.
double theta_from_separable(const std::function<double(const std::vector<double>&)>& log_omega0,
                            const MultiIndex& a);

// Closed forms: for w0(r) = e^{-h r},
//   vartheta(alpha)^2 = (2h)^{-|alpha|-d};
// for w0(r) = e^{-R sqrt(r)},
//   vartheta(alpha)^2 = 2 (2R)^{-2(|alpha|+d)} (2|alpha|+2d-1)! / (|alpha|+d-1)!.
double theta_closed_exponential(double h, int order, int d);
double theta_closed_linear_exponential(double R, int order, int d);

SequenceWeight make_theta_exponential(double h, int d);
SequenceWeight make_theta_linear_exponential(double R, int d);

// Checks that vartheta dominates every R^{|alpha|}/sqrt(alpha!): for each
// probe R the gap log(R^k/sqrt(k!)) - log vartheta must peak strictly inside
// [0, cutoff].
bool theta_dominates_entire_growth(const SequenceWeight& theta, int d, int cutoff);

// Sampled test of w(x+y) <= C w(x) v(y).  Draws pairs uniformly from
// [-scale, scale]^{2d} at scales box/2, box and 2 box; the verdict holds when
// the observed maximum of the log ratio stays finite and does not keep
// growing with the scale.  Statistical evidence, not a proof.
struct ModerateReport {
  bool holds = false;
  double log_C = 0.0;                 // largest observed log ratio
  std::array<double, 3> scale_max{};  // per-scale maxima of the log ratio
  std::vector<double> witness;        // flattened (x, y) attaining log_C
};
ModerateReport check_moderate(const WeightSpec& w, const WeightSpec& v, int d, double box,
                              int samples, std::uint64_t seed);
ModerateReport check_moderate_log(const std::function<double(const ComplexVec&)>& log_w,
                                  const std::function<double(const ComplexVec&)>& log_v, int d,
                                  double box, int samples, std::uint64_t seed);

// Grid test of C^{-1} e^{-c|z|^2} <= w(z) <= C e^{c|z|^2} on [-box, box]^{2d}
// and [-2box, 2box]^{2d}; holds when the fitted constant stops growing with
// the box.  min_workable_c reports the smallest c of {1/8, 1/4, 1/2, 1, 2}
// that holds (NaN when none does).
struct SandwichReport {
  bool holds = false;
  double log_C = 0.0;
  double min_workable_c = 0.0;
};
SandwichReport check_gauss_sandwich(const WeightSpec& w, double c, double box, int d = 1);

// Monte Carlo check of  integral_simplex prod_j t_j^{a_j} (1 - sum t)^{a_d} dt
// = alpha! / (|alpha| + d - 1)!  with d-1 integration variables.
struct SimplexReport {
  double estimate = 0.0;
  double reference = 0.0;
  double std_err = 0.0;
  bool within_3se = false;
};
SimplexReport dirichlet_simplex_identity(const MultiIndex& a, long samples, std::uint64_t seed);

}  // namespace bargkit
