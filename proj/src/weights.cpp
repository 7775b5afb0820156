#include "bargkit/weights.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <stdexcept>

#include "bargkit/quadrature.hpp"

namespace bargkit {

namespace {

double norm_re(const ComplexVec& z) {
  double s = 0.0;
  for (const auto& zj : z) s += zj.real() * zj.real();
  return std::sqrt(s);
}

double norm_im(const ComplexVec& z) {
  double s = 0.0;
  for (const auto& zj : z) s += zj.imag() * zj.imag();
  return std::sqrt(s);
}

double norm2(const ComplexVec& z) {
  double s = 0.0;
  for (const auto& zj : z) s += std::norm(zj);
  return s;
}

}  // namespace

void validate(const WeightSpec& w) {
  std::visit(
      [](const auto& ww) {
        using T = std::decay_t<decltype(ww)>;
        if constexpr (std::is_same_v<T, GSWeight>) {
          if (ww.s < 0.5 || ww.t < 0.5)
            throw std::invalid_argument("gs weight: s and t must be >= 1/2");
        } else if constexpr (std::is_same_v<T, QuadraticWeight>) {
          if (!std::isfinite(ww.h)) throw std::invalid_argument("quadratic weight: h must be finite");
        } else if constexpr (std::is_same_v<T, FlatExpWeight>) {
          if (ww.R <= 0.0) throw std::invalid_argument("flat_exp weight: R must be positive");
        } else if constexpr (std::is_same_v<T, PolyWeight>) {
          if (!std::isfinite(ww.r)) throw std::invalid_argument("poly weight: r must be finite");
        } else if constexpr (std::is_same_v<T, RadialWeight>) {
          if (!ww.log_omega0) throw std::invalid_argument("radial weight: profile is empty");
        }
      },
      w);
}

double weight_log_eval(const WeightSpec& w, const ComplexVec& z) {
  validate(w);
  return std::visit(
      [&](const auto& ww) -> double {
        using T = std::decay_t<decltype(ww)>;
        if constexpr (std::is_same_v<T, GSWeight>) {
          return 0.5 * norm2(z) +
                 ww.r * (std::pow(norm_re(z), 1.0 / ww.t) + std::pow(norm_im(z), 1.0 / ww.s));
        } else if constexpr (std::is_same_v<T, QuadraticWeight>) {
          return (1.0 - 2.0 * ww.h) * 0.5 * norm2(z);
        } else if constexpr (std::is_same_v<T, FlatExpWeight>) {
          return 0.25 * norm2(z) - ww.R * (norm_re(z) + norm_im(z));
        } else if constexpr (std::is_same_v<T, PolyWeight>) {
          return 0.5 * ww.r * std::log1p(norm2(z));
        } else {
          return 0.5 * norm2(z) + ww.log_omega0(norm2(z));
        }
      },
      w);
}

double weight_eval(const WeightSpec& w, const ComplexVec& z) { return std::exp(weight_log_eval(w, z)); }

bool weight_is_radial(const WeightSpec& w) {
  return std::holds_alternative<QuadraticWeight>(w) || std::holds_alternative<PolyWeight>(w) ||
         std::holds_alternative<RadialWeight>(w);
}

namespace {

// integral_0^T e^{g(r)} dr with g(r) = 2 log w0(r) + k log r, by composite
// Gauss-Legendre with panel doubling.  Integrated in u = sqrt(r): profiles
// with sqrt-type exponents (e^{-R sqrt(r)}) are analytic in u, while in r
// their derivative blows up at 0 and stalls the convergence.
double radial_moment_on(const std::function<double(double)>& log_omega0, int k, double T,
                        int n_panels) {
  PanelRule rule = composite_legendre(0.0, std::sqrt(T), n_panels);
  double total = 0.0;
  for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
    double u = rule.nodes[i];
    if (u <= 0.0) continue;
    double r = u * u;
    double g = 2.0 * log_omega0(r) + static_cast<double>(k) * std::log(r);
    if (g > 700.0) throw std::overflow_error("radial moment: integrand overflows");
    total += rule.weights[i] * 2.0 * u * std::exp(g);
  }
  return total;
}

double radial_moment(const std::function<double(double)>& log_omega0, int k) {
  double T = 4.0 + 2.0 * k;
  double integral = radial_moment_on(log_omega0, k, T, 16);
  for (int round = 0; round < 64; ++round) {
    double tail_log = 2.0 * log_omega0(T) + static_cast<double>(k) * std::log(T);
    double floor_log = std::log(1e-16 * std::max(integral, 1e-300)) - std::log(T);
    if (tail_log < floor_log) break;
    if (T > 1e9)
      throw std::runtime_error("radial moment: profile tail does not decay; integral diverges");
    T *= 2.0;
    integral = radial_moment_on(log_omega0, k, T, 16);
  }
  int n_panels = 16;
  double prev = radial_moment_on(log_omega0, k, T, n_panels);
  for (; n_panels <= 2048; n_panels *= 2) {
    double next = radial_moment_on(log_omega0, k, T, 2 * n_panels);
    if (std::abs(next - prev) <= 1e-10 * std::abs(next) + 1e-300) {
      prev = next;
      break;
    }
    prev = next;
  }
  return prev;
}

}  // namespace

double theta_from_radial(const std::function<double(double)>& log_omega0, int order, int d) {
  if (!log_omega0) throw std::invalid_argument("theta_from_radial: profile is empty");
  if (order < 0 || d < 1) throw std::invalid_argument("theta_from_radial: bad order or dimension");
  int k = order + d - 1;
  double integral = radial_moment(log_omega0, k);
  if (!(integral > 0.0)) throw std::runtime_error("theta_from_radial: moment is not positive");
  return std::exp(0.5 * (std::log(integral) - std::lgamma(static_cast<double>(k) + 1.0)));
}

double theta_from_radial(const std::function<double(double)>& log_omega0, const MultiIndex& a,
                         int d) {
  if (a.dim() != d) throw std::invalid_argument("theta_from_radial: index dimension mismatch");
  return theta_from_radial(log_omega0, a.order(), d);
}

double theta_from_separable(
    const std::function<double(const std::vector<double>&)>& log_omega0, const MultiIndex& a) {
  if (!log_omega0) throw std::invalid_argument("theta_from_separable: profile is empty");
  const int d = a.dim();
  if (d > 2) throw std::invalid_argument("theta_from_separable: supported for d <= 2");

  auto log_integrand = [&](const std::vector<double>& r) {
    double g = 2.0 * log_omega0(r);
    for (int j = 0; j < d; ++j) {
      if (a[j] == 0) continue;
      if (r[j] <= 0.0) return -std::numeric_limits<double>::infinity();
      g += a[j] * std::log(r[j]);
    }
    return g;
  };

  double T = 4.0 + 2.0 * a.order();
  auto tail_decayed = [&](double t) {
    std::vector<double> probe(d, t);
    if (log_integrand(probe) >= -40.0 - std::log(t)) return false;
    for (int j = 0; j < d; ++j) {
      std::fill(probe.begin(), probe.end(), 1.0);
      probe[j] = t;
      if (log_integrand(probe) >= -40.0 - std::log(t)) return false;
    }
    return true;
  };
  for (int round = 0; round < 64 && !tail_decayed(T); ++round) {
    if (T > 1e9)
      throw std::runtime_error("theta_from_separable: profile tail does not decay");
    T *= 2.0;
  }

  auto tensor_integral = [&](int n_panels) {
    PanelRule rule = composite_legendre(0.0, T, n_panels);
    const std::size_t n = rule.nodes.size();
    double total = 0.0;
    std::vector<double> r(d, 0.0);
    if (d == 1) {
      for (std::size_t i = 0; i < n; ++i) {
        r[0] = rule.nodes[i];
        double g = log_integrand(r);
        if (g > 700.0) throw std::overflow_error("theta_from_separable: integrand overflows");
        total += rule.weights[i] * std::exp(g);
      }
    } else {
      for (std::size_t i = 0; i < n; ++i) {
        r[0] = rule.nodes[i];
        double row = 0.0;
        for (std::size_t j = 0; j < n; ++j) {
          r[1] = rule.nodes[j];
          double g = log_integrand(r);
          if (g > 700.0) throw std::overflow_error("theta_from_separable: integrand overflows");
          row += rule.weights[j] * std::exp(g);
        }
        total += rule.weights[i] * row;
      }
    }
    return total;
  };

  int n_panels = 8;
  double prev = tensor_integral(n_panels);
  for (; n_panels <= (d == 1 ? 1024 : 128); n_panels *= 2) {
    double next = tensor_integral(2 * n_panels);
    if (std::abs(next - prev) <= 1e-10 * std::abs(next) + 1e-300) {
      prev = next;
      break;
    }
    prev = next;
  }
  if (!(prev > 0.0)) throw std::runtime_error("theta_from_separable: moment is not positive");
  return std::exp(0.5 * (std::log(prev) - a.log_factorial()));
}

double theta_closed_exponential(double h, int order, int d) {
  if (h <= 0.0) throw std::invalid_argument("theta_closed_exponential: h must be positive");
  return std::exp(-0.5 * (order + d) * std::log(2.0 * h));
}

double theta_closed_linear_exponential(double R, int order, int d) {
  if (R <= 0.0) throw std::invalid_argument("theta_closed_linear_exponential: R must be positive");
  double n = order + d;
  return std::exp(0.5 * (std::log(2.0) - 2.0 * n * std::log(2.0 * R) + std::lgamma(2.0 * n) -
                         std::lgamma(n)));
}

SequenceWeight make_theta_exponential(double h, int d) {
  if (h <= 0.0) throw std::invalid_argument("make_theta_exponential: h must be positive");
  return [h, d](const MultiIndex& a) { return theta_closed_exponential(h, a.order(), d); };
}

SequenceWeight make_theta_linear_exponential(double R, int d) {
  if (R <= 0.0) throw std::invalid_argument("make_theta_linear_exponential: R must be positive");
  return [R, d](const MultiIndex& a) { return theta_closed_linear_exponential(R, a.order(), d); };
}

bool theta_dominates_entire_growth(const SequenceWeight& theta, int d, int cutoff) {
  if (cutoff < 8) throw std::invalid_argument("theta_dominates_entire_growth: cutoff too small");
  for (double R : {1.0, 2.0, 4.0}) {
    int argmax = 0;
    double best = -std::numeric_limits<double>::infinity();
    for (int k = 0; k <= cutoff; ++k) {
      std::vector<int> entries(d, 0);
      entries[0] = k;
      MultiIndex a(entries);
      double gap = k * std::log(R) - 0.5 * a.log_factorial() - std::log(theta(a));
      if (gap > best) {
        best = gap;
        argmax = k;
      }
    }
    if (argmax >= cutoff - 2) return false;
  }
  return true;
}

ModerateReport check_moderate_log(const std::function<double(const ComplexVec&)>& log_w,
                                  const std::function<double(const ComplexVec&)>& log_v, int d,
                                  double box, int samples, std::uint64_t seed) {
  if (d < 1 || box <= 0.0 || samples < 16)
    throw std::invalid_argument("check_moderate: need d >= 1, box > 0, samples >= 16");
  ModerateReport report;
  report.log_C = -std::numeric_limits<double>::infinity();
  const std::array<double, 3> scales = {0.5 * box, box, 2.0 * box};
  for (std::size_t si = 0; si < scales.size(); ++si) {
    std::mt19937_64 rng(seed + 1000003 * si);
    std::uniform_real_distribution<double> unif(-scales[si], scales[si]);
    double scale_best = -std::numeric_limits<double>::infinity();
    for (int it = 0; it < samples; ++it) {
      ComplexVec x(d), y(d), sum(d);
      for (int j = 0; j < d; ++j) {
        x[j] = Complex(unif(rng), unif(rng));
        y[j] = Complex(unif(rng), unif(rng));
        sum[j] = x[j] + y[j];
      }
      double ratio = log_w(sum) - log_w(x) - log_v(y);
      if (!std::isfinite(ratio)) continue;
      scale_best = std::max(scale_best, ratio);
      if (ratio > report.log_C) {
        report.log_C = ratio;
        report.witness.clear();
        for (int j = 0; j < d; ++j) {
          report.witness.push_back(x[j].real());
          report.witness.push_back(x[j].imag());
        }
        for (int j = 0; j < d; ++j) {
          report.witness.push_back(y[j].real());
          report.witness.push_back(y[j].imag());
        }
      }
    }
    report.scale_max[si] = scale_best;
  }
  const double growth_tol = 0.7;
  report.holds = std::isfinite(report.log_C) &&
                 (report.scale_max[1] - report.scale_max[0]) <= growth_tol &&
                 (report.scale_max[2] - report.scale_max[1]) <= growth_tol;
  return report;
}

ModerateReport check_moderate(const WeightSpec& w, const WeightSpec& v, int d, double box,
                              int samples, std::uint64_t seed) {
  validate(w);
  validate(v);
  return check_moderate_log([&](const ComplexVec& z) { return weight_log_eval(w, z); },
                            [&](const ComplexVec& z) { return weight_log_eval(v, z); }, d, box,
                            samples, seed);
}

namespace {

// Largest value of log w(z) - c|z|^2 (sign = +1) or -log w(z) - c|z|^2
// (sign = -1) over the grid [-b, b]^{2d}.
double sandwich_extreme(const WeightSpec& w, double c, double b, int d, int sign) {
  int n_axis = d == 1 ? 17 : (d == 2 ? 9 : 5);
  const int total_axes = 2 * d;
  std::vector<int> idx(total_axes, 0);
  double best = -std::numeric_limits<double>::infinity();
  while (true) {
    ComplexVec z(d);
    double nrm2 = 0.0;
    for (int j = 0; j < d; ++j) {
      double x = -b + 2.0 * b * idx[j] / (n_axis - 1);
      double xi = -b + 2.0 * b * idx[d + j] / (n_axis - 1);
      z[j] = Complex(x, xi);
      nrm2 += x * x + xi * xi;
    }
    best = std::max(best, sign * weight_log_eval(w, z) - c * nrm2);
    int ax = total_axes - 1;
    while (ax >= 0 && ++idx[ax] == n_axis) idx[ax--] = 0;
    if (ax < 0) break;
  }
  return best;
}

bool sandwich_holds_at(const WeightSpec& w, double c, double box, int d, double* log_C) {
  const double tol = 0.1;
  double up1 = sandwich_extreme(w, c, box, d, +1);
  double up2 = sandwich_extreme(w, c, 2.0 * box, d, +1);
  double lo1 = sandwich_extreme(w, c, box, d, -1);
  double lo2 = sandwich_extreme(w, c, 2.0 * box, d, -1);
  if (log_C) *log_C = std::max({0.0, up2, lo2});
  return up2 <= up1 + tol && lo2 <= lo1 + tol;
}

}  // namespace

SandwichReport check_gauss_sandwich(const WeightSpec& w, double c, double box, int d) {
  validate(w);
  if (c <= 0.0 || box <= 0.0 || d < 1 || d > 3)
    throw std::invalid_argument("check_gauss_sandwich: need c > 0, box > 0, 1 <= d <= 3");
  SandwichReport report;
  report.holds = sandwich_holds_at(w, c, box, d, &report.log_C);
  report.min_workable_c = std::numeric_limits<double>::quiet_NaN();
  for (double cc : {0.125, 0.25, 0.5, 1.0, 2.0}) {
    if (sandwich_holds_at(w, cc, box, d, nullptr)) {
      report.min_workable_c = cc;
      break;
    }
  }
  return report;
}

SimplexReport dirichlet_simplex_identity(const MultiIndex& a, long samples, std::uint64_t seed) {
  const int d = a.dim();
  if (d < 2) throw std::invalid_argument("dirichlet_simplex_identity: need dimension >= 2");
  if (samples < 100) throw std::invalid_argument("dirichlet_simplex_identity: need >= 100 samples");
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  double sum = 0.0, sum_sq = 0.0;
  std::vector<double> u(d);
  for (long it = 0; it < samples; ++it) {
    double total = 0.0;
    for (int j = 0; j < d; ++j) {
      double uu = unif(rng);
      while (uu <= 0.0) uu = unif(rng);
      u[j] = -std::log(uu);
      total += u[j];
    }
    double log_val = 0.0;
    bool zero = false;
    for (int j = 0; j < d; ++j) {
      if (a[j] == 0) continue;
      double t = u[j] / total;
      if (t <= 0.0) {
        zero = true;
        break;
      }
      log_val += a[j] * std::log(t);
    }
    double val = zero ? 0.0 : std::exp(log_val);
    sum += val;
    sum_sq += val * val;
  }
  const double n = static_cast<double>(samples);
  double mean = sum / n;
  double var = std::max(0.0, sum_sq / n - mean * mean);
  double volume = std::exp(-std::lgamma(static_cast<double>(d)));
  SimplexReport report;
  report.estimate = volume * mean;
  report.std_err = volume * std::sqrt(var / n);
  report.reference = std::exp(a.log_factorial() - std::lgamma(static_cast<double>(a.order() + d)));
  report.within_3se = std::abs(report.estimate - report.reference) <= 3.0 * report.std_err;
  return report;
}

}  // namespace bargkit
