#include "bargkit/classify.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <sstream>
#include <stdexcept>

#include <Eigen/Eigenvalues>

#include "bargkit/norms.hpp"

namespace bargkit {

namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

std::string format_s(double s) {
  std::ostringstream out;
  out << s;
  return out.str();
}

}  // namespace

std::string SpaceLabel::name() const {
  switch (kind) {
    case Kind::S0: return "S0";
    case Kind::Sigma: return "Sigma(" + format_s(s) + ")";
    case Kind::S: return "S(" + format_s(s) + ")";
    case Kind::HFlat0: return "HFlat0";
    case Kind::HFlat: return "HFlat";
    case Kind::DualS: return "DualS(" + format_s(s) + ")";
    case Kind::DualSigma: return "DualSigma(" + format_s(s) + ")";
    case Kind::DualHFlat: return "DualHFlat";
    case Kind::DualHFlat0: return "DualHFlat0";
    case Kind::DualS0: return "DualS0";
  }
  return "?";
}

namespace {

struct ShellStats {
  int cutoff = 0;
  int k_star = -1;
  double global_max_log = kNegInf;
  std::vector<double> m;         // log of the shell's largest |c|
  std::vector<double> v;         // largest log|c| + log sqrt(a!)
  std::vector<double> v2;        // largest log|c| - log sqrt(a!)
  std::vector<bool> occupied;    // shell survives the significance filter
  bool any = false;
};

ShellStats shell_stats(const HermiteExpansion& e) {
  ShellStats st;
  st.cutoff = e.cutoff();
  st.m.assign(st.cutoff + 1, kNegInf);
  st.v.assign(st.cutoff + 1, kNegInf);
  st.v2.assign(st.cutoff + 1, kNegInf);
  st.occupied.assign(st.cutoff + 1, false);
  for (const auto& [a, c] : e.coeffs()) {
    double mag = std::abs(c);
    if (mag == 0.0) continue;
    double lg = std::log(mag);
    double half_lf = 0.5 * a.log_factorial();
    int k = a.order();
    st.m[k] = std::max(st.m[k], lg);
    st.v[k] = std::max(st.v[k], lg + half_lf);
    st.v2[k] = std::max(st.v2[k], lg - half_lf);
    st.global_max_log = std::max(st.global_max_log, lg);
  }
  const double floor = st.global_max_log + std::log(1e-13);
  for (int k = 0; k <= st.cutoff; ++k) {
    if (st.m[k] > floor) {
      st.occupied[k] = true;
      st.k_star = k;
      st.any = true;
    }
  }
  return st;
}

bool finite_tail_of(const ShellStats& st) {
  if (!st.any) return true;  // the zero expansion is finite
  int gap = st.cutoff - st.k_star;
  if (gap < std::max(4, st.cutoff / 5)) return false;
  return st.m[st.k_star] >= st.global_max_log + std::log(1e-6);
}

struct Window {
  std::vector<int> ks;
};

std::vector<Window> make_windows(const ShellStats& st) {
  auto collect = [&](int lo, int hi) {
    Window w;
    for (int k = std::max(1, lo); k <= std::min(hi, st.k_star); ++k)
      if (st.occupied[k]) w.ks.push_back(k);
    return w;
  };
  std::vector<Window> usable;
  for (auto [lo, hi] : {std::pair{8, 16}, std::pair{16, 32}, std::pair{24, 40}}) {
    Window w = collect(lo, hi);
    if (w.ks.size() >= 5 && w.ks.back() - w.ks.front() >= 4) usable.push_back(std::move(w));
  }
  if (usable.size() >= 2) return usable;
  usable.clear();
  const int ks = st.k_star;
  if (ks >= 4) {
    for (auto [lo, hi] : {std::pair{1, (ks + 1) / 2}, std::pair{ks / 4, (3 * ks + 3) / 4},
                          std::pair{ks / 2, ks}}) {
      Window w = collect(lo, hi);
      if (w.ks.size() >= 3 && w.ks.back() > w.ks.front()) usable.push_back(std::move(w));
    }
  }
  return usable;
}

// Least-squares slope of y against u over the window's shells.
double window_slope(const Window& w, const std::vector<double>& y,
                    const std::function<double(int)>& u) {
  double su = 0, sy = 0, suu = 0, suy = 0;
  int n = 0;
  for (int k : w.ks) {
    if (!std::isfinite(y[k])) continue;
    double uk = u(k);
    su += uk;
    sy += y[k];
    suu += uk * uk;
    suy += uk * y[k];
    ++n;
  }
  if (n < 2) return std::numeric_limits<double>::quiet_NaN();
  double denom = n * suu - su * su;
  if (denom <= 0.0) return std::numeric_limits<double>::quiet_NaN();
  return (n * suy - su * sy) / denom;
}

enum class Trend { increasing, decreasing, stable, mixed, unknown };

Trend trend_of(const std::vector<double>& a, double tol) {
  if (a.size() < 2) return Trend::unknown;
  for (double x : a)
    if (!std::isfinite(x)) return Trend::unknown;
  bool inc = true, dec = true, sta = true;
  for (std::size_t i = 1; i < a.size(); ++i) {
    double diff = a[i] - a[i - 1];
    inc = inc && diff > tol;
    dec = dec && diff < -tol;
    sta = sta && std::abs(diff) <= tol;
  }
  if (inc) return Trend::increasing;
  if (dec) return Trend::decreasing;
  if (sta) return Trend::stable;
  return Trend::mixed;
}

// Decay rates (sign-flipped slopes of m against k^{1/(2s)}) per window.
std::vector<double> stretched_rates(const std::vector<Window>& ws, const ShellStats& st,
                                    double s) {
  std::vector<double> rates;
  const double p = 1.0 / (2.0 * s);
  for (const auto& w : ws)
    rates.push_back(-window_slope(w, st.m, [p](int k) { return std::pow(k, p); }));
  return rates;
}

std::vector<double> linear_slopes(const std::vector<Window>& ws, const std::vector<double>& y) {
  std::vector<double> slopes;
  for (const auto& w : ws)
    slopes.push_back(window_slope(w, y, [](int k) { return static_cast<double>(k); }));
  return slopes;
}

Membership verdict_sigma(const std::vector<double>& r, double tol) {
  switch (trend_of(r, tol)) {
    case Trend::increasing: return Membership::member;
    case Trend::stable:
    case Trend::decreasing: return Membership::non_member;
    default: return Membership::borderline;
  }
}

Membership verdict_s(const std::vector<double>& r, double tol) {
  switch (trend_of(r, tol)) {
    case Trend::increasing: return Membership::member;
    case Trend::stable:
      return r.back() >= 2.0 * tol ? Membership::member : Membership::non_member;
    case Trend::decreasing: return Membership::non_member;
    default: return Membership::borderline;
  }
}

Membership verdict_hflat0(const std::vector<double>& sigma, double tol) {
  switch (trend_of(sigma, tol)) {
    case Trend::decreasing: return Membership::member;
    case Trend::stable:
    case Trend::increasing: return Membership::non_member;
    default: return Membership::borderline;
  }
}

Membership verdict_hflat(const std::vector<double>& sigma, double tol) {
  switch (trend_of(sigma, tol)) {
    case Trend::decreasing:
    case Trend::stable: return Membership::member;
    case Trend::increasing: return Membership::non_member;
    default: return Membership::borderline;
  }
}

// Dual side works with growth rates rho = -r.
Membership verdict_dual_s(const std::vector<double>& rho, double tol) {
  Trend t = trend_of(rho, tol);
  if (t == Trend::unknown) return Membership::borderline;
  if (t == Trend::decreasing || rho.back() <= 2.0 * tol) return Membership::member;
  if (t == Trend::stable || t == Trend::increasing) return Membership::non_member;
  return Membership::borderline;
}

Membership verdict_dual_sigma(const std::vector<double>& rho, double tol) {
  Trend t = trend_of(rho, tol);
  if (t == Trend::unknown) return Membership::borderline;
  if (t == Trend::stable || t == Trend::decreasing || rho.back() <= 2.0 * tol)
    return Membership::member;
  if (t == Trend::increasing) return Membership::non_member;
  return Membership::borderline;
}

Membership verdict_dual_hflat(const std::vector<double>& tau, double tol) {
  switch (trend_of(tau, tol)) {
    case Trend::decreasing: return Membership::member;
    case Trend::stable:
    case Trend::increasing: return Membership::non_member;
    default: return Membership::borderline;
  }
}

Membership verdict_dual_hflat0(const std::vector<double>& tau, double tol) {
  switch (trend_of(tau, tol)) {
    case Trend::decreasing:
    case Trend::stable: return Membership::member;
    case Trend::increasing: return Membership::non_member;
    default: return Membership::borderline;
  }
}

std::vector<SpaceLabel> ladder_labels(const std::vector<double>& s_grid) {
  std::vector<double> small, half_up;
  for (double s : s_grid) {
    if (s < 0.5)
      small.push_back(s);
    else
      half_up.push_back(s);
  }
  std::sort(small.begin(), small.end());
  std::sort(half_up.begin(), half_up.end());
  using K = SpaceLabel::Kind;
  std::vector<SpaceLabel> ladder;
  ladder.push_back({K::S0, 0.0});
  for (double s : small) {
    ladder.push_back({K::Sigma, s});
    ladder.push_back({K::S, s});
  }
  ladder.push_back({K::HFlat0, 0.0});
  ladder.push_back({K::HFlat, 0.0});
  for (double s : half_up) {
    ladder.push_back({K::Sigma, s});
    ladder.push_back({K::S, s});
  }
  for (auto it = half_up.rbegin(); it != half_up.rend(); ++it) {
    ladder.push_back({K::DualS, *it});
    ladder.push_back({K::DualSigma, *it});
  }
  ladder.push_back({K::DualHFlat, 0.0});
  ladder.push_back({K::DualHFlat0, 0.0});
  for (auto it = small.rbegin(); it != small.rend(); ++it) {
    ladder.push_back({K::DualS, *it});
    ladder.push_back({K::DualSigma, *it});
  }
  ladder.push_back({K::DualS0, 0.0});
  return ladder;
}

struct LinearFit {
  double slope = 0.0;
  double intercept = 0.0;
  double residual = 0.0;
  bool ok = false;
};

LinearFit linear_fit(const std::vector<double>& u, const std::vector<double>& y) {
  LinearFit fit;
  const std::size_t n = u.size();
  if (n < 2) return fit;
  double su = 0, sy = 0, suu = 0, suy = 0;
  for (std::size_t i = 0; i < n; ++i) {
    su += u[i];
    sy += y[i];
    suu += u[i] * u[i];
    suy += u[i] * y[i];
  }
  double denom = n * suu - su * su;
  if (denom <= 0.0) return fit;
  fit.slope = (n * suy - su * sy) / denom;
  fit.intercept = (sy - fit.slope * su) / n;
  double ss = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    double r = y[i] - fit.slope * u[i] - fit.intercept;
    ss += r * r;
  }
  fit.residual = std::sqrt(ss / n);
  fit.ok = true;
  return fit;
}

}  // namespace

DecayFit fit_decay(const HermiteExpansion& e, const std::vector<double>& s_grid) {
  ShellStats st = shell_stats(e);
  DecayFit best;
  best.model = DecayFit::Model::finite;
  best.window_hi = st.k_star;
  if (!st.any || finite_tail_of(st)) return best;

  int lo = std::max(1, (st.k_star + 1) / 2);
  std::vector<int> ks;
  for (int k = lo; k <= st.k_star; ++k)
    if (st.occupied[k]) ks.push_back(k);
  if (ks.size() < 8)
    throw std::invalid_argument("fit_decay: need at least 8 populated shells in the tail window");

  std::vector<double> m_vals, v_vals, v2_vals, k_vals;
  for (int k : ks) {
    m_vals.push_back(st.m[k]);
    v_vals.push_back(st.v[k]);
    v2_vals.push_back(st.v2[k]);
    k_vals.push_back(k);
  }

  double best_res = std::numeric_limits<double>::infinity();
  for (double s : s_grid) {
    std::vector<double> u;
    for (int k : ks) u.push_back(std::pow(k, 1.0 / (2.0 * s)));
    LinearFit fit = linear_fit(u, m_vals);
    if (fit.ok && fit.residual < best_res) {
      best_res = fit.residual;
      best = DecayFit{DecayFit::Model::stretched_exp, s, -fit.slope, 0.0,
                      fit.intercept, fit.residual, lo, st.k_star};
    }
  }
  for (auto [model, vals] : {std::pair{DecayFit::Model::factorial, &v_vals},
                             std::pair{DecayFit::Model::factorial_growth, &v2_vals}}) {
    LinearFit fit = linear_fit(k_vals, *vals);
    if (fit.ok && fit.residual < best_res) {
      best_res = fit.residual;
      best = DecayFit{model, 0.0, fit.slope, std::exp(fit.slope), fit.intercept, fit.residual, lo,
                      st.k_star};
    }
  }
  if (!std::isfinite(best_res)) throw std::runtime_error("fit_decay: no model could be fitted");
  return best;
}

ClassificationReport classify(const HermiteExpansion& e, double tol,
                              const std::vector<double>& s_grid) {
  if (tol <= 0.0) throw std::invalid_argument("classify: tolerance must be positive");
  for (double s : s_grid)
    if (s <= 0.0) throw std::invalid_argument("classify: s grid entries must be positive");

  ShellStats st = shell_stats(e);
  ClassificationReport report;
  report.cutoff = st.cutoff;
  report.tol = tol;
  report.last_significant_shell = st.k_star;
  report.finite_tail = finite_tail_of(st);

  try {
    report.fit = fit_decay(e, s_grid);
  } catch (const std::exception&) {
    report.fit = DecayFit{};
    report.fit.model = DecayFit::Model::finite;
  }

  std::vector<Window> windows = st.any ? make_windows(st) : std::vector<Window>{};
  const bool have_slopes = windows.size() >= 2;
  if (!st.any)
    report.caveat = "expansion is identically zero; it belongs to every space";
  else if (!have_slopes && !report.finite_tail)
    report.caveat = "too few populated shells for slope statistics; verdicts are borderline";
  else
    report.caveat = "statistical verdicts from coefficients up to order " +
                    std::to_string(st.cutoff) + "; shells beyond " + std::to_string(st.k_star) +
                    " are below the significance floor";

  std::vector<double> sigma_slopes, tau_slopes;
  if (have_slopes) {
    sigma_slopes = linear_slopes(windows, st.v);
    tau_slopes = linear_slopes(windows, st.v2);
  }

  for (const SpaceLabel& label : ladder_labels(s_grid)) {
    Membership verdict = Membership::borderline;
    using K = SpaceLabel::Kind;
    if (!st.any) {
      verdict = Membership::member;
    } else if (label.kind == K::S0) {
      verdict = report.finite_tail ? Membership::member : Membership::non_member;
    } else if (label.kind == K::DualS0) {
      verdict = Membership::member;
    } else if (have_slopes) {
      switch (label.kind) {
        case K::Sigma:
          verdict = verdict_sigma(stretched_rates(windows, st, label.s), tol);
          break;
        case K::S:
          verdict = verdict_s(stretched_rates(windows, st, label.s), tol);
          break;
        case K::HFlat0:
          verdict = verdict_hflat0(sigma_slopes, tol);
          break;
        case K::HFlat:
          verdict = verdict_hflat(sigma_slopes, tol);
          break;
        case K::DualS:
        case K::DualSigma: {
          std::vector<double> rho = stretched_rates(windows, st, label.s);
          for (double& x : rho) x = -x;
          verdict = label.kind == K::DualS ? verdict_dual_s(rho, tol)
                                           : verdict_dual_sigma(rho, tol);
          break;
        }
        case K::DualHFlat:
          verdict = verdict_dual_hflat(tau_slopes, tol);
          break;
        case K::DualHFlat0:
          verdict = verdict_dual_hflat0(tau_slopes, tol);
          break;
        default:
          break;
      }
    }
    report.verdicts.emplace_back(label, verdict);
  }

  bool seen_member = false;
  for (auto& [label, verdict] : report.verdicts) {
    if (seen_member)
      verdict = Membership::member;
    else if (verdict == Membership::member)
      seen_member = true;
  }
  return report;
}

GaussianMembershipReport gaussian_membership(const Eigen::MatrixXcd& A,
                                             const Eigen::VectorXcd& L) {
  if (A.rows() != A.cols() || A.rows() < 1)
    throw std::invalid_argument("gaussian_membership: A must be square");
  if (L.size() != A.rows())
    throw std::invalid_argument("gaussian_membership: L must match the dimension of A");
  double scale = std::max(1.0, A.cwiseAbs().maxCoeff());
  if ((A - A.transpose()).cwiseAbs().maxCoeff() > 1e-10 * scale)
    throw std::invalid_argument("gaussian_membership: A must be symmetric");
  Eigen::MatrixXd re = A.real();
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> re_eig(0.5 * (re + re.transpose()));
  if (re_eig.eigenvalues().minCoeff() <= 0.0)
    throw std::invalid_argument("gaussian_membership: Re A must be positive definite");

  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> eig(A);
  GaussianMembershipReport report;
  report.member = true;
  for (int j = 0; j < A.rows(); ++j) {
    Complex lam = eig.eigenvalues()(j);
    report.eigenvalues.push_back(lam);
    if (std::abs(lam - Complex(1.0, 0.0)) > 1e-10) report.member = false;
  }
  return report;
}

ForwardEquivReport equiv_forward_check(const HermiteExpansion& e, double h, double s, int N_sup) {
  if (h <= 0.0 || s <= 0.0)
    throw std::invalid_argument("equiv_forward_check: need h > 0 and s > 0");
  ForwardEquivReport report;
  SeminormResult sn = pilipovic_seminorm(e, h, s, N_sup);
  report.seminorm = sn.value;
  if (sn.value == 0.0) {
    report.holds = true;
    return report;
  }
  const double log_c = std::log(sn.value);
  const double p = 1.0 / (2.0 * s);
  double worst = std::numeric_limits<double>::infinity();
  for (const auto& [a, c] : e.coeffs()) {
    double mag = std::abs(c);
    if (mag == 0.0) continue;
    double lam = 2.0 * a.order() + e.dim();
    double bound = s * std::log(4.0) + log_c - s * std::pow(lam / h, p);
    worst = std::min(worst, bound - std::log(mag));
  }
  report.worst_slack = worst;
  report.holds = worst > -1e-7;
  return report;
}

BackwardEquivReport equiv_backward_check(const HermiteExpansion& e, double h, double s,
                                         int N_sup) {
  if (h <= 0.0 || s <= 0.0)
    throw std::invalid_argument("equiv_backward_check: need h > 0 and s > 0");
  std::vector<double> log_lambda, log_mag2;
  double log_c_fit = kNegInf;
  const double p = 1.0 / (2.0 * s);
  const int d = e.dim();
  for (const auto& [a, c] : e.coeffs()) {
    double mag = std::abs(c);
    if (mag == 0.0) continue;
    log_lambda.push_back(std::log(2.0 * a.order() + d));
    log_mag2.push_back(2.0 * std::log(mag));
    log_c_fit = std::max(log_c_fit, std::log(mag) + std::pow(a.order(), p) / h);
  }
  if (log_lambda.empty())
    throw std::invalid_argument("equiv_backward_check: expansion has no nonzero coefficients");

  const double log_b = std::log(3.0) + 2.0 * s * std::log(4.0 * s * h);
  BackwardEquivReport report;
  report.max_log_ratio = kNegInf;
  for (int N = 0; N <= N_sup; ++N) {
    double max_term = kNegInf;
    for (std::size_t i = 0; i < log_lambda.size(); ++i)
      max_term = std::max(max_term, 2.0 * N * log_lambda[i] + log_mag2[i]);
    double acc = 0.0;
    for (std::size_t i = 0; i < log_lambda.size(); ++i)
      acc += std::exp(2.0 * N * log_lambda[i] + log_mag2[i] - max_term);
    double log_norm = 0.5 * (max_term + std::log(acc));
    double log_ratio = log_norm - N * log_b - 2.0 * s * std::lgamma(N + 1.0);
    if (log_ratio > report.max_log_ratio) {
      report.max_log_ratio = log_ratio;
      report.maximizer = N;
    }
  }
  report.log_allowed =
      log_c_fit +
      std::log1p(2.0 * s * std::pow(h, 2.0 * s * d) * std::exp(std::lgamma(2.0 * s * d)));
  report.bounded = report.maximizer < N_sup;
  report.holds = report.bounded && report.max_log_ratio <= report.log_allowed + 1e-9;
  return report;
}

}  // namespace bargkit
