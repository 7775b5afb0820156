#include "bargkit/verification.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <random>
#include <sstream>
#include <stdexcept>

#include "bargkit/bargmann.hpp"
#include "bargkit/classify.hpp"
#include "bargkit/fracft.hpp"
#include "bargkit/norms.hpp"
#include "bargkit/weights.hpp"

namespace bargkit {

namespace {

std::string format_err(double err) {
  std::ostringstream out;
  out.precision(3);
  out << std::scientific << err;
  return out.str();
}

HermiteExpansion delta_expansion(int dim, const MultiIndex& a) {
  HermiteExpansion e(dim, a.order());
  e.set(a, Complex(1.0, 0.0));
  return e;
}

// Random expansion with |c_k| = envelope(k) * uniform in [1/2, 1] and a
// random phase.
HermiteExpansion random_expansion(int dim, int cutoff, std::mt19937_64& rng,
                                  const std::function<double(int)>& envelope) {
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  HermiteExpansion e(dim, cutoff);
  for (const MultiIndex& a : multi_indices_up_to(dim, cutoff)) {
    double mag = envelope(a.order()) * (0.5 + 0.5 * unif(rng));
    double phase = 2.0 * M_PI * unif(rng);
    e.set(a, std::polar(mag, phase));
  }
  return e;
}

std::vector<std::vector<double>> random_plane_points(int d, int count, double half,
                                                     std::mt19937_64& rng) {
  std::uniform_real_distribution<double> unif(-half, half);
  std::vector<std::vector<double>> points;
  for (int i = 0; i < count; ++i) {
    std::vector<double> p(2 * d);
    for (auto& v : p) v = unif(rng);
    points.push_back(std::move(p));
  }
  return points;
}

// ---------------------------------------------------------------- bridge

CheckResult check_bargmann_of_hermite(std::uint64_t seed) {
  CheckResult r{"bargmann-of-hermite-basis", false, 0.0, 1e-7, ""};
  std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ull);
  for (int d : {1, 2}) {
    const double half = d == 1 ? 2.0 : 1.2;
    std::uniform_real_distribution<double> unif(-half, half);
    std::vector<ComplexVec> points;
    for (int i = 0; i < 10; ++i) {
      ComplexVec z(d);
      for (auto& zj : z) zj = Complex(unif(rng), unif(rng));
      points.push_back(std::move(z));
    }
    for (const MultiIndex& a : multi_indices_up_to(d, 6)) {
      FunctionSpec f = HermiteComboSpec{d, {{a, Complex(1.0, 0.0)}}};
      for (const auto& z : points) {
        Complex ref = e_alpha(a, z);
        Complex got = bargmann_quadrature(f, z);
        r.worst_err = std::max(r.worst_err, std::abs(got - ref) / (1.0 + std::abs(ref)));
      }
    }
  }
  r.pass = r.worst_err <= r.tolerance;
  r.detail = "d in {1,2}, |alpha| <= 6, 10 random z each";
  return r;
}

std::vector<FunctionSpec> bridge_function_set() {
  std::vector<FunctionSpec> fs;
  for (int k = 0; k <= 2; ++k)
    fs.push_back(HermiteComboSpec{1, {{MultiIndex({k}), Complex(1.0, 0.0)}}});
  GaussianSpec g;
  g.A = Eigen::MatrixXcd::Identity(1, 1) * 2.0;
  g.L = Eigen::VectorXcd::Zero(1);
  fs.push_back(g);
  return fs;
}

CheckResult check_stft_two_routes(std::uint64_t seed) {
  CheckResult r{"stft-two-routes", false, 0.0, 1e-7, ""};
  std::mt19937_64 rng(seed ^ 0x2545f4914f6cdd1dull);
  for (const FunctionSpec& f : bridge_function_set()) {
    HermiteExpansion e = analyze(f, AnalyzeOptions{40, 0}).expansion;
    for (const auto& p : random_plane_points(1, 25, 3.0, rng)) {
      std::vector<double> x{p[0]}, xi{p[1]};
      Complex a = stft_gaussian(e, x, xi);
      Complex b = stft_direct(f, x, xi);
      r.worst_err = std::max(r.worst_err, std::abs(a - b));
    }
  }
  r.pass = r.worst_err <= r.tolerance;
  r.detail = "h_0, h_1, h_2 and a width-2 Gaussian, 25 random phase-space points each";
  return r;
}

CheckResult check_uv_bridge(std::uint64_t seed) {
  CheckResult r{"uv-bridge", false, 0.0, 1e-6, ""};
  std::mt19937_64 rng(seed ^ 0x94d049bb133111ebull);
  for (const FunctionSpec& f : bridge_function_set()) {
    PlaneFunction F = [&](const std::vector<double>& x, const std::vector<double>& xi) {
      return stft_direct(f, x, xi);
    };
    for (const auto& p : random_plane_points(1, 5, 1.5, rng)) {
      std::vector<double> x{p[0]}, xi{p[1]};
      Complex ref = bargmann_quadrature(f, ComplexVec{Complex(p[0], p[1])});
      Complex got = uv_apply(F, x, xi);
      r.worst_err = std::max(r.worst_err, std::abs(got - ref) / (1.0 + std::abs(ref)));
    }
  }
  r.pass = r.worst_err <= r.tolerance;
  return r;
}

CheckResult check_groechenig_lift(std::uint64_t seed) {
  CheckResult r{"groechenig-lift-modulus", false, 0.0, 1e-8, ""};
  std::mt19937_64 rng(seed ^ 0xda942042e4dd58b5ull);
  FunctionSpec f = HermiteComboSpec{1, {{MultiIndex({0}), Complex(1.0, 0.0)}}};
  PlaneFunction F = [&](const std::vector<double>& x, const std::vector<double>& xi) {
    return stft_direct(f, x, xi);
  };
  const double ref = std::pow(M_PI / 2.0, 0.25);
  for (const auto& p : random_plane_points(1, 5, 1.0, rng)) {
    double got = std::abs(groechenig_lift(F, {p[0]}, {p[1]}));
    r.worst_err = std::max(r.worst_err, std::abs(got - ref));
  }
  r.pass = r.worst_err <= r.tolerance;
  r.detail = "lift of the ground-state transform has constant modulus (pi/2)^{1/4}";
  return r;
}

// ------------------------------------------------------------ reproducing

CheckResult check_box_closed_form(std::uint64_t) {
  CheckResult r{"box-lift-closed-form", false, 0.0, 1e-6, ""};
  EntireFunctionHandle box{1, BoxLiftForm{}};
  const std::vector<Complex> zs = {{0.0, 0.0}, {1.0, 0.0}, {1.0, 1.0}, {2.0, -1.0}};
  bool radius_ok = true;
  for (const Complex& z : zs) {
    ProjectionResult proj = reproducing_project(box, ComplexVec{z});
    radius_ok = radius_ok && proj.radius_ok;
    r.worst_err = std::max(r.worst_err, std::abs(proj.value - pi_a_box_closed_form({z})));
  }
  r.pass = radius_ok && r.worst_err <= r.tolerance;
  return r;
}

CheckResult check_projection_fixes_basis(std::uint64_t) {
  CheckResult r{"projection-fixes-basis", false, 0.0, 1e-6, ""};
  const std::vector<Complex> zs = {{0.3, 0.0}, {1.0, 0.5}, {-1.2, 2.0}};
  bool radius_ok = true;
  for (int k = 0; k <= 6; ++k) {
    MultiIndex a({k});
    EntireFunctionHandle F{1, delta_expansion(1, a)};
    for (const Complex& z : zs) {
      ProjectionResult proj = reproducing_project(F, ComplexVec{z});
      radius_ok = radius_ok && proj.radius_ok;
      Complex ref = e_alpha(a, {z});
      r.worst_err = std::max(r.worst_err, std::abs(proj.value - ref) / (1.0 + std::abs(ref)));
    }
  }
  r.pass = radius_ok && r.worst_err <= r.tolerance;
  return r;
}

// ---------------------------------------------------------------- weights

CheckResult check_theta_exponential(std::uint64_t) {
  CheckResult r{"theta-exponential-closed-form", false, 0.0, 1e-8, ""};
  for (double h : {0.5, 1.0, 2.0}) {
    auto profile = [h](double t) { return -h * t; };
    for (int k = 0; k <= 25; ++k) {
      double got = theta_from_radial(profile, k, 1);
      double ref = theta_closed_exponential(h, k, 1);
      r.worst_err = std::max(r.worst_err, std::abs(got - ref) / ref);
    }
    for (int k = 0; k <= 10; ++k) {
      double got = theta_from_radial(profile, k, 2);
      double ref = theta_closed_exponential(h, k, 2);
      r.worst_err = std::max(r.worst_err, std::abs(got - ref) / ref);
    }
  }
  r.pass = r.worst_err <= r.tolerance;
  return r;
}

CheckResult check_theta_linear_exponential(std::uint64_t) {
  CheckResult r{"theta-linear-exponential-closed-form", false, 0.0, 1e-8, ""};
  for (double R : {0.5, 1.0, 2.0}) {
    auto profile = [R](double t) { return -R * std::sqrt(t); };
    for (int k = 0; k <= 25; ++k) {
      double got = theta_from_radial(profile, k, 1);
      double ref = theta_closed_linear_exponential(R, k, 1);
      r.worst_err = std::max(r.worst_err, std::abs(got - ref) / ref);
    }
  }
  r.pass = r.worst_err <= r.tolerance;
  return r;
}

CheckResult check_a2_series_vs_quadrature(std::uint64_t seed) {
  CheckResult r{"a2-norm-series-vs-quadrature", false, 0.0, 1e-6, ""};
  std::mt19937_64 rng(seed ^ 0xbf58476d1ce4e5b9ull);
  for (double h : {0.5, 1.0, 2.0}) {
    HermiteExpansion e = random_expansion(1, 8, rng, [](int) { return 1.0; });
    double series = a2_weighted_norm_series(e, make_theta_exponential(h, 1));
    EntireFunctionHandle F{1, e};
    double quad = a2_weighted_norm_quadrature(
        F, [h](const std::vector<double>& t) { return -h * t[0]; }, 7.5);
    r.worst_err = std::max(r.worst_err, std::abs(series - quad) / series);
  }
  r.pass = r.worst_err <= r.tolerance;
  r.detail = "exponential radial profiles h in {1/2, 1, 2}, random order-8 expansions";
  return r;
}

CheckResult check_moderate_examples(std::uint64_t seed) {
  CheckResult r{"moderate-weight-examples", false, 0.0, 0.0, ""};
  ModerateReport poly_ok =
      check_moderate(PolyWeight{2.0}, PolyWeight{2.0}, 1, 10.0, 4000, seed + 1);
  ModerateReport gauss_bad =
      check_moderate(QuadraticWeight{0.0}, PolyWeight{2.0}, 1, 10.0, 4000, seed + 2);
  auto sub = [](const ComplexVec& z) {
    return std::abs(z[0].real()) + std::abs(z[0].imag());
  };
  ModerateReport subadd = check_moderate_log(sub, sub, 1, 10.0, 4000, seed + 3);
  r.pass = poly_ok.holds && !gauss_bad.holds && subadd.holds && subadd.log_C <= 1e-12;
  r.detail = "polynomial self-moderate holds; bare Gaussian fails; |x|+|xi| is subadditive";
  return r;
}

CheckResult check_sandwich_examples(std::uint64_t) {
  CheckResult r{"gauss-sandwich-examples", false, 0.0, 0.0, ""};
  SandwichReport poly = check_gauss_sandwich(PolyWeight{3.0}, 0.125, 10.0);
  SandwichReport quad_small = check_gauss_sandwich(QuadraticWeight{0.25}, 0.125, 10.0);
  SandwichReport quad_big = check_gauss_sandwich(QuadraticWeight{0.25}, 0.5, 10.0);
  SandwichReport flat = check_gauss_sandwich(FlatExpWeight{1.0}, 0.25, 10.0);
  r.pass = poly.holds && poly.min_workable_c == 0.125 && !quad_small.holds && quad_big.holds &&
           quad_big.min_workable_c == 0.25 && flat.holds;
  return r;
}

CheckResult check_dirichlet(std::uint64_t seed) {
  CheckResult r{"dirichlet-simplex-identity", false, 0.0, 0.0, ""};
  r.pass = true;
  std::ostringstream detail;
  for (const auto& entries :
       std::vector<std::vector<int>>{{0, 0}, {1, 1}, {2, 1}, {3, 2}}) {
    SimplexReport rep = dirichlet_simplex_identity(MultiIndex(entries), 1000000, seed);
    double err = std::abs(rep.estimate - rep.reference);
    r.worst_err = std::max(r.worst_err, rep.std_err > 0 ? err / rep.std_err : err);
    r.pass = r.pass && rep.within_3se;
  }
  r.tolerance = 3.0;
  r.detail = "worst deviation in standard errors: " + format_err(r.worst_err);
  return r;
}

// ------------------------------------------------------------------ norms

CheckResult check_mixed_norm_box(std::uint64_t) {
  CheckResult r{"mixed-norm-unit-box", false, 0.0, 1e-12, ""};
  PlaneGridSpec spec;
  spec.dim = 1;
  spec.x_axes = {AxisSpec{0.0, 0.1, 11}};
  spec.xi_axes = {AxisSpec{0.0, 0.1, 11}};
  PlaneGrid grid = tabulate_plane(
      spec, [](const std::vector<double>&, const std::vector<double>&) {
        return Complex(1.0, 0.0);
      });
  for (auto [p, q] : {std::pair{2.0, 2.0}, std::pair{1.0, p_infinity},
                      std::pair{p_infinity, p_infinity}})
    r.worst_err = std::max(r.worst_err, std::abs(mixed_norm(grid, p, q) - 1.0));
  r.pass = r.worst_err <= r.tolerance;
  return r;
}

CheckResult check_modulation_gaussian(std::uint64_t) {
  CheckResult r{"modulation-norm-gaussian", false, 0.0, 1e-8, ""};
  HermiteExpansion e = delta_expansion(1, MultiIndex({0}));
  double got = modulation_norm(e, PolyWeight{0.0}, 2.0, 2.0, default_isometry_grid(1));
  r.worst_err = std::abs(got - 1.0);
  r.pass = r.worst_err <= r.tolerance;
  r.detail = "window transformed against itself has unit L2 norm";
  return r;
}

CheckResult check_a2_series_examples(std::uint64_t) {
  CheckResult r{"a2-series-examples", false, 0.0, 1e-12, ""};
  HermiteExpansion e0 = delta_expansion(1, MultiIndex({0}));
  r.worst_err = std::max(
      r.worst_err, std::abs(a2_weighted_norm_series(e0, make_theta_exponential(0.5, 1)) - 1.0));
  HermiteExpansion e3 = delta_expansion(1, MultiIndex({3}));
  r.worst_err = std::max(
      r.worst_err, std::abs(a2_weighted_norm_series(e3, make_theta_exponential(1.0, 1)) - 0.25));
  HermiteExpansion e12(1, 2);
  e12.set(MultiIndex({1}), Complex(1.0, 0.0));
  e12.set(MultiIndex({2}), Complex(1.0, 0.0));
  r.worst_err = std::max(
      r.worst_err,
      std::abs(a2_weighted_norm_series(e12, make_theta_exponential(0.5, 1)) - std::sqrt(2.0)));
  r.pass = r.worst_err <= r.tolerance;
  return r;
}

CheckResult check_fep_identity(std::uint64_t seed) {
  CheckResult r{"fep-exponential-identity", false, 0.0, 1e-12, ""};
  std::mt19937_64 rng(seed ^ 0x5851f42d4c957f2dull);
  for (double h : {0.5, 1.0, 2.0}) {
    HermiteExpansion e = random_expansion(1, 8, rng, [](int k) { return std::exp(-0.3 * k); });
    double series = a2_weighted_norm_series(e, make_theta_exponential(h, 1));
    const double rr = -0.5 * std::log(2.0 * h);
    double sum = 0.0;
    for (const auto& [a, c] : e.coeffs()) {
      double t = std::abs(c) * std::exp(rr * a.order());
      sum += t * t;
    }
    double rhs = std::exp(rr) * std::sqrt(sum);
    r.worst_err = std::max(r.worst_err, std::abs(series - rhs) / rhs);
  }
  r.pass = r.worst_err <= r.tolerance;
  r.detail = "weighted norm equals e^{r d} shifted-sequence norm with r = -log(2h)/2";
  return r;
}

CheckResult check_pilipovic_examples(std::uint64_t) {
  CheckResult r{"pilipovic-seminorm-examples", false, 0.0, 1e-12, ""};
  HermiteExpansion e0 = delta_expansion(1, MultiIndex({0}));
  SeminormResult s0 = pilipovic_seminorm(e0, 1.0, 0.5);
  r.worst_err = std::max(r.worst_err, std::abs(s0.value - 1.0));
  bool maximizer_ok = s0.maximizer == 0;
  HermiteExpansion e2 = delta_expansion(1, MultiIndex({2}));
  SeminormResult s2 = pilipovic_seminorm(e2, 10.0, 0.5);
  r.worst_err = std::max(r.worst_err, std::abs(s2.value - 1.0));
  maximizer_ok = maximizer_ok && s2.maximizer == 0;
  HermiteExpansion eh = delta_expansion(1, MultiIndex({2}));
  SeminormResult s3 = pilipovic_seminorm(eh, 2.0, 0.5);
  // sup_N 5^N / (2^N N!) peaks at N = 2: 25/8.
  r.worst_err = std::max(r.worst_err, std::abs(s3.value - 25.0 / 8.0));
  maximizer_ok = maximizer_ok && s3.maximizer == 2;
  r.pass = maximizer_ok && r.worst_err <= r.tolerance;
  return r;
}

CheckResult check_pi_a_l1(std::uint64_t) {
  CheckResult r{"projection-l1-comparison", false, 0.0, 0.0, ""};
  EntireFunctionHandle e0{1, delta_expansion(1, MultiIndex({0}))};
  ProjectionComparison fixed = pi_a_weighted_l1_check(e0, 1.0, 1.0, 0.2, 0.45, 6.0);
  EntireFunctionHandle box{1, BoxLiftForm{}};
  ProjectionComparison boxed = pi_a_weighted_l1_check(box, 1.0, 1.0, 0.2, 0.45, 6.0);
  r.pass = fixed.ratio > 0.65 && fixed.ratio < 0.75 && boxed.ratio > 0.0 && boxed.ratio <= 2.0;
  std::ostringstream detail;
  detail << "ratios: fixed point " << fixed.ratio << ", box lift " << boxed.ratio;
  r.detail = detail.str();
  r.worst_err = fixed.ratio;
  r.tolerance = 1.0;
  return r;
}

// ------------------------------------------------------------ equiv-lemma

struct EquivCase {
  HermiteExpansion e;
  double s;
  double h;
};

std::vector<EquivCase> equiv_corpus(std::uint64_t seed) {
  std::mt19937_64 rng(seed ^ 0x7b2dfadc7b2dfadcull);
  std::vector<EquivCase> cases;
  const double ss[] = {0.5, 1.0};
  const double hs[] = {0.5, 1.0, 2.0};
  for (int i = 0; i < 50; ++i) {
    double s = ss[i % 2];
    double h = hs[i % 3];
    double p = 1.0 / (2.0 * s);
    cases.push_back({random_expansion(
                         1, 24, rng, [p, h](int k) { return std::exp(-std::pow(k, p) / h); }),
                     s, h});
  }
  return cases;
}

CheckResult check_equiv_forward(std::uint64_t seed) {
  CheckResult r{"forward-bound-corpus", false, 0.0, 0.0, ""};
  int violations = 0;
  double worst_slack = std::numeric_limits<double>::infinity();
  for (const EquivCase& c : equiv_corpus(seed)) {
    ForwardEquivReport rep = equiv_forward_check(c.e, c.h, c.s);
    if (!rep.holds) ++violations;
    worst_slack = std::min(worst_slack, rep.worst_slack);
  }
  r.pass = violations == 0;
  r.worst_err = violations;
  r.detail = "50 cases; smallest log slack " + format_err(worst_slack);
  return r;
}

CheckResult check_equiv_backward(std::uint64_t seed) {
  CheckResult r{"backward-ratio-corpus", false, 0.0, 20.0, ""};
  bool all_ok = true;
  int worst_n = 0;
  for (const EquivCase& c : equiv_corpus(seed)) {
    BackwardEquivReport rep = equiv_backward_check(c.e, c.h, c.s);
    all_ok = all_ok && rep.holds && rep.bounded;
    worst_n = std::max(worst_n, rep.maximizer);
  }
  r.worst_err = worst_n;
  r.pass = all_ok && worst_n <= 20;
  r.detail = "largest ratio maximizer N = " + std::to_string(worst_n);
  return r;
}

// ----------------------------------------------------------------- fracft

CheckResult check_eigenrelation(std::uint64_t) {
  CheckResult r{"eigenrelation-exact", false, 0.0, 0.0, ""};
  const Complex table[4] = {{1, 0}, {0, -1}, {-1, 0}, {0, 1}};
  bool exact = true;
  for (int k = 0; k <= 8; ++k) {
    for (int rr : {1, 2, 3}) {
      HermiteExpansion e = fractional_ft(delta_expansion(1, MultiIndex({k})),
                                         {static_cast<double>(rr)});
      Complex expected = table[(rr * k) % 4];
      exact = exact && e.coeff(MultiIndex({k})) == expected;
    }
  }
  HermiteExpansion e2 = fractional_ft(delta_expansion(2, MultiIndex({1, 2})), {1.0, 2.0});
  exact = exact && e2.coeff(MultiIndex({1, 2})) == table[1];
  r.pass = exact;
  return r;
}

bool expansions_identical(const HermiteExpansion& a, const HermiteExpansion& b) {
  if (a.support_size() != b.support_size()) return false;
  for (const auto& [idx, c] : a.coeffs())
    if (b.coeff(idx) != c) return false;
  return true;
}

CheckResult check_group_law_integer(std::uint64_t seed) {
  CheckResult r{"group-law-integer-exact", false, 0.0, 0.0, ""};
  std::mt19937_64 rng(seed ^ 0x41c64e6d41c64e6dull);
  HermiteExpansion e = random_expansion(1, 10, rng, [](int k) { return std::exp(-0.4 * k); });
  bool exact = true;
  for (auto [r1, r2] : {std::pair{1.0, 2.0}, std::pair{3.0, -2.0}, std::pair{-1.0, -1.0}}) {
    HermiteExpansion two_step = fractional_ft(fractional_ft(e, {r1}), {r2});
    HermiteExpansion one_step = fractional_ft(e, {r1 + r2});
    exact = exact && expansions_identical(two_step, one_step);
  }
  r.pass = exact;
  return r;
}

CheckResult check_period_4(std::uint64_t seed) {
  CheckResult r{"period-4-exact", false, 0.0, 0.0, ""};
  std::mt19937_64 rng(seed ^ 0x6c078965'6c078965ull);
  HermiteExpansion e1 = random_expansion(1, 10, rng, [](int k) { return std::exp(-0.4 * k); });
  HermiteExpansion e2 = random_expansion(2, 6, rng, [](int k) { return std::exp(-0.6 * k); });
  r.pass = expansions_identical(fractional_ft(e1, {4.0}), e1) &&
           expansions_identical(fractional_ft(e2, {4.0, 4.0}), e2);
  return r;
}

CheckResult check_group_law_fractional(std::uint64_t seed) {
  CheckResult r{"group-law-fractional", false, 0.0, 1e-15, ""};
  std::mt19937_64 rng(seed ^ 0x3243f6a8885a308dull);
  HermiteExpansion e = random_expansion(1, 10, rng, [](int k) { return std::exp(-0.4 * k); });
  HermiteExpansion two_step = fractional_ft(fractional_ft(e, {0.3}), {0.7});
  HermiteExpansion one_step = fractional_ft(e, {1.0});
  for (const auto& [a, c] : two_step.coeffs())
    r.worst_err = std::max(r.worst_err, std::abs(c - one_step.coeff(a)));
  r.pass = r.worst_err <= r.tolerance;
  return r;
}

CheckResult check_fourier_quadrature(std::uint64_t seed) {
  CheckResult r{"fourier-via-quadrature", false, 0.0, 1e-6, ""};
  std::mt19937_64 rng(seed ^ 0x1f123bb5'1f123bb5ull);
  HermiteExpansion e = random_expansion(1, 6, rng, [](int k) { return std::exp(-0.5 * k); });
  HermiteExpansion hat = fractional_ft(e, {1.0});
  GaussHermiteRule rule = gauss_hermite_rule(200);
  std::uniform_real_distribution<double> unif(-2.0, 2.0);
  for (int i = 0; i < 5; ++i) {
    double xi = unif(rng);
    Complex integral(0.0, 0.0);
    for (std::size_t n = 0; n < rule.nodes.size(); ++n) {
      double y = rule.nodes[n];
      integral += rule.weights[n] * synthesize(e, {y}) *
                  std::polar(1.0, -y * xi);
    }
    Complex direct = integral / std::sqrt(2.0 * M_PI);
    Complex via_phase = synthesize(hat, {xi});
    r.worst_err = std::max(r.worst_err, std::abs(direct - via_phase));
  }
  r.pass = r.worst_err <= r.tolerance;
  r.detail = "order parameter 1 against the defining Fourier integral";
  return r;
}

CheckResult check_commutation(std::uint64_t seed) {
  CheckResult r{"commutation-with-H", false, 0.0, 1e-14, ""};
  std::mt19937_64 rng(seed ^ 0x85ebca6b'85ebca6bull);
  HermiteExpansion e = random_expansion(1, 10, rng, [](int k) { return std::exp(-0.3 * k); });
  CommutationReport integer_case = verify_commutes_with_H(e, {2.0}, 3);
  CommutationReport frac_case = verify_commutes_with_H(e, {0.3}, 3);
  CommutationReport h5_case =
      verify_commutes_with_H(delta_expansion(1, MultiIndex({5})), {1.7}, 2);
  double scale = 0.0;
  HermiteExpansion powered = apply_H(e, 3);
  for (const auto& [a, c] : powered.coeffs()) scale = std::max(scale, std::abs(c));
  r.worst_err = std::max(frac_case.max_abs_diff / std::max(scale, 1.0),
                         h5_case.max_abs_diff / std::pow(11.0, 2));
  r.pass = integer_case.exact && r.worst_err <= r.tolerance;
  r.detail = "integer orders commute bit for bit; fractional orders at rounding scale";
  return r;
}

CheckResult check_isometry(std::uint64_t seed) {
  CheckResult r{"isometry-reference-grid", false, 0.0, 1e-4, ""};
  std::mt19937_64 rng(seed ^ 0xc2b2ae35'c2b2ae35ull);
  const std::vector<WeightSpec> weights = {QuadraticWeight{0.5}, QuadraticWeight{0.6},
                                           PolyWeight{0.0}, PolyWeight{2.0}};
  const double orders[] = {0.5, 1.0, 1.3, 2.0};
  PlaneGridSpec grid = default_isometry_grid(1);
  for (int i = 0; i < 10; ++i) {
    HermiteExpansion e = random_expansion(1, 8, rng, [](int k) { return std::exp(-0.5 * k); });
    IsometryReport rep =
        verify_isometry(e, {orders[i % 4]}, weights[i % 4], 2.0, grid);
    r.worst_err = std::max(r.worst_err, rep.rel_deviation);
  }
  r.pass = r.worst_err <= r.tolerance;
  r.detail = "10 random expansions, rotation orders {0.5, 1, 1.3, 2}, radial weights";
  return r;
}

// --------------------------------------------------------------- classify

std::map<std::string, Membership> verdict_map(const ClassificationReport& report) {
  std::map<std::string, Membership> m;
  for (const auto& [label, verdict] : report.verdicts) m[label.name()] = verdict;
  return m;
}

std::string first_member(const ClassificationReport& report) {
  for (const auto& [label, verdict] : report.verdicts)
    if (verdict == Membership::member) return label.name();
  return "";
}

CheckResult check_finite_combo(std::uint64_t) {
  CheckResult r{"finite-combo-everywhere", false, 0.0, 0.0, ""};
  HermiteExpansion e(1, 16);
  e.set(MultiIndex({0}), Complex(1.0, 0.0));
  e.set(MultiIndex({3}), Complex(2.0, 0.0));
  ClassificationReport report = classify(e);
  bool all_member = true;
  for (const auto& [label, verdict] : report.verdicts)
    all_member = all_member && verdict == Membership::member;
  r.pass = all_member && report.finite_tail && first_member(report) == "S0";
  return r;
}

CheckResult check_stretched_rule(std::uint64_t) {
  CheckResult r{"stretched-rule-roumieu-half", false, 0.0, 0.0, ""};
  CoefficientRuleSpec rule{1, "stretched_exp", {{"s", 0.5}, {"r", 1.0}}};
  HermiteExpansion e = analyze(rule, AnalyzeOptions{40, 0}).expansion;
  ClassificationReport report = classify(e);
  auto m = verdict_map(report);
  r.pass = first_member(report) == "S(0.5)" && m["Sigma(0.5)"] == Membership::non_member &&
           m["S0"] == Membership::non_member && m["HFlat"] == Membership::non_member;
  return r;
}

CheckResult check_factorial_rule(std::uint64_t) {
  CheckResult r{"factorial-rule-flat", false, 0.0, 0.0, ""};
  CoefficientRuleSpec rule{1, "factorial", {{"R", 2.0}}};
  HermiteExpansion e = analyze(rule, AnalyzeOptions{40, 0}).expansion;
  ClassificationReport report = classify(e);
  auto m = verdict_map(report);
  r.pass = first_member(report) == "HFlat" && m["HFlat0"] == Membership::non_member &&
           m["Sigma(0.5)"] == Membership::member;
  return r;
}

CheckResult check_gaussian_cross(std::uint64_t) {
  CheckResult r{"gaussian-criterion-cross-check", false, 0.0, 0.0, ""};
  struct Case {
    Eigen::MatrixXcd A;
    bool member;
  };
  std::vector<Case> cases;
  cases.push_back({Eigen::MatrixXcd::Identity(1, 1), true});
  cases.push_back({2.0 * Eigen::MatrixXcd::Identity(1, 1), false});
  Eigen::MatrixXcd diag = Eigen::MatrixXcd::Zero(2, 2);
  diag(0, 0) = 1.0;
  diag(1, 1) = 3.0;
  cases.push_back({diag, false});

  int disagreements = 0;
  bool flags_ok = true;
  for (const Case& c : cases) {
    const int d = static_cast<int>(c.A.rows());
    GaussianMembershipReport algebraic =
        gaussian_membership(c.A, Eigen::VectorXcd::Zero(d));
    GaussianSpec spec;
    spec.A = c.A;
    spec.L = Eigen::VectorXcd::Zero(d);
    HermiteExpansion e = analyze(spec, AnalyzeOptions{40, 0}).expansion;
    auto m = verdict_map(classify(e));
    bool classified = m["Sigma(0.5)"] == Membership::member;
    if (classified != algebraic.member) ++disagreements;
    flags_ok = flags_ok && algebraic.member == c.member;
  }
  r.worst_err = disagreements;
  r.pass = disagreements == 0 && flags_ok;
  r.detail = "eigenvalue criterion vs decay classifier on A = I, 2I, diag(1,3)";
  return r;
}

CheckResult check_dual_ladder(std::uint64_t) {
  CheckResult r{"factorial-growth-dual-ladder", false, 0.0, 0.0, ""};
  CoefficientRuleSpec rule{1, "factorial_growth", {{"R", 2.0}}};
  HermiteExpansion e = analyze(rule, AnalyzeOptions{40, 0}).expansion;
  ClassificationReport report = classify(e);
  auto m = verdict_map(report);
  r.pass = first_member(report) == "DualHFlat0" && m["DualHFlat"] == Membership::non_member &&
           m["S(2)"] == Membership::non_member && m["DualS0"] == Membership::member;
  return r;
}

CheckResult check_ladder_corpus(std::uint64_t seed) {
  CheckResult r{"ladder-monotonicity-corpus", false, 0.0, 0.0, ""};
  std::mt19937_64 rng(seed ^ 0x27d4eb2f'27d4eb2full);
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  int monotone_violations = 0;
  int invariance_violations = 0;
  for (int i = 0; i < 100; ++i) {
    HermiteExpansion e(1, 40);
    const int family = i % 4;
    if (family == 0) {
      const double s_opts[] = {0.3, 0.5, 1.0, 2.0};
      double s = s_opts[i % 4 == 0 ? (i / 4) % 4 : 0];
      double rate = 0.5 + 2.0 * unif(rng);
      double p = 1.0 / (2.0 * s);
      e = random_expansion(1, 40, rng,
                           [rate, p](int k) { return std::exp(-rate * std::pow(k, p)); });
    } else if (family == 1) {
      double lr = std::log(0.5 + 2.5 * unif(rng));
      e = random_expansion(1, 40, rng, [lr](int k) {
        return std::exp(k * lr - 0.5 * std::lgamma(k + 1.0));
      });
    } else if (family == 2) {
      double lr = std::log(0.5 + 1.0 * unif(rng));
      e = random_expansion(1, 40, rng, [lr](int k) {
        return std::exp(k * lr + 0.5 * std::lgamma(k + 1.0));
      });
    } else {
      int top = 1 + (i % 9);
      e = random_expansion(1, 40, rng, [top](int k) { return k <= top ? 1.0 : 0.0; });
    }
    ClassificationReport report = classify(e);
    bool seen_member = false;
    for (const auto& [label, verdict] : report.verdicts) {
      if (verdict == Membership::member)
        seen_member = true;
      else if (seen_member)
        ++monotone_violations;
    }
    ClassificationReport rotated = classify(fractional_ft(e, {0.7}));
    if (rotated.verdicts.size() != report.verdicts.size()) {
      ++invariance_violations;
    } else {
      for (std::size_t j = 0; j < report.verdicts.size(); ++j)
        if (report.verdicts[j].second != rotated.verdicts[j].second) ++invariance_violations;
    }
  }
  r.worst_err = monotone_violations + invariance_violations;
  r.pass = monotone_violations == 0 && invariance_violations == 0;
  r.detail = "100 randomized expansions; verdicts monotone and rotation-invariant";
  return r;
}

// ------------------------------------------------------------------ suites

using CheckFn = CheckResult (*)(std::uint64_t);

const std::map<std::string, std::vector<CheckFn>>& suite_table() {
  static const std::map<std::string, std::vector<CheckFn>> table = {
      {"bridge",
       {check_bargmann_of_hermite, check_stft_two_routes, check_uv_bridge,
        check_groechenig_lift}},
      {"reproducing", {check_box_closed_form, check_projection_fixes_basis}},
      {"weights",
       {check_theta_exponential, check_theta_linear_exponential, check_a2_series_vs_quadrature,
        check_moderate_examples, check_sandwich_examples, check_dirichlet}},
      {"norms",
       {check_mixed_norm_box, check_modulation_gaussian, check_a2_series_examples,
        check_fep_identity, check_pilipovic_examples, check_pi_a_l1}},
      {"equiv-lemma", {check_equiv_forward, check_equiv_backward}},
      {"fracft",
       {check_eigenrelation, check_group_law_integer, check_period_4,
        check_group_law_fractional, check_fourier_quadrature, check_commutation,
        check_isometry}},
      {"classify",
       {check_finite_combo, check_stretched_rule, check_factorial_rule, check_gaussian_cross,
        check_dual_ladder, check_ladder_corpus}},
  };
  return table;
}

}  // namespace

std::vector<std::string> suite_names() {
  std::vector<std::string> names;
  for (const auto& [name, checks] : suite_table()) names.push_back(name);
  return names;
}

std::vector<CheckResult> run_suite(const std::string& suite, std::uint64_t seed) {
  auto it = suite_table().find(suite);
  if (it == suite_table().end()) {
    std::string known;
    for (const auto& name : suite_names()) known += (known.empty() ? "" : ", ") + name;
    throw std::invalid_argument("unknown suite '" + suite + "'; available: " + known);
  }
  std::vector<CheckResult> results;
  for (CheckFn fn : it->second) results.push_back(fn(seed));
  return results;
}

std::vector<AcceptanceCase> run_acceptance(std::uint64_t seed) {
  struct Criterion {
    int number;
    std::string name;
    std::string suite;
    std::vector<std::string> checks;
  };
  const std::vector<Criterion> criteria = {
      {1,
       "Bargmann transform maps the Hermite basis to normalized monomials",
       "bridge",
       {"bargmann-of-hermite-basis"}},
      {2,
       "Windowed transform: series route matches the defining integral and the plane bridge",
       "bridge",
       {"stft-two-routes", "uv-bridge"}},
      {3,
       "Reproducing projection: box closed form and fixed points on the basis",
       "reproducing",
       {"box-lift-closed-form", "projection-fixes-basis"}},
      {4,
       "Weighted norms: sequence side matches integral side and the moment closed forms",
       "weights",
       {"theta-exponential-closed-form", "theta-linear-exponential-closed-form",
        "a2-norm-series-vs-quadrature"}},
      {5,
       "Simplex moment identity by Monte Carlo within three standard errors",
       "weights",
       {"dirichlet-simplex-identity"}},
      {6,
       "Seminorm/decay equivalence: forward bound and backward ratios on a 50-case corpus",
       "equiv-lemma",
       {"forward-bound-corpus", "backward-ratio-corpus"}},
      {7,
       "Fractional Fourier: exact eigenstructure, isometry and Fourier agreement",
       "fracft",
       {"eigenrelation-exact", "group-law-integer-exact", "period-4-exact",
        "fourier-via-quadrature", "isometry-reference-grid"}},
      {8,
       "Classifier ground truths and the Gaussian eigenvalue criterion",
       "classify",
       {"finite-combo-everywhere", "stretched-rule-roumieu-half", "factorial-rule-flat",
        "gaussian-criterion-cross-check"}},
      {9,
       "Ladder monotonicity and rotation invariance on a randomized corpus",
       "classify",
       {"ladder-monotonicity-corpus"}},
  };

  std::map<std::string, std::map<std::string, CheckResult>> cache;
  for (const Criterion& c : criteria) {
    if (cache.count(c.suite)) continue;
    std::map<std::string, CheckResult> by_name;
    for (const CheckResult& res : run_suite(c.suite, seed)) by_name[res.name] = res;
    cache[c.suite] = std::move(by_name);
  }

  std::vector<AcceptanceCase> cases;
  for (const Criterion& c : criteria) {
    AcceptanceCase out;
    out.number = c.number;
    out.name = c.name;
    out.pass = true;
    std::ostringstream detail;
    double worst = 0.0;
    for (const std::string& check : c.checks) {
      const CheckResult& res = cache.at(c.suite).at(check);
      out.pass = out.pass && res.pass;
      worst = std::max(worst, res.worst_err);
      if (!res.pass) {
        if (detail.tellp() > 0) detail << "; ";
        detail << "failed: " << check << " (err " << format_err(res.worst_err) << ")";
      }
    }
    if (out.pass)
      detail << "worst error " << format_err(worst) << " across " << c.checks.size()
             << " check(s)";
    out.detail = detail.str();
    cases.push_back(std::move(out));
  }
  return cases;
}

}  // namespace bargkit
