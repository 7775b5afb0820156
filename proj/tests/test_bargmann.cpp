#include <cmath>
#include <complex>
#include <stdexcept>
#include <vector>

#include "bargkit/bargmann.hpp"
#include "bargkit/quadrature.hpp"
#include "doctest.h"

using namespace bargkit;

namespace {

const double kPi = std::acos(-1.0);

GaussianSpec unit_gaussian(double a) {
  GaussianSpec g;
  g.A = a * Eigen::MatrixXcd::Identity(1, 1);
  g.L = Eigen::VectorXcd::Zero(1);
  return g;
}

// Ground-state window phi(y) = pi^{-1/4} e^{-y^2/2} as a spec.
GaussianSpec window_spec() {
  GaussianSpec g = unit_gaussian(1.0);
  g.C = std::pow(kPi, -0.25);
  return g;
}

// V_phi phi in closed form.
Complex window_stft(double x, double xi) {
  double mag = std::pow(2.0 * kPi, -0.5) * std::exp(-(x * x + xi * xi) / 4.0);
  return mag * std::exp(Complex(0.0, -0.5 * x * xi));
}

}  // namespace

TEST_CASE("kernel equals its monomial-times-hermite series") {
  ComplexVec z{Complex(0.8, 0.3)};
  double y = 1.1;
  auto h = hermite_function_values(40, y);
  Complex acc(0.0, 0.0);
  for (int k = 40; k >= 0; --k) acc += e_alpha(MultiIndex({k}), z) * h[k];
  Complex kern = bargmann_kernel(z, {y});
  CHECK(std::abs(kern - acc) <= 1e-12 * std::abs(kern));
  CHECK_THROWS_AS(bargmann_kernel(z, {1.0, 2.0}), std::invalid_argument);
}

TEST_CASE("monomial values") {
  CHECK(e_alpha(MultiIndex({3}), {Complex(2.0, 0.0)}).real() ==
        doctest::Approx(8.0 / std::sqrt(6.0)).epsilon(1e-14));
  Complex v = e_alpha(MultiIndex({1, 2}), {Complex(0.0, 1.0), Complex(1.0, 1.0)});
  CHECK(v.real() == doctest::Approx(-std::sqrt(2.0)).epsilon(1e-14));
  CHECK(std::abs(v.imag()) <= 1e-14);
  CHECK(e_alpha(MultiIndex({0}), {Complex(5.0, 5.0)}) == Complex(1.0, 0.0));
}

TEST_CASE("transforming a hermite basis function gives a normalized monomial") {
  HermiteComboSpec combo;
  combo.dim = 1;
  combo.terms = {{MultiIndex({3}), Complex(1.0, 0.0)}};
  ComplexVec z{Complex(1.0, 0.5)};
  Complex got = bargmann_quadrature(combo, z);
  Complex want = e_alpha(MultiIndex({3}), z);
  CHECK(std::abs(got - want) <= 1e-9 * std::abs(want));
}

TEST_CASE("transforming a centered gaussian matches the closed form") {
  auto f = unit_gaussian(2.0);
  // pi^{-1/4} sqrt(2 pi / 3) e^{-z^2/6}
  for (Complex zval : {Complex(0.7, 0.0), Complex(1.0, 1.0)}) {
    Complex want = std::pow(kPi, -0.25) * std::sqrt(2.0 * kPi / 3.0) * std::exp(-zval * zval / 6.0);
    Complex got = bargmann_quadrature(f, {zval});
    CHECK(std::abs(got - want) <= 1e-10 * std::abs(want));
  }
  CHECK_THROWS_AS(bargmann_quadrature(FunctionSpec(CoefficientRuleSpec{1, "factorial", {{"R", 1.0}}}),
                                      {Complex(0.0, 0.0)}),
                  std::invalid_argument);
}

TEST_CASE("series evaluation sums coefficient times monomial") {
  HermiteExpansion e(1, 4);
  e.set(MultiIndex({0}), Complex(2.0, 0.0));
  e.set(MultiIndex({3}), Complex(0.0, 1.0));
  ComplexVec z{Complex(0.5, -0.25)};
  Complex zc = z[0];
  Complex want = Complex(2.0, 0.0) + Complex(0.0, 1.0) * zc * zc * zc / std::sqrt(6.0);
  CHECK(std::abs(bargmann_series(e, z) - want) <= 1e-14);
}

TEST_CASE("direct stft of the window against the closed form") {
  auto phi = window_spec();
  CHECK(std::abs(stft_direct(phi, {0.0}, {0.0}) - window_stft(0.0, 0.0)) <= 1e-13);
  CHECK(std::abs(stft_direct(phi, {2.0}, {0.0}) - window_stft(2.0, 0.0)) <= 1e-13);
  CHECK(std::abs(stft_direct(phi, {1.0}, {1.0}) - window_stft(1.0, 1.0)) <= 1e-13);
  CHECK_THROWS_AS(stft_direct(FunctionSpec(CoefficientRuleSpec{1, "factorial", {{"R", 1.0}}}),
                              {0.0}, {0.0}),
                  std::invalid_argument);
}

TEST_CASE("series-route stft agrees on expansions and on specs") {
  HermiteExpansion ground(1, 2);
  ground.set(MultiIndex({0}), Complex(1.0, 0.0));
  CHECK(std::abs(stft_gaussian(ground, {1.5}, {-0.5}) - window_stft(1.5, -0.5)) <= 1e-13);
  CHECK(std::abs(stft_gaussian(window_spec(), {1.5}, {-0.5}) - window_stft(1.5, -0.5)) <= 1e-10);
}

TEST_CASE("phase-space change of variables recovers the entire transform") {
  PlaneFunction F = [](const std::vector<double>& x, const std::vector<double>& xi) {
    return window_stft(x[0], xi[0]);
  };
  // For the ground state the recovered entire function is identically 1.
  CHECK(std::abs(uv_apply(F, {0.5}, {-0.3}) - Complex(1.0, 0.0)) <= 1e-12);
  CHECK(std::abs(uv_apply(F, {1.2}, {0.7}) - Complex(1.0, 0.0)) <= 1e-12);

  // First excited state: the recovered function is z = x + i xi.
  PlaneFunction F1 = [](const std::vector<double>& x, const std::vector<double>& xi) {
    Complex z(x[0] / std::sqrt(2.0), -xi[0] / std::sqrt(2.0));
    return window_stft(x[0], xi[0]) * z;
  };
  Complex got = uv_apply(F1, {0.5}, {-0.3});
  CHECK(std::abs(got - Complex(0.5, -0.3)) <= 1e-12);
  CHECK_THROWS_AS(uv_apply(F, {0.5}, {0.1, 0.2}), std::invalid_argument);
}

TEST_CASE("lifted window spectrogram has constant modulus") {
  PlaneFunction F = [](const std::vector<double>& x, const std::vector<double>& xi) {
    return window_stft(x[0], xi[0]);
  };
  double want = std::pow(kPi / 2.0, 0.25);
  for (auto [x, xi] : {std::pair{0.0, 0.0}, {1.0, -2.0}, {0.3, 0.9}})
    CHECK(std::abs(groechenig_lift(F, {x}, {xi})) == doctest::Approx(want).epsilon(1e-14));
}

TEST_CASE("handle evaluation covers all three forms") {
  EntireFunctionHandle box{1, BoxLiftForm{}};
  Complex inside = handle_eval(box, {Complex(0.5, 0.3)});
  CHECK(inside.real() == doctest::Approx(std::exp(0.34)).epsilon(1e-14));
  CHECK(handle_eval(box, {Complex(1.2, 0.5)}) == Complex(0.0, 0.0));
  CHECK(handle_eval(box, {Complex(0.5, -0.1)}) == Complex(0.0, 0.0));

  HermiteExpansion e(1, 2);
  e.set(MultiIndex({2}), Complex(1.0, 0.0));
  EntireFunctionHandle series{1, e};
  ComplexVec w{Complex(1.0, 1.0)};
  CHECK(std::abs(handle_eval(series, w) - bargmann_series(e, w)) == 0.0);

  EntireFunctionHandle callable{1, std::function<Complex(const ComplexVec&)>(
                                       [](const ComplexVec& v) { return v[0] * v[0]; })};
  CHECK(std::abs(handle_eval(callable, w) - Complex(0.0, 2.0)) <= 1e-15);
}

TEST_CASE("projection fixes entire series") {
  HermiteExpansion e(1, 2);
  e.set(MultiIndex({2}), Complex(1.0, 0.0));
  EntireFunctionHandle handle{1, e};
  ComplexVec z{Complex(1.0, 0.5)};
  auto res = reproducing_project(handle, z);
  CHECK(res.radius_ok);
  Complex want = e_alpha(MultiIndex({2}), z);
  CHECK(std::abs(res.value - want) <= 1e-8 * std::abs(want));
  CHECK_THROWS_AS(reproducing_project(handle, z, -1.0), std::invalid_argument);
}

TEST_CASE("projection of the boxed exponential matches the closed form") {
  EntireFunctionHandle box{1, BoxLiftForm{}};
  for (Complex zval : {Complex(0.0, 0.0), Complex(1.0, 1.0), Complex(2.0, -1.0)}) {
    auto res = reproducing_project(box, {zval});
    Complex want = pi_a_box_closed_form({zval});
    CHECK(std::abs(res.value - want) <= 1e-6 * std::max(1.0, std::abs(want)));
  }
  CHECK(pi_a_box_closed_form({Complex(0.0, 0.0)}).real() == doctest::Approx(1.0 / kPi).epsilon(1e-12));
  Complex z2(2.0, 0.0);
  Complex want2 = (1.0 / kPi) * ((std::exp(z2) - 1.0) / z2) *
                  ((1.0 - std::exp(-Complex(0.0, 1.0) * z2)) / (Complex(0.0, 1.0) * z2));
  CHECK(std::abs(pi_a_box_closed_form({z2}) - want2) <= 1e-13);
}
