#include <cmath>
#include <stdexcept>
#include <vector>

#include "bargkit/weights.hpp"
#include "doctest.h"

using namespace bargkit;

TEST_CASE("weight families evaluate their defining formulas") {
  ComplexVec one{Complex(1.0, 0.0)};
  ComplexVec diag{Complex(1.0, 1.0)};
  ComplexVec two{Complex(2.0, 0.0)};
  ComplexVec twoi{Complex(0.0, 2.0)};

  CHECK(weight_eval(GSWeight{0.5, 0.5, -1.0}, one) == doctest::Approx(std::exp(-0.5)).epsilon(1e-14));
  CHECK(weight_eval(FlatExpWeight{1.0}, diag) == doctest::Approx(std::exp(-1.5)).epsilon(1e-14));
  CHECK(weight_eval(QuadraticWeight{0.25}, two) == doctest::Approx(std::exp(1.0)).epsilon(1e-14));
  CHECK(weight_eval(PolyWeight{2.0}, twoi) == doctest::Approx(5.0).epsilon(1e-14));
  RadialWeight rad{[](double t) { return -t; }, "exp(-t)"};
  CHECK(weight_eval(rad, one) == doctest::Approx(std::exp(-0.5)).epsilon(1e-14));
  CHECK(weight_log_eval(PolyWeight{2.0}, twoi) == doctest::Approx(std::log(5.0)).epsilon(1e-14));
}

TEST_CASE("radial flags and validation") {
  CHECK(weight_is_radial(QuadraticWeight{0.3}));
  CHECK(weight_is_radial(PolyWeight{1.0}));
  CHECK(weight_is_radial(RadialWeight{[](double t) { return -t; }, "r"}));
  CHECK_FALSE(weight_is_radial(GSWeight{1.0, 1.0, 0.0}));
  CHECK_FALSE(weight_is_radial(FlatExpWeight{1.0}));

  CHECK_THROWS_AS(validate(WeightSpec(GSWeight{0.3, 1.0, 0.0})), std::invalid_argument);
  CHECK_THROWS_AS(validate(WeightSpec(FlatExpWeight{-1.0})), std::invalid_argument);
  CHECK_THROWS_AS(validate(WeightSpec(RadialWeight{})), std::invalid_argument);
}

TEST_CASE("closed-form sequence weights") {
  CHECK(theta_closed_exponential(0.5, 3, 1) == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(theta_closed_exponential(1.0, 1, 1) == doctest::Approx(0.5).epsilon(1e-14));
  CHECK(theta_closed_linear_exponential(0.5, 0, 1) == doctest::Approx(std::sqrt(2.0)).epsilon(1e-14));
  CHECK(theta_closed_linear_exponential(0.5, 1, 1) == doctest::Approx(std::sqrt(12.0)).epsilon(1e-14));
  CHECK(make_theta_exponential(1.0, 1)(MultiIndex({3})) ==
        doctest::Approx(theta_closed_exponential(1.0, 3, 1)).epsilon(1e-12));
  CHECK(make_theta_linear_exponential(2.0, 2)(MultiIndex({1, 2})) ==
        doctest::Approx(theta_closed_linear_exponential(2.0, 3, 2)).epsilon(1e-12));
}

TEST_CASE("radial integration reproduces the closed forms") {
  for (double h : {0.5, 2.0})
    for (int k : {0, 3, 10, 25}) {
      double want = theta_closed_exponential(h, k, 1);
      double got = theta_from_radial([h](double r) { return -h * r; }, k, 1);
      CHECK(got == doctest::Approx(want).epsilon(1e-8));
    }
  for (int k : {0, 5, 15}) {
    double want = theta_closed_linear_exponential(1.0, k, 1);
    double got = theta_from_radial([](double r) { return -std::sqrt(r); }, k, 1);
    CHECK(got == doctest::Approx(want).epsilon(1e-8));
  }
  double want2 = theta_closed_exponential(0.75, 4, 2);
  double got2 = theta_from_radial([](double r) { return -0.75 * r; }, MultiIndex({1, 3}), 2);
  CHECK(got2 == doctest::Approx(want2).epsilon(1e-8));
}

TEST_CASE("separable integration agrees with the exponential closed form") {
  auto profile = [](const std::vector<double>& r) { return -0.5 * (r[0] + r[1]); };
  double got = theta_from_separable(profile, MultiIndex({1, 2}));
  CHECK(got == doctest::Approx(theta_closed_exponential(0.5, 3, 2)).epsilon(1e-8));
}

TEST_CASE("exponential sequence weights dominate entire growth, decaying ones do not") {
  CHECK(theta_dominates_entire_growth(make_theta_exponential(1.0, 1), 1, 40));
  SequenceWeight shrinking = [](const MultiIndex& a) { return std::exp(-0.1 * a.order() * a.order()); };
  CHECK_FALSE(theta_dominates_entire_growth(shrinking, 1, 40));
}

TEST_CASE("moderateness verdicts separate polynomial from gaussian growth") {
  auto self = check_moderate(PolyWeight{2.0}, PolyWeight{2.0}, 1, 2.0, 4000, 7);
  CHECK(self.holds);
  CHECK(std::isfinite(self.log_C));
  CHECK_FALSE(self.witness.empty());

  auto gauss = check_moderate(QuadraticWeight{0.0}, PolyWeight{2.0}, 1, 2.0, 2000, 7);
  CHECK_FALSE(gauss.holds);
}

TEST_CASE("subadditive exponent gives a submultiplicative weight") {
  auto log_w = [](const ComplexVec& z) { return std::abs(z[0].real()) + std::abs(z[0].imag()); };
  auto rep = check_moderate_log(log_w, log_w, 1, 3.0, 4000, 11);
  CHECK(rep.holds);
  CHECK(rep.log_C <= 1e-12);
}

TEST_CASE("gaussian sandwich verdicts") {
  auto poly = check_gauss_sandwich(PolyWeight{3.0}, 0.125, 3.0);
  CHECK(poly.holds);
  CHECK(poly.min_workable_c == doctest::Approx(0.125));

  auto quad_small = check_gauss_sandwich(QuadraticWeight{0.25}, 0.125, 3.0);
  CHECK_FALSE(quad_small.holds);
  auto quad_ok = check_gauss_sandwich(QuadraticWeight{0.25}, 0.5, 3.0);
  CHECK(quad_ok.holds);
  CHECK(quad_ok.min_workable_c == doctest::Approx(0.25));

  auto flat = check_gauss_sandwich(FlatExpWeight{1.0}, 0.25, 3.0);
  CHECK(flat.holds);

  CHECK_THROWS_AS(check_gauss_sandwich(PolyWeight{1.0}, -0.5, 3.0), std::invalid_argument);
}

TEST_CASE("monte carlo simplex moments match the factorial ratio") {
  auto rep = dirichlet_simplex_identity(MultiIndex({1, 1}), 200000, 7);
  CHECK(rep.reference == doctest::Approx(1.0 / 6.0).epsilon(1e-14));
  CHECK(rep.within_3se);
  CHECK(std::abs(rep.estimate - rep.reference) <= 0.01);

  auto rep2 = dirichlet_simplex_identity(MultiIndex({2, 1}), 200000, 7);
  CHECK(rep2.reference == doctest::Approx(1.0 / 12.0).epsilon(1e-14));
  CHECK(rep2.within_3se);

  auto trivial = dirichlet_simplex_identity(MultiIndex({0, 0}), 1000, 3);
  CHECK(trivial.within_3se);
  CHECK(trivial.estimate == doctest::Approx(1.0).epsilon(1e-12));
}
