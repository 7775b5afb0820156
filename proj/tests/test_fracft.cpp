#include <cmath>
#include <complex>
#include <stdexcept>
#include <vector>

#include "bargkit/fracft.hpp"
#include "doctest.h"

using namespace bargkit;

namespace {

HermiteExpansion sample_expansion() {
  HermiteExpansion e(1, 6);
  e.set(MultiIndex({0}), Complex(1.0, 0.0));
  e.set(MultiIndex({1}), Complex(0.0, 0.5));
  e.set(MultiIndex({3}), Complex(-0.25, 0.75));
  e.set(MultiIndex({6}), Complex(0.125, 0.0));
  return e;
}

bool identical(const HermiteExpansion& a, const HermiteExpansion& b) {
  if (a.support_size() != b.support_size()) return false;
  for (const auto& [idx, c] : a.coeffs())
    if (b.coeff(idx) != c) return false;
  return true;
}

}  // namespace

TEST_CASE("integer orders hit the exact phase table") {
  CHECK(fracft_phase({1.0}, MultiIndex({0})) == Complex(1.0, 0.0));
  CHECK(fracft_phase({1.0}, MultiIndex({1})) == Complex(0.0, -1.0));
  CHECK(fracft_phase({1.0}, MultiIndex({2})) == Complex(-1.0, 0.0));
  CHECK(fracft_phase({1.0}, MultiIndex({3})) == Complex(0.0, 1.0));
  CHECK(fracft_phase({1.0}, MultiIndex({4})) == Complex(1.0, 0.0));
  CHECK(fracft_phase({2.0}, MultiIndex({1})) == Complex(-1.0, 0.0));
  CHECK(fracft_phase({1.0, 2.0}, MultiIndex({1, 1})) == Complex(0.0, 1.0));
  CHECK_THROWS_AS(fracft_phase({1.0, 2.0}, MultiIndex({1})), std::invalid_argument);
}

TEST_CASE("fractional orders evaluate the continuous phase") {
  Complex got = fracft_phase({0.5}, MultiIndex({1}));
  Complex want = std::polar(1.0, -std::acos(-1.0) / 4.0);
  CHECK(std::abs(got - want) <= 1e-15);
}

TEST_CASE("transforming basis elements flips exact signs") {
  HermiteExpansion e3(1, 4);
  e3.set(MultiIndex({3}), Complex(0.5, -0.25));
  auto out = fractional_ft(e3, {2.0});
  CHECK(out.coeff(MultiIndex({3})) == Complex(-0.5, 0.25));

  HermiteExpansion ground(1, 2);
  ground.set(MultiIndex({0}), Complex(0.7, 0.1));
  CHECK(identical(fractional_ft(ground, {0.37}), ground));
  CHECK_THROWS_AS(fractional_ft(ground, {1.0, 1.0}), std::invalid_argument);
}

TEST_CASE("integer group law and periodicity are bitwise") {
  auto e = sample_expansion();
  CHECK(identical(fractional_ft(fractional_ft(e, {1.0}), {2.0}), fractional_ft(e, {3.0})));
  CHECK(identical(fractional_ft(fractional_ft(e, {3.0}), {-2.0}), fractional_ft(e, {1.0})));
  CHECK(identical(fractional_ft(e, {4.0}), e));
}

TEST_CASE("fractional group law holds to rounding") {
  auto e = sample_expansion();
  auto split = fractional_ft(fractional_ft(e, {0.3}), {0.7});
  auto direct = fractional_ft(e, {1.0});
  double worst = 0.0;
  for (const auto& [idx, c] : direct.coeffs())
    worst = std::max(worst, std::abs(split.coeff(idx) - c));
  CHECK(worst <= 1e-15);
}

TEST_CASE("oscillator commutation is exact on the integer subgroup") {
  auto e = sample_expansion();
  auto integer = verify_commutes_with_H(e, {2.0}, 3);
  CHECK(integer.exact);
  CHECK(integer.max_abs_diff == 0.0);

  auto fractional = verify_commutes_with_H(e, {0.3}, 3);
  CHECK(fractional.max_abs_diff <= 1e-10);
}

TEST_CASE("modulation norms are invariant for radial weights") {
  HermiteExpansion e(1, 4);
  e.set(MultiIndex({0}), Complex(1.0, 0.0));
  e.set(MultiIndex({1}), Complex(0.0, 1.0));
  auto grid = default_isometry_grid(1);
  auto rep = verify_isometry(e, {1.0}, QuadraticWeight{0.5}, 2.0, grid);
  CHECK(rep.norm_before > 0.0);
  CHECK(rep.rel_deviation <= 1e-6);

  auto single = verify_isometry(sample_expansion(), {1.7}, PolyWeight{2.0}, 2.0, grid);
  CHECK(single.rel_deviation <= 1e-4);

  CHECK_THROWS_AS(verify_isometry(e, {1.0}, GSWeight{1.0, 1.0, 0.5}, 2.0, grid),
                  std::invalid_argument);
  CHECK_THROWS_AS(verify_isometry(e, {1.0}, FlatExpWeight{1.0}, 2.0, grid),
                  std::invalid_argument);
}
