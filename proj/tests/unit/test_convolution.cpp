#include <doctest.h>

#include <cmath>
#include <numbers>

#include "szeta/convolution.hpp"
#include "szeta/errors.hpp"

using namespace szeta;

TEST_SUITE("convolution") {
  TEST_CASE("D coefficients") {
    const KernelParams k{0.3, 3.0};
    const auto D = build_D_coefficients(k);
    std::vector<std::uint64_t> ns;
    for (const auto& t : D.terms()) ns.push_back(t.n);
    CHECK(ns == std::vector<std::uint64_t>{4, 5, 7, 8, 9, 11, 13, 16, 17});
    const double expect = omega_hat((std::log(5.0) - 2.0) / 0.9) / std::sqrt(5.0) / (2.0 * std::numbers::pi);
    CHECK(D.terms()[1].coeff == doctest::Approx(expect));
    // Lambda(8) / log 8 = 1/3
    const double e8 = omega_hat((std::log(8.0) - 2.0) / 0.9) / std::sqrt(8.0) / (6.0 * std::numbers::pi);
    CHECK(D.terms()[3].coeff == doctest::Approx(e8));
    CHECK_THROWS_AS(build_D_coefficients({0.3, 50.0}), CapacityError);
  }

  TEST_CASE("zeros bound") {
    const KernelParams k{0.3, 3.0};
    CHECK(zeros_bound(k, 0.0, 10.0) == 1.0);
    CHECK(zeros_bound(k, 0.2, 10.0, 2.0) == doctest::Approx(2.0 * (0.04 * std::exp(0.6) * 30.0 + 1.0)));
    CHECK_THROWS_AS(zeros_bound(k, 0.6, 10.0), PreconditionError);
  }

  TEST_CASE("hypothetical zeros") {
    CHECK_THROWS_AS(HypotheticalZeroSet({{0.5, 10.0}}), PreconditionError);
    CHECK_THROWS_AS(HypotheticalZeroSet({{0.7, -1.0}}), PreconditionError);
    const KernelParams k{0.3, 3.0};
    CHECK(zeros_contribution(100.0, k, HypotheticalZeroSet{}) == 0.0);
    const HypotheticalZeroSet one({{0.7, 100.0}});
    const double near = zeros_contribution(100.0, k, one);
    const double far = zeros_contribution(400.0, k, one);
    CHECK(std::abs(near) > 100.0 * std::abs(far));
    CHECK(zero_contribution_envelope(0.0, 0.2, k) >= std::abs(near) - 1e-9);
  }

  TEST_CASE("zeros constant calibration") {
    const KernelParams k{0.3, 2.6};
    const double thetas[] = {0.1, 0.3};
    const auto cal = calibrate_zeros_constant(k, std::log(1e4), thetas);
    CHECK(cal.C_z > 0.0);
    CHECK(cal.C_z < 10.0);
    CHECK(cal.zeros_per_configuration > 100);
  }

  TEST_CASE("smoothing a constant profile") {
    const KernelParams k{0.3, 3.0, KernelSign::minus};
    const double breaks[] = {0.5};
    const auto r = smoothed_profile([](double) { return 1.0; }, breaks, 0.0, k, 3000.0, 1e-9);
    // int s K = s * hat K(0) = 1
    CHECK(r.value == doctest::Approx(1.0).epsilon(1e-3));
    CHECK(r.ordinates_in_window == 1);
  }

  TEST_CASE("smoothed S tracks D") {
    const double T = 1e4;
    const KernelParams k{0.3, std::log(std::log(T))};
    const double t = 1.5 * T + 0.37;
    const auto sm = smoothed_S(t, k, std::log(T));
    const double D = build_D_coefficients(k).eval_cos(t);
    CHECK(sm.ordinates_in_window > 0);
    CHECK(std::abs(sm.value - D) <= 10.0 * std::pow(std::log(T), 0.15));
    CHECK_THROWS_AS(smoothed_S(5.0, k, 10.0), PreconditionError);
  }

  TEST_CASE("smoothed log zeta identity") {
    const KernelParams k{0.3, 3.0};
    const auto r = lemma1_check(0.75, 30.0, k, {}, 1e-5);
    CHECK(r.residual < 1e-4);
    CHECK(std::abs(r.pole_term) > 0.0);
    CHECK_THROWS_AS(lemma1_check(0.4, 30.0, k), PreconditionError);
  }
}
