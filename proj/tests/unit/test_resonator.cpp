#include <doctest.h>

#include <cmath>
#include <numbers>

#include "szeta/errors.hpp"
#include "szeta/resonator.hpp"

using namespace szeta;

namespace {

// Brute-force enumeration of the squarefree support below N, independent of
// the library's streaming enumeration.
std::vector<std::vector<std::uint64_t>> subsets_below(const std::vector<std::uint64_t>& primes, std::uint64_t N) {
  std::vector<std::vector<std::uint64_t>> out;
  for (std::uint64_t mask = 0; mask < (1ULL << primes.size()); ++mask) {
    std::uint64_t n = 1;
    std::vector<std::uint64_t> f;
    bool fits = true;
    for (std::size_t i = 0; i < primes.size() && fits; ++i)
      if (mask >> i & 1) {
        n *= primes[i];
        f.push_back(primes[i]);
        fits = n <= N;
      }
    if (fits) out.push_back(f);
  }
  return out;
}

Rational f2(const std::vector<std::uint64_t>& factors, const Rational& A2) {
  Rational r = 1;
  for (auto p : factors) r *= A2 / Rational(p);
  return r;
}

}  // namespace

TEST_SUITE("resonator") {
  TEST_CASE("values of f") {
    const auto c = make_toy_config({3, 5}, Rational(1), 15);
    CHECK(f_value(c, 1) == 1.0);
    CHECK(f_value(c, 15) == doctest::Approx(1.0 / std::sqrt(15.0)));
    CHECK(f_value(c, 9) == 0.0);
    CHECK(f_value(c, 7) == 0.0);
    CHECK(f_squared_exact(c, 15) == Rational(1, 15));
    CHECK(f_square_sum_exact(c) == Rational(8, 5));
    CHECK(resonator_poly(c).size() == 4);
  }

  TEST_CASE("fourth moment of the single-prime resonator") {
    const auto c = make_toy_config({3}, Rational(1), 3);
    CHECK(fourth_moment_diag_exact(c) == Rational(22, 9));
    CHECK(fourth_moment_product_exact(c) == Rational(22, 9));
    CHECK(fourth_moment_diag(c) == doctest::Approx(22.0 / 9.0));
  }

  TEST_CASE("fourth moment below the product bound") {
    const auto c = make_toy_config({3, 5, 7, 11}, Rational(3, 2), 100);
    CHECK(fourth_moment_diag_exact(c) <= fourth_moment_product_exact(c));
    CHECK(fourth_moment_diag(c) == doctest::Approx(fourth_moment_diag_exact(c).convert_to<double>()));
  }

  TEST_CASE("m2 core against double enumeration") {
    const std::vector<std::uint64_t> primes{3, 5, 7, 11, 13};
    const Rational A2(7, 4);
    const std::uint64_t N = 400;
    const auto c = make_toy_config(primes, A2, N);
    std::vector<Rational> w{Rational(1, 2), Rational(2, 3), Rational(1), Rational(3, 4), Rational(1, 5)};
    Rational oracle = 0;
    for (const auto& f : subsets_below(primes, N))
      for (auto p : f) oracle += f2(f, A2) * w[std::find(primes.begin(), primes.end(), p) - primes.begin()];
    CHECK(m2_core_exact(c, w) * A2 == oracle);
    std::vector<double> wd;
    for (const auto& x : w) wd.push_back(x.convert_to<double>());
    const Rational core = oracle / A2;
    CHECK(m2_core(c, wd) == doctest::Approx(core.convert_to<double>()).epsilon(1e-12));
  }

  TEST_CASE("Rankin tail") {
    const auto c = make_toy_config({3, 5}, Rational(1), 5);
    const auto r = rankin_tail(c);
    REQUIRE(r.exact_rational.has_value());
    CHECK(*r.exact_rational == Rational(1, 24));
    CHECK(r.exact_ratio <= r.bound);
    for (double alpha : {0.05, 0.3, 1.0}) CHECK(rankin_tail(c, alpha).exact_ratio <= rankin_tail(c, alpha).bound);
  }

  TEST_CASE("divisor mass") {
    const auto c = make_toy_config({3, 5}, Rational(1), 15, 3.0, 6.0);
    const auto d = divisor_mass(c);
    CHECK(d.D < 1.0);
    // D < 1 leaves only n = 1 in the low-omega set
    REQUIRE(d.exact_rational.has_value());
    CHECK(*d.exact_rational == Rational(5, 8));
    CHECK(d.exact_ratio <= d.bound);
  }

  TEST_CASE("restrictions") {
    auto c = make_toy_config({3, 5, 7}, Rational(4), 1000);
    const auto rep = check_restrictions(c);
    CHECK_FALSE(rep.all_hold());
    CHECK(rep.failing().find("f<=1") != std::string::npos);
    CHECK_THROWS_AS(require_restrictions(c), RangeError);
  }

  TEST_CASE("parameter choice") {
    const double T = 1e6;
    const double V = std::pow(std::log(T), 0.3);
    CHECK_THROWS_AS(choose_parameters(V, T, 0.3), RangeError);
    BoundConstants k;
    k.kappa = 2.0;
    const auto pc = choose_parameters(V, T, 0.3, k);
    CHECK(pc.config.P == doctest::Approx(std::pow(std::log(T), 2.0 / 3.0)));
    CHECK(pc.config.Q == doctest::Approx(std::pow(std::log(T), 2.0 / 3.0 + 0.15)));
    CHECK(pc.config.N == 100);
    CHECK(pc.config.A == doctest::Approx(V));
    CHECK_FALSE(pc.report.all_hold());
  }

  TEST_CASE("bump function") {
    CHECK(bump::phi(1.5) == 1.0);
    CHECK(bump::phi(0.9) == 0.0);
    CHECK(bump::phi(2.1) == 0.0);
    CHECK(bump::phi(1.125) == doctest::Approx(0.5));
    CHECK(bump::mass() == doctest::Approx(0.75).epsilon(1e-12));
  }

  TEST_CASE("first moment") {
    auto c = make_toy_config({3, 5}, Rational(1), 15);
    c.T = 1e4;
    CHECK(m1(c) == doctest::Approx(1e4 * 0.75 * 1.6).epsilon(1e-12));
    const double numeric = m1(c, MomentMode::numeric);
    CHECK(std::abs(numeric - m1(c)) / m1(c) < 1e-2);
  }

  TEST_CASE("moment report and measure bound") {
    auto c = make_toy_config({3, 5, 7, 11}, Rational(9, 4), 1155);
    c.T = 1e6;
    const KernelParams k{0.3, std::log(std::log(1e6))};
    const auto r = ratio_report(c, k);
    CHECK(r.ratio == doctest::Approx(r.m2_main / r.m1));
    CHECK(r.ratio > 0.0);
    const double V = r.ratio / 8.0;
    const double expect = r.m2_main * r.m2_main / (std::pow(std::log(1e6), 2) * r.fourth_diag * 1e6 * r.bump_mass);
    CHECK(measure_lower_bound(r, V, std::log(1e6)) == doctest::Approx(expect).epsilon(1e-12));
    CHECK_THROWS_AS(measure_lower_bound(r, 2.0 * V, std::log(1e6)), RatioTooSmallError);
  }

  TEST_CASE("exceptional set bound") {
    CHECK(exceptional_measure_bound(2.0, 1e6, 3.0, 1.0) ==
          doctest::Approx(1e6 * std::exp(-std::sqrt(2.0 * std::log(1e6) / 3.0))));
  }
}
