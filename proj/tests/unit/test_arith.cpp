#include <doctest.h>

#include <cmath>

#include "szeta/arith.hpp"
#include "szeta/errors.hpp"

using namespace szeta;

TEST_SUITE("arith") {
  TEST_CASE("primes in a window") {
    const auto w = arith::primes_in_range(10, 30);
    CHECK(w.primes == std::vector<std::uint64_t>{11, 13, 17, 19, 23, 29});
    CHECK(arith::primes_in_range(2, 1e6).size() == 78498);
    CHECK(arith::primes_in_range(1e9 - 100, 1e9).size() == 2);
    CHECK(arith::primes_in_range(24, 28).empty());
  }

  TEST_CASE("segmented sieve crosses segment boundaries") {
    const auto w = arith::primes_in_range(999'000, 1'001'000);
    for (auto p : w.primes) CHECK(arith::is_prime(p));
    CHECK(w.size() == 140);
  }

  TEST_CASE("von Mangoldt") {
    CHECK(arith::von_mangoldt(1) == 0.0);
    CHECK(arith::von_mangoldt(8) == doctest::Approx(std::log(2.0)));
    CHECK(arith::von_mangoldt(49) == doctest::Approx(std::log(7.0)));
    CHECK(arith::von_mangoldt(12) == 0.0);
    CHECK(arith::prime_power_base(243) == 3u);
    CHECK_FALSE(arith::prime_power_base(36).has_value());
    CHECK(arith::is_prime(1'000'000'007ULL));
    CHECK_FALSE(arith::is_prime(1'000'000'007ULL * 3));
  }

  TEST_CASE("squarefree support in ascending order") {
    const auto w = arith::window_from_primes({2, 3, 5});
    std::vector<std::uint64_t> ns;
    for (const auto& e : arith::squarefree_support(w, 10)) ns.push_back(e.n);
    CHECK(ns == std::vector<std::uint64_t>{1, 2, 3, 5, 6, 10});
    const auto all = arith::squarefree_support(w, std::nullopt);
    CHECK(all.size() == 8);
    CHECK(all.back().n == 30);
    CHECK(all.back().factors == std::vector<std::uint64_t>{2, 3, 5});
  }

  TEST_CASE("invalid windows") {
    CHECK_THROWS_AS(arith::window_from_primes({4}), PreconditionError);
    CHECK_THROWS_AS(arith::window_from_primes({5, 3}), PreconditionError);
    CHECK_THROWS_AS(arith::primes_in_range(2, 2e9), CapacityError);
  }

  TEST_CASE("prime log sum") {
    const auto w = arith::window_from_primes({2, 3});
    CHECK(arith::prime_log_sum(w) == doctest::Approx(std::log(2.0) / 2 + std::log(3.0) / 3));
  }
}
