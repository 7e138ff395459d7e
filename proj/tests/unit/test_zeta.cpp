#include <doctest.h>

#include <fstream>
#include <sstream>

#include "szeta/errors.hpp"
#include "szeta/s_function.hpp"
#include "szeta/zeros.hpp"
#include "szeta/zeta.hpp"

using namespace szeta;

// Reference values below were computed with mpmath at 30 digits.
TEST_SUITE("zeta_core") {
  TEST_CASE("theta") {
    CHECK(rs_theta(100.0) == doctest::Approx(87.9721652317872196).epsilon(1e-14));
    CHECK(rs_theta(1e4) == doctest::Approx(31861.9238308358209).epsilon(1e-14));
  }

  TEST_CASE("zeta off and on the critical line") {
    struct Case {
      cplx s, z;
    };
    const Case cases[] = {
        {{0.5, 25}, {0.00498459336403567538, -0.0140123019625833830}},
        {{2, 3}, {0.798021985146275721, -0.113744308052938500}},
        {{0.3, 20}, {0.268994415753986910, -1.28842341804830381}},
        {{0.75, 1000}, {0.833713130003152027, 0.291623424633592488}},
        {{0.5, 10000}, {-0.339373802638834458, -0.0370915059732060315}},
        {{1.5, -7}, {1.02528319875293036, -0.230533761518971784}},
    };
    for (const auto& c : cases) {
      CAPTURE(c.s);
      CHECK(std::abs(zeta(c.s) - c.z) < 1e-9);
    }
  }

  TEST_CASE("Hardy Z") {
    CHECK(hardy_z(1000.0) == doctest::Approx(0.997794637521586614).epsilon(1e-9));
    CHECK(hardy_z(100000.5) == doctest::Approx(4.63404259499813240).epsilon(1e-9));
  }

  TEST_CASE("Euler-Maclaurin and Riemann-Siegel agree above the crossover") {
    for (double t : {1500.0, 4321.5}) {
      CAPTURE(t);
      CHECK(std::abs(zeta_em({0.5, t}) - zeta({0.5, t})) < 1e-8);
    }
  }

  TEST_CASE("S(t) by both methods") {
    CHECK(s_by_argument(100.0) == doctest::Approx(-0.00240990227181677983).epsilon(1e-8));
    CHECK(s_by_argument(1000.0) == doctest::Approx(0.383758055576300685).epsilon(1e-8));
    CHECK(s_by_local_count(5000.25) == doctest::Approx(0.403062752854116651).epsilon(1e-8));
    const auto c = critical_sample(1000.0);
    CHECK(c.n_t == 649.0);
    CHECK(std::abs(c.s_arg - c.s_count) < 1e-6);
    CHECK(zero_count_by_argument(100.0) == 29);
  }

  TEST_CASE("S is odd with S(0) = 0") {
    CHECK(S_of_t(0.0) == 0.0);
    CHECK(S_of_t(-100.0) == doctest::Approx(-S_of_t(100.0)));
  }

  TEST_CASE("log zeta branch") {
    const cplx a = log_zeta({0.6, 50});
    CHECK(std::abs(a - cplx(-1.08858676983009795, 1.37604987002598157)) < 1e-9);
    const cplx b = log_zeta({0.8, 500});
    CHECK(std::abs(b - cplx(0.130459188021962989, -1.03586704130398167)) < 1e-9);
    CHECK(std::abs(log_zeta({0.6, -50}) - std::conj(a)) < 1e-12);
    CHECK_THROWS_AS(log_zeta({0.6, 0.0}), PreconditionError);
  }

  TEST_CASE("zeros against the published table") {
    const auto table = load_zero_table(SZETA_TEST_DATA "/zeros_first100.txt");
    REQUIRE(table.size() == 100);
    const auto found = find_zeros(10.0, 70.0);
    REQUIRE(found.size() == 17);
    for (std::size_t i = 0; i < found.size(); ++i) CHECK(std::abs(found[i] - table[i].gamma) < 1e-6);
    const auto list = build_zero_list(60.0, 80.0);
    CHECK(list.count(60.0) == 13.0);
    CHECK(list.count(table[20].gamma) == 20.5);
  }

  TEST_CASE("zero table parsing") {
    std::istringstream ok("# header\r\n14.13\r\n21.02 # tail comment\n\n25.01\n");
    CHECK(parse_zero_table(ok).size() == 3);
    std::istringstream bad("21.0\n14.1\n");
    CHECK_THROWS_AS(parse_zero_table(bad), ParseError);
    std::istringstream junk("14.1x\n");
    CHECK_THROWS_AS(parse_zero_table(junk), ParseError);
    std::istringstream syn("100 0.7\n200 0.9\n");
    const auto z = parse_synthetic_zeros(syn);
    CHECK(z[1].beta == 0.9);
  }

  TEST_CASE("preconditions") {
    CHECK_THROWS_AS(zeta({1.0, 0.0}), PreconditionError);
    CHECK_THROWS_AS(find_zeros(10.0, 2e7), PreconditionError);
  }
}
