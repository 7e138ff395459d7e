#include <doctest.h>

#include <sstream>

#include "szeta/errors.hpp"
#include "szeta/io.hpp"

using namespace szeta;

TEST_SUITE("io") {
  TEST_CASE("config parsing") {
    std::istringstream in("# run settings\nT = 1e6\n  seed=42 # inline\n\nprimes = 3, 5,7\nflag = yes\n");
    const auto c = Config::parse(in);
    CHECK(c.get_double("T", 0) == 1e6);
    CHECK(c.get_u64("seed", 0) == 42);
    CHECK(c.get_doubles("primes", {}) == std::vector<double>{3, 5, 7});
    CHECK(c.get_bool("flag", false));
    CHECK(c.get_double("missing", 2.5) == 2.5);
  }

  TEST_CASE("config errors carry the line") {
    std::istringstream bad("T = 1\nnot a pair\n");
    try {
      Config::parse(bad);
      FAIL("expected ParseError");
    } catch (const ParseError& e) {
      CHECK(e.line() == 2);
    }
    std::istringstream dup("a = 1\na = 2\n");
    CHECK_THROWS_AS(Config::parse(dup), ParseError);
    std::istringstream num("\nT = 1e6x\n");
    const auto c = Config::parse(num);
    try {
      c.get_double("T", 0);
      FAIL("expected ParseError");
    } catch (const ParseError& e) {
      CHECK(e.line() == 2);
    }
    CHECK_THROWS_AS(c.get_u64("T", 0), ParseError);
    CHECK_THROWS_AS(Config::load("/nonexistent/file.cfg"), PreconditionError);
  }

  TEST_CASE("CSV and JSON carry the same record") {
    RunResult r;
    r.command = "demo";
    r.inputs = {{"T", 1e6}, {"label", "a,b"}};
    r.columns = {"t", "S", "ok"};
    r.add_row({1.5, -0.25, true});
    r.add_row({2.5, 0.125, false});
    r.summary = {{"mean", 0.5}};
    CHECK_THROWS_AS(r.add_row({1.0}), PreconditionError);

    std::ostringstream csv;
    write_csv(csv, r);
    CHECK(csv.str() ==
          "# szeta demo format=1\n# input T=1e+06\n# input label=\"a,b\"\n# summary mean=0.5\n"
          "t,S,ok\n1.5,-0.25,true\n2.5,0.125,false\n");

    std::ostringstream js;
    write_json(js, r);
    const auto j = nlohmann::ordered_json::parse(js.str());
    CHECK(j["format"] == kOutputVersion);
    CHECK(j["command"] == "demo");
    CHECK(j["columns"] == nlohmann::json::array({"t", "S", "ok"}));
    CHECK(j["rows"][1][1] == 0.125);
    CHECK(j["summary"]["mean"] == 0.5);
    CHECK(j["inputs"].begin().key() == "T");
  }
}
