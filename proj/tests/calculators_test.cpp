#include <cmath>
#include <string>

#include "doctest.h"
#include "fbnf/calculators.hpp"
#include "fbnf/engine.hpp"
#include "fbnf/oracle.hpp"
#include "fbnf/validate.hpp"
#include "support/arithmetic.hpp"

using namespace fbnf;
using fbnf::testing::ExpressionGenerator;
using fbnf::testing::shunting_yard;

namespace {

Grammar product(const char* name) { return build_product(*product_preset(name)); }

}  // namespace

TEST_CASE("pool") {
  Grammar pool = calculator_pool();
  CHECK(pool.start() == "expr");
  CHECK(validate_grammar(pool).empty());
  CHECK(detect_left_recursion(pool).empty());
  CHECK(pool_features(pool) == std::vector<std::string>{"financial", "hexadecimal", "scientific"});
}

TEST_CASE("presets") {
  CHECK(product_preset_names() == std::vector<std::string>{"basic", "scientific", "financial", "hex"});
  CHECK(product_preset("basic")->enabled.empty());
  CHECK(product_preset("hex")->enabled == std::set<std::string>{"hexadecimal"});
  CHECK_FALSE(product_preset("graphing").has_value());
  for (const FeatureConfig& c :
       {FeatureConfig{"b", {}}, FeatureConfig{"s", {"scientific"}}, FeatureConfig{"f", {"financial"}},
        FeatureConfig{"h", {"hexadecimal"}}, FeatureConfig{"sf", {"scientific", "financial"}}}) {
    CAPTURE(c.product_name);
    CHECK(validate_grammar(build_product(c)).empty());
  }
}

TEST_CASE("basic") {
  Grammar g = product("basic");
  CHECK(parse_full(g, "12.5*2").value() == 25.0);
  CHECK(parse_full(g, "1+2*3").value() == 7.0);
  CHECK(parse_full(g, "(1+2)*3").value() == 9.0);
  CHECK(parse_full(g, "8-3-2").value() == 3.0);
  CHECK(parse_full(g, "8/4/2").value() == 1.0);
  CHECK(parse_full(g, "0.1+0.2").value() == 0.1 + 0.2);
  CHECK(parse_full(g, "1/0").value() == INFINITY);
  CHECK(parse_full(g, "1+").is_syntax_error());
  CHECK(parse_full(g, "").is_syntax_error());
  CHECK(parse_full(g, "1 + 2").is_syntax_error());
  CHECK(parse_full(g, "-1").is_syntax_error());
  CHECK(parse_full(g, "sin(0)+1").is_syntax_error());
  CHECK(parse_full(g, "10%").is_syntax_error());
  CHECK(parse_full(g, "FF").is_syntax_error());
  CHECK_FALSE(parse_full(g, "1+").budget_exceeded());
}

TEST_CASE("scientific") {
  Grammar g = product("scientific");
  CHECK(parse_full(g, "sin(0)+1").value() == 1.0);
  CHECK(parse_full(g, "cos(0)").value() == 1.0);
  CHECK(parse_full(g, "tan(1)").value() == std::tan(1.0));
  CHECK(parse_full(g, "2*sin(cos(0)-1)").value() == 0.0);
  CHECK(parse_full(g, "sin0").is_syntax_error());
  CHECK(parse_full(g, "10%").is_syntax_error());
}

TEST_CASE("financial") {
  Grammar g = product("financial");
  // Value frozen after checking it against the eager oracle.
  REQUIRE(oracle_parse(g, "50+10%") == 50.1);
  CHECK(parse_full(g, "50+10%").value() == 50.1);
  CHECK(parse_full(g, "10%").value() == 0.1);
  CHECK(parse_full(g, "200*5%").value() == 10.0);
  CHECK(parse_full(g, "(50+50)%").value() == 1.0);
  CHECK(parse_full(g, "10%%").is_syntax_error());
  CHECK(parse_full(g, "%").is_syntax_error());
}

TEST_CASE("hex") {
  Grammar g = product("hex");
  CHECK(parse_full(g, "FF+1").value() == 256.0);
  CHECK(parse_full(g, "10").value() == 16.0);
  CHECK(parse_full(g, "A*(B-1)").value() == 100.0);
  CHECK(parse_full(g, "ff").is_syntax_error());
  CHECK(parse_full(g, "G").is_syntax_error());
  // Features only add rules, so the decimal fraction rules are still there;
  // the integer part is read as hex.
  CHECK(parse_full(g, "1.5").value() == 1.5);
  CHECK(parse_full(g, "10.5").value() == 10.5);
}

TEST_CASE("scientific and financial together") {
  Grammar g = build_product({"sf", {"scientific", "financial"}});
  CHECK(parse_full(g, "sin(0)").value() == 0.0);
  CHECK(parse_full(g, "10%").value() == 0.1);
  CHECK(parse_full(g, "sin(0)%").value() == 0.0);
}

TEST_CASE("basic product agrees with shunting-yard on random expressions") {
  Grammar g = product("basic");
  ExpressionGenerator integers(7);
  ExpressionGenerator decimals(8, true);
  for (int i = 0; i < 1000; ++i) {
    const std::string text = (i % 2 ? decimals : integers).next();
    CAPTURE(text);
    const auto expected = shunting_yard(text);
    REQUIRE(expected.has_value());
    const auto got = parse_full(g, text);
    REQUIRE(got.ok());
    CHECK((got.value() == *expected || (std::isnan(got.value()) && std::isnan(*expected))));
  }
}
