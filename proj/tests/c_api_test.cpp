#include <cstring>
#include <string>

#include "doctest.h"
#include "fbnf.h"

namespace {

struct Product {
  fbnf_config* config = nullptr;
  fbnf_grammar* grammar = nullptr;

  explicit Product(const char* preset) {
    REQUIRE(fbnf_config_preset(preset, &config) == FBNF_OK);
    REQUIRE(fbnf_product_build(config, &grammar) == FBNF_OK);
  }
  ~Product() {
    fbnf_grammar_free(grammar);
    fbnf_config_free(config);
  }

  fbnf_status eval(const std::string& text, double* v) const {
    return fbnf_grammar_eval(grammar, text.data(), text.size(), v);
  }
};

std::string format(double v) {
  char buf[64];
  const size_t n = fbnf_format_value(v, buf, sizeof buf);
  REQUIRE(n < sizeof buf);
  return buf;
}

}  // namespace

TEST_CASE("evaluating through a preset") {
  Product basic("basic");
  double v = 0;
  CHECK(basic.eval("1+2*3", &v) == FBNF_OK);
  CHECK(v == 7.0);
  CHECK(basic.eval("1+", &v) == FBNF_SYNTAX_ERROR);
  CHECK(std::string(fbnf_last_error()) == "Syntax Error");
  CHECK(basic.eval("sin(0)", &v) == FBNF_SYNTAX_ERROR);
  CHECK(basic.eval("", &v) == FBNF_SYNTAX_ERROR);

  Product scientific("scientific");
  CHECK(scientific.eval("sin(0)", &v) == FBNF_OK);
  CHECK(v == 0.0);

  Product hex("hex");
  CHECK(hex.eval("FF+1", &v) == FBNF_OK);
  CHECK(v == 256.0);
}

TEST_CASE("input is length-delimited") {
  Product basic("basic");
  const char text[] = "12+3garbage";
  double v = 0;
  CHECK(fbnf_grammar_eval(basic.grammar, text, 4, &v) == FBNF_OK);
  CHECK(v == 15.0);
}

TEST_CASE("configs") {
  const std::string text = "product mine\nfeature scientific\nfeature financial\nfeature financial\n";
  fbnf_config* config = nullptr;
  REQUIRE(fbnf_config_parse(text.data(), text.size(), &config) == FBNF_OK);
  CHECK(std::string(fbnf_config_product(config)) == "mine");
  REQUIRE(fbnf_config_feature_count(config) == 2);
  CHECK(std::string(fbnf_config_feature(config, 0)) == "financial");
  CHECK(std::string(fbnf_config_feature(config, 1)) == "scientific");
  CHECK(fbnf_config_feature(config, 2) == nullptr);
  CHECK(fbnf_config_warning_count(config) == 1);
  CHECK(fbnf_config_warning(config, 0) != nullptr);

  fbnf_grammar* grammar = nullptr;
  REQUIRE(fbnf_product_build(config, &grammar) == FBNF_OK);
  double v = 0;
  CHECK(fbnf_grammar_eval(grammar, "sin(0)+10%", 10, &v) == FBNF_OK);
  CHECK(v == 0.1);
  fbnf_grammar_free(grammar);
  fbnf_config_free(config);

  fbnf_config* bad = nullptr;
  CHECK(fbnf_config_parse("feature x\n", 10, &bad) == FBNF_MALFORMED_CONFIG);
  CHECK(bad == nullptr);
  CHECK(std::string(fbnf_last_error()).find("line 1") != std::string::npos);
  CHECK(fbnf_config_preset("graphing", &bad) == FBNF_UNKNOWN_PRODUCT);
}

TEST_CASE("pool features") {
  REQUIRE(fbnf_pool_feature_count() == 3);
  CHECK(std::string(fbnf_pool_feature(0)) == "financial");
  CHECK(std::string(fbnf_pool_feature(1)) == "hexadecimal");
  CHECK(std::string(fbnf_pool_feature(2)) == "scientific");
  CHECK(fbnf_pool_feature(3) == nullptr);
}

TEST_CASE("checking a product") {
  fbnf_config* config = nullptr;
  REQUIRE(fbnf_config_preset("financial", &config) == FBNF_OK);
  fbnf_diagnostics* diags = nullptr;
  REQUIRE(fbnf_product_check(config, &diags) == FBNF_OK);
  CHECK(fbnf_diagnostics_count(diags) == 0);
  CHECK(fbnf_diagnostics_error_count(diags) == 0);
  CHECK(fbnf_diagnostic_code(diags, 0) == nullptr);
  fbnf_diagnostics_free(diags);
  fbnf_config_free(config);
}

TEST_CASE("describe truncates safely") {
  Product basic("basic");
  const size_t full = fbnf_grammar_describe(basic.grammar, nullptr, 0);
  CHECK(full > 100);
  char small[16];
  CHECK(fbnf_grammar_describe(basic.grammar, small, sizeof small) == full);
  CHECK(std::strlen(small) == sizeof small - 1);
  std::string all(full + 1, '\0');
  fbnf_grammar_describe(basic.grammar, all.data(), all.size());
  CHECK(all.rfind("grammar calculator start expr\n", 0) == 0);
  CHECK(all.find("\n  expr ::= ") != std::string::npos);
}

TEST_CASE("display formatting") {
  CHECK(format(7) == "7");
  CHECK(format(50.1) == "50.1");
  CHECK(format(0.1 + 0.2) == "0.30000000000000004");
  CHECK(format(-0.5) == "-0.5");
  CHECK(format(1e21) == "1e+21");
  CHECK(format(1.0 / 0.0) == "inf");
}

TEST_CASE("null arguments") {
  double v;
  CHECK(fbnf_grammar_eval(nullptr, "1", 1, &v) == FBNF_INVALID_ARGUMENT);
  CHECK(fbnf_product_build(nullptr, nullptr) == FBNF_INVALID_ARGUMENT);
  CHECK(std::string(fbnf_status_name(FBNF_BUDGET_EXCEEDED)) == "BUDGET_EXCEEDED");
  fbnf_config_free(nullptr);
  fbnf_grammar_free(nullptr);
  fbnf_diagnostics_free(nullptr);
}
