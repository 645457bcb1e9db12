#include "fbnf/calculators.hpp"

#include <array>
#include <utility>

namespace fbnf {

namespace {

// name(acc) ::= (op, b=operand, s=name(acc <op> b)) {s}
Rule fold_step(const std::string& name, const char* op, const std::string& operand,
               Expression (*combine)(Expression, Expression)) {
  return rule(name, {"acc"},
              value(seq(lit(op), bind("b", ref(operand)),
                        bind("s", ref(name, {combine(arg("acc"), var("b"))}))),
                    var("s")));
}

// name(acc) ::= (<empty>) {acc}
Rule fold_end(const std::string& name) {
  return rule(name, {"acc"}, value(empty(), arg("acc")));
}

// name ::= (a=operand, s=suffix(a)) {s}
Rule fold_start(const std::string& name, const std::string& operand, const std::string& suffix) {
  return rule(name, value(seq(bind("a", ref(operand)), bind("s", ref(suffix, {var("a")}))),
                          var("s")));
}

Expression add(Expression a, Expression b) { return std::move(a) + std::move(b); }
Expression sub(Expression a, Expression b) { return std::move(a) - std::move(b); }
Expression mul(Expression a, Expression b) { return std::move(a) * std::move(b); }
Expression quotient(Expression a, Expression b) { return std::move(a) / std::move(b); }

Rule unary_function(const std::string& fn) {
  return rule("primary", value(seq(lit(fn + "("), bind("e", ref("expr")), lit(")")),
                               call(fn, {var("e")})))
      .when("scientific");
}

}  // namespace

Grammar calculator_pool() {
  std::vector<Rule> rules;

  // Additive and multiplicative strata, left-associative by accumulation.
  rules.push_back(fold_start("expr", "multExpr", "exprSuffix"));
  rules.push_back(fold_step("exprSuffix", "+", "multExpr", add));
  rules.push_back(fold_step("exprSuffix", "-", "multExpr", sub));
  rules.push_back(fold_end("exprSuffix"));
  rules.push_back(fold_start("multExpr", "factor", "multSuffix"));
  rules.push_back(fold_step("multSuffix", "*", "factor", mul));
  rules.push_back(fold_step("multSuffix", "/", "factor", quotient));
  rules.push_back(fold_end("multSuffix"));

  rules.push_back(
      rule("factor", value(seq(bind("v", ref("primary")), lit("%")), var("v") / num(100)))
          .when("financial"));
  rules.push_back(rule("factor", value(bind("v", ref("primary")), var("v"))));

  rules.push_back(
      rule("primary", value(seq(lit("("), bind("e", ref("expr")), lit(")")), var("e"))));
  for (const char* fn : {"sin", "cos", "tan"}) rules.push_back(unary_function(fn));
  // Tried before decimal numbers: under hexadecimal, "10" is sixteen.
  rules.push_back(
      rule("primary", value(bind("n", ref("hexNumber")), var("n"))).when("hexadecimal"));
  rules.push_back(rule("primary", value(bind("n", ref("number")), var("n"))));

  // Decimal numbers. A fraction accumulates all digits as one integer and
  // divides once at the end, so "12.34" rounds exactly like strtod.
  rules.push_back(rule(
      "number", value(seq(bind("i", ref("integer")), lit("."), bind("d", ref("digit")),
                          bind("s", ref("fraction", {var("i") * num(10) + var("d"), num(10)}))),
                      var("s"))));
  rules.push_back(rule("number", value(bind("i", ref("integer")), var("i"))));
  rules.push_back(rule(
      "fraction", {"num", "den"},
      value(seq(bind("d", ref("digit")),
                bind("s", ref("fraction", {arg("num") * num(10) + var("d"), arg("den") * num(10)}))),
            var("s"))));
  rules.push_back(rule("fraction", {"num", "den"}, value(empty(), arg("num") / arg("den"))));
  rules.push_back(
      rule("integer", value(seq(bind("d", ref("digit")), bind("s", ref("integerSuffix", {var("d")}))),
                            var("s"))));
  rules.push_back(rule(
      "integerSuffix", {"acc"},
      value(seq(bind("d", ref("digit")),
                bind("s", ref("integerSuffix", {arg("acc") * num(10) + var("d")}))),
            var("s"))));
  rules.push_back(fold_end("integerSuffix"));
  for (int d = 0; d <= 9; ++d)
    rules.push_back(rule("digit", value(lit(std::string(1, char('0' + d))), num(d))));

  // Hexadecimal integers.
  rules.push_back(
      rule("hexNumber",
           value(seq(bind("d", ref("hexDigit")), bind("s", ref("hexSuffix", {var("d")}))), var("s")))
          .when("hexadecimal"));
  rules.push_back(
      rule("hexSuffix", {"acc"},
           value(seq(bind("d", ref("hexDigit")),
                     bind("s", ref("hexSuffix", {arg("acc") * num(16) + var("d")}))),
                 var("s")))
          .when("hexadecimal"));
  rules.push_back(fold_end("hexSuffix").when("hexadecimal"));
  rules.push_back(rule("hexDigit", value(bind("d", ref("digit")), var("d"))).when("hexadecimal"));
  for (int d = 10; d <= 15; ++d)
    rules.push_back(
        rule("hexDigit", value(lit(std::string(1, char('A' + d - 10))), num(d))).when("hexadecimal"));

  return Grammar("calculator", "expr", std::move(rules));
}

Grammar build_product(const FeatureConfig& config) {
  return filter_by_features(calculator_pool(), config);
}

namespace {

constexpr std::array<std::pair<const char*, const char*>, 4> kPresets{{
    {"basic", nullptr},
    {"scientific", "scientific"},
    {"financial", "financial"},
    {"hex", "hexadecimal"},
}};

}  // namespace

std::optional<FeatureConfig> product_preset(std::string_view name) {
  for (const auto& [preset, feature] : kPresets) {
    if (name != preset) continue;
    FeatureConfig config{preset, {}};
    if (feature) config.enabled.insert(feature);
    return config;
  }
  return std::nullopt;
}

std::vector<std::string> product_preset_names() {
  std::vector<std::string> names;
  for (const auto& preset : kPresets) names.emplace_back(preset.first);
  return names;
}

}  // namespace fbnf
