#pragma once

// Small hand-written grammars, each with the alphabet it is exercised over.

#include <string>
#include <vector>

#include "fbnf/calculators.hpp"
#include "fbnf/grammar.hpp"
#include "fbnf/transform.hpp"

namespace fbnf::testing {

struct CorpusEntry {
  std::string name;
  Grammar grammar;
  std::string alphabet;
};

inline std::vector<Rule> digit_rules(const std::string& name, const std::string& digits) {
  std::vector<Rule> out;
  for (char d : digits) out.push_back(rule(name, value(lit(std::string(1, d)), num(d - '0'))));
  return out;
}

// expr ::= (a=multExpr, s=exprSuffix(a)) {s}
// exprSuffix(a) ::= ('+', b=expr) {a+b}
// exprSuffix(a) ::= (<empty>) {a}
// multExpr ::= '1' {1} | '2' {2} | '3' {3}
inline Grammar tail_recursive_sum() {
  std::vector<Rule> rules{
      rule("expr", value(seq(bind("a", ref("multExpr")), bind("s", ref("exprSuffix", {var("a")}))),
                         var("s"))),
      rule("exprSuffix", {"a"}, value(seq(lit("+"), bind("b", ref("expr"))), arg("a") + var("b"))),
      rule("exprSuffix", {"a"}, value(empty(), arg("a"))),
  };
  for (auto& r : digit_rules("multExpr", "123")) rules.push_back(r);
  return Grammar("tail_recursive_sum", "expr", std::move(rules));
}

// expr ::= (a=expr, '+', b=multExpr) {a+b}
// expr ::= (m=multExpr) {m}
inline Grammar head_recursive_sum(const std::string& digits = "123") {
  std::vector<Rule> rules{
      rule("expr", value(seq(bind("a", ref("expr")), lit("+"), bind("b", ref("multExpr"))),
                         var("a") + var("b"))),
      rule("expr", value(bind("m", ref("multExpr")), var("m"))),
  };
  for (auto& r : digit_rules("multExpr", digits)) rules.push_back(r);
  return Grammar("head_recursive_sum", "expr", std::move(rules));
}

// Left-recursive subtraction over division over single digits.
inline Grammar sub_div_grammar() {
  std::vector<Rule> rules{
      rule("expr", value(seq(bind("a", ref("expr")), lit("-"), bind("b", ref("term"))),
                         var("a") - var("b"))),
      rule("expr", value(bind("t", ref("term")), var("t"))),
      rule("term", value(seq(bind("a", ref("term")), lit("/"), bind("b", ref("digit"))),
                         var("a") / var("b"))),
      rule("term", value(bind("d", ref("digit")), var("d"))),
  };
  for (auto& r : digit_rules("digit", "248")) rules.push_back(r);
  return Grammar("sub_div", "expr", std::move(rules));
}

inline std::vector<CorpusEntry> grammar_corpus() {
  std::vector<CorpusEntry> c;
  auto add = [&](std::string name, std::string start, std::vector<Rule> rules,
                 std::string alphabet) {
    c.push_back({name, Grammar(name, std::move(start), std::move(rules)), std::move(alphabet)});
  };

  add("single_terminal", "S", {rule("S", value(lit("a"), num(1)))}, "ab");
  add("empty_only", "S", {rule("S", value(empty(), num(0)))}, "a");
  add("alternative_order", "S",
      {rule("S", value(lit("a"), num(1)) | value(lit("ab"), num(2)))}, "ab");
  add("rule_order_ambiguity", "S",
      {rule("S", value(seq(lit("a"), bind("x", ref("T"))), var("x"))),
       rule("T", value(lit("b"), num(1))), rule("T", value(lit("b"), num(2)))},
      "ab");
  c.push_back({"tail_recursive_sum", tail_recursive_sum(), "12+"});
  {
    auto rules = digit_rules("D", "012");
    rules.insert(rules.begin(), rule("S", value(seq(bind("x", ref("D")), bind("y", ref("D"))),
                                                var("x") * num(10) + var("y"))));
    add("named_patterns", "S", std::move(rules), "012");
  }
  {
    auto rules = digit_rules("D", "12");
    rules.insert(rules.begin(),
                 {rule("S", value(seq(bind("x", ref("D")), bind("s", ref("Add", {var("x")}))),
                                  var("s"))),
                  rule("Add", {"k"},
                       value(seq(lit("+"), bind("y", ref("D")),
                                 bind("s", ref("Add", {arg("k") + var("y")}))),
                             var("s"))),
                  rule("Add", {"k"}, value(empty(), arg("k")))});
    add("accumulator_args", "S", std::move(rules), "12+");
  }
  add("right_recursion_count", "S",
      {rule("S", value(seq(lit("a"), bind("n", ref("S"))), var("n") + num(1))),
       rule("S", value(empty(), num(0)))},
      "ab");
  add("balanced_parens", "S",
      {rule("S", value(seq(lit("("), bind("x", ref("S")), lit(")"), bind("y", ref("S"))),
                       var("x") + var("y") + num(1))),
       rule("S", value(empty(), num(0)))},
      "()");
  add("alternative_in_binding", "S",
      {rule("S", value(seq(bind("x", ref("A") | ref("B")), lit("c")), var("x"))),
       rule("A", value(lit("a"), num(1))), rule("B", value(lit("a"), num(2))),
       rule("B", value(lit("b"), num(3)))},
      "abc");
  add("argument_chain", "S",
      {rule("S", value(bind("x", ref("P", {num(1)})), var("x"))),
       rule("P", {"k"},
            value(seq(lit("a"), bind("y", ref("P", {arg("k") * num(2)}))), var("y"))),
       rule("P", {"k"}, value(lit("b"), arg("k")))},
      "ab");
  add("ieee_division", "S",
      {rule("S", value(lit("z"), num(1) / num(0))), rule("S", value(lit("n"), num(0) / num(0))),
       rule("S", value(seq(lit("m"), bind("x", ref("S"))), num(0) - var("x")))},
      "znm");
  {
    auto rules = digit_rules("D", "01");
    rules.insert(rules.begin(), rule("S", value(seq(lit("s"), bind("x", ref("D"))),
                                                call("sin", {var("x")}) + call("cos", {var("x")}))));
    add("builtin_calls", "S", std::move(rules), "s01");
  }
  add("empty_in_middle", "S", {rule("S", value(seq(lit("a"), empty(), lit("b"), empty()), num(5)))},
      "ab");
  add("ambiguous_split", "S",
      {rule("S", value(seq(bind("x", ref("As")), bind("y", ref("As"))),
                       var("x") * num(10) + var("y"))),
       rule("As", value(seq(lit("a"), bind("n", ref("As"))), var("n") + num(1))),
       rule("As", value(empty(), num(0)))},
      "a");
  {
    auto rules = digit_rules("Bit", "01");
    rules.insert(rules.begin(),
                 {rule("S", value(seq(bind("d", ref("Bit")), bind("s", ref("Bin", {var("d")}))),
                                  var("s"))),
                  rule("Bin", {"acc"},
                       value(seq(bind("d", ref("Bit")),
                                 bind("s", ref("Bin", {arg("acc") * num(2) + var("d")}))),
                             var("s"))),
                  rule("Bin", {"acc"}, value(empty(), arg("acc")))});
    add("binary_numbers", "S", std::move(rules), "01");
  }
  add("palindromes", "S",
      {rule("S", value(seq(lit("a"), bind("x", ref("S")), lit("a")), var("x") + num(1))),
       rule("S", value(seq(lit("b"), bind("x", ref("S")), lit("b")), var("x") + num(1))),
       rule("S", value(lit("a"), num(0))), rule("S", value(lit("b"), num(0))),
       rule("S", value(empty(), num(0)))},
      "ab");
  add("overlapping_terminals", "S",
      {rule("S", value(seq(bind("x", ref("T")), lit("c")), var("x"))),
       rule("S", value(seq(bind("x", ref("T")), lit("bc")), var("x") * num(10))),
       rule("T", value(lit("ab"), num(1))), rule("T", value(lit("a"), num(2)))},
      "abc");
  {
    auto rules = digit_rules("D", "12");
    rules.insert(rules.begin(),
                 {rule("S", value(seq(bind("x", ref("D")), bind("y", ref("Q"))), var("x") - var("y"))),
                  rule("Q", value(seq(bind("x", ref("D")), lit("+")), var("x") * num(3)))});
    add("callee_scope", "S", std::move(rules), "12+");
  }
  add("empty_language", "S",
      {rule("S", value(seq(lit("a"), bind("x", ref("S"))), var("x")))}, "ab");
  c.push_back({"head_recursive_sum_transformed", eliminate_left_recursion(head_recursive_sum()), "12+"});
  c.push_back({"sub_div_transformed", eliminate_left_recursion(sub_div_grammar()), "248-/"});
  c.push_back({"calculator_basic", build_product({"basic", {}}), "12+-*("});
  c.push_back({"calculator_financial", build_product({"financial", {"financial"}}), "15%+*"});
  c.push_back({"calculator_hex", build_product({"hex", {"hexadecimal"}}), "1AF.+"});
  return c;
}

}  // namespace fbnf::testing
