#pragma once

// Grammar data model for functional BNF: production rules that both match
// text and compute a double-valued result.
//
// Three families of nodes make up a rule body:
//   Expression  numeric terms ({a+b}), over bound variables and rule arguments
//   Pattern     matches text and produces variable bindings
//   Reducible   matches text and produces a single value
//
// All node types are immutable values sharing their subtrees, so copying a
// Grammar is cheap and grammars may be read from several threads at once.

#include <cstddef>
#include <initializer_list>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace fbnf {

struct ExpressionNode;
struct PatternNode;
struct ReducibleNode;

class Expression {
 public:
  explicit Expression(ExpressionNode node);

  const ExpressionNode& node() const { return *node_; }
  // Identity of the shared node; equal ids imply structural equality.
  const void* id() const { return node_.get(); }

  friend bool operator==(const Expression& lhs, const Expression& rhs);

 private:
  std::shared_ptr<const ExpressionNode> node_;
};

class Pattern {
 public:
  explicit Pattern(PatternNode node);

  const PatternNode& node() const { return *node_; }
  const void* id() const { return node_.get(); }

  friend bool operator==(const Pattern& lhs, const Pattern& rhs);

 private:
  std::shared_ptr<const PatternNode> node_;
};

class Reducible {
 public:
  explicit Reducible(ReducibleNode node);

  const ReducibleNode& node() const { return *node_; }
  const void* id() const { return node_.get(); }

  friend bool operator==(const Reducible& lhs, const Reducible& rhs);

 private:
  std::shared_ptr<const ReducibleNode> node_;
};

// ---- expressions ----

enum class BinaryOperator { add, subtract, multiply, divide };

char symbol(BinaryOperator op);

struct NumberLiteral {
  double value;
  bool operator==(const NumberLiteral&) const = default;
};

// Value bound by a NamedPattern earlier in the same pattern.
struct VarRef {
  std::string name;
  bool operator==(const VarRef&) const = default;
};

// Value of a formal argument of the enclosing rule.
struct ArgRef {
  std::string name;
  bool operator==(const ArgRef&) const = default;
};

struct BinaryOp {
  BinaryOperator op;
  Expression left;
  Expression right;
  bool operator==(const BinaryOp&) const = default;
};

struct Call {
  std::string function;
  std::vector<Expression> args;
  bool operator==(const Call&) const = default;
};

struct ExpressionNode {
  std::variant<NumberLiteral, VarRef, ArgRef, BinaryOp, Call> value;
};

// ---- patterns ----

struct Terminal {
  std::string text;
  bool operator==(const Terminal&) const = default;
};

struct Empty {
  bool operator==(const Empty&) const = default;
};

struct Concatenation {
  Pattern first;
  Pattern second;
  bool operator==(const Concatenation&) const = default;
};

struct NamedPattern {
  std::string variable;
  Reducible inner;
  bool operator==(const NamedPattern&) const = default;
};

struct PatternNode {
  std::variant<Terminal, Empty, Concatenation, NamedPattern> value;
};

// ---- reducibles ----

struct PatternValue {
  Pattern pattern;
  Expression result;
  bool operator==(const PatternValue&) const = default;
};

struct NonTerminal {
  std::string rule;
  std::vector<Expression> args;
  bool operator==(const NonTerminal&) const = default;
};

struct Alternative {
  Reducible left;
  Reducible right;
  bool operator==(const Alternative&) const = default;
};

struct ReducibleNode {
  std::variant<PatternValue, NonTerminal, Alternative> value;
};

// ---- rules and grammars ----

struct Rule {
  std::string name;
  std::vector<std::string> params;
  Reducible body;
  std::optional<std::string> feature;

  std::size_t arity() const { return params.size(); }
  // Copy of this rule guarded by `feature_name`.
  Rule when(std::string feature_name) const;

  bool operator==(const Rule&) const = default;
};

// An ordered rule list. Rules sharing a name and arity are alternatives,
// tried in list order.
class Grammar {
 public:
  Grammar(std::string name, std::string start, std::vector<Rule> rules);

  const std::string& name() const { return name_; }
  const std::string& start() const { return start_; }
  const std::vector<Rule>& rules() const { return rules_; }

  bool operator==(const Grammar&) const = default;

 private:
  std::string name_;
  std::string start_;
  std::vector<Rule> rules_;
};

// ---- embedded builder surface ----
//
//   rule("exprSuffix", {"acc"},
//        value(seq(lit("+"), bind("b", ref("multExpr")),
//                  bind("s", ref("exprSuffix", {arg("acc") + var("b")}))),
//              var("s")));

Expression num(double value);
Expression var(std::string name);
Expression arg(std::string name);
Expression call(std::string function, std::vector<Expression> args);
Expression operator+(Expression lhs, Expression rhs);
Expression operator-(Expression lhs, Expression rhs);
Expression operator*(Expression lhs, Expression rhs);
Expression operator/(Expression lhs, Expression rhs);

// Throws std::invalid_argument for an empty literal.
Pattern lit(std::string text);
Pattern empty();
Pattern concat(Pattern first, Pattern second);
// Right-nested concatenation of one or more patterns.
Pattern seq(std::vector<Pattern> parts);
template <class... Rest>
Pattern seq(Pattern first, Rest... rest) {
  return seq(std::vector<Pattern>{std::move(first), std::move(rest)...});
}
Pattern bind(std::string variable, Reducible inner);

Reducible value(Pattern pattern, Expression result);
Reducible ref(std::string rule, std::vector<Expression> args = {});
Reducible choice(Reducible left, Reducible right);
Reducible operator|(Reducible left, Reducible right);

Rule rule(std::string name, Reducible body);
Rule rule(std::string name, std::vector<std::string> params, Reducible body);

// Rendering in the usual notation, e.g.  expr ::= (a=multExpr, s=exprSuffix(a)) {s}
std::string to_string(const Expression& e);
std::string to_string(const Pattern& p);
std::string to_string(const Reducible& r);
std::string to_string(const Rule& r);
std::string to_string(const Grammar& g);

}  // namespace fbnf
