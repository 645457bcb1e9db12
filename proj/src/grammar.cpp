#include "fbnf/grammar.hpp"

#include <charconv>
#include <stdexcept>

#include "fbnf/format.hpp"

namespace fbnf {

Expression::Expression(ExpressionNode node)
    : node_(std::make_shared<const ExpressionNode>(std::move(node))) {}

Pattern::Pattern(PatternNode node)
    : node_(std::make_shared<const PatternNode>(std::move(node))) {}

Reducible::Reducible(ReducibleNode node)
    : node_(std::make_shared<const ReducibleNode>(std::move(node))) {}

bool operator==(const Expression& lhs, const Expression& rhs) {
  return lhs.node_ == rhs.node_ || lhs.node_->value == rhs.node_->value;
}

bool operator==(const Pattern& lhs, const Pattern& rhs) {
  return lhs.node_ == rhs.node_ || lhs.node_->value == rhs.node_->value;
}

bool operator==(const Reducible& lhs, const Reducible& rhs) {
  return lhs.node_ == rhs.node_ || lhs.node_->value == rhs.node_->value;
}

char symbol(BinaryOperator op) {
  switch (op) {
    case BinaryOperator::add: return '+';
    case BinaryOperator::subtract: return '-';
    case BinaryOperator::multiply: return '*';
    case BinaryOperator::divide: return '/';
  }
  return '?';
}

Rule Rule::when(std::string feature_name) const {
  Rule copy = *this;
  copy.feature = std::move(feature_name);
  return copy;
}

Grammar::Grammar(std::string name, std::string start, std::vector<Rule> rules)
    : name_(std::move(name)), start_(std::move(start)), rules_(std::move(rules)) {}

Expression num(double value) { return Expression({NumberLiteral{value}}); }
Expression var(std::string name) { return Expression({VarRef{std::move(name)}}); }
Expression arg(std::string name) { return Expression({ArgRef{std::move(name)}}); }

Expression call(std::string function, std::vector<Expression> args) {
  return Expression({Call{std::move(function), std::move(args)}});
}

namespace {
Expression binary(BinaryOperator op, Expression lhs, Expression rhs) {
  return Expression({BinaryOp{op, std::move(lhs), std::move(rhs)}});
}
}  // namespace

Expression operator+(Expression lhs, Expression rhs) {
  return binary(BinaryOperator::add, std::move(lhs), std::move(rhs));
}
Expression operator-(Expression lhs, Expression rhs) {
  return binary(BinaryOperator::subtract, std::move(lhs), std::move(rhs));
}
Expression operator*(Expression lhs, Expression rhs) {
  return binary(BinaryOperator::multiply, std::move(lhs), std::move(rhs));
}
Expression operator/(Expression lhs, Expression rhs) {
  return binary(BinaryOperator::divide, std::move(lhs), std::move(rhs));
}

Pattern lit(std::string text) {
  if (text.empty()) throw std::invalid_argument("terminal text must be non-empty");
  return Pattern({Terminal{std::move(text)}});
}

Pattern empty() { return Pattern({Empty{}}); }

Pattern concat(Pattern first, Pattern second) {
  return Pattern({Concatenation{std::move(first), std::move(second)}});
}

Pattern seq(std::vector<Pattern> parts) {
  if (parts.empty()) throw std::invalid_argument("seq needs at least one pattern");
  Pattern result = parts.back();
  for (auto it = parts.rbegin() + 1; it != parts.rend(); ++it) result = concat(*it, result);
  return result;
}

Pattern bind(std::string variable, Reducible inner) {
  return Pattern({NamedPattern{std::move(variable), std::move(inner)}});
}

Reducible value(Pattern pattern, Expression result) {
  return Reducible({PatternValue{std::move(pattern), std::move(result)}});
}

Reducible ref(std::string rule, std::vector<Expression> args) {
  return Reducible({NonTerminal{std::move(rule), std::move(args)}});
}

Reducible choice(Reducible left, Reducible right) {
  return Reducible({Alternative{std::move(left), std::move(right)}});
}

Reducible operator|(Reducible left, Reducible right) {
  return choice(std::move(left), std::move(right));
}

Rule rule(std::string name, Reducible body) {
  return Rule{std::move(name), {}, std::move(body), std::nullopt};
}

Rule rule(std::string name, std::vector<std::string> params, Reducible body) {
  return Rule{std::move(name), std::move(params), std::move(body), std::nullopt};
}

// ---- rendering ----

namespace {

template <class... Fs>
struct overloaded : Fs... {
  using Fs::operator()...;
};
template <class... Fs>
overloaded(Fs...) -> overloaded<Fs...>;

std::string join_args(const std::vector<Expression>& args) {
  std::string out;
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (i) out += ", ";
    out += to_string(args[i]);
  }
  return out;
}

}  // namespace

std::string to_string(const Expression& e) {
  return std::visit(
      overloaded{
          [](const NumberLiteral& n) { return format_value(n.value); },
          [](const VarRef& v) { return v.name; },
          [](const ArgRef& a) { return a.name; },
          [](const BinaryOp& b) {
            return "(" + to_string(b.left) + symbol(b.op) + to_string(b.right) + ")";
          },
          [](const Call& c) { return c.function + "(" + join_args(c.args) + ")"; },
      },
      e.node().value);
}

std::string to_string(const Pattern& p) {
  return std::visit(
      overloaded{
          [](const Terminal& t) { return "'" + t.text + "'"; },
          [](const Empty&) { return std::string("<empty>"); },
          [](const Concatenation& c) { return to_string(c.first) + ", " + to_string(c.second); },
          [](const NamedPattern& n) { return n.variable + "=" + to_string(n.inner); },
      },
      p.node().value);
}

std::string to_string(const Reducible& r) {
  return std::visit(
      overloaded{
          [](const PatternValue& pv) {
            return "(" + to_string(pv.pattern) + ") {" + to_string(pv.result) + "}";
          },
          [](const NonTerminal& nt) {
            return nt.args.empty() ? nt.rule : nt.rule + "(" + join_args(nt.args) + ")";
          },
          [](const Alternative& a) {
            return "[" + to_string(a.left) + " | " + to_string(a.right) + "]";
          },
      },
      r.node().value);
}

std::string to_string(const Rule& r) {
  std::string head = r.name;
  if (!r.params.empty()) {
    head += "(";
    for (std::size_t i = 0; i < r.params.size(); ++i) {
      if (i) head += ", ";
      head += r.params[i];
    }
    head += ")";
  }
  std::string out = head + " ::= " + to_string(r.body);
  if (r.feature) out += "  [" + *r.feature + "]";
  return out;
}

std::string to_string(const Grammar& g) {
  std::string out = "grammar " + g.name() + " start " + g.start() + "\n";
  for (const Rule& r : g.rules()) out += "  " + to_string(r) + "\n";
  return out;
}

}  // namespace fbnf
