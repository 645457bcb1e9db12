#pragma once

// Test-only reference semantics, written without the Engine.
//
// ReferenceInterpreter returns complete result lists by plain recursion
// (no continuations, no persistent environments): a Concatenation is the
// concatenated product of two lists, an Alternative is list append. Its
// order is the documented enumeration order, so it can be compared with
// Engine output element by element.

#include <bit>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "fbnf/builtins.hpp"
#include "fbnf/grammar.hpp"

namespace fbnf::testing {

inline bool same_double(double a, double b) {
  return std::bit_cast<std::uint64_t>(a) == std::bit_cast<std::uint64_t>(b);
}

class ReferenceInterpreter {
 public:
  using Bindings = std::vector<std::pair<std::string, double>>;

  struct PatternOut {
    Bindings vars;
    std::size_t end;
  };
  struct ReducibleOut {
    double value;
    std::size_t end;
  };

  ReferenceInterpreter(const Grammar& g, std::string_view text, std::size_t max_calls = 200000)
      : g_(g), text_(text), max_calls_(max_calls) {}

  std::vector<ReducibleOut> reducible(const Reducible& r, std::size_t pos, const Bindings& vars,
                                      const Bindings& args) {
    std::vector<ReducibleOut> out;
    const auto& v = r.node().value;
    if (const auto* pv = std::get_if<PatternValue>(&v)) {
      for (const auto& p : pattern(pv->pattern, pos, {}, args))
        out.push_back({eval(pv->result, p.vars, args), p.end});
    } else if (const auto* nt = std::get_if<NonTerminal>(&v)) {
      if (++calls_ > max_calls_) throw std::runtime_error("reference interpreter: too many calls");
      std::vector<double> values;
      for (const auto& a : nt->args) values.push_back(eval(a, vars, args));
      for (const Rule& rule : g_.rules()) {
        if (rule.name != nt->rule || rule.arity() != values.size()) continue;
        Bindings callee;
        for (std::size_t i = 0; i < values.size(); ++i) callee.emplace_back(rule.params[i], values[i]);
        for (const auto& res : reducible(rule.body, pos, {}, callee)) out.push_back(res);
      }
    } else {
      const auto& alt = std::get<Alternative>(v);
      out = reducible(alt.left, pos, vars, args);
      for (const auto& res : reducible(alt.right, pos, vars, args)) out.push_back(res);
    }
    return out;
  }

  std::vector<PatternOut> pattern(const Pattern& p, std::size_t pos, const Bindings& vars,
                                  const Bindings& args) {
    const auto& v = p.node().value;
    if (const auto* t = std::get_if<Terminal>(&v)) {
      if (text_.compare(pos, t->text.size(), t->text) == 0 && pos + t->text.size() <= text_.size())
        return {{vars, pos + t->text.size()}};
      return {};
    }
    if (std::holds_alternative<Empty>(v)) return {{vars, pos}};
    if (const auto* c = std::get_if<Concatenation>(&v)) {
      std::vector<PatternOut> out;
      for (const auto& first : pattern(c->first, pos, vars, args))
        for (const auto& second : pattern(c->second, first.end, first.vars, args))
          out.push_back(second);
      return out;
    }
    const auto& np = std::get<NamedPattern>(v);
    std::vector<PatternOut> out;
    for (const auto& res : reducible(np.inner, pos, vars, args)) {
      Bindings extended = vars;
      extended.emplace_back(np.variable, res.value);
      out.push_back({std::move(extended), res.end});
    }
    return out;
  }

  // First complete parse of the start rule.
  std::optional<double> parse() {
    for (const auto& res : reducible(ref(g_.start()), 0, {}, {}))
      if (res.end == text_.size()) return res.value;
    return std::nullopt;
  }

 private:
  static std::optional<double> find(const Bindings& b, const std::string& name) {
    for (auto it = b.rbegin(); it != b.rend(); ++it)
      if (it->first == name) return it->second;
    return std::nullopt;
  }

  double eval(const Expression& e, const Bindings& vars, const Bindings& args) {
    const auto& v = e.node().value;
    if (const auto* n = std::get_if<NumberLiteral>(&v)) return n->value;
    if (const auto* r = std::get_if<VarRef>(&v)) {
      if (auto x = find(vars, r->name)) return *x;
      throw std::logic_error("reference: unbound " + r->name);
    }
    if (const auto* a = std::get_if<ArgRef>(&v)) {
      if (auto x = find(args, a->name)) return *x;
      throw std::logic_error("reference: unbound arg " + a->name);
    }
    if (const auto* b = std::get_if<BinaryOp>(&v)) {
      const double l = eval(b->left, vars, args);
      const double r = eval(b->right, vars, args);
      switch (b->op) {
        case BinaryOperator::add: return l + r;
        case BinaryOperator::subtract: return l - r;
        case BinaryOperator::multiply: return l * r;
        case BinaryOperator::divide: return l / r;
      }
    }
    const auto& c = std::get<Call>(v);
    std::vector<double> values;
    for (const auto& a : c.args) values.push_back(eval(a, vars, args));
    return standard_builtins().find(c.function)->fn(values);
  }

  const Grammar& g_;
  std::string_view text_;
  std::size_t max_calls_;
  std::size_t calls_ = 0;
};

}  // namespace fbnf::testing
