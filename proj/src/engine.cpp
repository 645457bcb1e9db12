#include "fbnf/engine.hpp"

#include <algorithm>
#include <bit>

namespace fbnf {

// ---- Env ----

Env Env::with_args(std::span<const std::string> params, std::span<const double> values) {
  Env env;
  const std::size_t n = std::min(params.size(), values.size());
  for (std::size_t i = 0; i < n; ++i)
    env.args_ = std::make_shared<const Cell>(Cell{params[i], values[i], env.args_});
  return env;
}

Env Env::bind(std::string name, double value) const {
  Env out = *this;
  out.vars_ = std::make_shared<const Cell>(Cell{std::move(name), value, vars_});
  return out;
}

Env Env::scoped() const {
  Env out;
  out.args_ = args_;
  return out;
}

std::optional<double> Env::lookup(const List& list, std::string_view name) {
  for (const Cell* c = list.get(); c; c = c->next.get())
    if (c->name == name) return c->value;
  return std::nullopt;
}

std::optional<double> Env::var(std::string_view name) const { return lookup(vars_, name); }
std::optional<double> Env::arg(std::string_view name) const { return lookup(args_, name); }

std::vector<std::pair<std::string, double>> Env::flatten(const List& list) {
  std::vector<std::pair<std::string, double>> out;
  for (const Cell* c = list.get(); c; c = c->next.get()) out.emplace_back(c->name, c->value);
  std::reverse(out.begin(), out.end());
  return out;
}

std::vector<std::pair<std::string, double>> Env::vars() const { return flatten(vars_); }
std::vector<std::pair<std::string, double>> Env::args() const { return flatten(args_); }

bool operator==(const Env& lhs, const Env& rhs) {
  auto same = [](const Env::List& a, const Env::List& b) {
    const Env::Cell* x = a.get();
    const Env::Cell* y = b.get();
    for (; x && y; x = x->next.get(), y = y->next.get()) {
      if (x == y) return true;
      if (x->name != y->name ||
          std::bit_cast<std::uint64_t>(x->value) != std::bit_cast<std::uint64_t>(y->value))
        return false;
    }
    return x == y;
  };
  return same(lhs.vars_, rhs.vars_) && same(lhs.args_, rhs.args_);
}

// ---- expressions ----

double evaluate_expression(const Expression& e, const Env& env, const Builtins& builtins) {
  const auto& v = e.node().value;
  if (const auto* n = std::get_if<NumberLiteral>(&v)) return n->value;
  if (const auto* ref = std::get_if<VarRef>(&v)) {
    if (auto x = env.var(ref->name)) return *x;
    throw EngineDefect("unbound variable '" + ref->name + "'");
  }
  if (const auto* a = std::get_if<ArgRef>(&v)) {
    if (auto x = env.arg(a->name)) return *x;
    throw EngineDefect("unbound argument '" + a->name + "'");
  }
  if (const auto* b = std::get_if<BinaryOp>(&v)) {
    const double l = evaluate_expression(b->left, env, builtins);
    const double r = evaluate_expression(b->right, env, builtins);
    switch (b->op) {
      case BinaryOperator::add: return l + r;
      case BinaryOperator::subtract: return l - r;
      case BinaryOperator::multiply: return l * r;
      case BinaryOperator::divide: return l / r;
    }
  }
  const auto& c = std::get<Call>(v);
  const Builtins::Entry* fn = builtins.find(c.function);
  if (!fn) throw EngineDefect("unknown builtin '" + c.function + "'");
  if (fn->arity != c.args.size())
    throw EngineDefect("builtin '" + c.function + "' called with wrong arity");
  std::vector<double> args;
  args.reserve(c.args.size());
  for (const Expression& a : c.args) args.push_back(evaluate_expression(a, env, builtins));
  return fn->fn(args);
}

// ---- Engine ----

struct Engine::Frame {
  explicit Frame(Engine& e) : engine(e) {
    if (++engine.nesting_ > engine.limits_.max_nesting) {
      --engine.nesting_;
      throw BudgetExceeded("rule nesting exceeded " + std::to_string(engine.limits_.max_nesting));
    }
  }
  ~Frame() { --engine.nesting_; }
  Frame(const Frame&) = delete;
  Frame& operator=(const Frame&) = delete;
  Engine& engine;
};

Engine::Engine(const Grammar& grammar, EngineLimits limits, const Builtins& builtins)
    : grammar_(grammar), limits_(limits), builtins_(builtins) {
  for (const Rule& r : grammar_.rules()) rules_by_name_[r.name].push_back(&r);
}

void Engine::step() {
  if (++steps_ > limits_.step_budget)
    throw BudgetExceeded("step budget of " + std::to_string(limits_.step_budget) + " exhausted");
}

bool Engine::pattern(const Pattern& p, std::size_t pos, const Env& env, std::size_t depth,
                     PatternSink sink) {
  step();
  auto emit = [&](const Env& out, std::size_t end) {
    if (observer_) observer_->on_pattern_result(p, pos, end, out);
    return sink(out, end);
  };
  const auto& v = p.node().value;
  if (const auto* t = std::get_if<Terminal>(&v)) {
    if (text_.substr(pos).starts_with(t->text)) return emit(env, pos + t->text.size());
    return true;
  }
  if (std::holds_alternative<Empty>(v)) return emit(env, pos);
  if (const auto* c = std::get_if<Concatenation>(&v)) {
    return pattern(c->first, pos, env, depth, [&](const Env& mid_env, std::size_t mid) {
      return pattern(c->second, mid, mid_env, depth, emit);
    });
  }
  const auto& np = std::get<NamedPattern>(v);
  return reducible(np.inner, pos, env, depth, [&](double value, std::size_t end) {
    return emit(env.bind(np.variable, value), end);
  });
}

bool Engine::reducible(const Reducible& r, std::size_t pos, const Env& env, std::size_t depth,
                       ReducibleSink sink) {
  step();
  if (observer_) observer_->on_reducible(r, pos, env);
  auto emit = [&](double value, std::size_t end) {
    if (observer_) observer_->on_reducible_result(r, pos, end, value);
    return sink(value, end);
  };
  const auto& v = r.node().value;
  if (const auto* pv = std::get_if<PatternValue>(&v)) {
    return pattern(pv->pattern, pos, env.scoped(), depth, [&](const Env& bound, std::size_t end) {
      return emit(evaluate_expression(pv->result, bound, builtins_), end);
    });
  }
  if (const auto* nt = std::get_if<NonTerminal>(&v)) return call(*nt, pos, env, depth, emit);
  const auto& alt = std::get<Alternative>(v);
  return reducible(alt.left, pos, env, depth, emit) && reducible(alt.right, pos, env, depth, emit);
}

bool Engine::call(const NonTerminal& nt, std::size_t pos, const Env& env, std::size_t depth,
                  ReducibleSink sink) {
  std::vector<double> values;
  values.reserve(nt.args.size());
  for (const Expression& a : nt.args) values.push_back(evaluate_expression(a, env, builtins_));

  if (limits_.depth_cap && depth >= *limits_.depth_cap) return true;
  auto it = rules_by_name_.find(nt.rule);
  if (it == rules_by_name_.end()) return true;

  Frame frame(*this);
  for (const Rule* rule : it->second) {
    if (rule->arity() != values.size()) continue;
    const Env callee = Env::with_args(rule->params, values);
    if (!reducible(rule->body, pos, callee, depth + 1, sink)) return false;
  }
  return true;
}

bool Engine::derive_pattern(const Pattern& p, std::string_view text, std::size_t pos,
                            const Env& env, PatternSink sink) {
  text_ = text;
  return pattern(p, pos, env, 0, sink);
}

bool Engine::derive_reducible(const Reducible& r, std::string_view text, std::size_t pos,
                              const Env& env, ReducibleSink sink) {
  text_ = text;
  return reducible(r, pos, env, 0, sink);
}

std::vector<PatternResult> Engine::collect_pattern(const Pattern& p, std::string_view text,
                                                   std::size_t pos, const Env& env) {
  std::vector<PatternResult> out;
  derive_pattern(p, text, pos, env, [&](const Env& e, std::size_t end) {
    out.push_back(PatternResult{e, end});
    return true;
  });
  return out;
}

std::vector<ReducibleResult> Engine::collect_reducible(const Reducible& r, std::string_view text,
                                                       std::size_t pos, const Env& env) {
  std::vector<ReducibleResult> out;
  derive_reducible(r, text, pos, env, [&](double value, std::size_t end) {
    out.push_back(ReducibleResult{value, end});
    return true;
  });
  return out;
}

std::optional<double> Engine::first_full_parse(std::string_view text) {
  reset_steps();
  const Reducible start = ref(grammar_.start());
  std::optional<double> found;
  derive_reducible(start, text, 0, Env{}, [&](double value, std::size_t end) {
    if (end != text.size()) return true;
    found = value;
    return false;
  });
  return found;
}

bool operator==(const ParseOutcome& lhs, const ParseOutcome& rhs) {
  if (lhs.ok() != rhs.ok()) return false;
  if (!lhs.ok()) return lhs.failure() == rhs.failure();
  return std::bit_cast<std::uint64_t>(lhs.value()) == std::bit_cast<std::uint64_t>(rhs.value());
}

ParseOutcome parse_full(const Grammar& g, std::string_view text, const EngineLimits& limits,
                        const Builtins& builtins) {
  Engine engine(g, limits, builtins);
  try {
    if (auto v = engine.first_full_parse(text)) return ParseOutcome::value(*v);
    return ParseOutcome::syntax_error(Failure::no_match);
  } catch (const BudgetExceeded&) {
    return ParseOutcome::syntax_error(Failure::budget_exceeded);
  }
}

}  // namespace fbnf
