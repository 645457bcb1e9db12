#pragma once

// Backtracking top-down interpreter for functional BNF grammars.
//
// Every derive_* call enumerates all derivations of a node from a given input
// position, in a fixed order, handing each one to a sink. The sink returns
// true to ask for the next derivation or false to stop; nothing past the
// stopping point is computed. Alternatives that fail simply produce no
// results, so backtracking needs no undo: environments are persistent, and
// each alternative sees exactly the environment it was started with.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <type_traits>
#include <utility>
#include <vector>

#include "fbnf/builtins.hpp"
#include "fbnf/error.hpp"
#include "fbnf/grammar.hpp"

namespace fbnf {

// Non-owning callable reference; the referenced callable must outlive the call.
template <class Signature>
class FunctionRef;

template <class R, class... Args>
class FunctionRef<R(Args...)> {
 public:
  template <class F>
    requires(!std::is_same_v<std::remove_cvref_t<F>, FunctionRef> &&
             std::is_invocable_r_v<R, F&, Args...>)
  FunctionRef(F&& f)  // NOLINT(google-explicit-constructor)
      : object_(const_cast<void*>(static_cast<const void*>(std::addressof(f)))),
        call_([](void* obj, Args... args) -> R {
          return (*static_cast<std::remove_reference_t<F>*>(obj))(std::forward<Args>(args)...);
        }) {}

  R operator()(Args... args) const { return call_(object_, std::forward<Args>(args)...); }

 private:
  void* object_;
  R (*call_)(void*, Args...);
};

// Variable and argument bindings. Immutable: bind() returns an extended copy
// and leaves the original untouched.
class Env {
 public:
  Env() = default;

  static Env with_args(std::span<const std::string> params, std::span<const double> values);

  Env bind(std::string name, double value) const;
  // Same arguments, no variables: the starting scope of a PatternValue.
  Env scoped() const;

  std::optional<double> var(std::string_view name) const;
  std::optional<double> arg(std::string_view name) const;

  // Variable bindings, oldest first.
  std::vector<std::pair<std::string, double>> vars() const;
  std::vector<std::pair<std::string, double>> args() const;

  // Same bindings in the same order; values compared bit for bit.
  friend bool operator==(const Env& lhs, const Env& rhs);

 private:
  struct Cell {
    std::string name;
    double value;
    std::shared_ptr<const Cell> next;
  };
  using List = std::shared_ptr<const Cell>;

  static std::optional<double> lookup(const List& list, std::string_view name);
  static std::vector<std::pair<std::string, double>> flatten(const List& list);

  List vars_;
  List args_;
};

// Throws EngineDefect for a name that does not resolve. Division by zero
// follows IEEE 754.
double evaluate_expression(const Expression& e, const Env& env,
                           const Builtins& builtins = standard_builtins());

struct EngineLimits {
  // Node visits (pattern or reducible) allowed per parse before giving up.
  std::uint64_t step_budget = 1'000'000;
  // Rule calls active on the C++ stack at once; exceeding it also gives up.
  std::size_t max_nesting = 4'000;
  // When set, rule calls deeper than this many levels yield nothing instead
  // of recursing. Used to enumerate left-recursive grammars.
  std::optional<std::size_t> depth_cap;
};

// Thrown out of derive_* when a limit in EngineLimits is exhausted.
class BudgetExceeded : public Error {
 public:
  explicit BudgetExceeded(const std::string& message)
      : Error(ErrorCode::budget_exceeded, message) {}
};

struct PatternResult {
  Env env;
  std::size_t residue;  // input position after the match
};

struct ReducibleResult {
  double value;
  std::size_t residue;
};

// Watches an enumeration from the inside; for tests and tracing.
class DerivationObserver {
 public:
  virtual ~DerivationObserver() = default;
  virtual void on_reducible(const Reducible&, std::size_t /*pos*/, const Env&) {}
  virtual void on_reducible_result(const Reducible&, std::size_t /*start*/, std::size_t /*end*/,
                                   double) {}
  virtual void on_pattern_result(const Pattern&, std::size_t /*start*/, std::size_t /*end*/,
                                 const Env&) {}
};

class Engine {
 public:
  using PatternSink = FunctionRef<bool(const Env&, std::size_t)>;
  using ReducibleSink = FunctionRef<bool(double, std::size_t)>;

  // `grammar` and `builtins` must outlive the engine.
  explicit Engine(const Grammar& grammar, EngineLimits limits = {},
                  const Builtins& builtins = standard_builtins());

  // Both return false iff the sink asked to stop.
  bool derive_pattern(const Pattern& p, std::string_view text, std::size_t pos, const Env& env,
                      PatternSink sink);
  bool derive_reducible(const Reducible& r, std::string_view text, std::size_t pos,
                        const Env& env, ReducibleSink sink);

  std::vector<PatternResult> collect_pattern(const Pattern& p, std::string_view text,
                                             std::size_t pos = 0, const Env& env = {});
  std::vector<ReducibleResult> collect_reducible(const Reducible& r, std::string_view text,
                                                 std::size_t pos = 0, const Env& env = {});

  // First derivation of the start rule consuming all of `text`, if any.
  // Throws BudgetExceeded.
  std::optional<double> first_full_parse(std::string_view text);

  // Node visits since construction or the last reset_steps().
  std::uint64_t steps() const { return steps_; }
  void reset_steps() { steps_ = 0; }

  void set_observer(DerivationObserver* observer) { observer_ = observer; }

  const Grammar& grammar() const { return grammar_; }

 private:
  struct Frame;
  bool pattern(const Pattern& p, std::size_t pos, const Env& env, std::size_t depth,
               PatternSink sink);
  bool reducible(const Reducible& r, std::size_t pos, const Env& env, std::size_t depth,
                 ReducibleSink sink);
  bool call(const NonTerminal& nt, std::size_t pos, const Env& env, std::size_t depth,
            ReducibleSink sink);
  void step();

  const Grammar& grammar_;
  EngineLimits limits_;
  const Builtins& builtins_;
  std::map<std::string, std::vector<const Rule*>, std::less<>> rules_by_name_;
  std::string_view text_;
  std::uint64_t steps_ = 0;
  std::size_t nesting_ = 0;
  DerivationObserver* observer_ = nullptr;
};

enum class Failure { no_match, budget_exceeded };

class ParseOutcome {
 public:
  static ParseOutcome value(double v) { return ParseOutcome(v, Failure::no_match); }
  static ParseOutcome syntax_error(Failure why) { return ParseOutcome(std::nullopt, why); }

  bool ok() const { return value_.has_value(); }
  bool is_syntax_error() const { return !ok(); }
  // Precondition: ok().
  double value() const { return *value_; }
  // Meaningful only for syntax errors.
  Failure failure() const { return failure_; }
  bool budget_exceeded() const { return !ok() && failure_ == Failure::budget_exceeded; }

  // Values compare bit for bit, so a NaN result equals itself.
  friend bool operator==(const ParseOutcome& lhs, const ParseOutcome& rhs);

 private:
  ParseOutcome(std::optional<double> v, Failure f) : value_(v), failure_(f) {}
  std::optional<double> value_;
  Failure failure_;
};

// Parses all of `text` from the grammar's start rule. The first complete
// derivation in enumeration order supplies the value. Running out of the
// step budget is a syntax error flagged budget_exceeded().
ParseOutcome parse_full(const Grammar& g, std::string_view text, const EngineLimits& limits = {},
                        const Builtins& builtins = standard_builtins());

}  // namespace fbnf
