#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "fbnf/builtins.hpp"
#include "fbnf/grammar.hpp"

namespace fbnf {

enum class Severity { error, warning };

enum class DiagnosticCode {
  undefined_nonterminal,
  arity_mismatch,
  unbound_variable,
  unknown_builtin,
  left_recursion,
  no_start_rule,
  duplicate_param,
  variable_shadowing,
};

// UNDEFINED_NONTERMINAL, ARITY_MISMATCH, ...
const char* code_name(DiagnosticCode code);
const char* severity_name(Severity severity);

struct Diagnostic {
  Severity severity;
  std::optional<std::string> rule;
  std::string message;
  DiagnosticCode code;

  bool operator==(const Diagnostic&) const = default;
};

bool has_errors(const std::vector<Diagnostic>& diagnostics);
std::string to_string(const Diagnostic& d);

// Static checks: start rule, parameter lists, name resolution and arity of
// nonterminals and builtins, variable scoping. All values are doubles, so
// there is nothing else to type-check.
//
// Scoping: a PatternValue's result sees the variables bound by its own
// pattern plus the enclosing rule's arguments. Arguments passed to a
// NonTerminal see the variables bound to its left in the current pattern.
// Variables never cross into a nested PatternValue or a called rule.
//
// Diagnostics come out in rule order, each body walked left to right.
std::vector<Diagnostic> validate_grammar(const Grammar& g, const BuiltinSignatures& builtins);
std::vector<Diagnostic> validate_grammar(const Grammar& g);

// Names of all rules on a cycle of the leftmost-reference relation: R -> S
// when a body of R can reach NonTerminal S without consuming input. Looks
// through nullable prefixes of a concatenation.
std::set<std::string> detect_left_recursion(const Grammar& g);

// LEFT_RECURSION warnings, one per name returned by detect_left_recursion.
std::vector<Diagnostic> left_recursion_warnings(const Grammar& g);

}  // namespace fbnf
