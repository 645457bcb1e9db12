#include "fbnf/validate.hpp"

#include <map>
#include <set>

#include "analysis.hpp"

namespace fbnf {

const char* code_name(DiagnosticCode code) {
  switch (code) {
    case DiagnosticCode::undefined_nonterminal: return "UNDEFINED_NONTERMINAL";
    case DiagnosticCode::arity_mismatch: return "ARITY_MISMATCH";
    case DiagnosticCode::unbound_variable: return "UNBOUND_VARIABLE";
    case DiagnosticCode::unknown_builtin: return "UNKNOWN_BUILTIN";
    case DiagnosticCode::left_recursion: return "LEFT_RECURSION";
    case DiagnosticCode::no_start_rule: return "NO_START_RULE";
    case DiagnosticCode::duplicate_param: return "DUPLICATE_PARAM";
    case DiagnosticCode::variable_shadowing: return "VARIABLE_SHADOWING";
  }
  return "UNKNOWN";
}

const char* severity_name(Severity severity) {
  return severity == Severity::error ? "error" : "warning";
}

bool has_errors(const std::vector<Diagnostic>& diagnostics) {
  for (const auto& d : diagnostics)
    if (d.severity == Severity::error) return true;
  return false;
}

std::string to_string(const Diagnostic& d) {
  std::string out = std::string(severity_name(d.severity)) + " " + code_name(d.code);
  if (d.rule) out += " in rule '" + *d.rule + "'";
  return out + ": " + d.message;
}

namespace {

class Validator {
 public:
  Validator(const Grammar& g, const BuiltinSignatures& builtins) : g_(g), builtins_(builtins) {
    for (const Rule& r : g.rules()) arities_[r.name].insert(r.arity());
  }

  std::vector<Diagnostic> run() {
    auto start = arities_.find(g_.start());
    if (start == arities_.end() || start->second.count(0) == 0)
      report(DiagnosticCode::no_start_rule,
             "start symbol '" + g_.start() + "' names no rule of arity 0");

    for (const Rule& r : g_.rules()) {
      rule_ = &r;
      std::set<std::string> seen;
      for (const std::string& p : r.params)
        if (!seen.insert(p).second)
          report(DiagnosticCode::duplicate_param, "parameter '" + p + "' declared twice");
      reducible(r.body, {});
    }
    rule_ = nullptr;
    return std::move(out_);
  }

 private:
  void report(DiagnosticCode code, std::string message) {
    std::optional<std::string> rule;
    if (rule_) rule = rule_->name;
    out_.push_back(Diagnostic{Severity::error, std::move(rule), std::move(message), code});
  }

  // `visible` holds the variables bound so far in the enclosing pattern.
  void reducible(const Reducible& r, const std::set<std::string>& visible) {
    const auto& v = r.node().value;
    if (const auto* pv = std::get_if<PatternValue>(&v)) {
      std::set<std::string> bound;
      pattern(pv->pattern, bound);
      expression(pv->result, bound);
    } else if (const auto* nt = std::get_if<NonTerminal>(&v)) {
      auto it = arities_.find(nt->rule);
      if (it == arities_.end())
        report(DiagnosticCode::undefined_nonterminal, "no rule named '" + nt->rule + "'");
      else if (it->second.count(nt->args.size()) == 0)
        report(DiagnosticCode::arity_mismatch, "no rule '" + nt->rule + "' takes " +
                                                   std::to_string(nt->args.size()) +
                                                   " argument(s)");
      for (const Expression& a : nt->args) expression(a, visible);
    } else {
      const auto& alt = std::get<Alternative>(v);
      reducible(alt.left, visible);
      reducible(alt.right, visible);
    }
  }

  void pattern(const Pattern& p, std::set<std::string>& bound) {
    const auto& v = p.node().value;
    if (const auto* c = std::get_if<Concatenation>(&v)) {
      pattern(c->first, bound);
      pattern(c->second, bound);
    } else if (const auto* np = std::get_if<NamedPattern>(&v)) {
      reducible(np->inner, bound);
      if (!bound.insert(np->variable).second)
        report(DiagnosticCode::variable_shadowing,
               "variable '" + np->variable + "' is already bound in this pattern");
    }
  }

  void expression(const Expression& e, const std::set<std::string>& bound) {
    const auto& v = e.node().value;
    if (const auto* ref = std::get_if<VarRef>(&v)) {
      if (bound.count(ref->name) == 0)
        report(DiagnosticCode::unbound_variable, "variable '" + ref->name + "' is not bound here");
    } else if (const auto* a = std::get_if<ArgRef>(&v)) {
      const auto& params = rule_->params;
      if (std::find(params.begin(), params.end(), a->name) == params.end())
        report(DiagnosticCode::unbound_variable,
               "'" + a->name + "' is not an argument of rule '" + rule_->name + "'");
    } else if (const auto* b = std::get_if<BinaryOp>(&v)) {
      expression(b->left, bound);
      expression(b->right, bound);
    } else if (const auto* c = std::get_if<Call>(&v)) {
      auto it = builtins_.find(c->function);
      if (it == builtins_.end())
        report(DiagnosticCode::unknown_builtin, "no builtin named '" + c->function + "'");
      else if (it->second != c->args.size())
        report(DiagnosticCode::arity_mismatch, "builtin '" + c->function + "' takes " +
                                                   std::to_string(it->second) + " argument(s)");
      for (const Expression& a : c->args) expression(a, bound);
    }
  }

  const Grammar& g_;
  const BuiltinSignatures& builtins_;
  std::map<std::string, std::set<std::size_t>> arities_;
  const Rule* rule_ = nullptr;
  std::vector<Diagnostic> out_;
};

}  // namespace

std::vector<Diagnostic> validate_grammar(const Grammar& g, const BuiltinSignatures& builtins) {
  return Validator(g, builtins).run();
}

std::vector<Diagnostic> validate_grammar(const Grammar& g) {
  return validate_grammar(g, standard_builtins().signatures());
}

std::set<std::string> detect_left_recursion(const Grammar& g) {
  std::set<std::string> names;
  const auto graph = detail::leftmost_graph(g);
  for (const auto& component : detail::recursive_components(g, graph))
    names.insert(component.begin(), component.end());
  return names;
}

std::vector<Diagnostic> left_recursion_warnings(const Grammar& g) {
  std::vector<Diagnostic> out;
  for (const std::string& name : detect_left_recursion(g))
    out.push_back(Diagnostic{Severity::warning, name,
                             "rule '" + name + "' is left-recursive; top-down parsing will not "
                             "terminate on it",
                             DiagnosticCode::left_recursion});
  return out;
}

}  // namespace fbnf
