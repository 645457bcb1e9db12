#include "fbnf/transform.hpp"

#include <map>
#include <set>
#include <stdexcept>

#include "analysis.hpp"
#include "fbnf/error.hpp"
#include "fbnf/validate.hpp"

namespace fbnf {

namespace {

constexpr const char* kAccumulator = "acc";

void flatten(const Pattern& p, std::vector<Pattern>& out) {
  if (const auto* c = std::get_if<Concatenation>(&p.node().value)) {
    flatten(c->first, out);
    flatten(c->second, out);
  } else {
    out.push_back(p);
  }
}

void bound_vars(const Pattern& p, std::set<std::string>& out) {
  const auto& v = p.node().value;
  if (const auto* c = std::get_if<Concatenation>(&v)) {
    bound_vars(c->first, out);
    bound_vars(c->second, out);
  } else if (const auto* np = std::get_if<NamedPattern>(&v)) {
    out.insert(np->variable);
  }
}

// Replaces variable `name` with the accumulator argument.
Expression to_accumulator(const Expression& e, const std::string& name) {
  const auto& v = e.node().value;
  if (const auto* ref = std::get_if<VarRef>(&v)) return ref->name == name ? arg(kAccumulator) : e;
  if (const auto* b = std::get_if<BinaryOp>(&v))
    return Expression({BinaryOp{b->op, to_accumulator(b->left, name),
                                to_accumulator(b->right, name)}});
  if (const auto* c = std::get_if<Call>(&v)) {
    std::vector<Expression> args;
    for (const Expression& a : c->args) args.push_back(to_accumulator(a, name));
    return call(c->function, std::move(args));
  }
  return e;
}

Reducible to_accumulator(const Reducible& r, const std::string& name);

// Only NonTerminal arguments see the pattern's variables; nested
// PatternValues open a fresh scope and are left alone.
Pattern to_accumulator(const Pattern& p, const std::string& name) {
  const auto& v = p.node().value;
  if (const auto* c = std::get_if<Concatenation>(&v))
    return concat(to_accumulator(c->first, name), to_accumulator(c->second, name));
  if (const auto* np = std::get_if<NamedPattern>(&v))
    return bind(np->variable, to_accumulator(np->inner, name));
  return p;
}

Reducible to_accumulator(const Reducible& r, const std::string& name) {
  const auto& v = r.node().value;
  if (const auto* nt = std::get_if<NonTerminal>(&v)) {
    std::vector<Expression> args;
    for (const Expression& a : nt->args) args.push_back(to_accumulator(a, name));
    return ref(nt->rule, std::move(args));
  }
  if (const auto* alt = std::get_if<Alternative>(&v))
    return choice(to_accumulator(alt->left, name), to_accumulator(alt->right, name));
  return r;
}

// (m=X) {m}  ->  X
Reducible unwrap_identity(const Reducible& r) {
  const auto* pv = std::get_if<PatternValue>(&r.node().value);
  if (!pv) return r;
  const auto* np = std::get_if<NamedPattern>(&pv->pattern.node().value);
  const auto* result = std::get_if<VarRef>(&pv->result.node().value);
  if (np && result && result->name == np->variable) return np->inner;
  return r;
}

std::string fresh(const std::string& base, const std::set<std::string>& taken) {
  if (taken.count(base) == 0) return base;
  for (int i = 2;; ++i) {
    std::string candidate = base + std::to_string(i);
    if (taken.count(candidate) == 0) return candidate;
  }
}

struct RecursiveBody {
  std::string variable;
  std::optional<Pattern> tail;
  Expression result;
  std::optional<std::string> feature;
};

[[noreturn]] void unsupported(const std::string& rule, const std::string& why) {
  throw TransformError(ErrorCode::unsupported_shape, {rule}, "rule '" + rule + "': " + why);
}

RecursiveBody split_recursive(const Rule& r, const std::set<std::string>& nullable_names) {
  const auto* pv = std::get_if<PatternValue>(&r.body.node().value);
  if (!pv) unsupported(r.name, "left-recursive body must be a pattern with a value");
  std::vector<Pattern> parts;
  flatten(pv->pattern, parts);
  const auto* head = std::get_if<NamedPattern>(&parts.front().node().value);
  const auto* self = head ? std::get_if<NonTerminal>(&head->inner.node().value) : nullptr;
  if (!self || self->rule != r.name || !self->args.empty())
    unsupported(r.name, "left-recursive body must start with a binding of '" + r.name + "'");
  RecursiveBody out{head->variable, std::nullopt, pv->result, r.feature};
  if (parts.size() > 1) {
    out.tail = seq(std::vector<Pattern>(parts.begin() + 1, parts.end()));
    if (detail::nullable(*out.tail, nullable_names))
      unsupported(r.name, "the part after the recursive reference may match the empty string");
  } else {
    unsupported(r.name, "body consists of the recursive reference alone");
  }
  return out;
}

std::vector<Rule> rewrite_group(const Grammar& g, const std::string& name,
                                const std::set<std::string>& nullable_names,
                                std::set<std::string>& taken) {
  std::vector<RecursiveBody> recursive;
  std::vector<const Rule*> bases;
  for (const Rule& r : g.rules()) {
    if (r.name != name) continue;
    if (r.arity() != 0) unsupported(name, "left-recursive rules with arguments are not supported");
    std::set<std::string> refs;
    detail::leftmost_refs(r.body, nullable_names, refs);
    if (refs.count(name))
      recursive.push_back(split_recursive(r, nullable_names));
    else
      bases.push_back(&r);
  }
  if (bases.empty()) unsupported(name, "no non-recursive alternative");

  const std::string suffix = fresh(name + "Suffix", taken);
  taken.insert(suffix);

  const std::string head_var = recursive.front().variable;
  std::set<std::string> used{head_var};
  for (const auto& body : recursive)
    if (body.tail) bound_vars(*body.tail, used);
  const std::string rest_var = fresh("s", used);

  std::vector<Rule> out;
  for (const Rule* base : bases) {
    Rule r = rule(name, value(seq(bind(head_var, unwrap_identity(base->body)),
                                  bind(rest_var, ref(suffix, {var(head_var)}))),
                              var(rest_var)));
    r.feature = base->feature;
    out.push_back(std::move(r));
  }
  for (const auto& body : recursive) {
    std::vector<Pattern> parts;
    flatten(to_accumulator(*body.tail, body.variable), parts);
    parts.push_back(bind(rest_var, ref(suffix, {to_accumulator(body.result, body.variable)})));
    Rule r = rule(suffix, {kAccumulator}, value(seq(std::move(parts)), var(rest_var)));
    r.feature = body.feature;
    out.push_back(std::move(r));
  }
  out.push_back(rule(suffix, {kAccumulator}, value(empty(), arg(kAccumulator))));
  return out;
}

}  // namespace

Grammar eliminate_left_recursion(const Grammar& g) {
  const auto diagnostics = validate_grammar(g);
  if (has_errors(diagnostics))
    throw std::invalid_argument("grammar '" + g.name() + "' does not validate: " +
                                to_string(diagnostics.front()));

  const auto graph = detail::leftmost_graph(g);
  const auto components = detail::recursive_components(g, graph);
  if (components.empty()) return g;

  for (const auto& component : components) {
    if (component.size() > 1) {
      std::string names;
      for (const auto& n : component) names += (names.empty() ? "" : ", ") + n;
      throw TransformError(ErrorCode::indirect_left_recursion, component,
                           "left recursion through several rules: " + names);
    }
  }

  const auto nullable_names = detail::nullable_rules(g);
  std::set<std::string> taken;
  for (const Rule& r : g.rules()) taken.insert(r.name);

  std::map<std::string, std::vector<Rule>> replacements;
  for (const auto& component : components)
    replacements.emplace(component.front(),
                         rewrite_group(g, component.front(), nullable_names, taken));

  std::vector<Rule> rules;
  for (const Rule& r : g.rules()) {
    auto it = replacements.find(r.name);
    if (it == replacements.end()) {
      rules.push_back(r);
    } else if (!it->second.empty()) {
      for (Rule& replacement : it->second) rules.push_back(std::move(replacement));
      it->second.clear();
    }
  }

  Grammar out(g.name(), g.start(), std::move(rules));
  if (auto left = detect_left_recursion(out); !left.empty())
    unsupported(*left.begin(), "left recursion remains after rewriting");
  return out;
}

}  // namespace fbnf
