#include "analysis.hpp"

#include <algorithm>
#include <functional>

namespace fbnf::detail {

bool nullable(const Pattern& p, const std::set<std::string>& names) {
  const auto& v = p.node().value;
  if (std::holds_alternative<Terminal>(v)) return false;
  if (std::holds_alternative<Empty>(v)) return true;
  if (const auto* c = std::get_if<Concatenation>(&v))
    return nullable(c->first, names) && nullable(c->second, names);
  return nullable(std::get<NamedPattern>(v).inner, names);
}

bool nullable(const Reducible& r, const std::set<std::string>& names) {
  const auto& v = r.node().value;
  if (const auto* pv = std::get_if<PatternValue>(&v)) return nullable(pv->pattern, names);
  if (const auto* nt = std::get_if<NonTerminal>(&v)) return names.count(nt->rule) > 0;
  const auto& alt = std::get<Alternative>(v);
  return nullable(alt.left, names) || nullable(alt.right, names);
}

std::set<std::string> nullable_rules(const Grammar& g) {
  std::set<std::string> names;
  for (bool changed = true; changed;) {
    changed = false;
    for (const Rule& r : g.rules()) {
      if (names.count(r.name) == 0 && nullable(r.body, names)) {
        names.insert(r.name);
        changed = true;
      }
    }
  }
  return names;
}

namespace {

void leftmost_refs(const Pattern& p, const std::set<std::string>& names,
                   std::set<std::string>& out) {
  const auto& v = p.node().value;
  if (const auto* c = std::get_if<Concatenation>(&v)) {
    leftmost_refs(c->first, names, out);
    if (nullable(c->first, names)) leftmost_refs(c->second, names, out);
  } else if (const auto* np = std::get_if<NamedPattern>(&v)) {
    detail::leftmost_refs(np->inner, names, out);
  }
}

}  // namespace

void leftmost_refs(const Reducible& r, const std::set<std::string>& names,
                   std::set<std::string>& out) {
  const auto& v = r.node().value;
  if (const auto* pv = std::get_if<PatternValue>(&v)) {
    leftmost_refs(pv->pattern, names, out);
  } else if (const auto* nt = std::get_if<NonTerminal>(&v)) {
    out.insert(nt->rule);
  } else {
    const auto& alt = std::get<Alternative>(v);
    leftmost_refs(alt.left, names, out);
    leftmost_refs(alt.right, names, out);
  }
}

LeftmostGraph leftmost_graph(const Grammar& g) {
  const auto names = nullable_rules(g);
  LeftmostGraph graph;
  for (const Rule& r : g.rules()) leftmost_refs(r.body, names, graph[r.name]);
  return graph;
}

std::vector<std::vector<std::string>> recursive_components(const Grammar& g,
                                                           const LeftmostGraph& graph) {
  // Tarjan over the rule names, visited in first-appearance order.
  std::vector<std::string> order;
  for (const Rule& r : g.rules())
    if (std::find(order.begin(), order.end(), r.name) == order.end()) order.push_back(r.name);

  std::map<std::string, int> index, low;
  std::set<std::string> on_stack;
  std::vector<std::string> stack;
  std::vector<std::vector<std::string>> components;
  int counter = 0;

  std::function<void(const std::string&)> connect = [&](const std::string& v) {
    index[v] = low[v] = counter++;
    stack.push_back(v);
    on_stack.insert(v);
    auto edges = graph.find(v);
    if (edges != graph.end()) {
      for (const std::string& w : edges->second) {
        if (graph.count(w) == 0) continue;  // undefined nonterminal
        if (index.count(w) == 0) {
          connect(w);
          low[v] = std::min(low[v], low[w]);
        } else if (on_stack.count(w)) {
          low[v] = std::min(low[v], index[w]);
        }
      }
    }
    if (low[v] == index[v]) {
      std::vector<std::string> component;
      std::string w;
      do {
        w = stack.back();
        stack.pop_back();
        on_stack.erase(w);
        component.push_back(w);
      } while (w != v);
      const bool self_loop = graph.at(v).count(v) > 0;
      if (component.size() > 1 || self_loop) components.push_back(std::move(component));
    }
  };
  for (const std::string& name : order)
    if (index.count(name) == 0) connect(name);

  auto first_seen = [&](const std::vector<std::string>& c) {
    std::size_t best = order.size();
    for (const auto& name : c)
      best = std::min<std::size_t>(best, std::find(order.begin(), order.end(), name) - order.begin());
    return best;
  };
  for (auto& c : components) std::sort(c.begin(), c.end());
  std::sort(components.begin(), components.end(),
            [&](const auto& a, const auto& b) { return first_seen(a) < first_seen(b); });
  return components;
}

}  // namespace fbnf::detail
