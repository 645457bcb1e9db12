#pragma once

// Leftmost-reference analysis shared by validation and the left-recursion
// transform.

#include <map>
#include <set>
#include <string>
#include <vector>

#include "fbnf/grammar.hpp"

namespace fbnf::detail {

// Rule names whose derivation can consume nothing (any arity, arguments ignored).
std::set<std::string> nullable_rules(const Grammar& g);

bool nullable(const Reducible& r, const std::set<std::string>& nullable_names);
bool nullable(const Pattern& p, const std::set<std::string>& nullable_names);

// NonTerminal names reachable from r before any input is consumed.
void leftmost_refs(const Reducible& r, const std::set<std::string>& nullable_names,
                   std::set<std::string>& out);

using LeftmostGraph = std::map<std::string, std::set<std::string>>;

LeftmostGraph leftmost_graph(const Grammar& g);

// Strongly connected components that contain a cycle (size > 1 or a
// self-loop), each sorted, in order of their first member's first rule.
std::vector<std::vector<std::string>> recursive_components(const Grammar& g,
                                                           const LeftmostGraph& graph);

}  // namespace fbnf::detail
