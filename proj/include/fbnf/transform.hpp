#pragma once

#include "fbnf/grammar.hpp"

namespace fbnf {

// Rewrites direct left recursion into tail recursion that threads the value
// computed so far through an accumulator argument. A rule group
//
//   R ::= (a=R, T1) {e1}      R ::= B1
//   R ::= (a=R, T2) {e2}      R ::= B2
//
// becomes
//
//   R ::= (a=B1, s=RSuffix(a)) {s}
//   R ::= (a=B2, s=RSuffix(a)) {s}
//   RSuffix(acc) ::= (T1, s=RSuffix(e1[a:=acc])) {s}
//   RSuffix(acc) ::= (T2, s=RSuffix(e2[a:=acc])) {s}
//   RSuffix(acc) ::= (<empty>) {acc}
//
// which keeps operators left-associative: "8-3-2" still means (8-3)-2.
// The new rules replace R's rules at the position of R's first rule; all
// other rules keep their order. A grammar without left recursion comes back
// unchanged.
//
// Throws TransformError with INDIRECT_LEFT_RECURSION when a leftmost cycle
// spans several rule names, and UNSUPPORTED_SHAPE when a recursive body is
// not of the form (a=R, ...) {e}, R takes arguments, or R has no base body.
// Throws std::invalid_argument if the grammar does not validate.
Grammar eliminate_left_recursion(const Grammar& g);

}  // namespace fbnf
