#pragma once

#include <string>

namespace fbnf {

// Calculator display text for a value: the shortest decimal string that
// round-trips to the same double, '.' as separator regardless of locale.
// Integral values carry no fractional part ("7", not "7.0").
std::string format_value(double value);

}  // namespace fbnf
