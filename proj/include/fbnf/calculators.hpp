#pragma once

// The calculator product line: one rule pool, four named products.
//
//   feature       adds
//   (none)        + - * /, parentheses, decimal numbers such as 12.5
//   scientific    sin(x), cos(x), tan(x), radians
//   financial     postfix percent: 10% == 0.1, binds tighter than + and -
//   hexadecimal   integers in base 16 with digits 0-9 and A-F (uppercase)
//
// Hexadecimal integers are tried before decimal ones, so under that feature
// "10" reads as sixteen. Fractions stay decimal: the hex product still reads
// "1.5" as one and a half, since features only ever add rules.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "fbnf/grammar.hpp"
#include "fbnf/spl.hpp"

namespace fbnf {

Grammar calculator_pool();

// filter_by_features(calculator_pool(), config). Throws FilterError.
Grammar build_product(const FeatureConfig& config);

// Presets: basic, scientific, financial, hex.
std::optional<FeatureConfig> product_preset(std::string_view name);
std::vector<std::string> product_preset_names();

}  // namespace fbnf
