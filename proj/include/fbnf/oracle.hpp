#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>

#include "fbnf/engine.hpp"

namespace fbnf {

struct OracleOptions {
  EngineLimits limits{};
  // Enumerate with increasing rule-depth caps 1..max_depth and take the
  // first complete derivation at the smallest depth that has one. Needed
  // for left-recursive grammars; leave unset otherwise.
  std::optional<std::size_t> max_depth;
};

// Every string over `alphabet` of length 0..max_len that the grammar
// accepts, with its value. Each string is decided by collecting all
// derivations eagerly and picking the first one that consumes the whole
// input. Throws BudgetExceeded if any single string exhausts the limits.
std::map<std::string, double> accepted_strings_oracle(const Grammar& g, std::string_view alphabet,
                                                      std::size_t max_len,
                                                      const OracleOptions& options = {});

// The decision for one string, by the same eager procedure.
std::optional<double> oracle_parse(const Grammar& g, std::string_view text,
                                   const OracleOptions& options = {});

}  // namespace fbnf
