#pragma once

// Feature-based variability over rule pools. A rule may carry one feature
// name; a configuration selects a product by enabling a set of features.

#include <cstddef>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "fbnf/error.hpp"
#include "fbnf/grammar.hpp"
#include "fbnf/validate.hpp"

namespace fbnf {

struct FeatureConfig {
  std::string product_name;
  std::set<std::string> enabled;

  bool operator==(const FeatureConfig&) const = default;
};

struct ConfigWarning {
  std::size_t line;
  std::string message;
};

struct LoadedConfig {
  FeatureConfig config;
  std::vector<ConfigWarning> warnings;
};

// Line format:
//
//   # comment            ('#' starts a comment anywhere on a line)
//   product <identifier> (first non-comment line, exactly once)
//   feature <identifier> (any number)
//
// Blank lines are ignored; a repeated feature is kept once with a warning.
// Throws ConfigError (MALFORMED_CONFIG) naming the offending line.
LoadedConfig load_config(std::string_view text);

// Filtering left the product grammar invalid (usually a rule it needs was
// guarded by a disabled feature).
class FilterError : public Error {
 public:
  FilterError(std::string product, std::vector<Diagnostic> diagnostics);

  const std::vector<Diagnostic>& diagnostics() const { return diagnostics_; }

 private:
  std::vector<Diagnostic> diagnostics_;
};

// Rules with no feature or an enabled one, in pool order. Does not validate.
Grammar select_rules(const Grammar& pool, const FeatureConfig& config);

// select_rules() followed by validation; throws FilterError
// (FILTER_BROKE_GRAMMAR) if the result has errors.
Grammar filter_by_features(const Grammar& pool, const FeatureConfig& config);

// Every feature named by some rule of the pool, sorted.
std::vector<std::string> pool_features(const Grammar& pool);

bool is_identifier(std::string_view s);

}  // namespace fbnf
