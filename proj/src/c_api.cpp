#include "fbnf.h"

#include <algorithm>
#include <cstring>
#include <new>
#include <string>
#include <vector>

#include "fbnf/calculators.hpp"
#include "fbnf/engine.hpp"
#include "fbnf/format.hpp"
#include "fbnf/spl.hpp"
#include "fbnf/validate.hpp"

struct fbnf_config {
  fbnf::FeatureConfig config;
  std::vector<std::string> features;  // sorted copy of config.enabled
  std::vector<std::string> warnings;
};

struct fbnf_grammar {
  fbnf::Grammar grammar;
};

struct fbnf_diagnostics {
  std::vector<fbnf::Diagnostic> items;
  std::vector<std::string> codes;
};

namespace {

thread_local std::string last_error;

fbnf_status fail(fbnf_status status, std::string message) {
  last_error = std::move(message);
  return status;
}

fbnf_status succeed() {
  last_error.clear();
  return FBNF_OK;
}

// Exceptions must not cross the C boundary.
template <class F>
fbnf_status guarded(F&& body) {
  try {
    return body();
  } catch (const fbnf::ConfigError& e) {
    return fail(FBNF_MALFORMED_CONFIG, e.what());
  } catch (const fbnf::FilterError& e) {
    return fail(FBNF_FILTER_BROKE_GRAMMAR, e.what());
  } catch (const std::bad_alloc&) {
    return fail(FBNF_INTERNAL_ERROR, "out of memory");
  } catch (const std::exception& e) {
    return fail(FBNF_INTERNAL_ERROR, e.what());
  } catch (...) {
    return fail(FBNF_INTERNAL_ERROR, "unknown failure");
  }
}

fbnf_config* wrap(fbnf::FeatureConfig config, std::vector<std::string> warnings) {
  std::vector<std::string> features(config.enabled.begin(), config.enabled.end());
  return new fbnf_config{std::move(config), std::move(features), std::move(warnings)};
}

size_t copy_out(const std::string& s, char* buffer, size_t capacity) {
  if (buffer && capacity > 0) {
    const size_t n = std::min(s.size(), capacity - 1);
    std::memcpy(buffer, s.data(), n);
    buffer[n] = '\0';
  }
  return s.size();
}

const std::vector<std::string>& features_of_pool() {
  static const std::vector<std::string> names = fbnf::pool_features(fbnf::calculator_pool());
  return names;
}

}  // namespace

extern "C" {

const char* fbnf_last_error(void) { return last_error.c_str(); }

const char* fbnf_status_name(fbnf_status status) {
  switch (status) {
    case FBNF_OK: return "OK";
    case FBNF_SYNTAX_ERROR: return "SYNTAX_ERROR";
    case FBNF_BUDGET_EXCEEDED: return "BUDGET_EXCEEDED";
    case FBNF_INVALID_ARGUMENT: return "INVALID_ARGUMENT";
    case FBNF_MALFORMED_CONFIG: return "MALFORMED_CONFIG";
    case FBNF_UNKNOWN_PRODUCT: return "UNKNOWN_PRODUCT";
    case FBNF_FILTER_BROKE_GRAMMAR: return "FILTER_BROKE_GRAMMAR";
    case FBNF_INTERNAL_ERROR: return "INTERNAL_ERROR";
  }
  return "UNKNOWN";
}

fbnf_status fbnf_config_parse(const char* text, size_t length, fbnf_config** out) {
  if ((!text && length > 0) || !out) return fail(FBNF_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    auto loaded = fbnf::load_config(std::string_view(text ? text : "", length));
    std::vector<std::string> warnings;
    for (const auto& w : loaded.warnings)
      warnings.push_back("line " + std::to_string(w.line) + ": " + w.message);
    *out = wrap(std::move(loaded.config), std::move(warnings));
    return succeed();
  });
}

fbnf_status fbnf_config_preset(const char* product, fbnf_config** out) {
  if (!product || !out) return fail(FBNF_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    auto config = fbnf::product_preset(product);
    if (!config) {
      std::string known;
      for (const auto& name : fbnf::product_preset_names())
        known += (known.empty() ? "" : ", ") + name;
      return fail(FBNF_UNKNOWN_PRODUCT,
                  "unknown product '" + std::string(product) + "' (expected one of " + known + ")");
    }
    *out = wrap(std::move(*config), {});
    return succeed();
  });
}

void fbnf_config_free(fbnf_config* config) { delete config; }

const char* fbnf_config_product(const fbnf_config* config) {
  return config ? config->config.product_name.c_str() : nullptr;
}

size_t fbnf_config_feature_count(const fbnf_config* config) {
  return config ? config->features.size() : 0;
}

const char* fbnf_config_feature(const fbnf_config* config, size_t index) {
  if (!config || index >= config->features.size()) return nullptr;
  return config->features[index].c_str();
}

size_t fbnf_config_warning_count(const fbnf_config* config) {
  return config ? config->warnings.size() : 0;
}

const char* fbnf_config_warning(const fbnf_config* config, size_t index) {
  if (!config || index >= config->warnings.size()) return nullptr;
  return config->warnings[index].c_str();
}

size_t fbnf_pool_feature_count(void) { return features_of_pool().size(); }

const char* fbnf_pool_feature(size_t index) {
  const auto& names = features_of_pool();
  return index < names.size() ? names[index].c_str() : nullptr;
}

fbnf_status fbnf_product_build(const fbnf_config* config, fbnf_grammar** out) {
  if (!config || !out) return fail(FBNF_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    *out = new fbnf_grammar{fbnf::build_product(config->config)};
    return succeed();
  });
}

void fbnf_grammar_free(fbnf_grammar* grammar) { delete grammar; }

fbnf_status fbnf_grammar_eval(const fbnf_grammar* grammar, const char* text, size_t length,
                              double* value) {
  if (!grammar || (!text && length > 0) || !value)
    return fail(FBNF_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    const auto outcome = fbnf::parse_full(grammar->grammar, std::string_view(text ? text : "", length));
    if (outcome.ok()) {
      *value = outcome.value();
      return succeed();
    }
    if (outcome.budget_exceeded())
      return fail(FBNF_BUDGET_EXCEEDED, "parse exceeded its step budget");
    return fail(FBNF_SYNTAX_ERROR, "Syntax Error");
  });
}

size_t fbnf_grammar_describe(const fbnf_grammar* grammar, char* buffer, size_t capacity) {
  if (!grammar) return copy_out("", buffer, capacity);
  return copy_out(fbnf::to_string(grammar->grammar), buffer, capacity);
}

fbnf_status fbnf_product_check(const fbnf_config* config, fbnf_diagnostics** out) {
  if (!config || !out) return fail(FBNF_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    const fbnf::Grammar product = fbnf::select_rules(fbnf::calculator_pool(), config->config);
    auto items = fbnf::validate_grammar(product);
    for (auto& w : fbnf::left_recursion_warnings(product)) items.push_back(std::move(w));
    std::vector<std::string> codes;
    for (const auto& d : items) codes.emplace_back(fbnf::code_name(d.code));
    *out = new fbnf_diagnostics{std::move(items), std::move(codes)};
    return succeed();
  });
}

void fbnf_diagnostics_free(fbnf_diagnostics* diagnostics) { delete diagnostics; }

size_t fbnf_diagnostics_count(const fbnf_diagnostics* diagnostics) {
  return diagnostics ? diagnostics->items.size() : 0;
}

size_t fbnf_diagnostics_error_count(const fbnf_diagnostics* diagnostics) {
  if (!diagnostics) return 0;
  return static_cast<size_t>(
      std::count_if(diagnostics->items.begin(), diagnostics->items.end(),
                    [](const auto& d) { return d.severity == fbnf::Severity::error; }));
}

fbnf_severity fbnf_diagnostic_severity(const fbnf_diagnostics* diagnostics, size_t index) {
  if (!diagnostics || index >= diagnostics->items.size()) return FBNF_SEVERITY_ERROR;
  return diagnostics->items[index].severity == fbnf::Severity::error ? FBNF_SEVERITY_ERROR
                                                                     : FBNF_SEVERITY_WARNING;
}

const char* fbnf_diagnostic_code(const fbnf_diagnostics* diagnostics, size_t index) {
  if (!diagnostics || index >= diagnostics->items.size()) return nullptr;
  return diagnostics->codes[index].c_str();
}

const char* fbnf_diagnostic_rule(const fbnf_diagnostics* diagnostics, size_t index) {
  if (!diagnostics || index >= diagnostics->items.size()) return nullptr;
  const auto& rule = diagnostics->items[index].rule;
  return rule ? rule->c_str() : nullptr;
}

const char* fbnf_diagnostic_message(const fbnf_diagnostics* diagnostics, size_t index) {
  if (!diagnostics || index >= diagnostics->items.size()) return nullptr;
  return diagnostics->items[index].message.c_str();
}

size_t fbnf_format_value(double value, char* buffer, size_t capacity) {
  return copy_out(fbnf::format_value(value), buffer, capacity);
}

}  // extern "C"
