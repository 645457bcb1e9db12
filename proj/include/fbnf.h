/*
 * C interface to the functional-BNF calculator engine.
 *
 * Handles are opaque and owned by the caller; release each with its _free
 * function. Functions returning fbnf_status leave a description of the
 * last failure, per thread, in fbnf_last_error().
 */
#ifndef FBNF_H
#define FBNF_H

#include <stddef.h>

#if defined(_WIN32)
#  if defined(FBNF_BUILDING_LIBRARY)
#    define FBNF_API __declspec(dllexport)
#  else
#    define FBNF_API __declspec(dllimport)
#  endif
#else
#  define FBNF_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum fbnf_status {
  FBNF_OK = 0,
  FBNF_SYNTAX_ERROR = 1,         /* input is not in the product's language */
  FBNF_BUDGET_EXCEEDED = 2,      /* parse gave up; also a syntax error for display */
  FBNF_INVALID_ARGUMENT = 3,     /* null pointer, index out of range */
  FBNF_MALFORMED_CONFIG = 4,
  FBNF_UNKNOWN_PRODUCT = 5,
  FBNF_FILTER_BROKE_GRAMMAR = 6, /* configuration leaves the grammar invalid */
  FBNF_INTERNAL_ERROR = 7
} fbnf_status;

typedef enum fbnf_severity { FBNF_SEVERITY_ERROR = 0, FBNF_SEVERITY_WARNING = 1 } fbnf_severity;

typedef struct fbnf_config fbnf_config;
typedef struct fbnf_grammar fbnf_grammar;
typedef struct fbnf_diagnostics fbnf_diagnostics;

FBNF_API const char* fbnf_last_error(void);
FBNF_API const char* fbnf_status_name(fbnf_status status);

/* ---- configurations ---- */

/* Parses the configuration file format ("product <name>", "feature <name>"). */
FBNF_API fbnf_status fbnf_config_parse(const char* text, size_t length, fbnf_config** out);
/* One of "basic", "scientific", "financial", "hex". */
FBNF_API fbnf_status fbnf_config_preset(const char* product, fbnf_config** out);
FBNF_API void fbnf_config_free(fbnf_config* config);

FBNF_API const char* fbnf_config_product(const fbnf_config* config);
FBNF_API size_t fbnf_config_feature_count(const fbnf_config* config);
/* Enabled features in sorted order; NULL when out of range. */
FBNF_API const char* fbnf_config_feature(const fbnf_config* config, size_t index);
/* Non-fatal remarks from parsing, such as repeated features. */
FBNF_API size_t fbnf_config_warning_count(const fbnf_config* config);
FBNF_API const char* fbnf_config_warning(const fbnf_config* config, size_t index);

/* ---- the feature pool ---- */

FBNF_API size_t fbnf_pool_feature_count(void);
FBNF_API const char* fbnf_pool_feature(size_t index);

/* ---- products ---- */

/* Assembles the product grammar the configuration selects. */
FBNF_API fbnf_status fbnf_product_build(const fbnf_config* config, fbnf_grammar** out);
FBNF_API void fbnf_grammar_free(fbnf_grammar* grammar);

/* Parses and evaluates `length` bytes of `text`. On FBNF_OK stores the value.
 * FBNF_SYNTAX_ERROR and FBNF_BUDGET_EXCEEDED both mean "Syntax Error". */
FBNF_API fbnf_status fbnf_grammar_eval(const fbnf_grammar* grammar, const char* text,
                                       size_t length, double* value);

/* Writes the rule listing, NUL-terminated, truncating to `capacity`.
 * Returns the full length excluding the terminator. */
FBNF_API size_t fbnf_grammar_describe(const fbnf_grammar* grammar, char* buffer, size_t capacity);

/* Validation and left-recursion diagnostics for the configuration's product.
 * Succeeds even when the product has errors; inspect the diagnostics. */
FBNF_API fbnf_status fbnf_product_check(const fbnf_config* config, fbnf_diagnostics** out);
FBNF_API void fbnf_diagnostics_free(fbnf_diagnostics* diagnostics);
FBNF_API size_t fbnf_diagnostics_count(const fbnf_diagnostics* diagnostics);
FBNF_API size_t fbnf_diagnostics_error_count(const fbnf_diagnostics* diagnostics);
FBNF_API fbnf_severity fbnf_diagnostic_severity(const fbnf_diagnostics* diagnostics, size_t index);
/* Machine-readable code such as "ARITY_MISMATCH". */
FBNF_API const char* fbnf_diagnostic_code(const fbnf_diagnostics* diagnostics, size_t index);
/* Rule name, or NULL for grammar-level diagnostics. */
FBNF_API const char* fbnf_diagnostic_rule(const fbnf_diagnostics* diagnostics, size_t index);
FBNF_API const char* fbnf_diagnostic_message(const fbnf_diagnostics* diagnostics, size_t index);

/* ---- display ---- */

/* Calculator display text: shortest round-trip decimal, "7" rather than
 * "7.0". Same truncation contract as fbnf_grammar_describe. */
FBNF_API size_t fbnf_format_value(double value, char* buffer, size_t capacity);

#ifdef __cplusplus
}
#endif

#endif /* FBNF_H */
