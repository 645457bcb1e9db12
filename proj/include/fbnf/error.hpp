#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace fbnf {

struct Diagnostic;

enum class ErrorCode {
  indirect_left_recursion,
  unsupported_shape,
  filter_broke_grammar,
  malformed_config,
  budget_exceeded,
  invalid_grammar,
};

const char* code_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(code_name(code)) + ": " + message), code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

// Raised by eliminate_left_recursion; carries the offending rule names.
class TransformError : public Error {
 public:
  TransformError(ErrorCode code, std::vector<std::string> rules, const std::string& message)
      : Error(code, message), rules_(std::move(rules)) {}

  const std::vector<std::string>& rules() const { return rules_; }

 private:
  std::vector<std::string> rules_;
};

class ConfigError : public Error {
 public:
  ConfigError(std::size_t line, const std::string& message)
      : Error(ErrorCode::malformed_config, "line " + std::to_string(line) + ": " + message),
        line_(line) {}

  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

// Evaluation hit a name validation should have rejected. Never a syntax error.
class EngineDefect : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace fbnf
