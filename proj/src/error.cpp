#include "fbnf/error.hpp"

namespace fbnf {

const char* code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::indirect_left_recursion: return "INDIRECT_LEFT_RECURSION";
    case ErrorCode::unsupported_shape: return "UNSUPPORTED_SHAPE";
    case ErrorCode::filter_broke_grammar: return "FILTER_BROKE_GRAMMAR";
    case ErrorCode::malformed_config: return "MALFORMED_CONFIG";
    case ErrorCode::budget_exceeded: return "BUDGET_EXCEEDED";
    case ErrorCode::invalid_grammar: return "INVALID_GRAMMAR";
  }
  return "UNKNOWN";
}

}  // namespace fbnf
