#include "fbnf/oracle.hpp"

#include <vector>

namespace fbnf {

namespace {

std::optional<double> eager_decide(Engine& engine, const Reducible& start, std::string_view text) {
  engine.reset_steps();
  const auto results = engine.collect_reducible(start, text);
  for (const ReducibleResult& r : results)
    if (r.residue == text.size()) return r.value;
  return std::nullopt;
}

std::optional<double> decide(const Grammar& g, const Reducible& start, std::string_view text,
                             const OracleOptions& options) {
  if (!options.max_depth) {
    Engine engine(g, options.limits);
    return eager_decide(engine, start, text);
  }
  for (std::size_t depth = 1; depth <= *options.max_depth; ++depth) {
    EngineLimits limits = options.limits;
    limits.depth_cap = depth;
    Engine engine(g, limits);
    if (auto v = eager_decide(engine, start, text)) return v;
  }
  return std::nullopt;
}

}  // namespace

std::optional<double> oracle_parse(const Grammar& g, std::string_view text,
                                   const OracleOptions& options) {
  return decide(g, ref(g.start()), text, options);
}

std::map<std::string, double> accepted_strings_oracle(const Grammar& g, std::string_view alphabet,
                                                      std::size_t max_len,
                                                      const OracleOptions& options) {
  std::map<std::string, double> accepted;
  const Reducible start = ref(g.start());
  std::string text;
  // Odometer over alphabet^len for each length.
  for (std::size_t len = 0; len <= max_len; ++len) {
    if (len > 0 && alphabet.empty()) break;
    std::vector<std::size_t> digits(len, 0);
    while (true) {
      text.assign(len, '\0');
      for (std::size_t i = 0; i < len; ++i) text[i] = alphabet[digits[i]];
      if (auto v = decide(g, start, text, options)) accepted.emplace(text, *v);
      std::size_t i = len;
      while (i > 0 && ++digits[i - 1] == alphabet.size()) digits[--i] = 0;
      if (i == 0) break;
    }
  }
  return accepted;
}

}  // namespace fbnf
