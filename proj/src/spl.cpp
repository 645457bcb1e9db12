#include "fbnf/spl.hpp"

#include <cctype>
#include <optional>
#include <sstream>

namespace fbnf {

bool is_identifier(std::string_view s) {
  if (s.empty()) return false;
  auto head = static_cast<unsigned char>(s.front());
  if (!std::isalpha(head) && head != '_') return false;
  for (char c : s) {
    auto u = static_cast<unsigned char>(c);
    if (!std::isalnum(u) && u != '_') return false;
  }
  return true;
}

namespace {

std::vector<std::string_view> split_words(std::string_view line) {
  std::vector<std::string_view> words;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    std::size_t j = i;
    while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
    if (j > i) words.push_back(line.substr(i, j - i));
    i = j;
  }
  return words;
}

}  // namespace

LoadedConfig load_config(std::string_view text) {
  LoadedConfig out;
  std::optional<std::string> product;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;

    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    const auto words = split_words(line);
    if (words.empty()) continue;

    const std::string_view key = words[0];
    if (key != "product" && key != "feature")
      throw ConfigError(line_no, "unknown key '" + std::string(key) + "'");
    if (words.size() != 2)
      throw ConfigError(line_no, "'" + std::string(key) + "' takes exactly one identifier");
    if (!is_identifier(words[1]))
      throw ConfigError(line_no, "'" + std::string(words[1]) + "' is not an identifier");

    if (key == "product") {
      if (product) throw ConfigError(line_no, "product declared more than once");
      product = std::string(words[1]);
    } else {
      if (!product) throw ConfigError(line_no, "the first entry must be 'product <name>'");
      if (!out.config.enabled.insert(std::string(words[1])).second)
        out.warnings.push_back(
            {line_no, "feature '" + std::string(words[1]) + "' listed more than once"});
    }
  }
  if (!product) throw ConfigError(line_no == 0 ? 1 : line_no, "missing 'product <name>' line");
  out.config.product_name = std::move(*product);
  return out;
}

namespace {

std::string describe(const std::string& product, const std::vector<Diagnostic>& diagnostics) {
  std::ostringstream s;
  s << "product '" << product << "' does not validate";
  for (const auto& d : diagnostics)
    if (d.severity == Severity::error) s << "; " << to_string(d);
  return s.str();
}

}  // namespace

FilterError::FilterError(std::string product, std::vector<Diagnostic> diagnostics)
    : Error(ErrorCode::filter_broke_grammar, describe(product, diagnostics)),
      diagnostics_(std::move(diagnostics)) {}

Grammar select_rules(const Grammar& pool, const FeatureConfig& config) {
  std::vector<Rule> kept;
  for (const Rule& r : pool.rules())
    if (!r.feature || config.enabled.count(*r.feature)) kept.push_back(r);
  return Grammar(pool.name(), pool.start(), std::move(kept));
}

Grammar filter_by_features(const Grammar& pool, const FeatureConfig& config) {
  Grammar product = select_rules(pool, config);
  auto diagnostics = validate_grammar(product);
  if (has_errors(diagnostics)) throw FilterError(config.product_name, std::move(diagnostics));
  return product;
}

std::vector<std::string> pool_features(const Grammar& pool) {
  std::set<std::string> names;
  for (const Rule& r : pool.rules())
    if (r.feature) names.insert(*r.feature);
  return {names.begin(), names.end()};
}

}  // namespace fbnf
