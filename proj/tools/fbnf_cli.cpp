// fbnf: calculator product line front end.
//
//   fbnf eval --product basic "1+2*3"        prints 7
//   fbnf eval --config my.cfg --repl         one result line per input line
//   fbnf check --config my.cfg               validation diagnostics
//   fbnf features                            features available in the pool
//
// Exit status: 0 success, 1 a batch expression was a Syntax Error (or check
// found errors), 2 usage or configuration error.

#include <fbnf.h>

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

namespace {

constexpr int kOk = 0;
constexpr int kSyntaxError = 1;
constexpr int kUsage = 2;

struct ConfigDeleter {
  void operator()(fbnf_config* c) const { fbnf_config_free(c); }
};
struct GrammarDeleter {
  void operator()(fbnf_grammar* g) const { fbnf_grammar_free(g); }
};
struct DiagnosticsDeleter {
  void operator()(fbnf_diagnostics* d) const { fbnf_diagnostics_free(d); }
};
using ConfigPtr = std::unique_ptr<fbnf_config, ConfigDeleter>;
using GrammarPtr = std::unique_ptr<fbnf_grammar, GrammarDeleter>;
using DiagnosticsPtr = std::unique_ptr<fbnf_diagnostics, DiagnosticsDeleter>;

struct ProductChoice {
  std::string product;
  std::string config_path;
};

void add_product_options(CLI::App& cmd, ProductChoice& choice) {
  auto* product = cmd.add_option("--product", choice.product,
                                 "Preset product: basic, scientific, financial or hex");
  auto* config = cmd.add_option("--config", choice.config_path, "Product configuration file");
  product->excludes(config);
}

// Null on failure, after reporting on stderr.
ConfigPtr load_choice(const ProductChoice& choice) {
  fbnf_config* raw = nullptr;
  fbnf_status status;
  if (!choice.config_path.empty()) {
    std::ifstream in(choice.config_path, std::ios::binary);
    if (!in) {
      std::cerr << "fbnf: cannot read config '" << choice.config_path << "'\n";
      return nullptr;
    }
    std::ostringstream text;
    text << in.rdbuf();
    const std::string content = text.str();
    status = fbnf_config_parse(content.data(), content.size(), &raw);
    if (status != FBNF_OK) {
      std::cerr << "fbnf: " << choice.config_path << ": " << fbnf_last_error() << "\n";
      return nullptr;
    }
    for (size_t i = 0; i < fbnf_config_warning_count(raw); ++i)
      std::cerr << "fbnf: warning: " << choice.config_path << ": " << fbnf_config_warning(raw, i)
                << "\n";
  } else {
    status = fbnf_config_preset(choice.product.empty() ? "basic" : choice.product.c_str(), &raw);
    if (status != FBNF_OK) {
      std::cerr << "fbnf: " << fbnf_last_error() << "\n";
      return nullptr;
    }
  }
  return ConfigPtr(raw);
}

GrammarPtr build(const fbnf_config* config) {
  fbnf_grammar* raw = nullptr;
  if (fbnf_product_build(config, &raw) != FBNF_OK) {
    std::cerr << "fbnf: " << fbnf_last_error() << "\n";
    return nullptr;
  }
  return GrammarPtr(raw);
}

std::string format(double value) {
  std::string out(32, '\0');
  size_t n = fbnf_format_value(value, out.data(), out.size());
  if (n >= out.size()) {
    out.assign(n + 1, '\0');
    fbnf_format_value(value, out.data(), out.size());
  }
  out.resize(n);
  return out;
}

// Display text for one input, and whether it evaluated.
std::pair<std::string, bool> evaluate(const fbnf_grammar* grammar, const std::string& input) {
  double value = 0;
  const fbnf_status status = fbnf_grammar_eval(grammar, input.data(), input.size(), &value);
  if (status == FBNF_OK) return {format(value), true};
  if (status == FBNF_SYNTAX_ERROR || status == FBNF_BUDGET_EXCEEDED) return {"Syntax Error", false};
  std::cerr << "fbnf: " << fbnf_last_error() << "\n";
  return {"Syntax Error", false};
}

int run_eval(const ProductChoice& choice, const std::vector<std::string>& inputs, bool repl) {
  if (!repl && inputs.empty()) {
    std::cerr << "fbnf: eval needs expressions or --repl\n";
    return kUsage;
  }
  ConfigPtr config = load_choice(choice);
  if (!config) return kUsage;
  GrammarPtr grammar = build(config.get());
  if (!grammar) return kUsage;

  if (repl) {
    std::string line;
    while (std::getline(std::cin, line)) {
      if (!line.empty() && line.back() == '\r') line.pop_back();
      std::cout << evaluate(grammar.get(), line).first << std::endl;
    }
    return kOk;
  }
  bool all_ok = true;
  for (const std::string& input : inputs) {
    auto [text, ok] = evaluate(grammar.get(), input);
    all_ok = all_ok && ok;
    std::cout << text << "\n";
  }
  return all_ok ? kOk : kSyntaxError;
}

int run_check(const ProductChoice& choice) {
  ConfigPtr config = load_choice(choice);
  if (!config) return kUsage;
  fbnf_diagnostics* raw = nullptr;
  if (fbnf_product_check(config.get(), &raw) != FBNF_OK) {
    std::cerr << "fbnf: " << fbnf_last_error() << "\n";
    return kUsage;
  }
  DiagnosticsPtr diagnostics(raw);
  const size_t count = fbnf_diagnostics_count(raw);
  for (size_t i = 0; i < count; ++i) {
    const bool error = fbnf_diagnostic_severity(raw, i) == FBNF_SEVERITY_ERROR;
    std::cout << (error ? "error " : "warning ") << fbnf_diagnostic_code(raw, i);
    if (const char* rule = fbnf_diagnostic_rule(raw, i)) std::cout << " in rule '" << rule << "'";
    std::cout << ": " << fbnf_diagnostic_message(raw, i) << "\n";
  }
  const size_t errors = fbnf_diagnostics_error_count(raw);
  std::cout << "product " << fbnf_config_product(config.get()) << ": " << errors << " error(s), "
            << count - errors << " warning(s)\n";
  return errors == 0 ? kOk : kSyntaxError;
}

int run_show(const ProductChoice& choice) {
  ConfigPtr config = load_choice(choice);
  if (!config) return kUsage;
  GrammarPtr grammar = build(config.get());
  if (!grammar) return kUsage;
  std::string text(fbnf_grammar_describe(grammar.get(), nullptr, 0) + 1, '\0');
  fbnf_grammar_describe(grammar.get(), text.data(), text.size());
  text.pop_back();
  std::cout << text;
  return kOk;
}

int run_features() {
  for (size_t i = 0; i < fbnf_pool_feature_count(); ++i) std::cout << fbnf_pool_feature(i) << "\n";
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Calculator product line built from functional BNF grammars", "fbnf"};
  app.require_subcommand(1);

  ProductChoice eval_choice;
  std::vector<std::string> inputs;
  bool repl = false;
  auto* eval = app.add_subcommand("eval", "Evaluate expressions with a calculator product");
  add_product_options(*eval, eval_choice);
  eval->add_flag("--repl", repl, "Read expressions from stdin, one per line");
  eval->add_option("expressions", inputs, "Expressions to evaluate");

  ProductChoice check_choice;
  auto* check = app.add_subcommand("check", "Validate a product grammar");
  add_product_options(*check, check_choice);

  ProductChoice show_choice;
  auto* show = app.add_subcommand("show", "Print the rules of a product grammar");
  add_product_options(*show, show_choice);

  auto* features = app.add_subcommand("features", "List the features of the rule pool");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  if (*eval) return run_eval(eval_choice, inputs, repl);
  if (*check) return run_check(check_choice);
  if (*show) return run_show(show_choice);
  if (*features) return run_features();
  return kUsage;
}
