#include "fbnf/builtins.hpp"

#include <cmath>

namespace fbnf {

Builtins& Builtins::add(std::string name, std::size_t arity, Function fn) {
  entries_.insert_or_assign(std::move(name), Entry{arity, std::move(fn)});
  return *this;
}

const Builtins::Entry* Builtins::find(std::string_view name) const {
  auto it = entries_.find(name);
  return it == entries_.end() ? nullptr : &it->second;
}

BuiltinSignatures Builtins::signatures() const {
  BuiltinSignatures out;
  for (const auto& [name, entry] : entries_) out.emplace(name, entry.arity);
  return out;
}

namespace {

Builtins::Function unary(double (*fn)(double)) {
  return [fn](std::span<const double> a) { return fn(a[0]); };
}

Builtins make_standard() {
  Builtins b;
  b.add("sin", 1, unary(std::sin));
  b.add("cos", 1, unary(std::cos));
  b.add("tan", 1, unary(std::tan));
  b.add("sqrt", 1, unary(std::sqrt));
  b.add("exp", 1, unary(std::exp));
  b.add("log", 1, unary(std::log));
  b.add("pow", 2, [](std::span<const double> a) { return std::pow(a[0], a[1]); });
  return b;
}

}  // namespace

const Builtins& standard_builtins() {
  static const Builtins instance = make_standard();
  return instance;
}

}  // namespace fbnf
