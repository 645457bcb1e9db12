#pragma once

#include <cstddef>
#include <functional>
#include <map>
#include <span>
#include <string>
#include <string_view>

namespace fbnf {

// Name -> arity, the part of a builtin that validation needs.
using BuiltinSignatures = std::map<std::string, std::size_t, std::less<>>;

class Builtins {
 public:
  using Function = std::function<double(std::span<const double>)>;

  struct Entry {
    std::size_t arity;
    Function fn;
  };

  // Replaces any builtin registered under the same name.
  Builtins& add(std::string name, std::size_t arity, Function fn);

  const Entry* find(std::string_view name) const;
  BuiltinSignatures signatures() const;

 private:
  std::map<std::string, Entry, std::less<>> entries_;
};

// sin, cos, tan (radians), sqrt, exp, log, pow.
const Builtins& standard_builtins();

}  // namespace fbnf
