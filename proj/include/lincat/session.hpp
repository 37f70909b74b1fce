#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "lincat/parser.hpp"

namespace lincat {

class SessionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct SessionOptions {
  std::string strategy = "default";
  int fuel = 100000;
  int budget = 10000;
  std::size_t depth_guard = 64;
};

// Named objects and morphisms loaded from definition files, in load order.
class Session {
 public:
  SessionOptions options;

  // Lines `let <name> : obj = <object>` and `let <name> = <morphism>`;
  // `#` starts a comment. Names must be fresh and resolve before use.
  void load_defs(const std::string& text, const std::string& origin = "<defs>");
  void load_defs_file(const std::string& path);

  const Bindings& bindings() const { return env_; }
  const std::vector<std::string>& names() const { return order_; }
  bool is_object(const std::string& name) const { return env_.objects.count(name) != 0; }

  MorphTerm morphism(const std::string& text, bool expand = true) const;
  Object object(const std::string& text) const;

 private:
  Bindings env_;
  std::vector<std::string> order_;
};

}  // namespace lincat
