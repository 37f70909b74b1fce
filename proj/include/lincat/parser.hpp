#pragma once

#include <map>
#include <stdexcept>
#include <string>

#include "lincat/term.hpp"

namespace lincat {

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& msg, std::size_t offset)
      : std::runtime_error(msg + " at byte " + std::to_string(offset)), offset_(offset) {}
  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

// Named objects and morphisms usable inside expressions.
struct Bindings {
  std::map<std::string, Object> objects;
  std::map<std::string, MorphTerm> morphisms;
};

struct ParseOptions {
  bool expand = true;
};

Object parse_object(const std::string& text, const Bindings* env = nullptr);
MorphTerm parse_morphism(const std::string& text, const Bindings* env = nullptr,
                         ParseOptions opts = {});

bool is_reserved_word(const std::string& name);

}  // namespace lincat
