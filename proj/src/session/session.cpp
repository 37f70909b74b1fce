#include "lincat/session.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

namespace lincat {

namespace {

std::string trim(const std::string& s) {
  std::size_t a = s.find_first_not_of(" \t\r");
  if (a == std::string::npos) return "";
  std::size_t b = s.find_last_not_of(" \t\r");
  return s.substr(a, b - a + 1);
}

bool valid_name(const std::string& s) {
  if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
  for (char c : s)
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
  return true;
}

}  // namespace

void Session::load_defs(const std::string& text, const std::string& origin) {
  std::istringstream in(text);
  std::string raw;
  int lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    std::string where = origin + ":" + std::to_string(lineno) + ": ";
    std::string line = trim(raw.substr(0, raw.find('#')));
    if (line.empty()) continue;
    if (line.compare(0, 4, "let ") != 0) throw SessionError(where + "expected 'let'");
    std::string rest = trim(line.substr(4));
    std::size_t eq = rest.find('=');
    if (eq == std::string::npos) throw SessionError(where + "expected '='");
    std::string head = trim(rest.substr(0, eq));
    std::string body = trim(rest.substr(eq + 1));
    bool is_obj = false;
    std::size_t colon = head.find(':');
    if (colon != std::string::npos) {
      if (trim(head.substr(colon + 1)) != "obj") throw SessionError(where + "the only sort annotation is ': obj'");
      is_obj = true;
      head = trim(head.substr(0, colon));
    }
    if (!valid_name(head)) throw SessionError(where + "bad name '" + head + "'");
    if (is_reserved_word(head)) throw SessionError(where + "'" + head + "' is a reserved word");
    if (env_.objects.count(head) || env_.morphisms.count(head))
      throw SessionError(where + "'" + head + "' is already defined");
    if (body.empty()) throw SessionError(where + "empty definition");
    try {
      if (is_obj) {
        env_.objects.emplace(head, parse_object(body, &env_));
      } else {
        MorphTerm m = parse_morphism(body, &env_);
        infer_type(m);
        env_.morphisms.emplace(head, m);
      }
    } catch (const std::exception& e) {
      throw SessionError(where + e.what());
    }
    order_.push_back(head);
  }
}

void Session::load_defs_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw SessionError("cannot read " + path);
  std::stringstream ss;
  ss << f.rdbuf();
  load_defs(ss.str(), path);
}

MorphTerm Session::morphism(const std::string& text, bool expand) const {
  ParseOptions o;
  o.expand = expand;
  return parse_morphism(text, &env_, o);
}

Object Session::object(const std::string& text) const { return parse_object(text, &env_); }

}  // namespace lincat
