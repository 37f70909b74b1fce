#include "lexer.hpp"

#include <cctype>

#include "lincat/parser.hpp"

namespace lincat::detail {

const char* tok_name(Tok t) {
  switch (t) {
    case Tok::Ident: return "identifier";
    case Tok::One: return "'1'";
    case Tok::Star: return "'*'";
    case Tok::Percent: return "'%'";
    case Tok::Semi: return "';'";
    case Tok::Bang: return "'!'";
    case Tok::Caret: return "'^'";
    case Tok::LParen: return "'('";
    case Tok::RParen: return "')'";
    case Tok::LBrace: return "'{'";
    case Tok::RBrace: return "'}'";
    case Tok::Comma: return "','";
    case Tok::Tilde: return "'~'";
    case Tok::Lolli: return "'-o'";
    case Tok::Colon: return "':'";
    case Tok::Equals: return "'='";
    case Tok::End: return "end of input";
  }
  return "?";
}

std::vector<Token> lex(const std::string& text) {
  std::vector<Token> out;
  std::size_t i = 0;
  const std::size_t n = text.size();
  while (i < n) {
    unsigned char c = static_cast<unsigned char>(text[i]);
    if (std::isspace(c)) {
      ++i;
      continue;
    }
    if (c == '#') {
      while (i < n && text[i] != '\n') ++i;
      continue;
    }
    std::size_t start = i;
    if (std::isalpha(c) || c == '_') {
      ++i;
      while (i < n && (std::isalnum(static_cast<unsigned char>(text[i])) || text[i] == '_')) ++i;
      if (i < n && text[i] == '\'') ++i;
      out.push_back({Tok::Ident, text.substr(start, i - start), start});
      continue;
    }
    if (c == '1') {
      if (i + 1 < n && std::isdigit(static_cast<unsigned char>(text[i + 1])))
        throw ParseError("unexpected number", start);
      out.push_back({Tok::One, "1", start});
      ++i;
      continue;
    }
    if (c == '-' && i + 1 < n && text[i + 1] == 'o') {
      out.push_back({Tok::Lolli, "-o", start});
      i += 2;
      continue;
    }
    Tok t;
    switch (c) {
      case '*': t = Tok::Star; break;
      case '%': t = Tok::Percent; break;
      case ';': t = Tok::Semi; break;
      case '!': t = Tok::Bang; break;
      case '^': t = Tok::Caret; break;
      case '(': t = Tok::LParen; break;
      case ')': t = Tok::RParen; break;
      case '{': t = Tok::LBrace; break;
      case '}': t = Tok::RBrace; break;
      case ',': t = Tok::Comma; break;
      case '~': t = Tok::Tilde; break;
      case ':': t = Tok::Colon; break;
      case '=': t = Tok::Equals; break;
      default:
        throw ParseError(std::string("unexpected character '") + static_cast<char>(c) + "'", start);
    }
    out.push_back({t, std::string(1, static_cast<char>(c)), start});
    ++i;
  }
  out.push_back({Tok::End, "", n});
  return out;
}

}  // namespace lincat::detail
