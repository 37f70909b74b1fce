#pragma once

#include <string>
#include <vector>

namespace lincat::detail {

enum class Tok {
  Ident, One, Star, Percent, Semi, Bang, Caret, LParen, RParen, LBrace, RBrace, Comma,
  Tilde, Lolli, Colon, Equals, End,
};

struct Token {
  Tok kind;
  std::string text;
  std::size_t offset;
};

std::vector<Token> lex(const std::string& text);
const char* tok_name(Tok t);

}  // namespace lincat::detail
