#include "lincat/parser.hpp"

#include <cctype>
#include <set>

#include "lexer.hpp"
#include "lincat/sugar.hpp"

namespace lincat {

using detail::Tok;
using detail::Token;

namespace {

const std::set<std::string>& reserved() {
  static const std::set<std::string> kWords = {
      "id",  "alpha", "lam",   "rho", "sig",   "balpha", "blam", "brho",
      "bsig", "dist", "dist'", "tau", "gamma", "phi",    "phi0", "delta",
      "eps", "dup",   "drop",  "abs", "ev",    "bot",    "let",  "obj"};
  return kWords;
}

class Parser {
 public:
  Parser(const std::string& text, const Bindings* env, ParseOptions opts)
      : toks_(detail::lex(text)), env_(env), opts_(opts) {}

  Object whole_object() {
    Object o = object();
    expect(Tok::End);
    return o;
  }

  MorphTerm whole_morphism() {
    MorphTerm m = seq();
    expect(Tok::End);
    return m;
  }

 private:
  const Token& peek() const { return toks_[pos_]; }
  const Token& next() { return toks_[pos_++]; }
  bool accept(Tok t) {
    if (peek().kind != t) return false;
    ++pos_;
    return true;
  }
  const Token& expect(Tok t) {
    if (peek().kind != t)
      throw ParseError(std::string("expected ") + detail::tok_name(t) + ", found " +
                           detail::tok_name(peek().kind),
                       peek().offset);
    return next();
  }

  // obj := par ('-o' par)*
  Object object() {
    Object lhs = obj_par();
    while (accept(Tok::Lolli)) {
      Object rhs = obj_par();
      lhs = lollipop(lhs, rhs);
    }
    return lhs;
  }

  Object obj_par() {
    Object lhs = obj_tensor();
    while (accept(Tok::Percent)) lhs = Object::par(lhs, obj_tensor());
    return lhs;
  }

  Object obj_tensor() {
    Object lhs = obj_prefix();
    while (accept(Tok::Star)) lhs = Object::tensor(lhs, obj_prefix());
    return lhs;
  }

  Object obj_prefix() {
    if (accept(Tok::Bang)) return Object::bang(obj_prefix());
    Object o = obj_primary();
    while (accept(Tok::Caret)) o = Object::dual(o);
    return o;
  }

  Object obj_primary() {
    const Token& t = peek();
    if (accept(Tok::One)) return Object::one();
    if (accept(Tok::LParen)) {
      Object o = object();
      expect(Tok::RParen);
      return o;
    }
    if (t.kind == Tok::Ident) {
      next();
      if (t.text == "bot") return Object::bot();
      if (env_) {
        auto it = env_->objects.find(t.text);
        if (it != env_->objects.end()) return it->second;
      }
      if (std::isupper(static_cast<unsigned char>(t.text[0])) &&
          t.text.find('\'') == std::string::npos)
        return Object::atom(t.text);
      throw ParseError("unknown object name '" + t.text + "'", t.offset);
    }
    throw ParseError(std::string("expected an object, found ") + detail::tok_name(t.kind),
                     t.offset);
  }

  MorphTerm seq() {
    MorphTerm lhs = mpar();
    while (accept(Tok::Semi)) lhs = MorphTerm::seq(lhs, mpar());
    return lhs;
  }

  MorphTerm mpar() {
    MorphTerm lhs = mtensor();
    while (accept(Tok::Percent)) lhs = MorphTerm::par(lhs, mtensor());
    return lhs;
  }

  MorphTerm mtensor() {
    MorphTerm lhs = mprefix();
    while (accept(Tok::Star)) lhs = MorphTerm::tensor(lhs, mprefix());
    return lhs;
  }

  MorphTerm mprefix() {
    if (accept(Tok::Bang)) return MorphTerm::bang(mprefix());
    MorphTerm m = mprimary();
    while (peek().kind == Tok::Caret) {
      std::size_t at = next().offset;
      if (opts_.expand) {
        try {
          m = expand_dual(m);
        } catch (const TypeError& e) {
          throw ParseError(std::string("cannot dualize ill-typed term: ") + e.what(), at);
        }
      } else {
        m = MorphTerm::dualize(m);
      }
    }
    return m;
  }

  std::vector<Object> subscripts() {
    std::vector<Object> subs;
    if (!accept(Tok::LBrace)) return subs;
    if (accept(Tok::RBrace)) return subs;
    subs.push_back(object());
    while (accept(Tok::Comma)) subs.push_back(object());
    expect(Tok::RBrace);
    return subs;
  }

  MorphTerm mprimary() {
    const Token& t = peek();
    if (accept(Tok::LParen)) {
      MorphTerm m = seq();
      expect(Tok::RParen);
      return m;
    }
    if (t.kind != Tok::Ident)
      throw ParseError(std::string("expected a morphism, found ") + detail::tok_name(t.kind),
                       t.offset);
    next();
    bool inverse = accept(Tok::Tilde);
    if (t.text == "abs" || t.text == "ev") {
      if (inverse) throw ParseError("'" + t.text + "' has no inverse form", t.offset);
      std::size_t at = peek().offset;
      auto subs = subscripts();
      if (subs.size() != 2)
        throw ParseError("wrong subscript arity for " + t.text + ": expected 2, got " +
                             std::to_string(subs.size()),
                         at);
      if (!opts_.expand)
        return t.text == "abs" ? MorphTerm::abs(subs[0], subs[1]) : MorphTerm::ev(subs[0], subs[1]);
      return t.text == "abs" ? expand_abs(subs[0], subs[1]) : expand_ev(subs[0], subs[1]);
    }
    if (auto kind = gen_from_name(t.text, inverse)) {
      std::size_t at = peek().offset;
      auto subs = subscripts();
      if (static_cast<int>(subs.size()) != gen_arity(*kind))
        throw ParseError("wrong subscript arity for " + std::string(gen_name(*kind)) +
                             ": expected " + std::to_string(gen_arity(*kind)) + ", got " +
                             std::to_string(subs.size()),
                         at);
      return MorphTerm::gen(*kind, subs);
    }
    if (inverse && gen_from_name(t.text, false))
      throw ParseError("generator '" + t.text + "' has no inverse form", t.offset);
    if (env_) {
      auto it = env_->morphisms.find(t.text);
      if (it != env_->morphisms.end()) {
        if (inverse) throw ParseError("bound name '" + t.text + "' cannot take '~'", t.offset);
        return opts_.expand ? expand_sugar(it->second) : it->second;
      }
    }
    throw ParseError("unknown generator or name '" + t.text + "'", t.offset);
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
  const Bindings* env_;
  ParseOptions opts_;
};

}  // namespace

bool is_reserved_word(const std::string& name) { return reserved().count(name) > 0; }

Object parse_object(const std::string& text, const Bindings* env) {
  return Parser(text, env, {}).whole_object();
}

MorphTerm parse_morphism(const std::string& text, const Bindings* env, ParseOptions opts) {
  return Parser(text, env, opts).whole_morphism();
}

}  // namespace lincat
