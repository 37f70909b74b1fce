#include "doctest.h"
#include "lincat/parser.hpp"
#include "lincat/sugar.hpp"

using namespace lincat;

namespace {

Object X() { return Object::atom("X"); }
Object Y() { return Object::atom("Y"); }

Typing typed(const std::string& text) { return infer_type(parse_morphism(text)); }

}  // namespace

TEST_CASE("object grammar") {
  CHECK(parse_object("!X * !Y") == Object::tensor(Object::bang(X()), Object::bang(Y())));
  CHECK(parse_object("X^^") == Object::dual(Object::dual(X())));
  CHECK(parse_object("X^^") != X());
  CHECK(parse_object("X % bot") == Object::par(X(), Object::bot()));
  CHECK(parse_object("X * Y % X") == Object::par(Object::tensor(X(), Y()), X()));
  CHECK(parse_object("!X^") == Object::bang(Object::dual(X())));
}

TEST_CASE("lollipop is left associative and encodes B % A^") {
  Object a = X(), b = Y(), c = Object::atom("Z");
  Object ab = Object::par(b, Object::dual(a));
  CHECK(parse_object("X -o Y") == ab);
  CHECK(parse_object("X -o Y -o Z") == Object::par(c, Object::dual(ab)));
}

TEST_CASE("parse errors carry a byte offset") {
  CHECK_THROWS_AS(parse_object("X *"), ParseError);
  CHECK_THROWS_AS(parse_morphism("delta{X"), ParseError);
  CHECK_THROWS_AS(parse_morphism("nosuch{X}"), ParseError);
  try {
    parse_object("X * * Y");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.offset() == 4);
  }
}

TEST_CASE("generator types follow the atomic tables") {
  struct Row {
    const char* gen;
    const char* dom;
    const char* cod;
  };
  const Row rows[] = {
      {"delta{X}", "!X", "!!X"},
      {"eps{X}", "!X", "X"},
      {"dup{X}", "!X", "!X * !X"},
      {"drop{X}", "!X", "1"},
      {"phi{X,Y}", "!X * !Y", "!(X * Y)"},
      {"phi0", "1", "!1"},
      {"tau{X}", "1", "X % X^"},
      {"gamma{X}", "X^ * X", "bot"},
      {"dist{X,Y,X}", "X * (Y % X)", "(X * Y) % X"},
      {"dist'{X,Y,X}", "(X % Y) * X", "X % (Y * X)"},
      {"alpha{X,Y,X}", "(X * Y) * X", "X * (Y * X)"},
      {"lam{X}", "1 * X", "X"},
      {"rho{X}", "X * 1", "X"},
      {"sig{X,Y}", "X * Y", "Y * X"},
      {"blam{X}", "bot % X", "X"},
      {"brho~{X}", "X", "X % bot"},
      {"bsig{X,Y}", "X % Y", "Y % X"},
      {"id{1}", "1", "1"},
  };
  for (const Row& r : rows) {
    CAPTURE(r.gen);
    Typing t = typed(r.gen);
    CHECK(t.dom == parse_object(r.dom));
    CHECK(t.cod == parse_object(r.cod));
  }
}

TEST_CASE("composite types") {
  Typing t = typed("phi{X,Y};delta{X*Y}");
  CHECK(t.dom == parse_object("!X * !Y"));
  CHECK(t.cod == parse_object("!!(X * Y)"));
  CHECK_THROWS_AS(typed("delta{X};delta{X}"), TypeError);
  CHECK_THROWS_AS(typed("dup{X};eps{X}"), TypeError);
}

TEST_CASE("pretty printing") {
  CHECK(pretty(parse_morphism("delta{X} ; eps{!X}")) == "delta{X} ; eps{!X}");
  MorphTerm m = parse_morphism("!(delta{X};eps{!X})");
  CHECK(pretty(m) == "!(delta{X} ; eps{!X})");
  for (const char* s : {"(phi0 * id{!X}) ; phi{1,X}", "delta{X} ; !dup{X} ; delta{!X*!X}", "tau{X} % id{Y}",
                        "!(id{X} * sig{X,Y})"}) {
    CAPTURE(s);
    MorphTerm a = parse_morphism(s);
    CHECK(parse_morphism(pretty(a)) == a);
  }
}

TEST_CASE("sugar expansions") {
  MorphTerm abs = expand_abs(X(), Y());
  Typing ta = infer_type(abs);
  CHECK(ta.dom == X());
  CHECK(ta.cod == Object::par(Object::tensor(X(), Y()), Object::dual(Y())));

  Typing te = infer_type(expand_ev(X(), Y()));
  CHECK(te.dom == Object::tensor(Object::par(X(), Object::dual(Y())), Y()));
  CHECK(te.cod == X());

  // The dual of an identity is typed X^ -> X^ but is not id{X^} as a term.
  MorphTerm d = parse_morphism("id{X}^");
  Typing td = infer_type(d);
  CHECK(td.dom == Object::dual(X()));
  CHECK(td.cod == Object::dual(X()));
  CHECK(d != parse_morphism("id{X^}"));
}

TEST_CASE("dual of a morphism expands to six cells with reversed type") {
  MorphTerm d = parse_morphism("delta{X}^");
  Typing t = infer_type(d);
  CHECK(t.dom == parse_object("(!!X)^"));
  CHECK(t.cod == parse_object("(!X)^"));
  MorphTerm raw = parse_morphism("delta{X}^", nullptr, ParseOptions{false});
  CHECK(raw.kind() == TermKind::Dualize);
  CHECK(expand_sugar(raw) == d);
}

TEST_CASE("reserved words") {
  CHECK(is_reserved_word("delta"));
  CHECK(is_reserved_word("bot"));
  CHECK_FALSE(is_reserved_word("twice"));
}

TEST_CASE("bindings resolve names") {
  Bindings env;
  env.objects["S"] = parse_object("X * Y");
  env.morphisms["d"] = parse_morphism("delta{X}");
  CHECK(parse_object("!S", &env) == parse_object("!(X * Y)"));
  CHECK(infer_type(parse_morphism("d ; eps{!X}", &env)).cod == parse_object("!X"));
}
