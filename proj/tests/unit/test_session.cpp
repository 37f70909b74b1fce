#include "doctest.h"
#include "lincat/session.hpp"

using namespace lincat;

TEST_CASE("definitions resolve in load order") {
  Session s;
  s.load_defs("# objects first\nlet S : obj = !X * !Y\nlet d = delta{X} ; eps{!X}\nlet e = d * id{!Y}\n");
  CHECK(s.names() == std::vector<std::string>{"S", "d", "e"});
  CHECK(s.is_object("S"));
  CHECK_FALSE(s.is_object("d"));
  CHECK(s.object("S") == parse_object("!X * !Y"));
  Typing t = infer_type(s.morphism("e"));
  CHECK(t.dom == parse_object("!X * !Y"));
  CHECK(t.cod == parse_object("!X * !Y"));
}

TEST_CASE("definition errors") {
  Session s;
  CHECK_THROWS_AS(s.load_defs("let d = nosuch ; delta{X}\n"), SessionError);
  CHECK_THROWS_AS(s.load_defs("let d = delta{X}\nlet d = eps{X}\n"), SessionError);
  CHECK_THROWS_AS(s.load_defs("let delta = eps{X}\n"), SessionError);
  CHECK_THROWS_AS(s.load_defs("define d = eps{X}\n"), SessionError);
  CHECK_THROWS_AS(s.load_defs("let S : obj = X *\n"), SessionError);
  CHECK_THROWS_AS(s.load_defs("let f = delta{X} ; delta{X}\n"), SessionError);
  CHECK_THROWS_AS(s.load_defs_file("/nonexistent/defs.lc"), SessionError);
  try {
    Session t;
    t.load_defs("let a = delta{X}\n\nlet b = oops{\n", "mine.defs");
    FAIL("expected an error");
  } catch (const SessionError& e) {
    std::string msg = e.what();
    CHECK(msg.find("mine.defs") != std::string::npos);
    CHECK(msg.find("3") != std::string::npos);
  }
}
