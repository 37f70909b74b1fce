#include <map>
#include <random>

#include "doctest.h"
#include "lincat/congruence.hpp"
#include "lincat/parser.hpp"
#include "lincat/structural.hpp"
#include "random_terms.hpp"

using namespace lincat;

namespace {

CanonicalForm canon(const std::string& s) { return canonicalize(parse_morphism(s)); }

Verdict cong(const std::string& a, const std::string& b) {
  return congruent(parse_morphism(a), parse_morphism(b)).verdict;
}

// Renames atoms through `ren`; used to forget occurrence labels.
Object erase(const Object& o, const std::map<std::string, std::string>& ren) {
  switch (o.kind()) {
    case ObjKind::Atom: {
      auto it = ren.find(o.name());
      return it == ren.end() ? o : Object::atom(it->second);
    }
    case ObjKind::Tensor: return Object::tensor(erase(o.left(), ren), erase(o.right(), ren));
    case ObjKind::Par: return Object::par(erase(o.left(), ren), erase(o.right(), ren));
    case ObjKind::Dual: return Object::dual(erase(o.inner(), ren));
    case ObjKind::Bang: return Object::bang(erase(o.inner(), ren));
    default: return o;
  }
}

MorphTerm erase(const MorphTerm& m, const std::map<std::string, std::string>& ren) {
  switch (m.kind()) {
    case TermKind::Gen: {
      std::vector<Object> subs;
      for (const Object& s : m.generator().subs) subs.push_back(erase(s, ren));
      return MorphTerm::gen(m.generator().kind, subs);
    }
    case TermKind::Seq: return MorphTerm::seq(erase(m.first(), ren), erase(m.second(), ren));
    case TermKind::Tensor: return MorphTerm::tensor(erase(m.first(), ren), erase(m.second(), ren));
    case TermKind::Par: return MorphTerm::par(erase(m.first(), ren), erase(m.second(), ren));
    case TermKind::Bang: return MorphTerm::bang(erase(m.inner(), ren));
    default: FAIL("unexpected sugar"); return m;
  }
}

}  // namespace

TEST_CASE("identity law") {
  CHECK(canon("id{!X} ; delta{X}") == canon("delta{X}"));
  CHECK(canon("delta{X} ; id{!!X}") == canon("delta{X}"));
  CHECK(canon("id{X}").cells.empty());
  CHECK(canon("id{X} * id{Y}").cells.empty());
}

TEST_CASE("bang distributes over composition") {
  CHECK(canon("!(delta{X} ; eps{!X})") == canon("!delta{X} ; !eps{!X}"));
  CHECK(canon("!id{X}").cells.empty());
}

TEST_CASE("interchange law") {
  CHECK(canon("(delta{X} * id{!Y}) ; (id{!!X} * eps{Y})") == canon("(id{!X} * eps{Y}) ; (delta{X} * id{Y})"));
  CHECK(canon("delta{X} * eps{Y}") == canon("(delta{X} * id{!Y}) ; (id{!!X} * eps{Y})"));
  CHECK(canon("tau{X} % id{Y}") == canon("(id{1} % id{Y}) ; (tau{X} % id{Y})"));
}

TEST_CASE("cells record their whiskering context") {
  CanonicalForm c = canon("id{Y} * !delta{X}");
  REQUIRE(c.cells.size() == 1);
  const Cell& cell = c.cells[0];
  CHECK(cell.gen == Generator(GenKind::Delta, {Object::atom("X")}));
  REQUIRE(cell.path.size() == 2);
  CHECK(cell.path[0].kind == FrameKind::TensorRight);
  CHECK(cell.path[0].passive == Object::atom("Y"));
  CHECK(cell.path[1].kind == FrameKind::Bang);
  CHECK(c.dom == parse_object("Y * !!X"));
  CHECK(c.cod == parse_object("Y * !!!X"));
}

TEST_CASE("inverse cancellation") {
  CHECK(cancel_inverses(canon("alpha{X,Y,X} ; alpha~{X,Y,X}")).cells.empty());
  CHECK(cancel_inverses(canon("sig{X,Y} ; sig{Y,X}")).cells.empty());
  CHECK(cancel_inverses(canon("rho~{X} ; rho{X}")).cells.empty());
  CHECK(tidy(canon("delta{X} ; (rho~{!!X} ; rho{!!X})")) == canon("delta{X}"));
  CHECK(cancel_inverses(canon("sig{X,X} ; sig{X,X}")).cells.empty());
  CHECK(cancel_inverses(canon("delta{X} ; eps{!X}")).cells.size() == 2);
}

TEST_CASE("generator inverses") {
  Object x = Object::atom("X"), y = Object::atom("Y");
  CHECK(Generator(GenKind::Sig, {x, y}).inverse() == Generator(GenKind::Sig, {y, x}));
  CHECK(Generator(GenKind::Alpha, {x, y, x}).inverse() == Generator(GenKind::AlphaInv, {x, y, x}));
  CHECK_FALSE(Generator(GenKind::Delta, {x}).inverse().has_value());
}

TEST_CASE("structural semantics") {
  auto sem = [](const std::string& s) { return structural_semantics(canon(s)); };
  REQUIRE(sem("sig{X,Y}"));
  CHECK(sem("sig{X,Y}")->image == std::vector<int>{1, 0});
  CHECK(sem("alpha{X,Y,X} ; alpha~{X,Y,X}")->image == std::vector<int>{0, 1, 2});
  CHECK(sem("lam~{X * Y}")->image == std::vector<int>{0, 1});
  CHECK_FALSE(sem("delta{X}").has_value());
  // hexagon legs
  auto left = sem("alpha{X,Y,Z} ; sig{X,Y*Z} ; alpha{Y,Z,X}");
  auto right = sem("(sig{X,Y} * id{Z}) ; alpha{Y,X,Z} ; (id{Y} * sig{X,Z})");
  REQUIRE(left);
  REQUIRE(right);
  CHECK(*left == *right);
  CHECK(left->image == std::vector<int>{2, 0, 1});
}

TEST_CASE("congruence verdicts") {
  CHECK(cong("alpha{X,Y,Z} ; sig{X,Y*Z} ; alpha{Y,Z,X}", "(sig{X,Y} * id{Z}) ; alpha{Y,X,Z} ; (id{Y} * sig{X,Z})") ==
        Verdict::Yes);
  CHECK(cong("sig{X,X}", "id{X*X}") == Verdict::No);
  CHECK(cong("delta{X}", "delta{X}") == Verdict::Yes);
  CHECK(cong("dup{X} ; sig{!X,!X}", "dup{X}") == Verdict::Yes);
  CHECK(cong("delta{X} ; eps{!X}", "id{!X}") == Verdict::No);
  CHECK(cong("rho{X} ; rho~{X}", "id{X * 1}") == Verdict::Yes);
  CHECK(cong("lam{1}", "rho{1}") == Verdict::Yes);
}

TEST_CASE("dist' is dist conjugated by symmetries") {
  CHECK(cong("dist'{X,Y,Z}",
             "sig{X%Y,Z} ; (id{Z} * bsig{X,Y}) ; dist{Z,Y,X} ; bsig{Z*Y,X} ; (id{X} % sig{Z,Y})") == Verdict::Yes);
  CHECK(cong("dist'{X,Y,Z}", "dist'{X,Y,Z} ; (id{X} % sig{Y,Z}) ; (id{X} % sig{Z,Y})") == Verdict::Yes);
}

TEST_CASE("canonicalization is idempotent and type preserving on random terms") {
  std::mt19937_64 rng(7);
  testing::WalkOptions opts;
  opts.kinds = testing::all_kinds();
  opts.max_cells = 6;
  for (int i = 0; i < 300; ++i) {
    Object s = testing::random_object(rng, 2, 3, true);
    MorphTerm m = testing::random_walk(s, opts, rng);
    CAPTURE(pretty(m));
    Typing t = infer_type(m);
    CanonicalForm c = canonicalize(m);
    CHECK(c.dom == t.dom);
    CHECK(c.cod == t.cod);
    MorphTerm back = to_term(c);
    Typing tb = infer_type(back);
    CHECK(tb.dom == t.dom);
    CHECK(tb.cod == t.cod);
    CHECK(canonicalize(back) == c);
    CHECK(tidy(tidy(c)) == tidy(c));
  }
}

TEST_CASE("structural maps are congruent exactly when they move occurrences alike") {
  // Walks on distinct atoms A, B, C; erasing to X, X, Y creates parallel
  // maps whose labelled codomains decide congruence.
  const std::map<std::string, std::string> ren{{"A", "X"}, {"B", "X"}, {"C", "Y"}};
  const Object start = parse_object("(A * B) * C");
  testing::WalkOptions opts;
  opts.kinds = {GenKind::Alpha, GenKind::AlphaInv, GenKind::Sig, GenKind::Lam,
                GenKind::LamInv, GenKind::Rho, GenKind::RhoInv};
  opts.max_cells = 6;
  std::mt19937_64 rng(11);
  std::map<std::string, std::vector<MorphTerm>> by_cod;
  for (int i = 0; i < 400; ++i) {
    MorphTerm w = testing::random_walk(start, opts, rng);
    by_cod[erase(infer_type(w).cod, ren).str()].push_back(w);
  }
  int yes = 0, no = 0;
  for (const auto& [cod, walks] : by_cod) {
    for (std::size_t i = 0; i + 1 < walks.size() && i < 12; ++i) {
      const MorphTerm &a = walks[i], &b = walks[i + 1];
      bool same = infer_type(a).cod == infer_type(b).cod;
      MorphTerm ea = erase(a, ren), eb = erase(b, ren);
      CAPTURE(pretty(ea));
      CAPTURE(pretty(eb));
      CHECK(congruent(ea, eb).verdict == (same ? Verdict::Yes : Verdict::No));
      (same ? yes : no) += 1;
    }
  }
  CHECK(yes > 10);
  CHECK(no > 10);
}
