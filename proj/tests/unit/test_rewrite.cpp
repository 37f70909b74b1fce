#include <random>

#include "doctest.h"
#include "json.hpp"
#include "lincat/parser.hpp"
#include "lincat/trace_io.hpp"
#include "random_terms.hpp"

using namespace lincat;

namespace {

CanonicalForm canon(const std::string& s) { return canonicalize(parse_morphism(s)); }

bool has_rule(const std::vector<Redex>& rs, int rule) {
  for (const Redex& r : rs)
    if (r.rule == rule) return true;
  return false;
}

const Redex* find_rule(const std::vector<Redex>& rs, int rule) {
  for (const Redex& r : rs)
    if (r.rule == rule) return &r;
  return nullptr;
}

}  // namespace

TEST_CASE("rule table") {
  const auto& rules = rule_table();
  REQUIRE(rules.size() == 23);
  for (std::size_t i = 0; i < rules.size(); ++i) {
    int id = static_cast<int>(i) + 1;
    CHECK(rules[i].id == id);
    RuleClass expected = id <= 17 ? RuleClass::Algebraic
                         : id <= 21 ? RuleClass::Naturality
                         : id == 22 ? RuleClass::Beta
                                    : RuleClass::Eta;
    CHECK(rules[i].cls == expected);
    CHECK(rule_class(id) == expected);
  }
}

TEST_CASE("every rule instance preserves its type") {
  const std::vector<std::pair<Object, Object>> objs = {
      {parse_object("X"), parse_object("Y")},
      {parse_object("X * !Y"), parse_object("1")},
      {parse_object("!X % Y^"), parse_object("X * X")},
  };
  for (const RuleInfo& r : rule_table()) {
    CAPTURE(r.id);
    if (r.id >= 18 && r.id <= 21) {
      const char* fs[] = {"delta{X}", "dup{X} ; (eps{X} * id{!X})", "phi{X,Y}"};
      for (const char* f : fs) {
        MorphTerm ft = parse_morphism(f);
        Typing t = infer_type(ft);
        Typing a = infer_type(instantiate(r.redex, t.dom, t.cod, ft));
        Typing b = infer_type(instantiate(r.contractum, t.dom, t.cod, ft));
        CHECK(a.dom == b.dom);
        CHECK(a.cod == b.cod);
      }
      continue;
    }
    for (const auto& [a, b] : objs) {
      Typing x = infer_type(instantiate(r.redex, a, b));
      Typing y = infer_type(instantiate(r.contractum, a, b));
      CHECK(x.dom == y.dom);
      CHECK(x.cod == y.cod);
    }
  }
}

TEST_CASE("redex detection") {
  CHECK(has_rule(find_redexes(canon("delta{X} ; delta{!X}")), 1));
  CHECK(has_rule(find_redexes(canon("delta{X} ; eps{!X}")), 2));
  CHECK(has_rule(find_redexes(canon("phi0 ; delta{1}")), 13));
  CHECK(find_redexes(canon("id{X}")).empty());
  CHECK(find_redexes(canon("(sig{X,Y} * id{Z}) ; alpha{Y,X,Z}")).empty());

  auto rs = find_redexes(canon("!sig{X,Y} ; eps{Y*X}"));
  const Redex* r19 = find_rule(rs, 19);
  REQUIRE(r19 != nullptr);
  CHECK(r19->reversible);
  CHECK(r19->cls() == RuleClass::Naturality);

  const Redex* r18 = find_rule(find_redexes(canon("!delta{X} ; delta{!!X}")), 18);
  REQUIRE(r18 != nullptr);
  CHECK_FALSE(r18->reversible);
}

TEST_CASE("yank redexes need matching types") {
  CHECK(has_rule(find_redexes(canon("(tau{X} * id{X}) ; dist'{X,X^,X} ; (id{X} % gamma{X})")), 22));
  CHECK(has_rule(find_redexes(canon("(id{X^} * tau{X}) ; dist{X^,X,X^} ; (gamma{X} % id{X^})")), 23));
}

TEST_CASE("single step of a unit rule") {
  CanonicalForm c = canon("phi0 ; delta{1}");
  auto rs = find_redexes(c);
  const Redex* r = find_rule(rs, 13);
  REQUIRE(r != nullptr);
  std::string why;
  auto next = step(c, *r, &why);
  REQUIRE_MESSAGE(next.has_value(), why);
  CHECK(congruent(*next, canon("phi0 ; !phi0")).verdict == Verdict::Yes);
}

TEST_CASE("stale redexes are rejected") {
  auto rs = find_redexes(canon("delta{X} ; delta{!X}"));
  REQUIRE(!rs.empty());
  CHECK_THROWS_AS(step(canon("id{X}"), rs[0]), StaleRedex);
}

TEST_CASE("normalization") {
  Trace t = normalize(parse_morphism("id{X}"));
  CHECK(t.steps.empty());
  CHECK(t.result.cells.empty());

  Trace u = normalize(parse_morphism("delta{X} ; eps{!X}"));
  REQUIRE(u.steps.size() == 1);
  CHECK(u.steps[0].redex.rule == 2);
  CHECK(u.result.cells.empty());
  CHECK(is_normal(u.result));
  CHECK_FALSE(is_normal(canon("delta{X} ; eps{!X}")));
}

TEST_CASE("equality verdicts") {
  auto eq = [](const char* a, const char* b) { return equal(parse_morphism(a), parse_morphism(b)).verdict; };
  CHECK(eq("delta{X} ; eps{!X}", "delta{X} ; !eps{X}") == Equality::Equal);
  CHECK(eq("delta{X} ; eps{!X}", "id{!X}") == Equality::Equal);
  CHECK(eq("delta{X} ; drop{!X}", "drop{X}") == Equality::Equal);
  CHECK(eq("phi0 ; eps{1}", "id{1}") == Equality::Equal);
  CHECK(eq("sig{!X,!X}", "id{!X * !X}") == Equality::Distinct);
  CHECK(eq("delta{X} ; delta{!X}", "delta{X}; !delta{X}") == Equality::Equal);
  EqualResult mismatch = equal(parse_morphism("delta{X}"), parse_morphism("eps{X}"));
  CHECK(mismatch.verdict == Equality::Distinct);
  CHECK(mismatch.reason.find("type mismatch") != std::string::npos);
  CHECK_THROWS_AS(eq("delta{X} ; delta{X}", "delta{X}"), TypeError);
}

TEST_CASE("trace steps chain and replay") {
  Trace t = normalize(parse_morphism("delta{X} ; delta{!X} ; eps{!!X}"));
  REQUIRE(!t.steps.empty());
  for (std::size_t i = 0; i < t.steps.size(); ++i) {
    const TraceStep& s = t.steps[i];
    CAPTURE(i);
    CHECK_FALSE(s.redex.reversible);
    auto again = step(s.before, s.redex);
    REQUIRE(again.has_value());
    CHECK(*again == s.after);
    if (i + 1 < t.steps.size()) CHECK(s.after == t.steps[i + 1].before);
  }
  CHECK(t.steps.back().after == t.result);
  CHECK(congruent(t.result, canon("delta{X}")).verdict == Verdict::Yes);
}

TEST_CASE("trace json") {
  auto j = nlohmann::json::parse(trace_json(normalize(parse_morphism("id{X}"))));
  CHECK(j["steps"].is_array());
  CHECK(j["steps"].empty());
  CHECK(j["skipped_reversible"] == 0);
  CHECK(j["input"] == "id{X}");

  auto k = nlohmann::ordered_json::parse(trace_json(normalize(parse_morphism("delta{X} ; eps{!X}"))));
  std::vector<std::string> keys;
  for (auto it = k.begin(); it != k.end(); ++it) keys.push_back(it.key());
  CHECK(keys == std::vector<std::string>{"input", "steps", "normal_form", "skipped_reversible"});
  REQUIRE(k["steps"].size() == 1);
  CHECK(k["steps"][0]["rule"] == 2);
  CHECK(k["steps"][0]["class"] == "algebraic");
}

TEST_CASE("rewriting preserves types and reaches normal forms on random terms") {
  std::mt19937_64 rng(3);
  testing::WalkOptions opts;
  opts.kinds = testing::strict_kinds();
  opts.max_cells = 5;
  int checked = 0;
  for (int i = 0; i < 150; ++i) {
    Object s = testing::random_object(rng, 2, 3, false);
    MorphTerm m = testing::random_walk(s, opts, rng);
    CAPTURE(pretty(m));
    Typing ty = infer_type(m);
    Trace t = normalize(m);
    for (const TraceStep& st : t.steps) {
      CHECK(st.after.dom == ty.dom);
      CHECK(st.after.cod == ty.cod);
    }
    if (t.fuel_exhausted || t.stuck) continue;
    CHECK(is_normal(t.result));
    // normal forms round-trip through concrete syntax
    MorphTerm back = parse_morphism(pretty(to_term(t.result)));
    CHECK(congruent(canonicalize(back), t.result).verdict == Verdict::Yes);
    ++checked;
  }
  CHECK(checked > 100);
}
