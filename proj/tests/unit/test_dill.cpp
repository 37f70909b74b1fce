#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>

#include "doctest.h"
#include "lincat/dill.hpp"
#include "lincat/parser.hpp"

using namespace lincat;

namespace {

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

Verdict same(const MorphTerm& a, const char* b) { return congruent(a, parse_morphism(b)).verdict; }

}  // namespace

TEST_CASE("types and terms") {
  CHECK(parse_dill_type("A -o B") == parse_object("B % A^"));
  CHECK(is_lollipop(parse_dill_type("!A -o B")));
  CHECK(is_dill_type(parse_dill_type("!(A * 1) -o B")));
  CHECK_FALSE(is_dill_type(parse_object("A % B")));
  DillTerm t = parse_dill_term("(g x){!x:=!(c y)}");
  CHECK(t.kind() == DillTermKind::Let);
  CHECK(occurs_free(t, "g"));
  CHECK_FALSE(occurs_free(t, "x"));
  CHECK(subst(parse_dill_term("\\y. x y"), "x", parse_dill_term("y")) != parse_dill_term("\\y. y y"));
}

TEST_CASE("axiom checks and elaborates to an identity") {
  Derivation d = parse_derivation("ax: x:A |- x : A\n");
  CHECK(check_derivation(d).ok);
  MorphTerm m = elaborate(d);
  Typing t = infer_type(m);
  CHECK(t.dom == Object::atom("A"));
  CHECK(t.cod == Object::atom("A"));
  CHECK(same(m, "id{A}") == Verdict::Yes);
}

TEST_CASE("lift elaborates to a dereliction") {
  Derivation d = parse_derivation("lift x: !x:A |- x : A\n  ax: x:A |- x : A\n");
  REQUIRE(check_derivation(d).ok);
  CHECK(same(elaborate(d), "eps{A}") == Verdict::Yes);
}

TEST_CASE("weakening elaborates through a discard") {
  Derivation d = parse_derivation("weak y: x:A, !y:B |- x : A\n  ax: x:A |- x : A\n");
  REQUIRE(check_derivation(d).ok);
  Typing t = infer_type(elaborate(d));
  CHECK(t.dom == parse_object("A * !B"));
  CHECK(t.cod == Object::atom("A"));
}

TEST_CASE("promotion needs a fully sharp environment") {
  Derivation d = parse_derivation("prom: x:A |- !x : !A\n  ax: x:A |- x : A\n");
  CheckResult r = check_derivation(d);
  CHECK_FALSE(r.ok);
  CHECK(r.line == 1);
  CHECK(r.reason.find("linear") != std::string::npos);
  CHECK_THROWS_AS(elaborate(d), DillError);
}

TEST_CASE("malformed derivations") {
  CheckResult r = check_derivation(parse_derivation("ax: x:A |- y : A\n"));
  CHECK_FALSE(r.ok);
  CHECK_THROWS(parse_derivation("ax x:A |- x\n"));
}

TEST_CASE("every sample simulation relates equal morphisms") {
  const std::map<std::string, Schema> schemas = {
      {"lifting", Schema::SharpBetaLifting},
      {"lifting_empty", Schema::SharpBetaLifting},
      {"contraction", Schema::SharpBetaContraction},
      {"contraction_empty", Schema::SharpBetaContraction},
      {"weakening", Schema::SharpBetaWeakening},
      {"weakening_empty", Schema::SharpBetaWeakening},
      {"promotion", Schema::SharpBetaPromotion},
      {"promotion_empty", Schema::SharpBetaPromotion},
      {"sharp_eta", Schema::SharpEta},
      {"simplification", Schema::WeakenContractSimplification},
      {"interchange_contraction", Schema::PromoteContractInterchange},
      {"interchange_weakening", Schema::PromoteWeakenInterchange},
      {"lambda_beta", Schema::LambdaBeta},
      {"lambda_eta", Schema::LambdaEta},
  };
  int seen = 0;
  for (const auto& entry : std::filesystem::directory_iterator(LINCAT_DATA_DIR "/dill")) {
    if (entry.path().extension() != ".dill") continue;
    std::string stem = entry.path().stem().string();
    CAPTURE(stem);
    auto it = schemas.find(stem);
    REQUIRE(it != schemas.end());
    auto [redex, contractum] = parse_simulation(slurp(entry.path()));
    SimulationReport rep = simulate(redex, contractum);
    CHECK(rep.schema == it->second);
    CHECK(rep.empty_delta == (stem.find("_empty") != std::string::npos));
    CHECK(rep.equality.verdict == Equality::Equal);
    ++seen;
  }
  CHECK(seen == 14);
}

TEST_CASE("unrelated derivations are rejected") {
  Derivation a = parse_derivation("ax: x:A |- x : A\n");
  CHECK_THROWS_AS(simulate(a, a), DillError);
}
