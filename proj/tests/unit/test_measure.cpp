#include <random>

#include "doctest.h"
#include "lincat/measure.hpp"
#include "lincat/parser.hpp"
#include "lincat/surgery.hpp"
#include "random_terms.hpp"

using namespace lincat;

namespace {

std::size_t count_atoms(const Object& a) {
  switch (a.kind()) {
    case ObjKind::Atom: return 1;
    case ObjKind::Tensor: return count_atoms(a.left()) + count_atoms(a.right());
    case ObjKind::Bang: return count_atoms(a.inner());
    default: return 0;
  }
}

// Weight of one atom occurrence: identity on atoms, doubled under a bang,
// and shifted by the size of the other operand under a tensor.
unsigned long theta_oracle(const Object& a, std::size_t occ, unsigned long x) {
  switch (a.kind()) {
    case ObjKind::Atom: return x;
    case ObjKind::Bang: return 2 * theta_oracle(a.inner(), occ, x);
    case ObjKind::Tensor: {
      std::size_t nl = count_atoms(a.left());
      if (occ < nl) return count_atoms(a.right()) + theta_oracle(a.left(), occ, x);
      return nl + theta_oracle(a.right(), occ - nl, x);
    }
    default: FAIL("no occurrence"); return 0;
  }
}

Nat pow2(unsigned long e) { return Nat::pow2(Nat(e)); }

OccLabeling at(const CanonicalForm& s, std::vector<Nat> labels) { return {s.cod, std::move(labels)}; }

}  // namespace

TEST_CASE("theta on a nested object") {
  Object a = parse_object("!(X * !!X)");
  REQUIRE(occurrences(a) == 2);
  for (unsigned long x : {2ul, 3ul, 10ul}) {
    CHECK(theta(a, 0, Nat(x)) == Nat(2 * (1 + x)));
    CHECK(theta(a, 1, Nat(x)) == Nat(2 * (1 + 4 * x)));
  }
}

TEST_CASE("theta agrees with the oracle on random objects") {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 200; ++i) {
    Object a = testing::random_object(rng, 3, 4, false);
    CAPTURE(a.str());
    for (std::size_t k = 0; k < occurrences(a); ++k)
      for (unsigned long x : {2ul, 5ul}) CHECK(theta(a, k, Nat(x)) == Nat(theta_oracle(a, k, x)));
  }
}

TEST_CASE("theta is invariant under reassociation and monotone") {
  Object l = parse_object("(!X * Y) * !!(Z * X)");
  Object r = parse_object("!X * (Y * !!(Z * X))");
  REQUIRE(occurrences(l) == occurrences(r));
  for (std::size_t k = 0; k < occurrences(l); ++k) {
    for (unsigned long x = 2; x < 8; ++x) {
      CHECK(theta(l, k, Nat(x)) == theta(r, k, Nat(x)));
      CHECK(theta(l, k, Nat(x)) < theta(l, k, Nat(x + 1)));
    }
  }
}

TEST_CASE("measure of a lifted duplication") {
  CanonicalForm s = canonicalize(parse_morphism("delta{X} ; dup{!X} ; (id{!!X} * !drop{X})"));
  REQUIRE(occurrences(s.cod) == 1);
  for (unsigned long x : {2ul, 3ul, 7ul}) {
    OccLabeling d = measure(s, at(s, {Nat(x)}));
    REQUIRE(d.labels.size() == 1);
    CHECK(d.labels[0] == pow2(2 * x + 4));
  }
}

TEST_CASE("measure of a duplicated lift") {
  CanonicalForm s = canonicalize(parse_morphism("dup{X} ; (delta{X} * delta{X}) ; (id{!!X} * !drop{X})"));
  for (unsigned long x : {2ul, 3ul, 7ul}) {
    OccLabeling d = measure(s, at(s, {Nat(x)}));
    REQUIRE(d.labels.size() == 1);
    CHECK(d.labels[0] == pow2(x) + Nat(4));
  }
}

TEST_CASE("measure rejects bad labelings") {
  CanonicalForm s = canonicalize(parse_morphism("delta{X}"));
  CHECK_THROWS_AS(measure(s, at(s, {Nat(1)})), MeasureError);
  CHECK_THROWS_AS(measure(s, at(s, {})), MeasureError);
  CHECK_THROWS_AS(measure(canonicalize(parse_morphism("tau{X}")), {}), MeasureError);
}

TEST_CASE("symbolic measures match numeric ones") {
  CanonicalForm s = canonicalize(parse_morphism("delta{X} ; dup{!X}"));
  auto ex = measure_exprs(s);
  REQUIRE(ex.size() == 1);
  for (unsigned long x : {2ul, 3ul, 9ul}) {
    std::vector<Nat> xs{Nat(x), Nat(x + 1)};
    OccLabeling d = measure(s, at(s, xs));
    CHECK(ex[0].eval(xs) == d.labels[0]);
    CHECK(ex[0].eval(xs) == pow2(2 * x + 2 * (x + 1)));
  }
}

TEST_CASE("classification") {
  auto cls = [](const char* s) { return classify(parse_morphism(s)); };
  CHECK(cls("delta{X} ; dup{!X}") == MorphClass::StrictCompositeAlgebraic);
  CHECK(cls("phi{X,Y} ; eps{X*Y}") == MorphClass::StrictCompositeAlgebraic);
  CHECK(cls("phi0 ; delta{1}") == MorphClass::CompositeAlgebraic);
  CHECK(cls("drop{X} ; phi0") == MorphClass::CompositeAlgebraic);
  CHECK(cls("lam~{!X}") == MorphClass::CompositeAlgebraic);
  CHECK(cls("tau{X}") == MorphClass::Other);
  CHECK(cls("id{X} % delta{Y}") == MorphClass::Other);
  CHECK(cls("eps{X^}") == MorphClass::Other);
}

TEST_CASE("restricted naturality") {
  auto first_nat = [](const CanonicalForm& c) -> std::optional<Redex> {
    for (const Redex& r : find_redexes(c))
      if (r.cls() == RuleClass::Naturality) return r;
    return std::nullopt;
  };
  CanonicalForm a = canonicalize(parse_morphism("!delta{X} ; delta{!!X}"));
  auto ra = first_nat(a);
  REQUIRE(ra);
  CHECK(is_restricted_naturality(a, *ra));

  CanonicalForm b = canonicalize(parse_morphism("!dup{X} ; delta{!X * !X}"));
  auto rb = first_nat(b);
  REQUIRE(rb);
  CHECK_FALSE(is_restricted_naturality(b, *rb));

  CanonicalForm c = canonicalize(parse_morphism("delta{X} ; delta{!X}"));
  for (const Redex& r : find_redexes(c)) CHECK_FALSE(is_restricted_naturality(c, r));
}

TEST_CASE("the weakening rule decreases the measure") {
  CanonicalForm before = canonicalize(parse_morphism("delta{X} ; drop{!X}"));
  const auto rs = find_redexes(before);
  const Redex* r6 = nullptr;
  for (const Redex& r : rs)
    if (r.rule == 6) r6 = &r;
  REQUIRE(r6);
  auto after = step(before, *r6);
  REQUIRE(after);
  CHECK(measure(before, at(before, {})).labels[0] == Nat(16));
  CHECK(measure(*after, at(*after, {})).labels[0] == Nat(2));
  CHECK(check_decrease(before, *after, *r6, at(before, {})) == Decrease::Decreased);
}
