#pragma once

#include <vector>

#include "lincat/expr.hpp"
#include "lincat/redex.hpp"

namespace lincat {

enum class MorphClass { StrictCompositeAlgebraic, CompositeAlgebraic, Other };
const char* morph_class_name(MorphClass c);

MorphClass classify(const CanonicalForm& c);
MorphClass classify(const MorphTerm& m);

// Number of atom occurrences in `a`, through tensor and bang.
std::size_t occurrences(const Object& a);

// Weight of occurrence `occ` (0-based, left to right) of `a` at label x.
Nat theta(const Object& a, std::size_t occ, const Nat& x);
Expr theta(const Object& a, std::size_t occ, const Expr& x);

// Labels on the atom occurrences of an object, left to right.
struct OccLabeling {
  Object object;
  std::vector<Nat> labels;
};

// Domain labels of s from codomain labels, by back-propagation through the
// trace. Accepts composite algebraic traces; throws MeasureError otherwise,
// on a missing label, or when a tower exceeds `depth_guard`.
OccLabeling measure(const CanonicalForm& s, const OccLabeling& cod, std::size_t depth_guard = 64);
OccLabeling measure(const MorphTerm& s, const OccLabeling& cod, std::size_t depth_guard = 64);

// Closed forms of the domain labels over codomain variables x1..xn.
std::vector<Expr> measure_exprs(const CanonicalForm& s);

// Naturality redex whose boxed f uses only delta and phi (and wiring).
bool is_restricted_naturality(const Net& top, const Redex& r);
bool is_restricted_naturality(const CanonicalForm& c, const Redex& r);

enum class Decrease { Decreased, Unchanged, Violation };
const char* decrease_name(Decrease d);

// Compares the domain label sums of `before` and `after` (= step(before, r))
// under the same codomain labels.
Decrease check_decrease(const CanonicalForm& before, const CanonicalForm& after, const Redex& r,
                        const OccLabeling& labels, std::size_t depth_guard = 64);

}  // namespace lincat
