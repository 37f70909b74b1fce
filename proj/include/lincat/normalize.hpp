#pragma once

#include <string>
#include <vector>

#include "lincat/congruence.hpp"
#include "lincat/surgery.hpp"

namespace lincat {

struct TraceStep {
  Redex redex;
  CanonicalForm before;
  CanonicalForm after;
};

struct Trace {
  MorphTerm input;
  std::vector<TraceStep> steps;
  CanonicalForm result;
  int skipped_reversible = 0;  // reversible redexes left in the result
  int stuck = 0;  // irreversible redexes left because their contraction could not be rebuilt as cells
  bool fuel_exhausted = false;
};

struct NormalizeOptions {
  int fuel = 100000;
  std::string strategy = "default";
  // Rule to contract first (0: none), for replaying a chosen order.
  int first_rule = 0;
};

// Index into `rs` of the redex the default strategy contracts, or -1.
// Reversible redexes and those listed in `skip` are never chosen.
int select_redex(const std::vector<Redex>& rs, const std::vector<Redex>& skip = {});

Trace normalize(const CanonicalForm& c, const NormalizeOptions& opts = {});
Trace normalize(const MorphTerm& m, const NormalizeOptions& opts = {});

// True when every redex of `c` is reversible.
bool is_normal(const CanonicalForm& c);

enum class Equality { Equal, Distinct, Unknown };
const char* equality_name(Equality e);

struct EqualResult {
  Equality verdict = Equality::Unknown;
  std::string reason;
  Trace left;
  Trace right;
};

EqualResult equal(const MorphTerm& a, const MorphTerm& b, int budget = kDefaultBudget,
                  const NormalizeOptions& opts = {});

}  // namespace lincat
