#pragma once

#include <random>
#include <set>
#include <vector>

#include "lincat/term.hpp"

namespace lincat::testing {

// Generators that can act on `s` as a whole, drawn from `kinds`.
std::vector<Generator> generators_on(const Object& s, const std::set<GenKind>& kinds, std::mt19937_64& rng);

// `g` placed at `path` (L/R into tensor or par, B into bang) inside `whole`.
MorphTerm whisker_term(const Object& whole, const std::vector<int>& path, const MorphTerm& g);

struct WalkOptions {
  std::set<GenKind> kinds;
  int max_cells = 8;
  int min_cells = 1;
};

// Random forward walk of whiskered generators starting at `start`.
MorphTerm random_walk(const Object& start, const WalkOptions& opts, std::mt19937_64& rng);

// Random object over atoms X, Y, Z (the first `atoms` of them).
Object random_object(std::mt19937_64& rng, int atoms, int depth, bool units_and_duals);

// Kind sets used by the property tests.
std::set<GenKind> strict_kinds();
std::set<GenKind> all_kinds();

}  // namespace lincat::testing
