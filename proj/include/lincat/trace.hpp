#pragma once

#include <string>
#include <vector>

#include "lincat/stree.hpp"
#include "lincat/term.hpp"

namespace lincat {

enum class FrameKind { TensorLeft, TensorRight, ParLeft, ParRight, Bang };

struct Frame {
  FrameKind kind;
  Object passive;  // the untouched operand; unset for Bang

  friend bool operator==(const Frame& a, const Frame& b) {
    return a.kind == b.kind && a.passive == b.passive;
  }
};

using ContextPath = std::vector<Frame>;

// One generator whiskered into a context, frames listed from the root down.
struct Cell {
  Generator gen;
  ContextPath path;

  Object dom() const;
  Object cod() const;
  DirPath dirs() const;
  std::string str() const;

  friend bool operator==(const Cell& a, const Cell& b) {
    return a.gen == b.gen && a.path == b.path;
  }
};

struct CanonicalForm {
  Object dom;
  Object cod;
  std::vector<Cell> cells;

  // One cell per line: `kind{subs} @ [frames]`.
  std::string dump() const;
  friend bool operator==(const CanonicalForm& a, const CanonicalForm& b) {
    return a.dom == b.dom && a.cod == b.cod && a.cells == b.cells;
  }
};

std::string path_str(const ContextPath& p);
Object whisker(const ContextPath& p, const Object& inner);
ContextPath path_from_dirs(const Object& whole, const DirPath& dirs);

// Independent cells act on disjoint operands of a common tensor or par.
bool independent(const Cell& a, const Cell& b);

// Recomputes passive objects and the codomain; throws TypeError on mismatch.
void retype(CanonicalForm& c);

// Flattens composition and distributes contexts without sorting.
CanonicalForm flatten(const MorphTerm& m);
// Sorts commuting neighbours into the fixed trace-monoid order.
void sort_cells(CanonicalForm& c);
CanonicalForm canonicalize(const MorphTerm& m);
CanonicalForm cancel_inverses(const CanonicalForm& c);
// canonical order followed by inverse cancellation until stable
CanonicalForm tidy(CanonicalForm c);

bool inverse_pair(const Generator& a, const Generator& b);

MorphTerm cell_term(const Cell& c);
MorphTerm to_term(const CanonicalForm& c);

}  // namespace lincat
