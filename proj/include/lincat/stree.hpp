#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "lincat/generator.hpp"

namespace lincat {

// Step taken by a context path: left or right operand, or under a bang.
enum class Dir : std::uint8_t { L, R, B };
using DirPath = std::vector<Dir>;

// Mutable shape of an object whose leaves carry wire ids. Leaves are atoms,
// duals and (unless bangs are opened) banged objects; units are tokens.
struct STree {
  enum Kind { Leaf, One, Bot, Tensor, Par, Bang };
  Kind kind = Leaf;
  int wire = -1;
  Object obj;
  std::unique_ptr<STree> l, r;
  bool frozen = false;
  int tag = 0;  // identity kept across clone()

  Object object() const;
  std::unique_ptr<STree> clone() const;
  bool is_unit() const { return kind == One || kind == Bot; }
};

using STreePtr = std::unique_ptr<STree>;

// Builds a tree for `o`, allocating wires from `next_wire` for each leaf.
// Banged objects are opened when `open_bang` is set.
STreePtr stree_from_object(const Object& o, bool open_bang, int& next_wire,
                           std::vector<int>* wires = nullptr);
// Same, but with the given leaf wires in order.
STreePtr stree_with_wires(const Object& o, const std::vector<int>& wires);

STree* stree_at(STree* root, const DirPath& p);
STreePtr& stree_slot(STreePtr& root, const DirPath& p);
void stree_wires(const STree* t, std::vector<int>& out);
bool stree_find(const STree* t, int wire, DirPath& out);

// Rebuilds the subtree at `p` per a glue generator (structural iso, dist,
// dist'). Throws TypeError when the subtree has the wrong shape.
void apply_glue(STreePtr& root, const DirPath& p, GenKind k);

}  // namespace lincat
