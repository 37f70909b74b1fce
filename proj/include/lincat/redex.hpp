#pragma once

#include <vector>

#include "lincat/net.hpp"
#include "lincat/rules.hpp"

namespace lincat {

// A rule occurrence in the net of a canonical trace. Node indices refer to
// the net reached by following `boxes` (box node indices, outermost first).
struct Redex {
  int rule = 0;
  int start = 0;  // first and last trace cell covered by the match
  int end = 0;
  bool reversible = false;
  std::vector<int> boxes;
  std::vector<int> nodes;
  // phi nodes (and the input port taken) between a delta and the box it
  // feeds (rules 3, 5, 7)
  std::vector<std::pair<int, int>> chain;
  int inner = -1;  // node inside the box (rules 3, 5, 7)
  int port = -1;   // output of dup (rule 8) or phi input (rule 17)

  RuleClass cls() const { return rule_class(rule); }
  friend bool operator==(const Redex& a, const Redex& b) {
    return a.rule == b.rule && a.start == b.start && a.end == b.end && a.boxes == b.boxes &&
           a.nodes == b.nodes && a.chain == b.chain && a.inner == b.inner && a.port == b.port;
  }
};

// Normalized net of a trace; cell ids are trace positions.
Net form_net(const CanonicalForm& c);

std::vector<Redex> find_redexes(const Net& top);
std::vector<Redex> find_redexes(const CanonicalForm& c);

}  // namespace lincat
