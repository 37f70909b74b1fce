#pragma once

#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "lincat/trace.hpp"

namespace lincat {

struct Net;

// A non-wiring generator, or a box holding the inner net of a banged part.
struct NetNode {
  enum Kind { Gen, Box };
  Kind kind = Gen;
  Generator gen;
  Object in;
  Object out;
  std::vector<int> ins;   // one wire per leaf of `in`
  std::vector<int> outs;  // one wire per leaf of `out`
  std::shared_ptr<Net> inner;
  std::vector<int> cells;  // indices of the cells this node came from
  double rank = 0;
  bool alive = true;
};

// Wiring diagram of a morphism: structural isomorphisms, dist and dist'
// disappear into the wires; units carry no wires.
struct Net {
  Object dom;
  Object cod;
  std::vector<int> dom_wires;
  std::vector<int> cod_wires;
  std::vector<NetNode> nodes;
  int next_wire = 0;

  int fresh() { return next_wire++; }
};

// Endpoint of a wire: node index and port, or node -1 for the boundary.
struct End {
  int node = -1;
  int port = 0;
};

struct WireIndex {
  std::unordered_map<int, End> producer;
  std::unordered_map<int, End> consumer;
};

WireIndex index_wires(const Net& n);

// Builds the net of a typed cell list. `ids[i]` labels cells[i].
Net build_net(const Object& dom, const std::vector<Cell>& cells, const std::vector<int>& ids);
Net build_net(const CanonicalForm& c);

// Merges adjacent boxes, drops identity boxes and compacts, recursively.
void normalize_net(Net& n);

std::shared_ptr<Net> deep_copy(const Net& n);
// True when the net (and every nested box) has no generator nodes.
bool is_wiring_only(const Net& n);
bool is_identity_net(const Net& n);
// Sequential composition: a's codomain wires meet b's domain wires.
Net compose_nets(const Net& a, const Net& b);
// Adds all of `src`'s nodes to `dst`, renaming wires; `bind` maps src boundary
// wires to dst wires. Returns the mapping for all src wires.
std::unordered_map<int, int> splice(Net& dst, const Net& src, const std::unordered_map<int, int>& bind);

// Replaces every occurrence of wire `from` (as a node input or codomain
// entry) by `to`.
void redirect_consumer(Net& n, int from, int to);

void collect_cells(const Net& n, std::vector<int>& out);
std::string net_debug(const Net& n, int indent = 0);

}  // namespace lincat
