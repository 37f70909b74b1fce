#include "lincat/structural.hpp"

namespace lincat {

std::optional<LeafMap> structural_semantics(const CanonicalForm& c) {
  for (const auto& cell : c.cells)
    if (!is_structural(cell.gen.kind)) return std::nullopt;
  int next = 0;
  std::vector<int> dom_wires;
  STreePtr tree = stree_from_object(c.dom, true, next, &dom_wires);
  for (const auto& cell : c.cells) apply_glue(tree, cell.dirs(), cell.gen.kind);
  std::vector<int> cod_wires;
  stree_wires(tree.get(), cod_wires);
  LeafMap m;
  m.image.assign(dom_wires.size(), -1);
  for (std::size_t pos = 0; pos < cod_wires.size(); ++pos) m.image[cod_wires[pos]] = static_cast<int>(pos);
  return m;
}

}  // namespace lincat
