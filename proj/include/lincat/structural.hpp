#pragma once

#include <optional>
#include <vector>

#include "lincat/trace.hpp"

namespace lincat {

// image[i] is the codomain position of domain leaf i (atoms and duals, read
// through tensor, par and bang).
struct LeafMap {
  std::vector<int> image;
  friend bool operator==(const LeafMap& a, const LeafMap& b) { return a.image == b.image; }
};

// nullopt when some cell is not a structural isomorphism.
std::optional<LeafMap> structural_semantics(const CanonicalForm& c);

}  // namespace lincat
