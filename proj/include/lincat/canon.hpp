#pragma once

#include <string>

#include "lincat/net.hpp"

namespace lincat {

// Isomorphism certificate of a net. Promotion boxes are merged with the
// phi-trees and boxes feeding them, dup trees become one vertex with
// unordered outputs, and the result is canonically labelled. Equal texts
// imply isomorphic graphs; `exact` is false when the branch cap cut the
// search short, in which case isomorphic nets may still differ.
struct NetCertificate {
  std::string text;
  bool exact = true;
};

NetCertificate net_certificate(const Net& n, int branch_cap = 256);

}  // namespace lincat
