#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lincat/net.hpp"

namespace lincat {

// Reads a net back as a cell list from net.dom to net.cod, inserting the
// wiring cells it needs. Deterministic; nullopt if the greedy schedule gets
// stuck (reason in *why).
std::optional<std::vector<Cell>> sequentialize(const Net& net, std::string* why = nullptr);

// Wiring-only map between two objects with matching leaf wires.
std::optional<std::vector<Cell>> rewire(const Object& src, const std::vector<int>& src_wires,
                                        const Object& dst, const std::vector<int>& dst_wires);

// Net -> tidy canonical form; nullopt when sequentializing fails.
std::optional<CanonicalForm> net_to_form(const Net& net, std::string* why = nullptr);

}  // namespace lincat
