#pragma once

#include <optional>
#include <stdexcept>
#include <string>

#include "lincat/redex.hpp"

namespace lincat {

class StaleRedex : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Replaces the redex by its contractum in a copy of the net and normalizes
// the result.
Net contract(const Net& top, const Redex& r);

// One rewriting step on a trace. Throws StaleRedex when `r` does not occur in
// `c`; nullopt (reason in *why) when the contracted net has no sequential
// reading.
std::optional<CanonicalForm> step(const CanonicalForm& c, const Redex& r, std::string* why = nullptr);

}  // namespace lincat
