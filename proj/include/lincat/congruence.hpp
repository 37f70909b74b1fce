#pragma once

#include <string>

#include "lincat/trace.hpp"

namespace lincat {

enum class Verdict { Yes, No, Unknown };

const char* verdict_name(Verdict v);

struct CongruenceResult {
  Verdict verdict = Verdict::Unknown;
  std::string reason;
};

inline constexpr int kDefaultBudget = 10000;

CongruenceResult congruent(const CanonicalForm& a, const CanonicalForm& b, int budget = kDefaultBudget);
CongruenceResult congruent(const MorphTerm& a, const MorphTerm& b, int budget = kDefaultBudget);

}  // namespace lincat
