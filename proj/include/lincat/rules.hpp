#pragma once

#include <string>
#include <vector>

#include "lincat/term.hpp"

namespace lincat {

enum class RuleClass { Algebraic, Naturality, Beta, Eta };

const char* class_name(RuleClass c);

// One directed rule. Patterns are concrete-syntax templates over $A, $B
// (objects) and, for rules 18-21, $F (a morphism $A -> $B).
struct RuleInfo {
  int id;
  const char* name;
  RuleClass cls;
  const char* redex;
  const char* contractum;
};

const std::vector<RuleInfo>& rule_table();
const RuleInfo& rule_info(int id);
RuleClass rule_class(int id);

// Substitutes the metavariables of a template and parses it.
MorphTerm instantiate(const std::string& tmpl, const Object& a, const Object& b = Object(),
                      const MorphTerm& f = MorphTerm());

}  // namespace lincat
