#include "lincat/rules.hpp"

#include <stdexcept>

#include "lincat/parser.hpp"

namespace lincat {

const char* class_name(RuleClass c) {
  switch (c) {
    case RuleClass::Algebraic: return "algebraic";
    case RuleClass::Naturality: return "naturality";
    case RuleClass::Beta: return "beta";
    default: return "eta";
  }
}

#define MID4                                                                               \
  "alpha{!$A,!$A,!$B*!$B};(id{!$A}*alpha~{!$A,!$B,!$B});(id{!$A}*(sig{!$A,!$B}*id{!$B}));" \
  "(id{!$A}*alpha{!$B,!$A,!$B});alpha~{!$A,!$B,!$A*!$B}"

const std::vector<RuleInfo>& rule_table() {
  static const std::vector<RuleInfo> table = {
      {1, "(δ;δ)-type", RuleClass::Algebraic, "delta{$A};delta{!$A}", "delta{$A};!delta{$A}"},
      {2, "(δ;ε)-type", RuleClass::Algebraic, "delta{$A};eps{!$A}", "id{!$A}"},
      {3, "(δ;!ε)-type", RuleClass::Algebraic, "delta{$A};!eps{$A}", "id{!$A}"},
      {4, "(δ;d)-type", RuleClass::Algebraic, "delta{$A};dup{!$A}", "dup{$A};(delta{$A}*delta{$A})"},
      {5, "(δ;!d)-type", RuleClass::Algebraic, "delta{$A};!dup{$A}",
       "dup{$A};(delta{$A}*delta{$A});phi{!$A,!$A}"},
      {6, "(δ;e)-type", RuleClass::Algebraic, "delta{$A};drop{!$A}", "drop{$A}"},
      {7, "(δ;!e)-type", RuleClass::Algebraic, "delta{$A};!drop{$A}", "drop{$A};phi0"},
      {8, "(d;e)-type", RuleClass::Algebraic, "dup{$A};(drop{$A}*id{!$A})", "lam~{!$A}"},
      {9, "(φ̃;δ)-type", RuleClass::Algebraic, "phi{$A,$B};delta{$A*$B}",
       "(delta{$A}*delta{$B});phi{!$A,!$B};!phi{$A,$B}"},
      {10, "(φ̃;ε)-type", RuleClass::Algebraic, "phi{$A,$B};eps{$A*$B}", "eps{$A}*eps{$B}"},
      {11, "(φ̃;d)-type", RuleClass::Algebraic, "phi{$A,$B};dup{$A*$B}",
       "(dup{$A}*dup{$B});" MID4 ";(phi{$A,$B}*phi{$A,$B})"},
      {12, "(φ̃;e)-type", RuleClass::Algebraic, "phi{$A,$B};drop{$A*$B}", "(drop{$A}*drop{$B});lam{1}"},
      {13, "(φ0;δ)-type", RuleClass::Algebraic, "phi0;delta{1}", "phi0;!phi0"},
      {14, "(φ0;ε)-type", RuleClass::Algebraic, "phi0;eps{1}", "id{1}"},
      {15, "(φ0;d)-type", RuleClass::Algebraic, "phi0;dup{1}", "lam~{1};(phi0*phi0)"},
      {16, "(φ0;e)-type", RuleClass::Algebraic, "phi0;drop{1}", "id{1}"},
      {17, "(φ0;φ̃)-type", RuleClass::Algebraic, "(phi0*id{!$A});phi{1,$A}", "lam{!$A};!lam~{$A}"},
      {18, "(!f;δ)-type", RuleClass::Naturality, "!$F;delta{$B}", "delta{$A};!!$F"},
      {19, "(!f;ε)-type", RuleClass::Naturality, "!$F;eps{$B}", "eps{$A};$F"},
      {20, "(!f;d)-type", RuleClass::Naturality, "!$F;dup{$B}", "dup{$A};(!$F*!$F)"},
      {21, "(!f;e)-type", RuleClass::Naturality, "!$F;drop{$B}", "drop{$A}"},
      {22, "(τ;γ)-β-type", RuleClass::Beta, "(tau{$A}*id{$A});dist'{$A,$A^,$A};(id{$A}%gamma{$A})",
       "lam{$A};brho~{$A}"},
      {23, "(τ;γ)-η-type", RuleClass::Eta, "(id{$A^}*tau{$A});dist{$A^,$A,$A^};(gamma{$A}%id{$A^})",
       "rho{$A^};blam~{$A^}"},
  };
  return table;
}

#undef MID4

const RuleInfo& rule_info(int id) {
  const auto& t = rule_table();
  if (id < 1 || id > static_cast<int>(t.size())) throw std::out_of_range("rule id " + std::to_string(id));
  return t[static_cast<std::size_t>(id - 1)];
}

RuleClass rule_class(int id) { return rule_info(id).cls; }

MorphTerm instantiate(const std::string& tmpl, const Object& a, const Object& b, const MorphTerm& f) {
  std::string out;
  for (std::size_t i = 0; i < tmpl.size(); ++i) {
    if (tmpl[i] == '$' && i + 1 < tmpl.size()) {
      char v = tmpl[++i];
      if (v == 'A') out += "(" + a.str() + ")";
      else if (v == 'B') out += "(" + b.str() + ")";
      else if (v == 'F') out += "(" + pretty(f) + ")";
      continue;
    }
    out += tmpl[i];
  }
  return parse_morphism(out);
}

}  // namespace lincat
