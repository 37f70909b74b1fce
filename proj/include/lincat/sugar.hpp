#pragma once

#include "lincat/term.hpp"

namespace lincat {

// abs{A,B} : A -> (A*B) % B^
MorphTerm expand_abs(const Object& a, const Object& b);
// ev{A,B} : (A % B^) * B -> A
MorphTerm expand_ev(const Object& a, const Object& b);
// f^ : B^ -> A^ for f : A -> B, drawn as a snake through tau{A} and gamma{B}.
MorphTerm expand_dual(const MorphTerm& f);

// Replaces every sugar node by its core expansion, bottom-up.
MorphTerm expand_sugar(const MorphTerm& m);

// A -o B
Object lollipop(const Object& a, const Object& b);

}  // namespace lincat
