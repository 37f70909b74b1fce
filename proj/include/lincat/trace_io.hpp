#pragma once

#include <string>

#include "lincat/normalize.hpp"

namespace lincat {

// One `step <n>: rule=<id> class=<class> pos=<i..j> reversible=false` line
// per step, each followed by indented before/after dumps.
std::string trace_text(const Trace& t);

// {input, steps[{rule, class, pos, before, after}], normal_form,
// skipped_reversible} with this key order.
std::string trace_json(const Trace& t, int indent = 2);

}  // namespace lincat
