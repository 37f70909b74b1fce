#include "lincat/trace_io.hpp"

#include <sstream>

#include "json.hpp"

namespace lincat {

namespace {

std::string indent_lines(const std::string& text, const std::string& pad) {
  std::istringstream in(text);
  std::string line, out;
  while (std::getline(in, line)) out += pad + line + "\n";
  if (out.empty()) out = pad + "(identity)\n";
  return out;
}

std::string form_text(const CanonicalForm& c) { return pretty(to_term(c)); }

}  // namespace

std::string trace_text(const Trace& t) {
  std::ostringstream os;
  os << "input: " << pretty(t.input) << "\n";
  for (std::size_t i = 0; i < t.steps.size(); ++i) {
    const TraceStep& s = t.steps[i];
    os << "step " << i + 1 << ": rule=" << s.redex.rule << " class=" << class_name(s.redex.cls())
       << " pos=" << s.redex.start << ".." << s.redex.end << " reversible=false\n";
    os << "  before:\n" << indent_lines(s.before.dump(), "    ");
    os << "  after:\n" << indent_lines(s.after.dump(), "    ");
  }
  os << "normal form: " << form_text(t.result) << "\n";
  os << indent_lines(t.result.dump(), "  ");
  os << "skipped_reversible: " << t.skipped_reversible << "\n";
  if (t.stuck) os << "uncontracted irreversible redexes: " << t.stuck << "\n";
  if (t.fuel_exhausted) os << "fuel exhausted\n";
  return os.str();
}

std::string trace_json(const Trace& t, int indent) {
  nlohmann::ordered_json j;
  j["input"] = pretty(t.input);
  j["steps"] = nlohmann::ordered_json::array();
  for (const auto& s : t.steps) {
    nlohmann::ordered_json e;
    e["rule"] = s.redex.rule;
    e["class"] = class_name(s.redex.cls());
    e["pos"] = {s.redex.start, s.redex.end};
    e["before"] = form_text(s.before);
    e["after"] = form_text(s.after);
    j["steps"].push_back(std::move(e));
  }
  j["normal_form"] = form_text(t.result);
  j["skipped_reversible"] = t.skipped_reversible;
  return j.dump(indent);
}

}  // namespace lincat
