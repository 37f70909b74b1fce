#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "lincat/dill.hpp"
#include "lincat/measure.hpp"
#include "lincat/session.hpp"
#include "lincat/trace_io.hpp"

namespace py = pybind11;
using namespace lincat;

namespace {

MorphTerm term(const Session& s, const std::string& text) { return s.morphism(text); }

py::tuple type_of(const Session& s, const std::string& text) {
  Typing t = infer_type(term(s, text));
  return py::make_tuple(t.dom.str(), t.cod.str());
}

py::dict normalize_py(const Session& s, const std::string& text, int fuel) {
  NormalizeOptions o;
  o.fuel = fuel;
  Trace t = normalize(term(s, text), o);
  py::list rules;
  for (const auto& st : t.steps) rules.append(st.redex.rule);
  py::dict d;
  d["normal_form"] = pretty(to_term(t.result));
  d["rules"] = rules;
  d["skipped_reversible"] = t.skipped_reversible;
  d["stuck"] = t.stuck;
  d["fuel_exhausted"] = t.fuel_exhausted;
  d["json"] = trace_json(t);
  return d;
}

py::tuple equal_py(const Session& s, const std::string& a, const std::string& b, int budget) {
  EqualResult r = equal(term(s, a), term(s, b), budget);
  return py::make_tuple(equality_name(r.verdict), r.reason);
}

py::tuple congruent_py(const Session& s, const std::string& a, const std::string& b, int budget) {
  CongruenceResult r = congruent(term(s, a), term(s, b), budget);
  return py::make_tuple(verdict_name(r.verdict), r.reason);
}

std::vector<std::string> measure_py(const Session& s, const std::string& text, const std::vector<unsigned long>& labels) {
  CanonicalForm c = flatten(term(s, text));
  OccLabeling cod{c.cod, {}};
  for (unsigned long x : labels) cod.labels.emplace_back(x);
  std::vector<std::string> out;
  for (const Nat& n : measure(c, cod).labels) out.push_back(n.str());
  return out;
}

py::dict simulate_py(const std::string& text) {
  auto [redex, contractum] = parse_simulation(text);
  SimulationReport r = simulate(redex, contractum);
  py::dict d;
  d["schema"] = schema_name(r.schema);
  d["equality"] = equality_name(r.equality.verdict);
  d["reached"] = r.reached;
  d["path"] = r.path;
  return d;
}

}  // namespace

PYBIND11_MODULE(_lincat, m) {
  m.doc() = "Rewriting and normal forms for linear category morphisms";

  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<TypeError>(m, "TypeError", PyExc_TypeError);
  py::register_exception<SessionError>(m, "SessionError", PyExc_ValueError);
  py::register_exception<MeasureError>(m, "MeasureError", PyExc_ValueError);
  py::register_exception<DillError>(m, "DillError", PyExc_ValueError);

  py::class_<Session>(m, "Session")
      .def(py::init<>())
      .def("load_defs", &Session::load_defs, py::arg("text"), py::arg("origin") = "<defs>")
      .def("load_defs_file", &Session::load_defs_file)
      .def_property_readonly("names", &Session::names)
      .def("pretty", [](const Session& s, const std::string& t) { return pretty(s.morphism(t)); })
      .def("object", [](const Session& s, const std::string& t) { return s.object(t).str(); })
      .def("type", &type_of)
      .def("normalize", &normalize_py, py::arg("text"), py::arg("fuel") = 100000)
      .def("equal", &equal_py, py::arg("a"), py::arg("b"), py::arg("budget") = kDefaultBudget)
      .def("congruent", &congruent_py, py::arg("a"), py::arg("b"), py::arg("budget") = kDefaultBudget)
      .def("classify", [](const Session& s, const std::string& t) { return morph_class_name(classify(s.morphism(t))); })
      .def("measure", &measure_py, py::arg("text"), py::arg("labels"));

  m.def("simulate", &simulate_py, py::arg("text"));
  m.def("theta", [](const std::string& obj, std::size_t occ, unsigned long x) {
    return theta(parse_object(obj), occ, Nat(x)).str();
  });
}
