#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "knottab/census.hpp"
#include "knottab/classify.hpp"
#include "knottab/closedform.hpp"
#include "knottab/diagram.hpp"
#include "knottab/girth.hpp"
#include "knottab/oracle.hpp"

namespace py = pybind11;
using namespace knottab;

namespace {

Method method_of(const std::string& m) {
  if (m == "closed") return Method::closed;
  if (m == "oracle") return Method::oracle;
  throw usage_error("method must be closed or oracle");
}

py::dict invariants(const std::string& rep, const std::string& method) {
  const RepInvariants inv = rep_invariants(parse_rep(rep), method_of(method));
  py::dict d;
  d["components"] = inv.components;
  d["writhe"] = inv.writhe;
  d["conway"] = inv.conway ? py::object(py::str(inv.conway->str())) : py::object(py::none());
  d["bracket"] = inv.bracket.str();
  d["jones"] = inv.jones.str();
  d["span"] = inv.span;
  d["source"] = inv.source;
  return d;
}

}  // namespace

PYBIND11_MODULE(_knottab, m) {
  py::register_exception<usage_error>(m, "UsageError", PyExc_ValueError);
  py::register_exception<parse_error>(m, "ParseError", PyExc_ValueError);
  py::register_exception<invalid_pd>(m, "InvalidPD", PyExc_ValueError);

  m.def("canonical", [](const std::string& s) { return to_string(canonicalize(parse_rep(s)).rep); });
  m.def("invariants", &invariants, py::arg("rep"), py::arg("method") = "closed");
  m.def("bracket_oracle", [](const std::string& s) { return bracket_oracle(pd_from_rep(parse_rep(s))).str(); });
  m.def("conway_fox", [](const std::string& s) { return conway_fox(pd_from_rep(parse_rep(s))).str(); });
  m.def("pd_code", [](const std::string& s) { return to_text(pd_from_rep(parse_rep(s))); });
  m.def(
      "compare",
      [](const std::string& a, const std::string& b, bool mirror_ok) {
        const Verdict v = compare(parse_rep(a), parse_rep(b), mirror_ok);
        return to_string(v.tag);
      },
      py::arg("rep1"), py::arg("rep2"), py::arg("mirror_ok") = false);
  m.def("girth", [](const std::string& pd_path) {
    const GirthResult g = diagram_girth(load_pd(pd_path));
    const auto rep = rep_from_decomposition(g.witness);
    return py::make_tuple(g.girth, rep ? py::object(py::str(to_string(*rep))) : py::object(py::none()));
  });
  m.def("census_classes", [](int girth, int max_abs, bool even, bool positive) {
    return dedup_census(enumerate(girth, max_abs, {even, positive, false})).num_classes;
  });
}
