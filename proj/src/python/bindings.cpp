#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "tgw/cli.hpp"
#include "tgw/error.hpp"
#include "tgw/fixtures.hpp"
#include "tgw/geometry.hpp"
#include "tgw/homology.hpp"
#include "tgw/json_io.hpp"

namespace py = pybind11;
using namespace tgw;

namespace {

Options make_options(bool lenient) {
  Options o;
  o.lenient = lenient;
  o.budget = Budget::from_environment();
  return o;
}

std::tuple<int, std::string, std::string> run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::string check(const std::string& structure) {
  const auto s = resolve_structure(structure);
  return to_json(*s, check_axioms(*s)).dump();
}

std::string ideals(const std::string& structure, bool lenient) {
  const auto s = resolve_structure(structure);
  Json out = Json::array();
  for (const auto& i : enumerate_ideals(*s, make_options(lenient))) out.push_back(to_json(*s, i));
  return out.dump();
}

std::string spec(const std::string& structure, bool lenient) {
  const auto s = resolve_structure(structure);
  const auto sp = spectrum(*s, make_options(lenient));
  return to_json(*s, sp, zariski_report(*s, sp)).dump();
}

std::string catalog(const std::string& structure, bool lenient) {
  const auto opt = make_options(lenient);
  return catalog_json(cyclic_module_catalog(resolve_structure(structure), opt), opt).dump();
}

std::string ext(const std::string& structure, const std::string& m, const std::string& n, bool lenient) {
  const auto s = resolve_structure(structure);
  return to_json(ext1(resolve_module(s, m), resolve_module(s, n), make_options(lenient))).dump();
}

std::string tor(const std::string& structure, const std::string& m, const std::string& n,
                const std::string& backend, bool lenient) {
  const auto s = resolve_structure(structure);
  return to_json(tor1(resolve_module(s, m), resolve_module(s, n), parse_backend(backend), make_options(lenient))).dump();
}

std::string adjunction(const std::string& structure, const std::string& m, const std::string& n,
                       const std::string& p, bool lenient) {
  const auto s = resolve_structure(structure);
  return to_json(adjunction_check(resolve_module(s, m), resolve_module(s, n), resolve_module(s, p),
                                  make_options(lenient)))
      .dump();
}

std::string embedding(const std::string& structure, int k, const std::string& format, bool lenient) {
  const auto s = resolve_structure(structure);
  return export_graph(embed(*s, k, std::nullopt, std::nullopt, make_options(lenient)), parse_graph_format(format));
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "finite ternary Gamma-semiring workbench";

  py::register_exception<Error>(m, "TgwError", PyExc_RuntimeError);
  py::register_exception<AxiomError>(m, "AxiomError", m.attr("TgwError").ptr());
  py::register_exception<BudgetError>(m, "BudgetError", m.attr("TgwError").ptr());

  m.def("structure_names", &bundled_structure_names);
  m.def("module_names", [](const std::string& s) { return bundled_module_names(s); }, py::arg("structure"));
  m.def("run", &run, py::arg("args"), "Runs one CLI invocation; returns (exit code, stdout, stderr).");
  m.def("check", &check, py::arg("structure"));
  m.def("ideals", &ideals, py::arg("structure"), py::arg("lenient") = false);
  m.def("spectrum", &spec, py::arg("structure"), py::arg("lenient") = false);
  m.def("catalog", &catalog, py::arg("structure"), py::arg("lenient") = false);
  m.def("ext1", &ext, py::arg("structure"), py::arg("m") = "regular", py::arg("n") = "regular",
        py::arg("lenient") = false);
  m.def("tor1", &tor, py::arg("structure"), py::arg("m") = "regular", py::arg("n") = "regular",
        py::arg("backend") = "auto", py::arg("lenient") = false);
  m.def("adjunction", &adjunction, py::arg("structure"), py::arg("m") = "regular", py::arg("n") = "regular",
        py::arg("p") = "regular", py::arg("lenient") = false);
  m.def("embed", &embedding, py::arg("structure"), py::arg("k") = 2, py::arg("format") = "json",
        py::arg("lenient") = false);
}
