#include <sstream>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <json.hpp>

#include "linkhom/cli.hpp"
#include "linkhom/diagram.hpp"
#include "linkhom/errors.hpp"
#include "linkhom/graph.hpp"
#include "linkhom/graph_complex.hpp"
#include "linkhom/homfly.hpp"
#include "linkhom/khovanov.hpp"
#include "linkhom/verify.hpp"

namespace py = pybind11;
using namespace linkhom;

namespace {

JWindow window_of(const std::optional<std::pair<int, int>>& w) { return w; }

// Structured values cross the boundary as JSON text; the Python side decodes.
std::string khovanov_json(const std::string& link, std::optional<int> i_max,
                          std::optional<std::pair<int, int>> jwindow) {
  HomologyOptions o;
  o.i_max = i_max;
  o.j_window = window_of(jwindow);
  return khovanov_homology(parse_link(link), o).to_json().dump();
}

std::string graph_homology_json(const std::string& graph, const std::string& theory, int n,
                                std::optional<std::pair<int, int>> jwindow, const std::string& variant) {
  auto g = parse_graph(graph);
  if (theory == "pn") {
    HomologyOptions o;
    o.j_window = window_of(jwindow);
    return Pn_homology(g, n, parse_pn_variant(variant), o).to_json().dump();
  }
  if (!jwindow) throw InvalidInput("theory " + theory + " needs a j-window");
  if (theory == "qn") return Qn_homology(g, n, jwindow->first, jwindow->second).to_json().dump();
  if (theory == "enhanced") return enhanced_homology(g, jwindow->first, jwindow->second).to_json().dump();
  throw InvalidInput("unknown theory '" + theory + "'");
}

std::string verify_json(const std::string& suite, bool slow) {
  VerifyOptions o;
  o.slow = slow;
  auto arr = nlohmann::json::array();
  for (const auto& r : run_verify(suite, o)) arr.push_back(r.to_json());
  return arr.dump();
}

py::tuple cli(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  int code = run_cli(args, out, err);
  return py::make_tuple(code, out.str(), err.str());
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact link and graph invariants";
  py::register_exception<InvalidInput>(m, "InvalidInput", PyExc_ValueError);
  py::register_exception<DomainError>(m, "DomainError", PyExc_ArithmeticError);
  py::register_exception<ComputationDefect>(m, "ComputationDefect", PyExc_RuntimeError);

  m.def("bracket", [](const std::string& link) { return kauffman_bracket(parse_link(link)).to_string(); },
        py::arg("link"));
  m.def(
      "jones",
      [](const std::string& link, bool hat) {
        auto d = parse_link(link);
        return (hat ? jones_unnormalized(d) : jones_normalized(d)).to_string();
      },
      py::arg("link"), py::arg("hat") = false);
  m.def("khovanov_json", &khovanov_json, py::arg("link"), py::arg("i_max") = py::none(),
        py::arg("jwindow") = py::none());
  m.def("homfly_json", [](const std::string& braid) { return homfly_G(parse_braid(braid)).to_json().dump(); },
        py::arg("braid"));
  m.def("dichromatic", [](const std::string& g) { return dichromatic(parse_graph(g)).to_string(); }, py::arg("graph"));
  m.def("tutte", [](const std::string& g) { return tutte(parse_graph(g)).to_string(); }, py::arg("graph"));
  m.def("graph_homology_json", &graph_homology_json, py::arg("graph"), py::arg("theory"), py::arg("n") = 2,
        py::arg("jwindow") = py::none(), py::arg("variant") = "zero");
  m.def("suite_names", &suite_names);
  m.def("verify_json", &verify_json, py::arg("suite"), py::arg("slow") = false);
  m.def("cli", &cli, py::arg("args"));
}
