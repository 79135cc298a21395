#include <optional>
#include <string>
#include <vector>

#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "hso/campaign.hpp"
#include "hso/canonical.hpp"
#include "hso/enumerate.hpp"
#include "hso/error.hpp"
#include "hso/families.hpp"
#include "hso/graph6.hpp"
#include "hso/indices.hpp"
#include "hso/report.hpp"
#include "hso/search.hpp"
#include "hso/verify.hpp"

namespace py = pybind11;
using namespace hso;

namespace {

// JSON documents cross the boundary as plain dicts and lists.
py::object to_python(const nlohmann::json& j) { return py::module_::import("json").attr("loads")(j.dump()); }

Graph as_graph(const py::object& obj) {
  if (py::isinstance<Graph>(obj)) return obj.cast<Graph>();
  const auto text = obj.cast<std::string>();
  if (text.find(':') != std::string::npos) return build(parse_family_spec(text));
  return parse_graph6(text);
}

CampaignOptions options(int jobs, double tolerance, bool allow_large) {
  CampaignOptions opt;
  opt.jobs = jobs;
  opt.tolerance = Tolerance{tolerance};
  opt.allow_large = allow_large;
  return opt;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Hyperbolic Sombor index: graphs, enumeration and bound checks";
  m.attr("__version__") = tool_version();

  static py::exception<Error> hso_error(m, "HsoError", PyExc_ValueError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      py::set_error(hso_error, e.what());
    }
  });

  py::class_<Graph>(m, "Graph")
      .def(py::init<int>(), py::arg("n"))
      .def_static(
          "from_edges",
          [](int n, const std::vector<Edge>& edges) { return Graph::from_edge_list(n, edges); }, py::arg("n"),
          py::arg("edges"))
      .def_property_readonly("order", &Graph::order)
      .def_property_readonly("size", &Graph::size)
      .def_property_readonly("degrees", [](const Graph& g) { return std::vector<int>(g.degrees().begin(), g.degrees().end()); })
      .def_property_readonly("graph6", [](const Graph& g) { return to_graph6(g); })
      .def("edges", &Graph::edges)
      .def("has_edge", &Graph::has_edge)
      .def("with_edge", &Graph::with_edge)
      .def("without_edge", &Graph::without_edge)
      .def("is_connected", [](const Graph& g) { return is_connected(g); })
      .def("classify", [](const Graph& g) { return std::string(to_string(classify(g))); })
      .def(py::self == py::self)
      .def("__repr__", [](const Graph& g) { return "Graph('" + to_graph6(g) + "')"; });

  m.def("parse_graph6", &parse_graph6, py::arg("text"));
  m.def("to_graph6", &to_graph6, py::arg("graph"));
  m.def("build", [](const std::string& spec) { return build(parse_family_spec(spec)); }, py::arg("spec"),
        "Graph for a family spec such as 'star:7' or 'cprime:3,4'.");
  m.def("closed_form_hso", [](const std::string& spec) { return closed_form_hso(parse_family_spec(spec)); },
        py::arg("spec"));

  m.def("hso", [](const py::object& g) { return hso_value(as_graph(g)); }, py::arg("graph"),
        "Hyperbolic Sombor index of a Graph, graph6 string or family spec.");
  m.def("so", [](const py::object& g) { return so(as_graph(g)); }, py::arg("graph"));
  m.def("edge_terms", [](const py::object& g) { return to_python(to_json(hso::hso(as_graph(g)))["edges"]); },
        py::arg("graph"));
  m.def("edge_term", &edge_term, py::arg("du"), py::arg("dv"));

  m.def("canonical_graph6", [](const py::object& g) { return canonical_form(as_graph(g)).to_graph6(); },
        py::arg("graph"));
  m.def("are_isomorphic", [](const py::object& a, const py::object& b) { return are_isomorphic(as_graph(a), as_graph(b)); },
        py::arg("a"), py::arg("b"));

  m.def(
      "enumerate",
      [](const std::string& cls, int n, std::optional<int> edges, int jobs, bool allow_large) {
        const EnumSpec spec{parse_enum_class(cls), n, edges};
        std::vector<Graph> out;
        {
          py::gil_scoped_release release;
          out = enumerate(spec, EnumOptions{jobs, allow_large});
        }
        return out;
      },
      py::arg("cls"), py::arg("n"), py::arg("edges") = py::none(), py::arg("jobs") = 1, py::arg("allow_large") = false,
      "Non-isomorphic graphs of a class ('tree', 'unicyclic', 'bicyclic', 'connected'), sorted by canonical code.");

  m.def(
      "check",
      [](const std::string& theorem, const py::object& g, double tolerance) {
        return to_python(to_json(check(parse_theorem(theorem), as_graph(g), Tolerance{tolerance})));
      },
      py::arg("theorem"), py::arg("graph"), py::arg("tolerance") = kDefaultTolerance);

  m.def(
      "verify_campaign",
      [](const std::string& theorem, const std::string& cls, int n_lo, int n_hi, int jobs, double tolerance,
         bool allow_large, bool reports) {
        const Theorem t = parse_theorem(theorem);
        const EnumClass c = cls.empty() ? default_class(t) : parse_enum_class(cls);
        CampaignResult res;
        {
          py::gil_scoped_release release;
          res = verify_campaign(t, c, n_lo, n_hi, options(jobs, tolerance, allow_large));
        }
        nlohmann::json doc = {{"summary", to_json(res.summary)}};
        if (reports) {
          doc["reports"] = nlohmann::json::array();
          for (const auto& r : res.reports) doc["reports"].push_back(to_json(r));
        }
        return to_python(doc);
      },
      py::arg("theorem"), py::arg("cls") = "", py::arg("n_lo"), py::arg("n_hi"), py::arg("jobs") = 1,
      py::arg("tolerance") = kDefaultTolerance, py::arg("allow_large") = false, py::arg("reports") = false);

  m.def(
      "monotonicity_witnesses",
      [](int n_max, int jobs) {
        std::vector<MonotonicityWitness> ws;
        {
          py::gil_scoped_release release;
          ws = find_monotonicity_counterexamples(n_max, options(jobs, kDefaultTolerance, false));
        }
        auto arr = nlohmann::json::array();
        for (const auto& w : ws) arr.push_back(to_json(w));
        return to_python(arr);
      },
      py::arg("n_max"), py::arg("jobs") = 1);

  m.def(
      "star_max_sweep",
      [](int n, int jobs, bool allow_large) {
        CampaignSummary s;
        {
          py::gil_scoped_release release;
          s = check_conjecture_star_max(n, options(jobs, kDefaultTolerance, allow_large));
        }
        return to_python(to_json(s));
      },
      py::arg("n"), py::arg("jobs") = 1, py::arg("allow_large") = false);

  m.def(
      "extremal_table",
      [](const std::string& cls, int n_lo, int n_hi, int jobs) {
        CampaignSummary s;
        {
          py::gil_scoped_release release;
          s = extremal_table(parse_enum_class(cls), n_lo, n_hi, options(jobs, kDefaultTolerance, false));
        }
        return to_python(to_json(s));
      },
      py::arg("cls"), py::arg("n_lo"), py::arg("n_hi"), py::arg("jobs") = 1);
}
