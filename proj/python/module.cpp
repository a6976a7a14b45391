#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "semiproper/report.hpp"

namespace py = pybind11;
using namespace semiproper;

namespace {

// Reports cross the boundary as JSON text; the Python package decodes them.
std::string dump(const nlohmann::json& j) { return j.dump(); }

Family family_or_throw(const std::string& name) {
  auto f = family_from_name(name);
  if (!f) throw py::value_error("unknown family '" + name + "'");
  return *f;
}

Budget make_budget(std::optional<double> seconds, std::optional<std::int64_t> nodes) {
  Budget b;
  if (seconds) b.seconds = *seconds;
  if (nodes) b.nodes = *nodes;
  return b;
}

}  // namespace

PYBIND11_MODULE(_semiproper, m) {
  m.doc() = "Semi-proper orientations of cacti and outerplanar graphs";
  m.attr("__version__") = kVersion;

  py::register_exception<UnsupportedClass>(m, "UnsupportedClass");
  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);

  py::class_<Graph>(m, "Graph")
      .def(py::init([](int n, const std::vector<std::pair<int, int>>& edges) {
             std::vector<Edge> e;
             for (auto [u, v] : edges) e.push_back({u, v});
             return Graph(n, std::move(e));
           }),
           py::arg("vertex_count"), py::arg("edges"))
      .def_property_readonly("vertex_count", &Graph::vertex_count)
      .def_property_readonly("edge_count", &Graph::edge_count)
      .def_property_readonly("edges",
                             [](const Graph& g) {
                               std::vector<std::pair<int, int>> out;
                               for (const Edge& e : g.edges()) out.emplace_back(e.u, e.v);
                               return out;
                             })
      .def("degree", &Graph::degree)
      .def("__eq__", [](const Graph& a, const Graph& b) { return a == b; })
      .def("__repr__", [](const Graph& g) {
        return "Graph(" + std::to_string(g.vertex_count()) + " vertices, " + std::to_string(g.edge_count()) +
               " edges)";
      });

  py::class_<Orientation>(m, "Orientation")
      .def_property_readonly("arcs",
                             [](const Orientation& o) {
                               std::vector<std::tuple<int, int, std::int64_t>> out;
                               for (const Arc& a : o.arcs()) out.emplace_back(a.tail, a.head, a.weight);
                               return out;
                             })
      .def_property_readonly("in_weights", &Orientation::in_weights)
      .def_property_readonly("mu", &Orientation::mu);

  m.def("parse_graph", [](const std::string& text) { return parse_graph(text); }, py::arg("text"));
  m.def("serialize_graph", &serialize_graph, py::arg("graph"));
  m.def("serialize_orientation", &serialize_orientation, py::arg("orientation"));
  m.def("max_degree", &max_degree, py::arg("graph"));

  m.def(
      "generate",
      [](const std::string& family, int size, std::uint64_t seed, int edges, int max_cycle, double edge_prob) {
        GeneratorSpec s;
        s.family = family_or_throw(family);
        s.size = size;
        s.seed = seed;
        s.edges = edges;
        s.max_cycle = max_cycle;
        s.edge_prob = edge_prob;
        Generated g = generate(s);
        return std::make_pair(g.graph, dump(to_json(g.metadata)));
      },
      py::arg("family"), py::arg("size") = 3, py::arg("seed") = 0, py::arg("edges") = 0, py::arg("max_cycle") = 9,
      py::arg("edge_prob") = 0.4);

  m.def("classify", [](const Graph& g) { return dump(to_json(classify(g))); }, py::arg("graph"));

  m.def(
      "peel_ears",
      [](const Graph& g, std::optional<Vertex> s) {
        PeelResult r = peel_ears(g, s);
        nlohmann::json out = {{"states_explored", r.states_explored}};
        if (!r.decomposition) {
          out["failure"] = r.failure;
          return dump(out);
        }
        nlohmann::json ears = nlohmann::json::array();
        for (const Ear& e : r.decomposition->ears) ears.push_back(e.path);
        out["base_cycle"] = r.decomposition->base_cycle;
        out["ears"] = ears;
        return dump(out);
      },
      py::arg("graph"), py::arg("designated") = std::nullopt);

  m.def(
      "orient",
      [](const Graph& g, const std::string& method) {
        if (method != "auto" && method != "cactus" && method != "outerplanar")
          throw py::value_error("method must be auto, cactus or outerplanar");
        OrientResult r = method == "cactus"        ? orient_cactus(g)
                         : method == "outerplanar" ? orient_composed(g)
                                                   : orient_graph(g);
        return std::make_pair(r.orientation, dump(to_json(r)));
      },
      py::arg("graph"), py::arg("method") = "auto");

  m.def(
      "validate",
      [](const Graph& g, const std::vector<std::tuple<int, int, std::int64_t>>& arcs,
         std::optional<std::int64_t> mu_bound, std::optional<std::int64_t> max_weight) {
        std::vector<Arc> a;
        for (auto [t, h, w] : arcs) a.push_back({t, h, w});
        return dump(to_json(validate(g, a, {}, mu_bound, max_weight)));
      },
      py::arg("graph"), py::arg("arcs"), py::arg("mu_bound") = std::nullopt, py::arg("max_weight") = std::nullopt);

  m.def(
      "solve",
      [](const Graph& g, const std::string& method, std::int64_t mu_cap, int max_weight, int workers,
         std::optional<double> budget_seconds, std::optional<std::int64_t> budget_nodes) {
        if (method != "brute" && method != "labeling" && method != "proper")
          throw py::value_error("method must be brute, labeling or proper");
        Budget b = make_budget(budget_seconds, budget_nodes);
        SolveReport r;
        {
          py::gil_scoped_release release;
          if (method == "brute")
            r = chi_s_brute(g, max_weight, mu_cap, b);
          else if (method == "labeling")
            r = chi_s_labeling(g, mu_cap, b, workers);
          else
            r = chi_proper(g, mu_cap, b);
        }
        return dump(to_json(r));
      },
      py::arg("graph"), py::arg("method") = "brute", py::arg("mu_cap") = 4, py::arg("max_weight") = 2,
      py::arg("workers") = 1, py::arg("budget_seconds") = std::nullopt, py::arg("budget_nodes") = std::nullopt);

  m.def("inequality_audit", [](const Graph& g) { return dump(to_json(inequality_audit(g))); }, py::arg("graph"));

  m.def(
      "synthesize",
      [](int length, int max_weight, int mu_cap, const std::map<int, int>& required,
         const std::map<int, std::vector<int>>& avoid, const std::map<int, int>& edge_weight)
          -> std::optional<std::vector<std::pair<bool, int>>> {
        GadgetSpec s;
        s.length = length;
        s.max_weight = max_weight;
        s.mu_cap = mu_cap;
        s.required = required;
        s.avoid = avoid;
        s.edge_weight = edge_weight;
        auto g = synthesize(s);
        if (!g) return std::nullopt;
        std::vector<std::pair<bool, int>> out;
        for (const PathArc& a : g->arcs) out.emplace_back(a.forward, a.weight);
        return out;
      },
      py::arg("length"), py::arg("max_weight") = 2, py::arg("mu_cap") = 4,
      py::arg("required") = std::map<int, int>{}, py::arg("avoid") = std::map<int, std::vector<int>>{},
      py::arg("edge_weight") = std::map<int, int>{});
}
