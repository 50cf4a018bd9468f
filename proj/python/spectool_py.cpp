#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "spectool/cycles.hpp"
#include "spectool/generators.hpp"
#include "spectool/graph_io.hpp"
#include "spectool/report_json.hpp"
#include "spectool/verify.hpp"

namespace py = pybind11;
using namespace spectool;

namespace {

std::vector<TheoremId> theorem_list(const std::vector<std::string>& ids) {
  if (ids.empty()) return {kAllTheorems.begin(), kAllTheorems.end()};
  std::vector<TheoremId> out;
  for (const auto& id : ids) {
    if (id == "all") return {kAllTheorems.begin(), kAllTheorems.end()};
    auto t = parse_theorem_id(id);
    if (!t) throw py::value_error("unknown theorem id '" + id + "'");
    out.push_back(*t);
  }
  return out;
}

Dedup dedup_from(const std::string& s) {
  if (s == "labeled") return Dedup::kLabeled;
  if (s == "canonical") return Dedup::kCanonical;
  throw py::value_error("dedup must be 'labeled' or 'canonical'");
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "C++ core of spectool; JSON-returning functions are wrapped in spectool/__init__.py";

  py::register_exception<Error>(m, "SpectoolError", PyExc_ValueError);

  py::class_<Graph>(m, "Graph")
      .def(py::init<int>(), py::arg("n") = 0)
      .def_static("from_edges",
                  [](int n, const std::vector<Edge>& edges) { return Graph::from_edges(n, edges); },
                  py::arg("n"), py::arg("edges"))
      .def_property_readonly("order", &Graph::order)
      .def_property_readonly("edge_count", &Graph::edge_count)
      .def("has_edge", [](const Graph& g, Vertex u, Vertex v) {
        g.check_vertex(u);
        g.check_vertex(v);
        return g.has_edge(u, v);
      })
      .def("degrees", &Graph::degrees)
      .def("edges", &Graph::edges)
      .def("__eq__", [](const Graph& a, const Graph& b) { return a == b; })
      .def("__repr__", [](const Graph& g) {
        return "Graph(n=" + std::to_string(g.order()) + ", m=" + std::to_string(g.edge_count()) + ")";
      });

  m.def("from_graph6", [](const std::string& s) { return from_graph6(s); });
  m.def("to_graph6", &to_graph6);
  m.def("complete", &complete);
  m.def("complete_bipartite", &complete_bipartite);
  m.def("cycle", &cycle);
  m.def("path", &path);
  m.def("star", &star);
  m.def("petersen", &petersen);
  m.def("gnp", &gnp, py::arg("n"), py::arg("p"), py::arg("seed"));

  m.def("eigenvalues", [](const Graph& g) { return eigenvalues(g); });
  m.def("spectral_radius", [](const Graph& g) { return spectral_radius(g); });
  m.def("count_triangles", &count_triangles_brute);
  m.def("has_cycle_of_length", [](const Graph& g, int l) -> std::optional<std::vector<Vertex>> {
    auto r = has_cycle_of_length(g, l);
    if (r.status == SearchStatus::kExceededBudget) throw py::value_error("cycle search budget exhausted");
    if (!r.found()) return std::nullopt;
    return r.witness;
  });
  m.def("degree_peel", [](const Graph& g, int k) {
    auto r = degree_peel(g, k);
    return py::make_tuple(r.survivors, r.min_degree);
  });
  m.def("walk_totals_json", [](const Graph& g, int k) { return to_json(walk_counts(g, k)).dump(); });

  m.def("analyze_json",
        [](const Graph& g, std::optional<int> walks, std::optional<int> cycles) {
          AnalyzeOptions o;
          o.walks = walks;
          o.cycles = cycles;
          return analyze_graph(g, o).dump();
        },
        py::arg("graph"), py::arg("walks") = py::none(), py::arg("cycles") = py::none());
  m.def("check_theorem_json", [](const Graph& g, const std::string& id) {
    return to_json(check_theorem(g, theorem_list({id}).front())).dump();
  });
  m.def("verify_json",
        [](int min_n, int max_n, bool connected, const std::string& dedup,
           const std::vector<std::string>& theorems, int jobs, bool timing) {
          SweepConfig c;
          c.n_min = min_n;
          c.n_max = max_n;
          c.connected_only = connected;
          c.dedup = dedup_from(dedup);
          c.theorems = theorem_list(theorems);
          c.jobs = jobs;
          c.record_timing = timing;
          py::gil_scoped_release release;
          return to_json(sweep(c)).dump();
        },
        py::arg("min_n"), py::arg("max_n"), py::arg("connected"), py::arg("dedup"), py::arg("theorems"),
        py::arg("jobs"), py::arg("timing"));
  m.def("fuzz_json",
        [](const std::string& dist, std::uint64_t count, std::uint64_t seed,
           const std::vector<std::string>& theorems, int jobs, bool timing) {
          FuzzConfig c;
          c.distribution = FuzzDistribution::parse(dist);
          c.count = count;
          c.seed = seed;
          c.theorems = theorem_list(theorems);
          c.jobs = jobs;
          c.record_timing = timing;
          py::gil_scoped_release release;
          return to_json(fuzz(c)).dump();
        },
        py::arg("dist"), py::arg("count"), py::arg("seed"), py::arg("theorems"), py::arg("jobs"),
        py::arg("timing"));
}
