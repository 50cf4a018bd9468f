#include "spectool/report_json.hpp"

#include "spectool/graph_algorithms.hpp"
#include "spectool/graph_io.hpp"

namespace spectool {

namespace {

Json quantities(const std::vector<std::pair<std::string, double>>& q) {
  Json out = Json::object();
  for (const auto& [name, value] : q) out[name] = value;
  return out;
}

Json cycle_json(const std::vector<Vertex>& c) { return Json(c); }

}  // namespace

Json to_json(const Verdict& v) {
  Json j{{"status", to_string(v.status)}, {"reason", v.reason}};
  if (!v.quantities.empty()) j["quantities"] = quantities(v.quantities);
  if (!v.witness.empty()) j["witness"] = v.witness;
  if (v.advisory) j["advisory"] = true;
  return j;
}

Json to_json(const BoundReport& r) {
  Json j{{"id", bound_id(r.kind)}, {"bound", r.bound_value}, {"lambda1", r.lambda1},
         {"slack", r.slack},       {"holds", r.holds},       {"tight", r.tight}};
  if (r.extremal_class_consistent) j["extremal_class_consistent"] = *r.extremal_class_consistent;
  if (r.skipped) j["skipped"] = *r.skipped;
  return j;
}

Json to_json(const SpectralMantelResult& r) {
  Json j{{"outcome", to_string(r.outcome)}, {"lambda1", r.lambda1}, {"sqrt_m", r.sqrt_m}};
  if (r.triangle) j["triangle"] = *r.triangle;
  if (r.extremal) {
    j["complete_bipartite"] = {{"a", r.extremal->a}, {"b", r.extremal->b},
                               {"isolated", r.extremal->isolated}};
  }
  return j;
}

Json to_json(const CycleSpectrum& c) {
  Json witnesses = Json::object();
  for (const auto& [l, w] : c.witnesses) witnesses[std::to_string(l)] = cycle_json(w);
  return {{"l_max", c.l_max},
          {"lengths", c.lengths()},
          {"witnesses", witnesses},
          {"inconclusive", c.inconclusive}};
}

Json to_json(const EvenCycleCertificate& c) {
  Json steps = Json::array();
  for (const auto& s : c.steps) {
    Json step{{"name", s.name}, {"status", to_string(s.status)}, {"detail", s.detail}};
    if (!s.values.empty()) step["values"] = quantities(s.values);
    steps.push_back(std::move(step));
  }
  Json witnesses = Json::object();
  for (const auto& [l, w] : c.even_witnesses) witnesses[std::to_string(l)] = cycle_json(w);
  return {{"n", c.n},
          {"m", c.m},
          {"lambda1", c.lambda1},
          {"threshold", c.threshold},
          {"peel_k", c.peel_k},
          {"peel_survivors", c.peel.order()},
          {"peel_min_degree", c.peel.min_degree},
          {"small_branch", c.small_branch},
          {"target", c.target},
          {"searched_up_to", c.searched_up_to},
          {"even_cycles", witnesses},
          {"missing", c.missing},
          {"inconclusive", c.inconclusive},
          {"steps", steps},
          {"valid", c.valid()}};
}

Json to_json(const WalkTable& t, bool per_vertex) {
  Json totals = Json::array();
  for (const auto& w : t.totals) totals.push_back(w.str());
  Json j{{"max_length", t.max_length}, {"totals", totals}};
  if (per_vertex) {
    Json rows = Json::array();
    for (const auto& row : t.per_vertex) {
      Json r = Json::array();
      for (const auto& w : row) r.push_back(w.str());
      rows.push_back(std::move(r));
    }
    j["per_vertex"] = rows;
  }
  return j;
}

Json to_json(const CounterexampleReport& r) {
  return {{"graph", r.graph}, {"theorem", theorem_id(r.theorem)}, {"verdict", to_json(r.verdict)}};
}

Json to_json(const SweepReport& r) {
  Json config = Json::object();
  for (const auto& [k, v] : r.config) config[k] = v;
  Json totals = Json::object();
  for (const auto& [id, t] : r.totals) {
    Json e{{"holds", t.holds}, {"vacuous", t.vacuous}, {"violated", t.violated},
           {"inconclusive", t.inconclusive}};
    if (t.advisory > 0) e["advisory"] = t.advisory;
    totals[std::string(theorem_id(id))] = e;
  }
  Json tight = Json::object();
  Json tight_counts = Json::object();
  for (const auto& [kind, census] : r.tight) {
    tight[std::string(bound_id(kind))] = census.graphs;
    tight_counts[std::string(bound_id(kind))] = census.count;
  }
  Json counterexamples = Json::array();
  for (const auto& c : r.counterexamples) counterexamples.push_back(to_json(c));
  return {{"mode", r.mode},
          {"config", config},
          {"graphs_checked", r.graphs_checked},
          {"totals", totals},
          {"tight", tight},
          {"tight_counts", tight_counts},
          {"counterexamples", counterexamples},
          {"runtime_ms", r.runtime_ms}};
}

Json analyze_graph(const Graph& g, const AnalyzeOptions& options) {
  Json j;
  j["n"] = g.order();
  j["m"] = g.edge_count();
  if (g.order() <= kMaxGraph6Order) j["graph6"] = to_graph6(g);
  if (g.order() == 0) return j;

  const auto stats = basic_stats(g);
  const auto conn = connectivity(g);
  j["stats"] = {{"min_degree", stats.min_degree},
                {"max_degree", stats.max_degree},
                {"avg_degree", stats.avg_degree},
                {"degrees", stats.degrees},
                {"connected", conn.connected},
                {"components", conn.components},
                {"diameter", conn.diameter ? Json(*conn.diameter) : Json(nullptr)},
                {"bipartite", bipartition(g).has_value()},
                {"regularity", to_string(classify_regularity(g))},
                {"triangles", count_triangles_brute(g)}};

  const Spectrum s = eigendecompose(g);
  Json spectrum{{"lambda1", s.lambda1()},
                {"lambda_n", s.lambda_n()},
                {"eigenvalues", s.eigenvalues},
                {"distinct", distinct_eigenvalue_count(s)},
                {"symmetric", is_spectrum_symmetric(s)},
                {"triangles_spectral", triangle_count_spectral(s)},
                {"residual", s.residual}};
  j["spectrum"] = spectrum;

  Json bounds = Json::array();
  for (const auto& r : evaluate_all(g, s.lambda1())) {
    Json b = to_json(r);
    if (r.tight && !r.skipped) {
      if (auto c = extremal_class_predicate(g, r.kind, conn.connected)) b["extremal_class_consistent"] = *c;
    }
    bounds.push_back(std::move(b));
  }
  j["bounds"] = bounds;
  j["spectral_mantel"] = to_json(spectral_mantel_classify(g, s.lambda1()));

  if (options.walks) {
    const auto table = walk_counts(g, *options.walks);
    Json walks = to_json(table);
    const auto sums = neighborhood_degree_sums(g);
    Json residuals = Json::array();
    for (const auto& r : walk_inequality_residuals(table, sums.max_closed)) {
      residuals.push_back({{"k", r.k}, {"value", r.value}});
    }
    walks["residuals"] = residuals;
    walks["decomposition_identity"] = decomposition_identity_check(g, table);
    walks["nondecreasing"] = walks_nondecreasing(table);
    j["walks"] = walks;
  }
  if (options.cycles) j["cycles"] = to_json(cycle_spectrum(g, *options.cycles, options.cycle_budget));
  return j;
}

}  // namespace spectool
