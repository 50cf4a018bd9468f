#pragma once

#include <optional>
#include <string>

#include "json.hpp"
#include "spectool/bounds.hpp"
#include "spectool/cycles.hpp"
#include "spectool/graph.hpp"
#include "spectool/spectrum.hpp"
#include "spectool/verdict.hpp"
#include "spectool/verify.hpp"
#include "spectool/walks.hpp"

namespace spectool {

using Json = nlohmann::ordered_json;

Json to_json(const Verdict& v);
Json to_json(const BoundReport& r);
Json to_json(const SpectralMantelResult& r);
Json to_json(const CycleSpectrum& c);
Json to_json(const EvenCycleCertificate& c);
/// Walk totals are decimal strings, since they outgrow 64 bits quickly.
Json to_json(const WalkTable& t, bool per_vertex = false);
Json to_json(const CounterexampleReport& r);
/// {mode, config, graphs_checked, totals, tight, tight_counts, counterexamples, runtime_ms}
Json to_json(const SweepReport& r);

struct AnalyzeOptions {
  std::optional<int> walks;   // walk table up to this length
  std::optional<int> cycles;  // cycle lengths 3..L
  std::uint64_t cycle_budget = kDefaultCycleBudget;
};

/// Per-graph analysis: stats, spectrum summary, bounds, spectral Mantel class,
/// optional walk and cycle sections.
Json analyze_graph(const Graph& g, const AnalyzeOptions& options = {});

}  // namespace spectool
