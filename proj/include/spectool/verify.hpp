#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "spectool/bounds.hpp"
#include "spectool/cycles.hpp"
#include "spectool/graph.hpp"
#include "spectool/graph_algorithms.hpp"
#include "spectool/spectrum.hpp"
#include "spectool/verdict.hpp"
#include "spectool/walks.hpp"

namespace spectool {

enum class TheoremId {
  kMantel,
  kNosal,
  kSpectralMantel,
  kStanley,
  kHong,
  kHsf,
  kClosedNeighborhoodBound,
  kOpenNeighborhoodBound,
  kWalkInequality,
  kWalkDecomposition,
  kDegreePeeling,
  kDensePancyclicity,
  kConsecutiveEvenCycles,
  kSpectrumSymmetry,
  kDiameterDistinct,
};

inline constexpr std::array<TheoremId, 15> kAllTheorems = {
    TheoremId::kMantel,          TheoremId::kNosal,
    TheoremId::kSpectralMantel,  TheoremId::kStanley,
    TheoremId::kHong,            TheoremId::kHsf,
    TheoremId::kClosedNeighborhoodBound,           TheoremId::kOpenNeighborhoodBound,
    TheoremId::kWalkInequality,         TheoremId::kWalkDecomposition,
    TheoremId::kDegreePeeling,          TheoremId::kDensePancyclicity,
    TheoremId::kConsecutiveEvenCycles,  TheoremId::kSpectrumSymmetry,
    TheoremId::kDiameterDistinct};

/// CLI/JSON ids: mantel, nosal, spectral-mantel, stanley, hong, hsf, thm11,
/// lemma3, walk-inequality, walk-decomposition, degree-peeling,
/// dense-pancyclic, even-cycles, spectrum-symmetry, diameter-distinct.
/// The two neighborhood bounds reuse their bound ids.
std::string_view theorem_id(TheoremId id);
std::optional<TheoremId> parse_theorem_id(std::string_view id);
/// Bound whose tightness census belongs to this theorem, if any.
std::optional<BoundKind> census_bound(TheoremId id);

struct CheckOptions {
  int walk_length = 12;
  int ab_half_length = 30;
  std::uint64_t cycle_budget = kDefaultCycleBudget;
  int safe_n = kDefaultSafeOrder;
  /// Upper even length for the consecutive-even-cycle check; ceil(n/28) when absent.
  std::optional<int> even_cycle_l_max;
};

/// Per-graph cache shared by all checkers, so a sweep decomposes each graph once.
class GraphContext {
 public:
  GraphContext(const Graph& g, const CheckOptions& options);

  const Graph& graph() const { return g_; }
  const CheckOptions& options() const { return options_; }

  const Spectrum& spectrum();
  double lambda1();
  const Connectivity& connectivity();
  const BoundInputs& bound_inputs();
  const std::vector<BoundReport>& bounds();
  const BoundReport& bound(BoundKind kind);
  bool has_triangle();
  const WalkTable& walks(int max_length);

 private:
  const Graph& g_;
  CheckOptions options_;
  std::optional<Spectrum> spectrum_;
  std::optional<Connectivity> connectivity_;
  std::optional<BoundInputs> inputs_;
  std::optional<std::vector<BoundReport>> bounds_;
  std::optional<bool> triangle_;
  std::map<int, WalkTable> walks_;
};

/// Deterministic verdict; library errors inside a checker become kInconclusive.
Verdict check_theorem(const Graph& g, TheoremId id, const CheckOptions& options = {});
Verdict check_theorem(GraphContext& ctx, TheoremId id);

/// graph6 when n <= 62, otherwise "edges:" followed by the edge list text.
std::string graph_key(const Graph& g);
Graph graph_from_key(std::string_view key);

struct CounterexampleReport {
  std::string graph;  // graph_key form
  TheoremId theorem = TheoremId::kMantel;
  Verdict verdict;

  friend bool operator<(const CounterexampleReport& a, const CounterexampleReport& b) {
    if (a.theorem != b.theorem) return a.theorem < b.theorem;
    return a.graph < b.graph;
  }
};

/// Re-runs the checker on the embedded graph.
Verdict replay(const CounterexampleReport& report, const CheckOptions& options = {});

enum class Dedup { kLabeled, kCanonical };

std::string_view to_string(Dedup d);

inline constexpr int kMaxEnumerationOrder = 8;
inline constexpr int kMaxCanonicalOrder = 7;

/// Labelled graph whose pair j (graph6 order x01, x02, x12, x03, ...) is bit j of mask.
Graph graph_from_mask(int n, std::uint64_t mask);

/// Lexicographically minimal graph6 bit string over all vertex permutations,
/// packed with x01 as the most significant bit. Feasible for n <= 7.
std::uint64_t canonical_code(const Graph& g);

/// One representative per isomorphism class (the graph of its canonical code), sorted by code.
std::vector<Graph> canonical_graphs(int n, bool connected_only);

/// Labelled mode visits all 2^(n(n-1)/2) graphs in mask order; canonical mode
/// visits canonical_graphs(n, connected_only). Throws kOrderTooLarge beyond the limits.
void enumerate_graphs(int n, bool connected_only, Dedup dedup,
                      const std::function<void(const Graph&)>& visit);
std::vector<Graph> enumerate_graphs(int n, bool connected_only, Dedup dedup);

struct TheoremTotals {
  std::uint64_t holds = 0;
  std::uint64_t vacuous = 0;
  std::uint64_t violated = 0;
  std::uint64_t inconclusive = 0;
  std::uint64_t advisory = 0;  // violations of asymptotic statements below the safe order

  friend bool operator==(const TheoremTotals&, const TheoremTotals&) = default;
};

struct TightCensus {
  std::uint64_t count = 0;
  std::vector<std::string> graphs;  // sorted, at most the configured cap

  friend bool operator==(const TightCensus&, const TightCensus&) = default;
};

struct SweepReport {
  std::string mode;  // "exhaustive" or "fuzz"
  /// Echo of the run parameters that determine the result (worker count excluded).
  std::map<std::string, std::string> config;
  std::map<TheoremId, TheoremTotals> totals;
  std::map<BoundKind, TightCensus> tight;
  std::vector<CounterexampleReport> counterexamples;  // sorted, capped
  std::uint64_t graphs_checked = 0;
  double runtime_ms = 0.0;

  std::size_t tight_cap = 1000;
  std::size_t counterexample_cap = 100;

  std::uint64_t violations() const;
  /// Associative and commutative, so shard order never matters.
  void merge(const SweepReport& other);
  void record(GraphContext& ctx, const std::vector<TheoremId>& theorems);
  /// Sorts, deduplicates and caps the census and counterexample lists.
  void normalize();
};

struct SweepConfig {
  int n_min = 1;
  int n_max = 7;
  bool connected_only = false;
  Dedup dedup = Dedup::kLabeled;
  std::vector<TheoremId> theorems{kAllTheorems.begin(), kAllTheorems.end()};
  int jobs = 1;
  CheckOptions check;
  /// n = 8 labelled (2^28 graphs) must be requested explicitly.
  bool allow_long_run = false;
  std::size_t tight_cap = 1000;
  std::size_t counterexample_cap = 100;
  bool record_timing = true;
};

/// Throws kOrderTooLarge / kInvalidArgument on a bad configuration.
SweepReport sweep(const SweepConfig& config);

struct FuzzDistribution {
  enum class Kind { kGnp, kRegular, kBipartite };
  Kind kind = Kind::kGnp;
  int n = 0;  // gnp, regular
  int k = 0;  // regular degree
  int a = 0;  // bipartite parts
  int b = 0;
  double p = 0.0;

  /// "gnp:n,p" | "regular:n,k" | "bipartite:a,b,p"; throws kInvalidArgument.
  static FuzzDistribution parse(std::string_view spec);
  std::string to_string() const;
  Graph sample(std::uint64_t seed) const;
};

struct FuzzConfig {
  FuzzDistribution distribution;
  std::uint64_t count = 1000;
  std::uint64_t seed = 0;
  std::vector<TheoremId> theorems{kAllTheorems.begin(), kAllTheorems.end()};
  int jobs = 1;
  CheckOptions check;
  std::size_t tight_cap = 1000;
  std::size_t counterexample_cap = 100;
  bool record_timing = true;
};

/// Sample i is drawn with seed mix_seed(seed, i), independent of sharding.
SweepReport fuzz(const FuzzConfig& config);

}  // namespace spectool
