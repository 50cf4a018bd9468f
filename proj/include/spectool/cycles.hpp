#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "spectool/graph.hpp"
#include "spectool/verdict.hpp"

namespace spectool {

inline constexpr std::uint64_t kDefaultCycleBudget = 100'000'000;

enum class SearchStatus { kFound, kAbsent, kExceededBudget };

std::string_view to_string(SearchStatus s);

struct CycleSearch {
  SearchStatus status = SearchStatus::kAbsent;
  std::vector<Vertex> witness;  // cycle order, witness[0] is the lowest vertex
  std::uint64_t expansions = 0;

  bool found() const { return status == SearchStatus::kFound; }
};

/// Backtracking search for a simple cycle on exactly `length` vertices.
///
/// Each cycle is anchored at its lowest vertex; the DFS only extends through
/// higher-numbered vertices and prunes any branch whose BFS distance back to
/// the anchor exceeds the remaining length budget. Reflections are removed by
/// requiring witness[1] < witness[length-1]. `absent` is only reported after
/// the search space is exhausted; running out of `budget` node expansions
/// yields kExceededBudget instead.
CycleSearch has_cycle_of_length(const Graph& g, int length,
                                std::uint64_t budget = kDefaultCycleBudget);

/// Consecutive vertices adjacent, all distinct, closing edge present, size == length.
bool validate_cycle(const Graph& g, std::span<const Vertex> cycle, int length);

struct CycleSpectrum {
  int l_max = 0;
  std::vector<bool> present;  // index l, meaningful for 3 <= l <= l_max
  std::map<int, std::vector<Vertex>> witnesses;
  std::vector<int> inconclusive;  // lengths whose search hit the budget

  bool contains(int l) const { return l >= 0 && l < static_cast<int>(present.size()) && present[l]; }
  std::vector<int> lengths() const;
};

/// Cycle lengths 3..l_max (l_max is clamped to n).
CycleSpectrum cycle_spectrum(const Graph& g, int l_max, std::uint64_t budget = kDefaultCycleBudget);

struct PeelingResult {
  std::vector<Vertex> survivors;                 // sorted
  int min_degree = 0;                            // of G[survivors]; 0 when empty
  std::vector<std::pair<Vertex, int>> trace;     // (vertex, degree at removal)

  int order() const { return static_cast<int>(survivors.size()); }
};

/// Repeatedly deletes the lowest-index vertex of current degree <= k.
/// With m >= k n the survivors are nonempty with minimum degree >= k + 1.
PeelingResult degree_peel(const Graph& g, int k);

enum class StepStatus { kPassed, kFailed, kAsymptotic };

std::string_view to_string(StepStatus s);

struct CertificateStep {
  std::string name;
  StepStatus status = StepStatus::kPassed;
  std::string detail;
  std::vector<std::pair<std::string, double>> values;
};

struct PipelineOptions {
  int even_cycle_cap = 64;
  std::uint64_t budget = kDefaultCycleBudget;
  /// Precomputed lambda_1; computed with spectral_radius when absent.
  std::optional<double> lambda1;
};

/// Certificate chain for the consecutive-even-cycle argument:
/// threshold -> edge count -> peeling -> small/large branch -> even cycles.
struct EvenCycleCertificate {
  int n = 0;
  std::int64_t m = 0;
  double lambda1 = 0.0;
  double threshold = 0.0;  // sqrt(floor(n^2/4))
  int peel_k = 0;
  PeelingResult peel;
  bool small_branch = false;  // n' <= n/4
  int target = 0;             // ceil(n/28)
  int searched_up_to = 0;     // min(target, cap)
  std::map<int, std::vector<Vertex>> even_witnesses;  // in original labels
  std::vector<int> missing;
  std::vector<int> inconclusive;
  std::vector<CertificateStep> steps;

  /// No step failed (asymptotic steps are recorded, not failures).
  bool valid() const;
};

/// Throws kHypothesisNotMet unless lambda_1 > sqrt(floor(n^2/4)) + kEqEps,
/// kInvalidArgument for n < 4.
EvenCycleCertificate even_cycle_certificate(const Graph& g, const PipelineOptions& options = {});

inline constexpr int kDefaultSafeOrder = 1000;

/// Vacuous when lambda_1 <= sqrt(floor(n^2/4)) + kEqEps or l_max < 4;
/// otherwise holds iff C_l is present for every even l in [4, l_max].
/// A violation below `safe_n` is flagged advisory.
Verdict consecutive_even_cycles_check(const Graph& g, int l_max,
                                      std::optional<double> lambda1 = std::nullopt,
                                      int safe_n = kDefaultSafeOrder,
                                      std::uint64_t budget = kDefaultCycleBudget);

/// Vacuous when delta <= n/2; otherwise holds iff every length 3..n is present.
Verdict dense_pancyclicity_check(const Graph& g, std::uint64_t budget = kDefaultCycleBudget);

std::string format_cycle(std::span<const Vertex> cycle);

}  // namespace spectool
