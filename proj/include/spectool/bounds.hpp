#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "spectool/graph.hpp"
#include "spectool/graph_algorithms.hpp"
#include "spectool/spectrum.hpp"
#include "spectool/verdict.hpp"

namespace spectool {

enum class BoundKind {
  kNosal,               // lambda_1 > sqrt(m) forces a triangle (threshold, not an upper bound)
  kStanley,             // -1/2 + sqrt(2m + 1/4)
  kHong,                // sqrt(2m - n + 1), no isolated vertices
  kHsf,                 // (delta - 1)/2 + sqrt(2m - n delta + (delta + 1)^2 / 4)
  kOpenNeighborhood,    // sqrt(max_v sum_{u in N(v)} d(u))
  kClosedNeighborhood,  // (-1 + sqrt(1 + 4 max_v sum_{u in N[v]} d(u))) / 2
};

inline constexpr std::array<BoundKind, 6> kAllBoundKinds = {
    BoundKind::kNosal, BoundKind::kStanley,          BoundKind::kHong,
    BoundKind::kHsf,   BoundKind::kOpenNeighborhood, BoundKind::kClosedNeighborhood};

/// Stable ids: nosal, stanley, hong, hsf, lemma3, thm11.
std::string_view bound_id(BoundKind kind);
std::optional<BoundKind> parse_bound_id(std::string_view id);

/// The combinatorial quantities every bound formula reads.
struct BoundInputs {
  int n = 0;
  std::int64_t m = 0;
  int min_degree = 0;
  std::int64_t max_open_sum = 0;
  std::int64_t max_closed_sum = 0;

  static BoundInputs of(const Graph& g);
};

/// Precondition of `kind` (only Hong has one: minimum degree >= 1).
bool bound_applies(const BoundInputs& in, BoundKind kind);

/// Formula value. For kNosal this is the threshold sqrt(m).
/// Throws kPreconditionViolated for Hong with an isolated vertex.
double bound_value(const BoundInputs& in, BoundKind kind);
double bound_value(const Graph& g, BoundKind kind);

struct BoundReport {
  BoundKind kind = BoundKind::kStanley;
  double bound_value = 0.0;
  double lambda1 = 0.0;
  double slack = 0.0;  // bound_value - lambda1
  bool holds = false;  // slack >= -kEqEps
  bool tight = false;  // |slack| <= kEqEps
  std::optional<bool> extremal_class_consistent;
  /// Set when the kind was not evaluated as an inequality (failed
  /// precondition, or the Nosal threshold). Such reports keep holds = true.
  std::optional<std::string> skipped;
};

/// One report per BoundKind, in kAllBoundKinds order; nothing is dropped.
std::vector<BoundReport> evaluate_all(const Graph& g);
std::vector<BoundReport> evaluate_all(const Graph& g, double lambda1);

/// Extremal-class verdict for a tight bound:
///   hsf on connected G    -> regular, or every degree is delta or n-1;
///   lemma3 on connected G -> regular or bipartite semi-regular;
///   otherwise empty (no characterisation available).
/// Throws kNotTight when the bound is not tight on g.
std::optional<bool> tightness_check(const Graph& g, BoundKind kind);
std::optional<bool> tightness_check(const Graph& g, BoundKind kind, double lambda1);

/// The class predicate alone, without the tightness precondition.
std::optional<bool> extremal_class_predicate(const Graph& g, BoundKind kind, bool connected);

enum class MantelOutcome {
  kEdgeless,
  kBelowThreshold,
  kHasTriangle,
  kExtremalCompleteBipartite,
  kCounterexample,  // never expected
};

std::string_view to_string(MantelOutcome o);

struct SpectralMantelResult {
  MantelOutcome outcome = MantelOutcome::kBelowThreshold;
  double lambda1 = 0.0;
  double sqrt_m = 0.0;
  std::optional<std::array<Vertex, 3>> triangle;
  std::optional<CompleteBipartiteWitness> extremal;
};

/// Below threshold iff lambda_1 < sqrt(m) - kEqEps; otherwise a triangle,
/// or K_{a,b} plus isolated vertices, or a counterexample.
SpectralMantelResult spectral_mantel_classify(const Graph& g);
SpectralMantelResult spectral_mantel_classify(const Graph& g, double lambda1);

/// m > n^2/4 implies a triangle; vacuous otherwise.
Verdict mantel_check(const Graph& g);

}  // namespace spectool
