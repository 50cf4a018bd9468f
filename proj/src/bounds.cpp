#include "spectool/bounds.hpp"

#include <algorithm>
#include <cmath>

namespace spectool {

std::string_view to_string(VerdictStatus s) {
  switch (s) {
    case VerdictStatus::kHolds: return "holds";
    case VerdictStatus::kVacuous: return "vacuous";
    case VerdictStatus::kViolated: return "violated";
    case VerdictStatus::kInconclusive: return "inconclusive";
  }
  return "unknown";
}

std::string_view bound_id(BoundKind kind) {
  switch (kind) {
    case BoundKind::kNosal: return "nosal";
    case BoundKind::kStanley: return "stanley";
    case BoundKind::kHong: return "hong";
    case BoundKind::kHsf: return "hsf";
    case BoundKind::kOpenNeighborhood: return "lemma3";
    case BoundKind::kClosedNeighborhood: return "thm11";
  }
  return "unknown";
}

std::optional<BoundKind> parse_bound_id(std::string_view id) {
  for (auto k : kAllBoundKinds)
    if (bound_id(k) == id) return k;
  return std::nullopt;
}

BoundInputs BoundInputs::of(const Graph& g) {
  const auto stats = basic_stats(g);
  const auto sums = neighborhood_degree_sums(g);
  return {g.order(), stats.m, stats.min_degree, sums.max_open, sums.max_closed};
}

bool bound_applies(const BoundInputs& in, BoundKind kind) {
  return kind != BoundKind::kHong || in.min_degree >= 1;
}

double bound_value(const BoundInputs& in, BoundKind kind) {
  const double n = in.n;
  const double m = static_cast<double>(in.m);
  const double delta = in.min_degree;
  switch (kind) {
    case BoundKind::kNosal:
      return std::sqrt(m);
    case BoundKind::kStanley:
      return -0.5 + std::sqrt(2.0 * m + 0.25);
    case BoundKind::kHong:
      if (!bound_applies(in, kind)) {
        throw Error(ErrorCode::kPreconditionViolated, "hong: graph has an isolated vertex");
      }
      return std::sqrt(2.0 * m - n + 1.0);
    case BoundKind::kHsf:
      return (delta - 1.0) / 2.0 + std::sqrt(2.0 * m - n * delta + (delta + 1.0) * (delta + 1.0) / 4.0);
    case BoundKind::kOpenNeighborhood:
      return std::sqrt(static_cast<double>(in.max_open_sum));
    case BoundKind::kClosedNeighborhood:
      return (-1.0 + std::sqrt(1.0 + 4.0 * static_cast<double>(in.max_closed_sum))) / 2.0;
  }
  return 0.0;
}

double bound_value(const Graph& g, BoundKind kind) { return bound_value(BoundInputs::of(g), kind); }

std::optional<bool> extremal_class_predicate(const Graph& g, BoundKind kind, bool connected) {
  if (!connected) return std::nullopt;
  switch (kind) {
    case BoundKind::kHsf:
      return is_regular(g) || is_bidegreed_delta_full(g);
    case BoundKind::kOpenNeighborhood:
      return is_regular(g) || is_bipartite_semiregular(g);
    default:
      return std::nullopt;
  }
}

std::vector<BoundReport> evaluate_all(const Graph& g) {
  return evaluate_all(g, eigenvalues(g).front());
}

std::vector<BoundReport> evaluate_all(const Graph& g, double lambda1) {
  const auto in = BoundInputs::of(g);
  const bool connected = is_connected(g);
  std::vector<BoundReport> out;
  out.reserve(kAllBoundKinds.size());
  for (auto kind : kAllBoundKinds) {
    BoundReport r;
    r.kind = kind;
    r.lambda1 = lambda1;
    if (!bound_applies(in, kind)) {
      r.holds = true;
      r.skipped = "precondition failed: isolated vertex present";
      out.push_back(r);
      continue;
    }
    r.bound_value = bound_value(in, kind);
    r.slack = r.bound_value - lambda1;
    r.tight = std::abs(r.slack) <= kEqEps;
    if (kind == BoundKind::kNosal) {
      r.holds = true;
      r.skipped = "threshold, not an upper bound: see spectral Mantel classification";
    } else {
      r.holds = r.slack >= -kEqEps;
      if (r.tight) r.extremal_class_consistent = extremal_class_predicate(g, kind, connected);
    }
    out.push_back(r);
  }
  return out;
}

std::optional<bool> tightness_check(const Graph& g, BoundKind kind) {
  return tightness_check(g, kind, eigenvalues(g).front());
}

std::optional<bool> tightness_check(const Graph& g, BoundKind kind, double lambda1) {
  const auto in = BoundInputs::of(g);
  if (!bound_applies(in, kind) || std::abs(bound_value(in, kind) - lambda1) > kEqEps) {
    throw Error(ErrorCode::kNotTight, std::string(bound_id(kind)) + " is not tight on this graph");
  }
  return extremal_class_predicate(g, kind, is_connected(g));
}

std::string_view to_string(MantelOutcome o) {
  switch (o) {
    case MantelOutcome::kEdgeless: return "Edgeless";
    case MantelOutcome::kBelowThreshold: return "BelowThreshold";
    case MantelOutcome::kHasTriangle: return "HasTriangle";
    case MantelOutcome::kExtremalCompleteBipartite: return "ExtremalCompleteBipartite";
    case MantelOutcome::kCounterexample: return "CounterexampleToTheorem3";
  }
  return "unknown";
}

SpectralMantelResult spectral_mantel_classify(const Graph& g) {
  if (g.order() == 0) throw Error(ErrorCode::kEmptyGraph, "spectral_mantel_classify needs n >= 1");
  return spectral_mantel_classify(g, eigenvalues(g).front());
}

SpectralMantelResult spectral_mantel_classify(const Graph& g, double lambda1) {
  SpectralMantelResult r;
  r.lambda1 = lambda1;
  r.sqrt_m = std::sqrt(static_cast<double>(g.edge_count()));
  if (g.edge_count() == 0) {
    r.outcome = MantelOutcome::kEdgeless;
    return r;
  }
  if (lambda1 < r.sqrt_m - kEqEps) {
    r.outcome = MantelOutcome::kBelowThreshold;
    return r;
  }
  if ((r.triangle = find_triangle(g))) {
    r.outcome = MantelOutcome::kHasTriangle;
  } else if ((r.extremal = complete_bipartite_plus_isolated(g))) {
    r.outcome = MantelOutcome::kExtremalCompleteBipartite;
  } else {
    r.outcome = MantelOutcome::kCounterexample;
  }
  return r;
}

Verdict mantel_check(const Graph& g) {
  const std::int64_t n = g.order();
  const std::int64_t m = g.edge_count();
  if (4 * m <= n * n) {
    return Verdict::vacuous("m <= n^2/4").with("m", m).with("n", n);
  }
  if (auto t = find_triangle(g)) {
    auto v = Verdict::holds("triangle present");
    v.witness = std::to_string((*t)[0]) + " " + std::to_string((*t)[1]) + " " + std::to_string((*t)[2]);
    return v;
  }
  return Verdict::violated("m > n^2/4 but triangle-free").with("m", m).with("n", n);
}

}  // namespace spectool
