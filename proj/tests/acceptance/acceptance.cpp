// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any fail.
//
// Tolerances are pinned here, independent of library defaults:
//   spectral triangle count: within 1e-6 of an integer before rounding
//   bound slack / tightness / regular-graph tightness: 1e-9
//   expansion coefficients >= -1e-10, reconstruction within relative 1e-6

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>

#include "cli.hpp"
#include "oracles.hpp"
#include "spectool/bounds.hpp"
#include "spectool/cycles.hpp"
#include "spectool/generators.hpp"
#include "spectool/graph_algorithms.hpp"
#include "spectool/graph_io.hpp"
#include "spectool/random.hpp"
#include "spectool/report_json.hpp"
#include "spectool/spectrum.hpp"
#include "spectool/verify.hpp"
#include "spectool/walks.hpp"

using namespace spectool;

namespace {

constexpr double kSlackTol = 1e-9;
constexpr double kTriangleTol = 1e-6;
constexpr double kCoefficientFloor = -1e-10;
constexpr double kReconstructionTol = 1e-6;

int failures = 0;

void report(int id, bool pass, const std::string& what, const std::string& detail, double seconds) {
  std::printf("criterion %2d: %s  %s  [%s] (%.1fs)\n", id, pass ? "PASS" : "FAIL", what.c_str(),
              detail.c_str(), seconds);
  std::fflush(stdout);
  if (!pass) ++failures;
}

struct Timer {
  std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  }
};

std::string str(std::initializer_list<std::pair<const char*, std::uint64_t>> fields) {
  std::ostringstream os;
  bool first = true;
  for (auto [k, v] : fields) {
    os << (first ? "" : ", ") << k << "=" << v;
    first = false;
  }
  return os.str();
}

Graph with_edges(const Graph& g, const std::vector<Edge>& extra) {
  GraphBuilder b(g.order());
  for (auto [u, v] : g.edges()) b.add_edge(u, v);
  for (auto [u, v] : extra) b.add_edge(u, v);
  return std::move(b).build();
}

// ---------------------------------------------------------------------------
// Criteria 1-5 share one pass over every labelled graph with n <= 7.

struct BoundStats {
  std::uint64_t graphs = 0;
  std::uint64_t violations = 0;
  std::uint64_t dominance_failures = 0;
  double worst_slack = 1e300;
  std::string first_bad;

  void add(const Graph& g, double lambda1) {
    ++graphs;
    for (const auto& r : evaluate_all(g, lambda1)) {
      if (r.skipped) continue;
      worst_slack = std::min(worst_slack, r.slack);
      if (r.slack < -kSlackTol) {
        if (violations++ == 0) first_bad = std::string(bound_id(r.kind)) + " on " + graph_key(g);
      }
    }
    const auto in = BoundInputs::of(g);
    if (bound_value(in, BoundKind::kClosedNeighborhood) > bound_value(in, BoundKind::kStanley) + kSlackTol) {
      ++dominance_failures;
    }
  }
};

struct SmallPass {
  // criterion 1
  std::uint64_t trace_graphs = 0, trace_mismatch = 0, trace_not_integral = 0;
  // criterion 2
  std::uint64_t mantel_counterexamples = 0, extremal = 0, extremal_unwitnessed = 0;
  std::uint64_t tight_connected_triangle_free = 0, tight_not_complete_bipartite = 0;
  std::uint64_t tight_connected_with_triangle = 0;
  std::string tight_with_triangle_example;
  // criterion 3 and 5
  BoundStats bounds;
  std::uint64_t regular_connected = 0, regular_not_tight = 0;
  // criterion 4
  std::uint64_t hsf_connected = 0, hsf_tight = 0, hsf_forward_fail = 0, hsf_backward_fail = 0;
};

SmallPass small_pass() {
  SmallPass p;
  for (int n = 1; n <= 7; ++n) {
    enumerate_graphs(n, false, Dedup::kLabeled, [&](const Graph& g) {
      const Spectrum s = eigendecompose(g);
      const double l1 = s.lambda1();
      const bool connected = is_connected(g);

      if (n == 7) {
        ++p.trace_graphs;
        const double t = triangle_count_spectral(s);
        const double r = std::round(t);
        if (std::abs(t - r) > kTriangleTol) ++p.trace_not_integral;
        if (static_cast<std::int64_t>(r) != count_triangles_brute(g)) ++p.trace_mismatch;
      }

      const auto mantel = spectral_mantel_classify(g, l1);
      if (mantel.outcome == MantelOutcome::kCounterexample) ++p.mantel_counterexamples;
      if (mantel.outcome == MantelOutcome::kExtremalCompleteBipartite) {
        ++p.extremal;
        if (!complete_bipartite_plus_isolated(g)) ++p.extremal_unwitnessed;
      }
      const double sqrt_m = std::sqrt(static_cast<double>(g.edge_count()));
      if (connected && g.edge_count() > 0 && std::abs(l1 - sqrt_m) <= kSlackTol) {
        if (oracle::triangles(g) == 0) {
          ++p.tight_connected_triangle_free;
          const auto w = complete_bipartite_plus_isolated(g);
          if (!w || w->isolated != 0) ++p.tight_not_complete_bipartite;
        } else if (p.tight_connected_with_triangle++ == 0) {
          p.tight_with_triangle_example = graph_key(g);
        }
      }

      p.bounds.add(g, l1);
      if (connected && is_regular(g)) {
        ++p.regular_connected;
        const int k = g.degree(0);
        if (std::abs(bound_value(g, BoundKind::kClosedNeighborhood) - k) > kSlackTol ||
            std::abs(l1 - k) > kSlackTol) {
          ++p.regular_not_tight;
        }
      }

      if (connected) {
        ++p.hsf_connected;
        const bool tight = std::abs(bound_value(g, BoundKind::kHsf) - l1) <= kSlackTol;
        const bool in_class = is_regular(g) || is_bidegreed_delta_full(g);
        p.hsf_tight += tight;
        if (tight && !in_class) ++p.hsf_forward_fail;
        if (in_class && !tight) ++p.hsf_backward_fail;
      }
    });
  }
  return p;
}

// Criterion 3's random half: G(n, p), n in [10, 62], p in {0.1, ..., 0.9}.
BoundStats gnp_bounds(std::uint64_t samples) {
  BoundStats stats;
  for (std::uint64_t i = 0; i < samples; ++i) {
    Rng rng(mix_seed(3003, i));
    const int n = 10 + static_cast<int>(rng.below(53));
    const double p = 0.1 * static_cast<double>(1 + rng.below(9));
    const Graph g = gnp(n, p, rng.next());
    stats.add(g, eigenvalues(g).front());
  }
  return stats;
}

// ---------------------------------------------------------------------------

void criteria_1_to_5() {
  Timer t;
  const SmallPass p = small_pass();
  const double small_seconds = t.seconds();

  report(1, p.trace_graphs == 2097152 && p.trace_mismatch == 0 && p.trace_not_integral == 0,
         "spectral triangle count equals brute count on every labelled 7-vertex graph",
         str({{"graphs", p.trace_graphs}, {"mismatch", p.trace_mismatch},
              {"off_integer", p.trace_not_integral}}),
         small_seconds);

  std::ostringstream c2;
  c2 << str({{"counterexamples", p.mantel_counterexamples}, {"extremal", p.extremal},
             {"extremal_unwitnessed", p.extremal_unwitnessed},
             {"tight_connected_triangle_free", p.tight_connected_triangle_free},
             {"not_complete_bipartite", p.tight_not_complete_bipartite},
             {"tight_connected_with_triangle (reported)", p.tight_connected_with_triangle}});
  if (!p.tight_with_triangle_example.empty()) c2 << ", e.g. " << p.tight_with_triangle_example;
  report(2,
         p.mantel_counterexamples == 0 && p.extremal_unwitnessed == 0 &&
             p.tight_not_complete_bipartite == 0 && p.extremal > 0,
         "spectral Mantel: no counterexample, extremal graphs are K_{a,b} + isolated", c2.str(), 0.0);

  Timer t3;
  const BoundStats fuzz = gnp_bounds(10000);
  // Closed forms.
  std::uint64_t closed_fail = 0;
  for (int n = 2; n <= 10; ++n) {
    const Graph k = complete(n);
    const double l1 = spectral_radius(k);
    for (auto kind : {BoundKind::kStanley, BoundKind::kHong}) {
      const double b = bound_value(k, kind);
      if (std::abs(b - (n - 1)) > kSlackTol || std::abs(b - l1) > kSlackTol) ++closed_fail;
    }
    const Graph s = star(n);
    const double ls = spectral_radius(s);
    for (auto kind : {BoundKind::kHong, BoundKind::kHsf}) {
      if (std::abs(bound_value(s, kind) - ls) > kSlackTol) ++closed_fail;
    }
  }
  std::uint64_t regular_samples = 0, regular_fail = p.regular_not_tight;
  for (std::uint64_t i = 0; regular_samples < 500; ++i) {
    Rng rng(mix_seed(4004, i));
    const int n = 6 + static_cast<int>(rng.below(40));
    const int k = 2 + static_cast<int>(rng.below(std::min(n - 2, 10)));
    if ((n * k) % 2 != 0) continue;
    const Graph g = random_regular(n, k, rng.next());
    if (!is_connected(g)) continue;
    ++regular_samples;
    if (std::abs(bound_value(g, BoundKind::kClosedNeighborhood) - k) > kSlackTol ||
        std::abs(spectral_radius(g) - k) > kSlackTol) {
      ++regular_fail;
    }
  }
  const std::uint64_t violations = p.bounds.violations + fuzz.violations;
  std::ostringstream c3;
  c3 << str({{"exhaustive", p.bounds.graphs}, {"gnp", fuzz.graphs}, {"violations", violations},
             {"closed_form_failures", closed_fail},
             {"regular_connected", p.regular_connected + regular_samples},
             {"regular_not_tight", regular_fail}})
     << ", min slack " << std::min(p.bounds.worst_slack, fuzz.worst_slack);
  if (violations > 0) c3 << ", first " << (p.bounds.first_bad.empty() ? fuzz.first_bad : p.bounds.first_bad);
  report(3, violations == 0 && closed_fail == 0 && regular_fail == 0,
         "all bounds hold; closed-form tight cases reproduce", c3.str(), t3.seconds());

  report(4, p.hsf_forward_fail == 0 && p.hsf_backward_fail == 0 && p.hsf_tight > 0,
         "HSF tight <=> regular or degrees in {delta, n-1}, connected n <= 7",
         str({{"connected", p.hsf_connected}, {"tight", p.hsf_tight},
              {"tight_outside_class", p.hsf_forward_fail}, {"class_not_tight", p.hsf_backward_fail}}),
         0.0);

  const std::uint64_t dominance = p.bounds.dominance_failures + fuzz.dominance_failures;
  report(5, dominance == 0, "closed-neighbourhood bound <= Stanley bound",
         str({{"graphs", p.bounds.graphs + fuzz.graphs}, {"failures", dominance}}), 0.0);
}

void criterion_6() {
  Timer t;
  std::uint64_t graphs = 0, identity = 0, residual = 0, monotone = 0, coeff = 0, recon = 0;
  std::uint64_t bipartite = 0, ab = 0;
  constexpr int K = 12;
  for (int n = 1; n <= 6; ++n) {
    enumerate_graphs(n, false, Dedup::kLabeled, [&](const Graph& g) {
      ++graphs;
      const auto table = walk_counts(g, K);
      if (!decomposition_identity_check(g, table)) ++identity;
      const auto sums = neighborhood_degree_sums(g);
      for (const auto& r : walk_inequality_residuals(table, sums.max_closed)) {
        if (r.numerator > 0) {
          ++residual;
          break;
        }
      }
      if (!walks_nondecreasing(table)) ++monotone;
      const Spectrum s = eigendecompose(g);
      SpectralWalkExpansion e;
      try {
        e = walk_expansion(s, table);
      } catch (const Error&) {
        ++recon;
        return;
      }
      if (e.min_coefficient < kCoefficientFloor) ++coeff;
      if (e.max_relative_error > kReconstructionTol) ++recon;
      if (g.edge_count() > 0 && is_connected(g) && bipartition(g)) {
        ++bipartite;
        const auto r = a_greater_b_check(g, s, 30);
        if (r.vacuous || !r.passed || !(r.a > r.b)) ++ab;
      }
    });
  }
  report(6, identity + residual + monotone + coeff + recon + ab == 0 && bipartite > 0,
         "walk identities, inequality (7), expansion and a > b, n <= 6, K = 12",
         str({{"graphs", graphs}, {"identity_fail", identity}, {"positive_residual", residual},
              {"decreasing", monotone}, {"negative_coeff", coeff}, {"reconstruction_fail", recon},
              {"connected_bipartite", bipartite}, {"a_le_b", ab}}),
         t.seconds());
}

void criterion_7() {
  Timer t;
  std::uint64_t checks = 0, mismatch = 0, bad_witness = 0, classes = 0, samples = 0;
  auto compare = [&](const Graph& g) {
    for (int l = 3; l <= g.order(); ++l) {
      ++checks;
      const auto r = has_cycle_of_length(g, l);
      if (r.status == SearchStatus::kExceededBudget || r.found() != oracle::has_cycle(g, l)) ++mismatch;
      if (r.found() && !validate_cycle(g, r.witness, l)) ++bad_witness;
    }
  };
  for (int n = 3; n <= 7; ++n) {
    for (const Graph& g : canonical_graphs(n, false)) {
      ++classes;
      compare(g);
    }
  }
  // Order 8: random labelled graphs across the density range.
  for (std::uint64_t i = 0; i < 3000; ++i) {
    Rng rng(mix_seed(7007, i));
    const double p = 0.05 + 0.9 * rng.uniform01();
    compare(gnp(8, p, rng.next()));
    ++samples;
  }
  const auto spectrum = cycle_spectrum(petersen(), 10);
  const bool petersen_ok = spectrum.lengths() == std::vector<int>{5, 6, 8, 9} &&
                           spectrum.inconclusive.empty();
  report(7, mismatch == 0 && bad_witness == 0 && petersen_ok,
         "cycle search matches the subset-permutation oracle; Petersen lengths {5,6,8,9}",
         str({{"classes_n_le_7", classes}, {"samples_n8", samples}, {"length_checks", checks},
              {"mismatch", mismatch}, {"bad_witness", bad_witness}, {"petersen_ok", petersen_ok}}),
         t.seconds());
}

void criterion_8() {
  Timer t;
  std::uint64_t graphs = 0, failures = 0, resampled = 0;
  for (std::uint64_t i = 0; graphs < 100000; ++i) {
    Rng rng(mix_seed(8008, i));
    const int k = 1 + static_cast<int>(i % 3);
    const int n = 2 * k + 2 + static_cast<int>(rng.below(48));
    const double p_min = std::min(1.0, 2.0 * k / (n - 1));
    const double p = p_min + (1.0 - p_min) * rng.uniform01();
    const Graph g = gnp(n, p, rng.next());
    if (g.edge_count() < static_cast<std::int64_t>(k) * n) {
      ++resampled;
      continue;
    }
    ++graphs;
    const auto r = degree_peel(g, k);
    if (r.survivors.empty() || r.min_degree < k + 1) ++failures;
  }
  report(8, failures == 0, "peeling leaves min degree >= k + 1 whenever m >= k n, k in {1,2,3}",
         str({{"graphs", graphs}, {"resampled", resampled}, {"failures", failures}}), t.seconds());
}

void criterion_9() {
  Timer t;
  std::uint64_t graphs = 0, below = 0, cert_fail = 0, findings = 0, inconclusive = 0, holds = 0;
  std::uint64_t vacuous = 0, cross_checks = 0, radius_mismatch = 0;
  std::string first_failure;
  for (std::uint64_t i = 0; graphs < 1000; ++i) {
    Rng rng(mix_seed(9009, i));
    const int n = 56 + static_cast<int>(rng.below(145));
    Graph g;
    if (i % 2 == 0) {
      const int a = (n + 1) / 2;
      std::vector<Edge> extra;
      const int count = 1 + static_cast<int>(rng.below(n / 4));
      for (int e = 0; e < count; ++e) {
        const bool left = rng.bernoulli(0.5);
        const int lo = left ? 0 : a, size = left ? a : n - a;
        const int u = lo + static_cast<int>(rng.below(size));
        const int v = lo + static_cast<int>(rng.below(size));
        if (u != v) extra.emplace_back(std::min(u, v), std::max(u, v));
      }
      if (extra.empty()) extra.emplace_back(0, 1);
      g = with_edges(complete_bipartite(a, n - a), extra);
    } else {
      g = gnp(n, 0.55 + 0.4 * rng.uniform01(), rng.next());
    }
    const double l1 = power_iteration_radius(g);
    if (i % 10 == 0) {
      ++cross_checks;
      if (std::abs(eigenvalues(g).front() - l1) > 1e-9) ++radius_mismatch;
    }
    const double threshold = std::sqrt(static_cast<double>((static_cast<std::int64_t>(n) * n) / 4));
    if (!(l1 > threshold + kEqEps)) {
      ++below;
      continue;
    }
    ++graphs;
    PipelineOptions options;
    options.lambda1 = l1;
    const auto cert = even_cycle_certificate(g, options);
    auto step_passed = [&](const char* name) {
      for (const auto& s : cert.steps)
        if (s.name == name) return s.status == StepStatus::kPassed;
      return false;
    };
    const bool ok = cert.valid() && step_passed("threshold") && step_passed("average_degree") &&
                    step_passed("peel") && cert.peel.min_degree >= cert.peel_k + 1;
    if (!ok) {
      ++cert_fail;
      if (first_failure.empty()) first_failure = "n=" + std::to_string(n) + " sample " + std::to_string(i);
    }
    const auto v = consecutive_even_cycles_check(g, (n + 27) / 28, l1);
    switch (v.status) {
      case VerdictStatus::kHolds: ++holds; break;
      case VerdictStatus::kVacuous: ++vacuous; break;
      case VerdictStatus::kViolated: ++findings; break;
      case VerdictStatus::kInconclusive: ++inconclusive; break;
    }
  }
  std::string detail = str({{"graphs", graphs}, {"below_threshold_resampled", below},
                            {"certificate_failures", cert_fail}, {"even_cycles_hold", holds},
                            {"vacuous", vacuous}, {"findings_n_lt_1000", findings},
                            {"inconclusive", inconclusive}, {"radius_cross_checks", cross_checks},
                            {"radius_mismatch", radius_mismatch}});
  if (!first_failure.empty()) detail += ", first failure " + first_failure;
  report(9, cert_fail == 0 && inconclusive == 0 && radius_mismatch == 0,
         "dense fuzz n in [56,200]: certificates validate, even cycles 4..ceil(n/28) present",
         detail, t.seconds());
}

void criterion_10() {
  Timer t;
  SweepConfig config;
  config.n_max = 6;
  config.record_timing = false;
  config.jobs = 1;
  const std::string one = to_json(sweep(config)).dump();
  config.jobs = 16;
  const std::string sixteen = to_json(sweep(config)).dump();

  auto cli = [](const char* jobs) {
    std::istringstream in;
    std::ostringstream out, err;
    const int code = cli::run({"verify", "--theorem", "all", "--max-n", "6", "--jobs", jobs, "--json",
                               "--no-timing"},
                              in, out, err);
    return std::make_pair(code, out.str());
  };
  const auto cli_one = cli("1");
  const auto cli_sixteen = cli("16");
  const bool same = one == sixteen && cli_one == cli_sixteen && cli_one.first == 0;
  report(10, same, "verify --jobs 1 and --jobs 16 give identical reports on n <= 6",
         "library_identical=" + std::to_string(one == sixteen) +
             ", cli_identical=" + std::to_string(cli_one == cli_sixteen) +
             ", report_bytes=" + std::to_string(one.size()),
         t.seconds());
}

}  // namespace

int main() {
  criteria_1_to_5();
  criterion_6();
  criterion_7();
  criterion_8();
  criterion_9();
  criterion_10();
  std::printf("%s: %d criteria failed\n", failures == 0 ? "ACCEPTED" : "REJECTED", failures);
  return failures == 0 ? 0 : 1;
}
