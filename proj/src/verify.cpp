#include "spectool/verify.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <chrono>
#include <cmath>
#include <mutex>
#include <numeric>
#include <sstream>
#include <thread>

#include "spectool/generators.hpp"
#include "spectool/graph_io.hpp"
#include "spectool/random.hpp"

namespace spectool {

std::string_view theorem_id(TheoremId id) {
  switch (id) {
    case TheoremId::kMantel: return "mantel";
    case TheoremId::kNosal: return "nosal";
    case TheoremId::kSpectralMantel: return "spectral-mantel";
    case TheoremId::kStanley: return "stanley";
    case TheoremId::kHong: return "hong";
    case TheoremId::kHsf: return "hsf";
    case TheoremId::kClosedNeighborhoodBound: return "thm11";
    case TheoremId::kOpenNeighborhoodBound: return "lemma3";
    case TheoremId::kWalkInequality: return "walk-inequality";
    case TheoremId::kWalkDecomposition: return "walk-decomposition";
    case TheoremId::kDegreePeeling: return "degree-peeling";
    case TheoremId::kDensePancyclicity: return "dense-pancyclic";
    case TheoremId::kConsecutiveEvenCycles: return "even-cycles";
    case TheoremId::kSpectrumSymmetry: return "spectrum-symmetry";
    case TheoremId::kDiameterDistinct: return "diameter-distinct";
  }
  return "unknown";
}

std::optional<TheoremId> parse_theorem_id(std::string_view id) {
  for (auto t : kAllTheorems)
    if (theorem_id(t) == id) return t;
  return std::nullopt;
}

std::optional<BoundKind> census_bound(TheoremId id) {
  switch (id) {
    case TheoremId::kNosal: return BoundKind::kNosal;
    case TheoremId::kStanley: return BoundKind::kStanley;
    case TheoremId::kHong: return BoundKind::kHong;
    case TheoremId::kHsf: return BoundKind::kHsf;
    case TheoremId::kClosedNeighborhoodBound: return BoundKind::kClosedNeighborhood;
    case TheoremId::kOpenNeighborhoodBound: return BoundKind::kOpenNeighborhood;
    default: return std::nullopt;
  }
}

std::string_view to_string(Dedup d) { return d == Dedup::kLabeled ? "labeled" : "canonical"; }

// ---------------------------------------------------------------------------
// GraphContext

GraphContext::GraphContext(const Graph& g, const CheckOptions& options) : g_(g), options_(options) {}

const Spectrum& GraphContext::spectrum() {
  if (!spectrum_) spectrum_ = eigendecompose(g_);
  return *spectrum_;
}

double GraphContext::lambda1() { return spectrum().lambda1(); }

const Connectivity& GraphContext::connectivity() {
  if (!connectivity_) connectivity_ = spectool::connectivity(g_);
  return *connectivity_;
}

const BoundInputs& GraphContext::bound_inputs() {
  if (!inputs_) inputs_ = BoundInputs::of(g_);
  return *inputs_;
}

const std::vector<BoundReport>& GraphContext::bounds() {
  if (!bounds_) bounds_ = evaluate_all(g_, lambda1());
  return *bounds_;
}

const BoundReport& GraphContext::bound(BoundKind kind) {
  const auto& all = bounds();
  return *std::find_if(all.begin(), all.end(), [&](const BoundReport& r) { return r.kind == kind; });
}

bool GraphContext::has_triangle() {
  if (!triangle_) triangle_ = find_triangle(g_).has_value();
  return *triangle_;
}

const WalkTable& GraphContext::walks(int max_length) {
  auto it = walks_.find(max_length);
  if (it == walks_.end()) it = walks_.emplace(max_length, walk_counts(g_, max_length)).first;
  return it->second;
}

// ---------------------------------------------------------------------------
// Checkers

namespace {

Verdict check_bound(GraphContext& ctx, BoundKind kind) {
  const auto& r = ctx.bound(kind);
  if (r.skipped) return Verdict::vacuous(*r.skipped);
  auto base = [&](Verdict v) {
    return v.with("bound", r.bound_value).with("lambda1", r.lambda1).with("slack", r.slack);
  };
  if (!r.holds) return base(Verdict::violated("lambda_1 exceeds the bound"));

  // Equality characterisations, connected graphs only, both directions.
  if (kind == BoundKind::kHsf || kind == BoundKind::kOpenNeighborhood) {
    const auto in_class = extremal_class_predicate(ctx.graph(), kind, ctx.connectivity().connected);
    if (in_class && *in_class != r.tight) {
      auto v = base(Verdict::violated(r.tight ? "tight outside the extremal class"
                                              : "extremal class member is not tight"));
      v.witness = to_string(classify_regularity(ctx.graph()));
      return v;
    }
  }
  return base(Verdict::holds(r.tight ? "tight" : "strict"));
}

Verdict check_nosal(GraphContext& ctx) {
  const double l1 = ctx.lambda1();
  const double sqrt_m = std::sqrt(static_cast<double>(ctx.graph().edge_count()));
  if (!(l1 > sqrt_m + kEqEps)) {
    return Verdict::vacuous("lambda_1 <= sqrt(m)").with("lambda1", l1).with("sqrt_m", sqrt_m);
  }
  if (ctx.has_triangle()) return Verdict::holds("triangle present");
  return Verdict::violated("lambda_1 > sqrt(m) but triangle-free").with("lambda1", l1).with("sqrt_m",
                                                                                             sqrt_m);
}

Verdict check_spectral_mantel(GraphContext& ctx) {
  const auto r = spectral_mantel_classify(ctx.graph(), ctx.lambda1());
  switch (r.outcome) {
    case MantelOutcome::kEdgeless:
      return Verdict::vacuous("edgeless");
    case MantelOutcome::kBelowThreshold:
      return Verdict::vacuous("lambda_1 < sqrt(m)").with("lambda1", r.lambda1).with("sqrt_m", r.sqrt_m);
    case MantelOutcome::kHasTriangle: {
      auto v = Verdict::holds("triangle present");
      v.witness = std::to_string((*r.triangle)[0]) + " " + std::to_string((*r.triangle)[1]) + " " +
                  std::to_string((*r.triangle)[2]);
      return v;
    }
    case MantelOutcome::kExtremalCompleteBipartite: {
      auto v = Verdict::holds("complete bipartite plus isolated vertices");
      v.witness = "K_{" + std::to_string(r.extremal->a) + "," + std::to_string(r.extremal->b) +
                  "} + " + std::to_string(r.extremal->isolated) + " isolated";
      return v.with("lambda1", r.lambda1).with("sqrt_m", r.sqrt_m);
    }
    case MantelOutcome::kCounterexample:
      break;
  }
  return Verdict::violated("triangle-free, lambda_1 >= sqrt(m), not complete bipartite")
      .with("lambda1", r.lambda1)
      .with("sqrt_m", r.sqrt_m);
}

Verdict check_walk_inequality(GraphContext& ctx) {
  const auto& g = ctx.graph();
  const auto& opts = ctx.options();
  const auto& table = ctx.walks(opts.walk_length);
  if (!walk_inequality_holds(table, ctx.bound_inputs().max_closed_sum)) {
    return Verdict::violated("w_k + w_{k-1} > maxclosed * w_{k-2} for some k");
  }
  if (!walks_nondecreasing(table)) return Verdict::violated("w_{k+1} < w_k for some k >= 1");

  SpectralWalkExpansion e;
  try {
    e = walk_expansion(ctx.spectrum(), table);
  } catch (const Error& err) {
    if (err.code() != ErrorCode::kExpansionMismatch) throw;
    return Verdict::violated(err.what());
  }
  if (e.min_coefficient < -1e-10) {
    return Verdict::violated("negative expansion coefficient").with("min_c", e.min_coefficient);
  }
  auto v = Verdict::holds("walk residuals <= 0, expansion reconstructs w_k");
  v.with("max_relative_error", e.max_relative_error);
  if (g.edge_count() > 0 && e.has_negative_extreme && ctx.connectivity().connected) {
    const auto ab = a_greater_b_check(g, ctx.spectrum(), opts.ab_half_length);
    v.with("a", ab.a).with("b", ab.b).with("ratio_relative_error", ab.ratio_relative_error);
    if (!ab.passed) {
      v.status = VerdictStatus::kViolated;
      v.reason = "a > b certificate failed";
    }
  }
  return v;
}

Verdict check_degree_peeling(GraphContext& ctx) {
  const auto& g = ctx.graph();
  const std::int64_t n = g.order();
  const std::int64_t m = g.edge_count();
  if (n == 0 || m < n) return Verdict::vacuous("average degree < 2");
  auto v = Verdict::holds("peeling leaves min degree >= k + 1");
  for (int k = 1; k * n <= m; ++k) {
    const auto r = degree_peel(g, k);
    if (r.survivors.empty() || r.min_degree < k + 1) {
      auto bad = Verdict::violated("peeling at k = " + std::to_string(k) + " failed");
      return bad.with("k", k).with("survivors", r.order()).with("min_degree", r.min_degree);
    }
    v.with("k" + std::to_string(k) + "_survivors", r.order());
  }
  return v;
}

Verdict check_symmetry(GraphContext& ctx) {
  const bool symmetric = is_spectrum_symmetric(ctx.spectrum());
  const bool bipartite = bipartition(ctx.graph()).has_value();
  if (symmetric == bipartite) return Verdict::holds(bipartite ? "bipartite, symmetric" : "odd cycle, asymmetric");
  return Verdict::violated(bipartite ? "bipartite but spectrum asymmetric"
                                     : "non-bipartite but spectrum symmetric");
}

Verdict check_diameter(GraphContext& ctx) {
  const auto& c = ctx.connectivity();
  if (!c.connected) return Verdict::vacuous("disconnected");
  const int distinct = distinct_eigenvalue_count(ctx.spectrum());
  const int diameter = *c.diameter;
  auto v = distinct >= diameter + 1 ? Verdict::holds("distinct >= diameter + 1")
                                    : Verdict::violated("fewer distinct eigenvalues than diameter + 1");
  return v.with("distinct", distinct).with("diameter", diameter);
}

Verdict dispatch(GraphContext& ctx, TheoremId id) {
  const auto& g = ctx.graph();
  switch (id) {
    case TheoremId::kMantel: return mantel_check(g);
    case TheoremId::kNosal: return check_nosal(ctx);
    case TheoremId::kSpectralMantel: return check_spectral_mantel(ctx);
    case TheoremId::kStanley: return check_bound(ctx, BoundKind::kStanley);
    case TheoremId::kHong: return check_bound(ctx, BoundKind::kHong);
    case TheoremId::kHsf: return check_bound(ctx, BoundKind::kHsf);
    case TheoremId::kClosedNeighborhoodBound: return check_bound(ctx, BoundKind::kClosedNeighborhood);
    case TheoremId::kOpenNeighborhoodBound: return check_bound(ctx, BoundKind::kOpenNeighborhood);
    case TheoremId::kWalkInequality: return check_walk_inequality(ctx);
    case TheoremId::kWalkDecomposition:
      return decomposition_identity_check(g, ctx.walks(ctx.options().walk_length))
                 ? Verdict::holds("identity exact")
                 : Verdict::violated("walk decomposition identity fails");
    case TheoremId::kDegreePeeling: return check_degree_peeling(ctx);
    case TheoremId::kDensePancyclicity: return dense_pancyclicity_check(g, ctx.options().cycle_budget);
    case TheoremId::kConsecutiveEvenCycles: {
      const int l_max = ctx.options().even_cycle_l_max.value_or((g.order() + 27) / 28);
      return consecutive_even_cycles_check(g, l_max, ctx.lambda1(), ctx.options().safe_n,
                                           ctx.options().cycle_budget);
    }
    case TheoremId::kSpectrumSymmetry: return check_symmetry(ctx);
    case TheoremId::kDiameterDistinct: return check_diameter(ctx);
  }
  return Verdict::inconclusive("unknown theorem id");
}

}  // namespace

Verdict check_theorem(GraphContext& ctx, TheoremId id) {
  if (ctx.graph().order() == 0) return Verdict::vacuous("empty graph");
  try {
    return dispatch(ctx, id);
  } catch (const Error& e) {
    return Verdict::inconclusive(e.what());
  }
}

Verdict check_theorem(const Graph& g, TheoremId id, const CheckOptions& options) {
  GraphContext ctx(g, options);
  return check_theorem(ctx, id);
}

std::string graph_key(const Graph& g) {
  if (g.order() <= kMaxGraph6Order) return to_graph6(g);
  auto text = to_edge_list(g);
  std::replace(text.begin(), text.end(), '\n', ' ');
  while (!text.empty() && text.back() == ' ') text.pop_back();
  return "edges:" + text;
}

Graph graph_from_key(std::string_view key) {
  constexpr std::string_view kPrefix = "edges:";
  if (key.starts_with(kPrefix)) {
    std::istringstream in{std::string(key.substr(kPrefix.size()))};
    return read_edge_list(in);
  }
  return from_graph6(key);
}

Verdict replay(const CounterexampleReport& report, const CheckOptions& options) {
  return check_theorem(graph_from_key(report.graph), report.theorem, options);
}

// ---------------------------------------------------------------------------
// Enumeration

Graph graph_from_mask(int n, std::uint64_t mask) {
  GraphBuilder b(n);
  int j = 0;
  for (Vertex v = 1; v < n; ++v)
    for (Vertex u = 0; u < v; ++u, ++j)
      if ((mask >> j) & 1u) b.add_edge(u, v);
  return std::move(b).build();
}

namespace {

int pair_count(int n) { return n * (n - 1) / 2; }

Graph graph_from_code(int n, std::uint64_t code) {
  const int e = pair_count(n);
  std::uint64_t mask = 0;
  for (int j = 0; j < e; ++j)
    if ((code >> (e - 1 - j)) & 1u) mask |= std::uint64_t{1} << j;
  return graph_from_mask(n, mask);
}

}  // namespace

std::uint64_t canonical_code(const Graph& g) {
  const int n = g.order();
  if (n > kMaxCanonicalOrder) {
    throw Error(ErrorCode::kOrderTooLarge, "canonical form limited to n <= 7");
  }
  const int e = pair_count(n);
  bool adj[kMaxCanonicalOrder][kMaxCanonicalOrder] = {};
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = 0; v < n; ++v) adj[u][v] = u != v && g.has_edge(u, v);

  std::array<int, kMaxCanonicalOrder> perm{};
  std::iota(perm.begin(), perm.begin() + n, 0);
  std::uint64_t best = ~std::uint64_t{0};
  do {
    // Build MSB-first, abandoning as soon as the prefix exceeds the best code.
    std::uint64_t code = 0;
    int j = 0;
    bool worse = false;
    for (int v = 1; v < n && !worse; ++v) {
      for (int u = 0; u < v; ++u, ++j) {
        code = (code << 1) | (adj[perm[u]][perm[v]] ? 1u : 0u);
      }
      if ((code << (e - j)) > best) worse = true;
    }
    if (!worse) best = std::min(best, code);
  } while (std::next_permutation(perm.begin(), perm.begin() + n));
  return n <= 1 ? 0 : best;
}

std::vector<Graph> canonical_graphs(int n, bool connected_only) {
  if (n < 1) throw Error(ErrorCode::kInvalidOrder, "canonical_graphs needs n >= 1");
  if (n > kMaxCanonicalOrder) {
    throw Error(ErrorCode::kOrderTooLarge, "canonical enumeration limited to n <= 7");
  }
  static std::mutex mu;
  static std::map<int, std::vector<std::uint64_t>> cache;
  std::lock_guard lock(mu);

  if (cache.empty()) cache[1] = {0};
  for (int k = 2; k <= n; ++k) {
    if (cache.count(k)) continue;
    // Extend every class on k-1 vertices by a new vertex with each neighbourhood.
    std::vector<std::uint64_t> codes;
    for (std::uint64_t base : cache.at(k - 1)) {
      const Graph h = graph_from_code(k - 1, base);
      for (std::uint64_t sub = 0; sub < (std::uint64_t{1} << (k - 1)); ++sub) {
        GraphBuilder b(k);
        for (auto [u, v] : h.edges()) b.add_edge(u, v);
        for (int u = 0; u < k - 1; ++u)
          if ((sub >> u) & 1u) b.add_edge(u, k - 1);
        codes.push_back(canonical_code(std::move(b).build()));
      }
    }
    std::sort(codes.begin(), codes.end());
    codes.erase(std::unique(codes.begin(), codes.end()), codes.end());
    cache[k] = std::move(codes);
  }

  std::vector<Graph> out;
  for (std::uint64_t code : cache.at(n)) {
    Graph g = graph_from_code(n, code);
    if (!connected_only || is_connected(g)) out.push_back(std::move(g));
  }
  return out;
}

void enumerate_graphs(int n, bool connected_only, Dedup dedup,
                      const std::function<void(const Graph&)>& visit) {
  if (n < 1) throw Error(ErrorCode::kInvalidOrder, "enumeration needs n >= 1");
  if (n > kMaxEnumerationOrder) {
    throw Error(ErrorCode::kOrderTooLarge, "exhaustive enumeration limited to n <= 8");
  }
  if (dedup == Dedup::kCanonical) {
    for (const auto& g : canonical_graphs(n, connected_only)) visit(g);
    return;
  }
  const std::uint64_t total = std::uint64_t{1} << pair_count(n);
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    const Graph g = graph_from_mask(n, mask);
    if (!connected_only || is_connected(g)) visit(g);
  }
}

std::vector<Graph> enumerate_graphs(int n, bool connected_only, Dedup dedup) {
  std::vector<Graph> out;
  enumerate_graphs(n, connected_only, dedup, [&](const Graph& g) { out.push_back(g); });
  return out;
}

// ---------------------------------------------------------------------------
// Reports

std::uint64_t SweepReport::violations() const {
  std::uint64_t v = 0;
  for (const auto& [id, t] : totals) v += t.violated;
  return v;
}

namespace {

template <typename T>
void sort_unique_cap(std::vector<T>& v, std::size_t cap) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end(),
                      [](const T& a, const T& b) { return !(a < b) && !(b < a); }),
          v.end());
  if (v.size() > cap) v.resize(cap);
}

}  // namespace

void SweepReport::normalize() {
  for (auto& [kind, census] : tight) sort_unique_cap(census.graphs, tight_cap);
  sort_unique_cap(counterexamples, counterexample_cap);
}

void SweepReport::merge(const SweepReport& other) {
  graphs_checked += other.graphs_checked;
  for (const auto& [id, t] : other.totals) {
    auto& mine = totals[id];
    mine.holds += t.holds;
    mine.vacuous += t.vacuous;
    mine.violated += t.violated;
    mine.inconclusive += t.inconclusive;
    mine.advisory += t.advisory;
  }
  for (const auto& [kind, census] : other.tight) {
    auto& mine = tight[kind];
    mine.count += census.count;
    mine.graphs.insert(mine.graphs.end(), census.graphs.begin(), census.graphs.end());
  }
  counterexamples.insert(counterexamples.end(), other.counterexamples.begin(),
                         other.counterexamples.end());
  normalize();
}

void SweepReport::record(GraphContext& ctx, const std::vector<TheoremId>& theorems) {
  ++graphs_checked;
  std::optional<std::string> key;
  auto graph_name = [&]() -> const std::string& {
    if (!key) key = graph_key(ctx.graph());
    return *key;
  };
  bool grew = false;
  for (TheoremId id : theorems) {
    Verdict v = check_theorem(ctx, id);
    auto& t = totals[id];
    switch (v.status) {
      case VerdictStatus::kHolds: ++t.holds; break;
      case VerdictStatus::kVacuous: ++t.vacuous; break;
      case VerdictStatus::kInconclusive: ++t.inconclusive; break;
      case VerdictStatus::kViolated: (v.advisory ? t.advisory : t.violated) += 1; break;
    }
    if (v.status == VerdictStatus::kViolated) {
      counterexamples.push_back({graph_name(), id, std::move(v)});
      grew = true;
    }
    if (auto kind = census_bound(id); kind && ctx.graph().order() > 0) {
      auto& census = tight[*kind];
      try {
        const auto& r = ctx.bound(*kind);
        if (r.tight && !(r.skipped && *kind != BoundKind::kNosal)) {
          ++census.count;
          census.graphs.push_back(graph_name());
          grew = grew || census.graphs.size() > 2 * tight_cap;
        }
      } catch (const Error&) {
        // Spectrum failure already counted as inconclusive by the checker.
      }
    }
  }
  if (grew && counterexamples.size() > 2 * counterexample_cap) normalize();
  for (auto& [kind, census] : tight)
    if (census.graphs.size() > 2 * tight_cap) sort_unique_cap(census.graphs, tight_cap);
}

// ---------------------------------------------------------------------------
// Sweep and fuzz drivers

namespace {

std::string join_ids(const std::vector<TheoremId>& ids) {
  std::string s;
  for (auto id : ids) s += (s.empty() ? "" : ",") + std::string(theorem_id(id));
  return s;
}

std::vector<TheoremId> canonical_theorem_order(std::vector<TheoremId> ids) {
  std::sort(ids.begin(), ids.end());
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
  return ids;
}

// Runs `work(shard, report)` for shards [0, count) on `jobs` threads, each
// thread owning a private report; the partial reports are merged afterwards.
template <typename Work>
SweepReport run_sharded(std::size_t shard_count, int jobs, const SweepReport& prototype,
                        Work work) {
  const int workers = std::max(1, std::min<int>(jobs, static_cast<int>(std::max<std::size_t>(shard_count, 1))));
  std::vector<SweepReport> partial(workers, prototype);
  std::atomic<std::size_t> next{0};
  std::vector<std::exception_ptr> errors(workers);
  auto worker = [&](int w) {
    try {
      for (std::size_t s = next++; s < shard_count; s = next++) work(s, partial[w]);
    } catch (...) {
      errors[w] = std::current_exception();
    }
  };
  if (workers == 1) {
    worker(0);
  } else {
    std::vector<std::thread> threads;
    for (int w = 0; w < workers; ++w) threads.emplace_back(worker, w);
    for (auto& t : threads) t.join();
  }
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
  SweepReport out = prototype;
  for (const auto& p : partial) out.merge(p);
  out.normalize();
  return out;
}

double elapsed_ms(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
}

void seed_totals(SweepReport& r, const std::vector<TheoremId>& theorems) {
  for (auto id : theorems) {
    r.totals[id];
    if (auto kind = census_bound(id)) r.tight[*kind];
  }
}

}  // namespace

SweepReport sweep(const SweepConfig& config) {
  const auto start = std::chrono::steady_clock::now();
  if (config.n_min < 1 || config.n_max < config.n_min) {
    throw Error(ErrorCode::kInvalidArgument, "n range must satisfy 1 <= n_min <= n_max");
  }
  if (config.n_max > kMaxEnumerationOrder) {
    throw Error(ErrorCode::kOrderTooLarge, "exhaustive sweeps are limited to n <= 8");
  }
  if (config.dedup == Dedup::kCanonical && config.n_max > kMaxCanonicalOrder) {
    throw Error(ErrorCode::kOrderTooLarge, "canonical sweeps are limited to n <= 7");
  }
  if (config.n_max == 8 && !config.allow_long_run) {
    throw Error(ErrorCode::kOrderTooLarge,
                "n = 8 labelled sweep (2^28 graphs) needs the long-run flag");
  }
  const auto theorems = canonical_theorem_order(config.theorems);

  SweepReport proto;
  proto.mode = "exhaustive";
  proto.tight_cap = config.tight_cap;
  proto.counterexample_cap = config.counterexample_cap;
  proto.config = {{"n_min", std::to_string(config.n_min)},
                  {"n_max", std::to_string(config.n_max)},
                  {"connected_only", config.connected_only ? "true" : "false"},
                  {"dedup", std::string(to_string(config.dedup))},
                  {"theorems", join_ids(theorems)},
                  {"walk_length", std::to_string(config.check.walk_length)}};
  seed_totals(proto, theorems);

  // Shards: fixed edge-mask prefix ranges (labelled) or index ranges (canonical).
  struct Shard {
    int n;
    std::uint64_t begin, end;
  };
  std::vector<Shard> shards;
  std::map<int, std::vector<Graph>> canonical;
  constexpr std::uint64_t kShardSize = 1u << 12;
  for (int n = config.n_min; n <= config.n_max; ++n) {
    std::uint64_t total;
    if (config.dedup == Dedup::kCanonical) {
      canonical[n] = canonical_graphs(n, config.connected_only);
      total = canonical[n].size();
    } else {
      total = std::uint64_t{1} << pair_count(n);
    }
    for (std::uint64_t b = 0; b < total; b += kShardSize) shards.push_back({n, b, std::min(total, b + kShardSize)});
  }

  auto out = run_sharded(shards.size(), config.jobs, proto, [&](std::size_t s, SweepReport& rep) {
    const Shard& sh = shards[s];
    for (std::uint64_t i = sh.begin; i < sh.end; ++i) {
      if (config.dedup == Dedup::kCanonical) {
        GraphContext ctx(canonical.at(sh.n)[i], config.check);
        rep.record(ctx, theorems);
      } else {
        const Graph g = graph_from_mask(sh.n, i);
        if (config.connected_only && !is_connected(g)) continue;
        GraphContext ctx(g, config.check);
        rep.record(ctx, theorems);
      }
    }
  });
  out.runtime_ms = config.record_timing ? elapsed_ms(start) : 0.0;
  return out;
}

namespace {

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> parts;
  std::size_t pos = 0;
  for (;;) {
    const auto next = s.find(sep, pos);
    parts.push_back(s.substr(pos, next == std::string_view::npos ? std::string_view::npos : next - pos));
    if (next == std::string_view::npos) break;
    pos = next + 1;
  }
  return parts;
}

int parse_int(std::string_view s, std::string_view what) {
  int v = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) {
    throw Error(ErrorCode::kInvalidArgument, "bad " + std::string(what) + " '" + std::string(s) + "'");
  }
  return v;
}

double parse_double(std::string_view s, std::string_view what) {
  double v = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size() || !std::isfinite(v)) {
    throw Error(ErrorCode::kInvalidArgument, "bad " + std::string(what) + " '" + std::string(s) + "'");
  }
  return v;
}

std::string format_double(double x) {
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, ptr);
}

}  // namespace

FuzzDistribution FuzzDistribution::parse(std::string_view spec) {
  const auto colon = spec.find(':');
  if (colon == std::string_view::npos) {
    throw Error(ErrorCode::kInvalidArgument, "distribution needs the form kind:params");
  }
  const auto kind = spec.substr(0, colon);
  const auto args = split(spec.substr(colon + 1), ',');
  FuzzDistribution d;
  auto need = [&](std::size_t count) {
    if (args.size() != count) {
      throw Error(ErrorCode::kInvalidArgument, std::string(kind) + " takes " + std::to_string(count) +
                                                   " parameters");
    }
  };
  auto check_p = [](double p) {
    if (!(p >= 0.0 && p <= 1.0)) throw Error(ErrorCode::kInvalidArgument, "p must lie in [0, 1]");
  };
  if (kind == "gnp") {
    need(2);
    d.kind = Kind::kGnp;
    d.n = parse_int(args[0], "n");
    d.p = parse_double(args[1], "p");
    check_p(d.p);
    if (d.n < 1) throw Error(ErrorCode::kInvalidArgument, "gnp needs n >= 1");
  } else if (kind == "regular") {
    need(2);
    d.kind = Kind::kRegular;
    d.n = parse_int(args[0], "n");
    d.k = parse_int(args[1], "k");
    if (d.n < 1 || d.k < 0 || d.k >= d.n || (d.n * d.k) % 2 != 0) {
      throw Error(ErrorCode::kInvalidArgument, "regular:n,k needs 0 <= k < n and n*k even");
    }
  } else if (kind == "bipartite") {
    need(3);
    d.kind = Kind::kBipartite;
    d.a = parse_int(args[0], "a");
    d.b = parse_int(args[1], "b");
    d.p = parse_double(args[2], "p");
    check_p(d.p);
    if (d.a < 0 || d.b < 0 || d.a + d.b < 1) {
      throw Error(ErrorCode::kInvalidArgument, "bipartite needs a, b >= 0 and a + b >= 1");
    }
  } else {
    throw Error(ErrorCode::kInvalidArgument, "unknown distribution '" + std::string(kind) + "'");
  }
  return d;
}

std::string FuzzDistribution::to_string() const {
  switch (kind) {
    case Kind::kGnp: return "gnp:" + std::to_string(n) + "," + format_double(p);
    case Kind::kRegular: return "regular:" + std::to_string(n) + "," + std::to_string(k);
    case Kind::kBipartite:
      return "bipartite:" + std::to_string(a) + "," + std::to_string(b) + "," + format_double(p);
  }
  return "unknown";
}

Graph FuzzDistribution::sample(std::uint64_t seed) const {
  switch (kind) {
    case Kind::kGnp: return gnp(n, p, seed);
    case Kind::kRegular: return random_regular(n, k, seed);
    case Kind::kBipartite: return random_bipartite(a, b, p, seed);
  }
  return Graph();
}

SweepReport fuzz(const FuzzConfig& config) {
  const auto start = std::chrono::steady_clock::now();
  const auto theorems = canonical_theorem_order(config.theorems);
  SweepReport proto;
  proto.mode = "fuzz";
  proto.tight_cap = config.tight_cap;
  proto.counterexample_cap = config.counterexample_cap;
  proto.config = {{"distribution", config.distribution.to_string()},
                  {"count", std::to_string(config.count)},
                  {"seed", std::to_string(config.seed)},
                  {"theorems", join_ids(theorems)},
                  {"walk_length", std::to_string(config.check.walk_length)}};
  seed_totals(proto, theorems);

  constexpr std::uint64_t kShardSize = 64;
  const std::size_t shards = (config.count + kShardSize - 1) / kShardSize;
  auto out = run_sharded(shards, config.jobs, proto, [&](std::size_t s, SweepReport& rep) {
    const std::uint64_t end = std::min<std::uint64_t>(config.count, (s + 1) * kShardSize);
    for (std::uint64_t i = s * kShardSize; i < end; ++i) {
      const Graph g = config.distribution.sample(mix_seed(config.seed, i));
      GraphContext ctx(g, config.check);
      rep.record(ctx, theorems);
    }
  });
  out.runtime_ms = config.record_timing ? elapsed_ms(start) : 0.0;
  return out;
}

}  // namespace spectool
