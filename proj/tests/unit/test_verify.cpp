#include <set>

#include "doctest.h"
#include "oracles.hpp"
#include "spectool/generators.hpp"
#include "spectool/graph_io.hpp"
#include "spectool/report_json.hpp"
#include "spectool/verify.hpp"

using namespace spectool;

namespace {

// Permutation-minimal classes built from scratch: every labelled graph is
// mapped to its smallest relabelled graph6 string.
std::size_t brute_class_count(int n, bool connected_only) {
  std::set<std::string> classes;
  const std::uint64_t total = std::uint64_t{1} << (n * (n - 1) / 2);
  std::vector<int> perm(n);
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    const Graph g = graph_from_mask(n, mask);
    if (connected_only && !oracle::connected(g)) continue;
    std::iota(perm.begin(), perm.end(), 0);
    std::string best;
    do {
      GraphBuilder b(n);
      for (auto [u, v] : g.edges()) b.add_edge(perm[u], perm[v]);
      std::string s = oracle::graph6(std::move(b).build());
      if (best.empty() || s < best) best = s;
    } while (std::next_permutation(perm.begin(), perm.end()));
    classes.insert(best);
  }
  return classes.size();
}

}  // namespace

TEST_SUITE("verify") {
  TEST_CASE("theorem ids round trip") {
    for (auto id : kAllTheorems) CHECK(parse_theorem_id(theorem_id(id)) == id);
    CHECK_FALSE(parse_theorem_id("riemann"));
  }

  TEST_CASE("labelled enumeration") {
    CHECK(enumerate_graphs(3, false, Dedup::kLabeled).size() == 8);
    CHECK(enumerate_graphs(4, false, Dedup::kLabeled).size() == 64);
    CHECK(enumerate_graphs(4, true, Dedup::kLabeled).size() == 38);
    CHECK(graph_from_mask(3, 0b111) == complete(3));
    CHECK(graph_from_mask(3, 0b001).has_edge(0, 1));
    CHECK(graph_from_mask(3, 0b010).has_edge(0, 2));
    CHECK_THROWS_AS(enumerate_graphs(9, false, Dedup::kLabeled), Error);
  }

  TEST_CASE("canonical enumeration") {
    const std::vector<std::size_t> all{1, 2, 4, 11, 34, 156, 1044};
    const std::vector<std::size_t> connected{1, 1, 2, 6, 21, 112, 853};
    for (int n = 1; n <= 7; ++n) {
      CHECK(canonical_graphs(n, false).size() == all[n - 1]);
      CHECK(canonical_graphs(n, true).size() == connected[n - 1]);
    }
    for (int n = 1; n <= 5; ++n) {
      CHECK(brute_class_count(n, false) == all[n - 1]);
      CHECK(brute_class_count(n, true) == connected[n - 1]);
    }
    CHECK_THROWS_AS(canonical_graphs(8, false), Error);
    CHECK(canonical_code(cycle(5)) == canonical_code(Graph::from_edges(5, std::vector<Edge>{{0, 2}, {2, 4}, {4, 1}, {1, 3}, {3, 0}})));
    CHECK(canonical_code(path(4)) != canonical_code(star(4)));
  }

  TEST_CASE("checker examples") {
    CHECK(check_theorem(complete(4), TheoremId::kMantel).status == VerdictStatus::kHolds);
    CHECK(check_theorem(cycle(5), TheoremId::kNosal).status == VerdictStatus::kVacuous);
    CHECK(check_theorem(star(5), TheoremId::kSpectralMantel).status == VerdictStatus::kHolds);
    CHECK(check_theorem(star(5), TheoremId::kHsf).status == VerdictStatus::kHolds);
    CHECK(check_theorem(Graph(3), TheoremId::kHong).status == VerdictStatus::kVacuous);
    CHECK(check_theorem(path(5), TheoremId::kDiameterDistinct).status == VerdictStatus::kHolds);
    CHECK(check_theorem(cycle(5), TheoremId::kSpectrumSymmetry).status == VerdictStatus::kHolds);
    CHECK(check_theorem(Graph(0), TheoremId::kStanley).status == VerdictStatus::kVacuous);
    for (auto id : kAllTheorems) {
      const auto v = check_theorem(petersen(), id);
      CHECK(v.status != VerdictStatus::kViolated);
      CHECK(v.status != VerdictStatus::kInconclusive);
    }
  }

  TEST_CASE("budget exhaustion is inconclusive") {
    CheckOptions tiny;
    tiny.cycle_budget = 5;
    const auto v = check_theorem(complete(8), TheoremId::kDensePancyclicity, tiny);
    CHECK(v.status == VerdictStatus::kInconclusive);
  }

  TEST_CASE("counterexamples replay") {
    CheckOptions options;
    options.even_cycle_l_max = 4;
    const Graph bowtie = Graph::from_edges(5, std::vector<Edge>{{0, 1}, {0, 2}, {1, 2}, {0, 3}, {0, 4}, {3, 4}});
    GraphContext ctx(bowtie, options);
    SweepReport report;
    report.record(ctx, {TheoremId::kConsecutiveEvenCycles});
    REQUIRE(report.counterexamples.size() == 1);
    CHECK(report.violations() == 0);
    CHECK(report.totals[TheoremId::kConsecutiveEvenCycles].advisory == 1);
    const auto replayed = replay(report.counterexamples[0], options);
    CHECK(replayed.status == VerdictStatus::kViolated);
    CHECK(replayed.advisory);
  }

  TEST_CASE("graph keys") {
    CHECK(graph_key(complete(3)) == "Bw");
    const Graph big = cycle(70);
    const std::string key = graph_key(big);
    CHECK(key.rfind("edges:", 0) == 0);
    CHECK(graph_from_key(key) == big);
    CHECK(graph_from_key("Bw") == complete(3));
  }

  TEST_CASE("Mantel sweep at order 4") {
    SweepConfig config;
    config.n_min = config.n_max = 4;
    config.theorems = {TheoremId::kMantel};
    const auto r = sweep(config);
    CHECK(r.graphs_checked == 64);
    CHECK(r.totals.at(TheoremId::kMantel).holds == 7);
    CHECK(r.totals.at(TheoremId::kMantel).vacuous == 57);
  }

  TEST_CASE("hong census at order 5 contains the star and K5") {
    SweepConfig config;
    config.n_min = config.n_max = 5;
    config.theorems = {TheoremId::kHong};
    const auto r = sweep(config);
    const auto& tight = r.tight.at(BoundKind::kHong).graphs;
    CHECK(std::find(tight.begin(), tight.end(), to_graph6(star(5))) != tight.end());
    CHECK(std::find(tight.begin(), tight.end(), to_graph6(complete(5))) != tight.end());
  }

  TEST_CASE("sweeps are independent of the worker count") {
    SweepConfig config;
    config.n_max = 5;
    config.record_timing = false;
    const auto one = to_json(sweep(config)).dump();
    for (int jobs : {4, 16}) {
      config.jobs = jobs;
      CHECK(to_json(sweep(config)).dump() == one);
    }
    config.dedup = Dedup::kCanonical;
    config.jobs = 1;
    const auto canon = sweep(config);
    CHECK(canon.graphs_checked == 1 + 2 + 4 + 11 + 34);
    CHECK(canon.violations() == 0);
  }

  TEST_CASE("sweep configuration errors") {
    SweepConfig config;
    config.n_max = 9;
    CHECK_THROWS_AS(sweep(config), Error);
    config.n_max = 8;
    CHECK_THROWS_AS(sweep(config), Error);
    config.dedup = Dedup::kCanonical;
    config.allow_long_run = true;
    CHECK_THROWS_AS(sweep(config), Error);
    config.n_min = 0;
    CHECK_THROWS_AS(sweep(config), Error);
  }

  TEST_CASE("fuzz distributions") {
    auto d = FuzzDistribution::parse("gnp:30,0.5");
    CHECK(d.kind == FuzzDistribution::Kind::kGnp);
    CHECK(d.to_string() == "gnp:30,0.5");
    CHECK(FuzzDistribution::parse("regular:10,3").to_string() == "regular:10,3");
    CHECK(FuzzDistribution::parse("bipartite:8,8,0.7").to_string() == "bipartite:8,8,0.7");
    for (const char* bad : {"gnp:30,1.5", "gnp:30", "regular:5,3", "cube:3", "gnp", "gnp:x,0.5"}) {
      CHECK_THROWS_AS(FuzzDistribution::parse(bad), Error);
    }
  }

  TEST_CASE("fuzz is deterministic and shard-independent") {
    FuzzConfig config;
    config.distribution = FuzzDistribution::parse("gnp:12,0.5");
    config.count = 300;
    config.seed = 7;
    config.record_timing = false;
    const auto a = to_json(fuzz(config)).dump();
    config.jobs = 3;
    CHECK(to_json(fuzz(config)).dump() == a);
    config.seed = 8;
    CHECK(to_json(fuzz(config)).dump() != a);
  }

  TEST_CASE("a > b on random connected bipartite samples") {
    FuzzConfig config;
    config.distribution = FuzzDistribution::parse("bipartite:8,8,0.7");
    config.count = 300;
    config.theorems = {TheoremId::kWalkInequality};
    const auto r = fuzz(config);
    CHECK(r.violations() == 0);
    CHECK(r.totals.at(TheoremId::kWalkInequality).inconclusive == 0);
  }
}
