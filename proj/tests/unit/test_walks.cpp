#include <cmath>

#include "doctest.h"
#include "oracles.hpp"
#include "spectool/generators.hpp"
#include "spectool/graph_algorithms.hpp"
#include "spectool/verify.hpp"
#include "spectool/walks.hpp"

using namespace spectool;

namespace {

std::vector<BigInt> totals(const Graph& g, int k) { return walk_counts(g, k).totals; }

std::vector<BigInt> ints(std::initializer_list<int> xs) { return {xs.begin(), xs.end()}; }

}  // namespace

TEST_SUITE("walks") {
  TEST_CASE("walk tables") {
    CHECK(totals(complete(3), 3) == ints({3, 6, 12, 24}));
    CHECK(totals(path(3), 3) == ints({3, 4, 6, 8}));
    CHECK(totals(Graph(1), 3) == ints({1, 0, 0, 0}));
    const auto t = walk_counts(complete_bipartite(2, 3), 4);
    CHECK(t.totals[1] == 12);
    CHECK(t.totals[2] == 2 * 9 + 3 * 4);
    CHECK_THROWS_AS(walk_counts(Graph(0), 2), Error);
  }

  TEST_CASE("walk tables match brute-force enumeration") {
    for (int n = 1; n <= 5; ++n) {
      const std::uint64_t total = std::uint64_t{1} << (n * (n - 1) / 2);
      for (std::uint64_t mask = 0; mask < total; mask += (n == 5 ? 3 : 1)) {
        const Graph g = graph_from_mask(n, mask);
        const auto t = walk_counts(g, 6);
        for (int k = 0; k <= 6; ++k) CHECK(t.totals[k] == oracle::walks(g, k));
        BigInt sum = 0;
        for (const auto& w : t.per_vertex[3]) sum += w;
        CHECK(sum == t.totals[3]);
      }
    }
  }

  TEST_CASE("walk counts are exact beyond 64 bits") {
    const auto t = walk_counts(complete(30), 20);
    BigInt want = 30;
    for (int i = 0; i < 20; ++i) want *= 29;
    CHECK(t.totals[20] == want);
  }

  TEST_CASE("decomposition identity") {
    CHECK(decomposition_identity_check(complete(3), 10));
    const auto t = walk_counts(path(3), 2);
    CHECK(t.per_vertex[2][0] + t.per_vertex[2][1] + t.per_vertex[2][2] == 6);
    CHECK(decomposition_identity_check(petersen(), 12));
    CHECK(decomposition_identity_check(gnp(25, 0.3, 5), 15));
  }

  TEST_CASE("walk inequality residuals") {
    for (const auto& r : walk_inequality_residuals(complete(3), 8)) {
      CHECK(r.numerator == 0);
      CHECK(r.value == 0.0);
    }
    const auto p3 = walk_inequality_residuals(path(3), 3);
    REQUIRE(p3.size() == 2);
    CHECK(p3[1].k == 3);
    CHECK(p3[1].value == doctest::Approx(-0.5));
    CHECK(walk_inequality_residuals(Graph(3), 6).size() == 1);  // only k = 2, where w_0 = 3
    CHECK(walk_inequality_residuals(Graph(3), 6)[0].value == 0.0);
    CHECK(walk_inequality_holds(walk_counts(petersen(), 12), 12));
    CHECK(walks_nondecreasing(walk_counts(add_isolated(path(4), 3), 12)));
  }

  TEST_CASE("spectral expansion") {
    const auto k3 = walk_expansion(complete(3), eigendecompose(complete(3)), 10);
    CHECK(k3.coefficients[0] == doctest::Approx(3));
    CHECK(std::abs(k3.coefficients[1]) < 1e-9);
    CHECK(std::abs(k3.coefficients[2]) < 1e-9);
    CHECK_FALSE(k3.has_negative_extreme);

    const auto p3 = walk_expansion(path(3), eigendecompose(path(3)), 10);
    CHECK(p3.has_negative_extreme);
    CHECK(p3.a == doctest::Approx(1.5 + std::sqrt(2.0)));
    CHECK(p3.b == doctest::Approx(1.5 - std::sqrt(2.0)));
    CHECK(p3.a == doctest::Approx(2.9142).epsilon(1e-4));
    CHECK(p3.b == doctest::Approx(0.0858).epsilon(1e-3));

    const auto e2 = walk_expansion(Graph(2), eigendecompose(Graph(2)), 5);
    CHECK(e2.max_relative_error == 0.0);
  }

  TEST_CASE("a > b on bipartite graphs") {
    const auto p3 = a_greater_b_check(path(3));
    CHECK_FALSE(p3.vacuous);
    CHECK(p3.passed);
    CHECK(p3.a > p3.b);
    const auto k23 = a_greater_b_check(complete_bipartite(2, 3));
    CHECK(k23.passed);
    CHECK(k23.a > k23.b);
    const auto k3 = a_greater_b_check(complete(3));
    CHECK(k3.vacuous);
    CHECK(k3.passed);
    CHECK(k3.b == 0.0);
  }

  TEST_CASE("ratio convergence") {
    CHECK(ratio_convergence(complete(3), 10).ratio == doctest::Approx(4));
    CHECK(ratio_convergence(complete(3), 10).gap < 1e-12);
    CHECK(ratio_convergence(path(3), 11).ratio == doctest::Approx(2));
    CHECK(ratio_convergence(path(3), 12).ratio == doctest::Approx(2));
    CHECK(ratio_convergence(star(5), 40).gap <= 1e-9);
    CHECK_THROWS_AS(ratio_convergence(path(3), 5), Error);
    CHECK_THROWS_AS(ratio_convergence(Graph(3), 12), Error);
  }
}
