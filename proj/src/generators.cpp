#include "spectool/generators.hpp"

#include <algorithm>
#include <string>
#include <vector>

#include "spectool/random.hpp"

namespace spectool {

namespace {

void require_order(int n, int min_n, const char* family) {
  if (n < min_n) {
    throw Error(ErrorCode::kInvalidOrder, std::string(family) + " requires n >= " +
                                              std::to_string(min_n) + ", got " + std::to_string(n));
  }
}

void require_probability(double p) {
  if (!(p >= 0.0 && p <= 1.0)) {
    throw Error(ErrorCode::kInvalidArgument, "probability " + std::to_string(p) + " not in [0, 1]");
  }
}

}  // namespace

Graph complete(int n) {
  require_order(n, 0, "complete");
  GraphBuilder b(n);
  for (Vertex v = 1; v < n; ++v)
    for (Vertex u = 0; u < v; ++u) b.add_edge(u, v);
  return std::move(b).build();
}

Graph complete_bipartite(int a, int b) {
  require_order(a, 0, "complete_bipartite");
  require_order(b, 0, "complete_bipartite");
  GraphBuilder g(a + b);
  for (Vertex u = 0; u < a; ++u)
    for (Vertex v = a; v < a + b; ++v) g.add_edge(u, v);
  return std::move(g).build();
}

Graph cycle(int n) {
  require_order(n, 3, "cycle");
  GraphBuilder b(n);
  for (Vertex v = 0; v < n; ++v) b.add_edge(v, (v + 1) % n);
  return std::move(b).build();
}

Graph path(int n) {
  require_order(n, 0, "path");
  GraphBuilder b(n);
  for (Vertex v = 1; v < n; ++v) b.add_edge(v - 1, v);
  return std::move(b).build();
}

Graph star(int n) {
  require_order(n, 0, "star");
  GraphBuilder b(n);
  for (Vertex v = 1; v < n; ++v) b.add_edge(0, v);
  return std::move(b).build();
}

Graph petersen() {
  GraphBuilder b(10);
  for (Vertex i = 0; i < 5; ++i) {
    b.add_edge(i, (i + 1) % 5);          // outer 5-cycle
    b.add_edge(i, i + 5);                // spokes
    b.add_edge(5 + i, 5 + (i + 2) % 5);  // inner pentagram
  }
  return std::move(b).build();
}

Graph gnp(int n, double p, std::uint64_t seed) {
  require_order(n, 0, "gnp");
  require_probability(p);
  Rng rng(seed);
  GraphBuilder b(n);
  for (Vertex v = 1; v < n; ++v)
    for (Vertex u = 0; u < v; ++u)
      if (rng.bernoulli(p)) b.add_edge(u, v);
  return std::move(b).build();
}

Graph random_regular(int n, int k, std::uint64_t seed) {
  require_order(n, 0, "random_regular");
  if (k < 0 || (n > 0 && k >= n) || (static_cast<long long>(n) * k) % 2 != 0) {
    throw Error(ErrorCode::kInvalidArgument, "no simple " + std::to_string(k) +
                                                 "-regular graph on " + std::to_string(n) +
                                                 " vertices");
  }
  Rng rng(seed);
  for (int attempt = 0; attempt < 100000; ++attempt) {
    GraphBuilder b(n);
    std::vector<Vertex> points;
    points.reserve(static_cast<std::size_t>(n) * k);
    for (Vertex v = 0; v < n; ++v)
      for (int j = 0; j < k; ++j) points.push_back(v);

    bool stuck = false;
    while (!points.empty() && !stuck) {
      bool paired = false;
      for (int tries = 0; tries < 64 && !paired; ++tries) {
        const auto i = rng.below(points.size());
        const auto j = rng.below(points.size());
        const Vertex u = points[i], v = points[j];
        if (i == j || u == v || b.has_edge(u, v)) continue;
        b.add_edge(u, v);
        // Remove the higher index first so the lower one stays valid.
        const auto hi = std::max(i, j), lo = std::min(i, j);
        points[hi] = points.back();
        points.pop_back();
        points[lo] = points.back();
        points.pop_back();
        paired = true;
      }
      if (paired) continue;
      // Random probing failed; look for any legal pair before restarting.
      stuck = true;
      for (std::size_t i = 0; i < points.size() && stuck; ++i)
        for (std::size_t j = i + 1; j < points.size() && stuck; ++j)
          if (points[i] != points[j] && !b.has_edge(points[i], points[j])) stuck = false;
    }
    if (!stuck) return std::move(b).build();
  }
  throw Error(ErrorCode::kNonConvergence, "random_regular: pairing kept getting stuck");
}

Graph random_bipartite(int a, int b, double p, std::uint64_t seed) {
  require_order(a, 0, "random_bipartite");
  require_order(b, 0, "random_bipartite");
  require_probability(p);
  Rng rng(seed);
  GraphBuilder g(a + b);
  for (Vertex u = 0; u < a; ++u)
    for (Vertex v = a; v < a + b; ++v)
      if (rng.bernoulli(p)) g.add_edge(u, v);
  return std::move(g).build();
}

Graph disjoint_union(const Graph& g, const Graph& h) {
  GraphBuilder b(g.order() + h.order());
  for (auto [u, v] : g.edges()) b.add_edge(u, v);
  for (auto [u, v] : h.edges()) b.add_edge(g.order() + u, g.order() + v);
  return std::move(b).build();
}

Graph add_isolated(const Graph& g, int count) {
  return disjoint_union(g, Graph(count));
}

}  // namespace spectool
