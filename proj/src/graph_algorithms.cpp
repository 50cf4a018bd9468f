#include "spectool/graph_algorithms.hpp"

#include <algorithm>
#include <deque>

namespace spectool {

BasicStats basic_stats(const Graph& g) {
  const int n = g.order();
  if (n == 0) throw Error(ErrorCode::kEmptyGraph, "basic_stats needs n >= 1");
  BasicStats s;
  s.m = g.edge_count();
  s.degrees = g.degrees();
  s.min_degree = *std::min_element(s.degrees.begin(), s.degrees.end());
  s.max_degree = *std::max_element(s.degrees.begin(), s.degrees.end());
  s.avg_degree = 2.0 * static_cast<double>(s.m) / n;
  return s;
}

std::vector<int> bfs_distances(const Graph& g, Vertex source) {
  g.check_vertex(source);
  std::vector<int> dist(g.order(), -1);
  std::deque<Vertex> queue{source};
  dist[source] = 0;
  while (!queue.empty()) {
    const Vertex v = queue.front();
    queue.pop_front();
    for_each_bit(g.row(v), [&](Vertex u) {
      if (dist[u] < 0) {
        dist[u] = dist[v] + 1;
        queue.push_back(u);
      }
    });
  }
  return dist;
}

Connectivity connectivity(const Graph& g) {
  const int n = g.order();
  if (n == 0) throw Error(ErrorCode::kEmptyGraph, "connectivity needs n >= 1");
  Connectivity c;
  c.component_of.assign(n, -1);
  for (Vertex s = 0; s < n; ++s) {
    if (c.component_of[s] >= 0) continue;
    const auto dist = bfs_distances(g, s);
    for (Vertex v = 0; v < n; ++v)
      if (dist[v] >= 0) c.component_of[v] = c.components;
    ++c.components;
  }
  c.connected = c.components == 1;
  if (c.connected) {
    int diameter = 0;
    for (Vertex s = 0; s < n; ++s) {
      const auto dist = bfs_distances(g, s);
      diameter = std::max(diameter, *std::max_element(dist.begin(), dist.end()));
    }
    c.diameter = diameter;
  }
  return c;
}

bool is_connected(const Graph& g) {
  if (g.order() == 0) return true;
  const auto dist = bfs_distances(g, 0);
  return std::none_of(dist.begin(), dist.end(), [](int d) { return d < 0; });
}

namespace {

// Colour 0 = part A. Returns empty on an odd cycle.
std::optional<std::vector<int>> two_colour(const Graph& g) {
  const int n = g.order();
  std::vector<int> colour(n, -1);
  std::deque<Vertex> queue;
  for (Vertex s = 0; s < n; ++s) {
    if (colour[s] >= 0) continue;
    colour[s] = 0;
    queue.push_back(s);
    while (!queue.empty()) {
      const Vertex v = queue.front();
      queue.pop_front();
      bool clash = false;
      for_each_bit(g.row(v), [&](Vertex u) {
        if (colour[u] < 0) {
          colour[u] = 1 - colour[v];
          queue.push_back(u);
        } else if (colour[u] == colour[v]) {
          clash = true;
        }
      });
      if (clash) return std::nullopt;
    }
  }
  return colour;
}

}  // namespace

std::optional<Bipartition> bipartition(const Graph& g) {
  auto colour = two_colour(g);
  if (!colour) return std::nullopt;
  Bipartition p;
  for (Vertex v = 0; v < g.order(); ++v) ((*colour)[v] == 0 ? p.part_a : p.part_b).push_back(v);
  return p;
}

std::optional<CompleteBipartiteWitness> complete_bipartite_plus_isolated(const Graph& g) {
  std::vector<Vertex> active;
  int isolated = 0;
  for (Vertex v = 0; v < g.order(); ++v) {
    if (g.degree(v) == 0) {
      ++isolated;
    } else {
      active.push_back(v);
    }
  }
  if (active.empty()) return std::nullopt;

  // Part A is the non-neighbourhood of the first active vertex; part B its neighbourhood.
  const Vertex first = active.front();
  std::vector<char> in_b(g.order(), 0);
  int b = 0;
  for_each_bit(g.row(first), [&](Vertex u) {
    in_b[u] = 1;
    ++b;
  });
  const int a = static_cast<int>(active.size()) - b;
  for (Vertex v : active) {
    const int expected = in_b[v] ? a : b;
    if (g.degree(v) != expected) return std::nullopt;
    bool ok = true;
    for_each_bit(g.row(v), [&](Vertex u) { ok = ok && in_b[u] != in_b[v]; });
    if (!ok) return std::nullopt;
  }
  // Degrees plus no intra-part edges force every cross pair to be present.
  return CompleteBipartiteWitness{a, b, isolated};
}

bool is_regular(const Graph& g) {
  if (g.order() == 0) return true;
  const int d0 = g.degree(0);
  for (Vertex v = 1; v < g.order(); ++v)
    if (g.degree(v) != d0) return false;
  return true;
}

namespace {

std::optional<BipartiteSemiRegular> semiregular_degrees(const Graph& g) {
  const auto parts = bipartition(g);
  if (!parts) return std::nullopt;
  auto constant_degree = [&](const std::vector<Vertex>& part) -> std::optional<int> {
    if (part.empty()) return 0;
    const int d = g.degree(part.front());
    for (Vertex v : part)
      if (g.degree(v) != d) return std::nullopt;
    return d;
  };
  const auto r = constant_degree(parts->part_a);
  const auto s = constant_degree(parts->part_b);
  if (!r || !s) return std::nullopt;
  return BipartiteSemiRegular{*r, *s};
}

std::optional<Bidegreed> bidegreed_degrees(const Graph& g) {
  const int n = g.order();
  if (n == 0) return std::nullopt;
  const auto d = g.degrees();
  const int delta = *std::min_element(d.begin(), d.end());
  const int full = n - 1;
  if (delta == full) return std::nullopt;  // regular
  for (int x : d)
    if (x != delta && x != full) return std::nullopt;
  if (std::find(d.begin(), d.end(), full) == d.end()) return std::nullopt;
  return Bidegreed{delta, full};
}

}  // namespace

bool is_bipartite_semiregular(const Graph& g) { return semiregular_degrees(g).has_value(); }

bool is_bidegreed_delta_full(const Graph& g) { return bidegreed_degrees(g).has_value(); }

RegularityClass classify_regularity(const Graph& g) {
  if (g.order() == 0) throw Error(ErrorCode::kEmptyGraph, "classify_regularity needs n >= 1");
  if (is_regular(g)) return Regular{g.degree(0)};
  if (auto sr = semiregular_degrees(g)) return *sr;
  if (auto bd = bidegreed_degrees(g)) return *bd;
  return OtherClass{};
}

std::string to_string(const RegularityClass& c) {
  struct Visitor {
    std::string operator()(const Regular& r) const { return "Regular(" + std::to_string(r.k) + ")"; }
    std::string operator()(const BipartiteSemiRegular& b) const {
      return "BipartiteSemiRegular(" + std::to_string(b.r) + "," + std::to_string(b.s) + ")";
    }
    std::string operator()(const Bidegreed& b) const {
      return "Bidegreed(" + std::to_string(b.delta) + "," + std::to_string(b.full) + ")";
    }
    std::string operator()(const OtherClass&) const { return "Other"; }
  };
  return std::visit(Visitor{}, c);
}

NeighborhoodDegreeSums neighborhood_degree_sums(const Graph& g) {
  const int n = g.order();
  if (n == 0) throw Error(ErrorCode::kEmptyGraph, "neighborhood_degree_sums needs n >= 1");
  const auto d = g.degrees();
  NeighborhoodDegreeSums s;
  s.open.assign(n, 0);
  s.closed.assign(n, 0);
  for (Vertex v = 0; v < n; ++v) {
    std::int64_t sum = 0;
    for_each_bit(g.row(v), [&](Vertex u) { sum += d[u]; });
    s.open[v] = sum;
    s.closed[v] = sum + d[v];
  }
  s.max_open = *std::max_element(s.open.begin(), s.open.end());
  s.max_closed = *std::max_element(s.closed.begin(), s.closed.end());
  return s;
}

std::int64_t count_triangles_brute(const Graph& g) {
  const int n = g.order();
  std::int64_t t = 0;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) {
      if (!g.has_edge(u, v)) continue;
      for (Vertex w = v + 1; w < n; ++w)
        if (g.has_edge(u, w) && g.has_edge(v, w)) ++t;
    }
  return t;
}

std::optional<std::array<Vertex, 3>> find_triangle(const Graph& g) {
  const int n = g.order();
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) {
      if (!g.has_edge(u, v)) continue;
      for (Vertex w = v + 1; w < n; ++w)
        if (g.has_edge(u, w) && g.has_edge(v, w)) return std::array<Vertex, 3>{u, v, w};
    }
  return std::nullopt;
}

InducedSubgraph induced_subgraph(const Graph& g, std::span<const Vertex> vertices) {
  InducedSubgraph out;
  out.original.assign(vertices.begin(), vertices.end());
  for (Vertex v : out.original) g.check_vertex(v);
  std::sort(out.original.begin(), out.original.end());
  out.original.erase(std::unique(out.original.begin(), out.original.end()), out.original.end());
  const int k = static_cast<int>(out.original.size());
  GraphBuilder b(k);
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j)
      if (g.has_edge(out.original[i], out.original[j])) b.add_edge(i, j);
  out.graph = std::move(b).build();
  return out;
}

}  // namespace spectool
