#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "spectool/graph.hpp"

namespace spectool {

struct BasicStats {
  std::int64_t m = 0;
  int min_degree = 0;
  int max_degree = 0;
  double avg_degree = 0.0;  // 2m / n
  std::vector<int> degrees;
};

/// Throws kEmptyGraph for n = 0.
BasicStats basic_stats(const Graph& g);

struct Connectivity {
  bool connected = false;
  int components = 0;
  std::optional<int> diameter;  // empty when disconnected
  std::vector<int> component_of;
};

Connectivity connectivity(const Graph& g);
bool is_connected(const Graph& g);

/// BFS distances from `source`; unreachable vertices get -1.
std::vector<int> bfs_distances(const Graph& g, Vertex source);

struct Bipartition {
  std::vector<Vertex> part_a;
  std::vector<Vertex> part_b;
};

/// 2-colouring with the lowest-index vertex of every component placed in part A.
std::optional<Bipartition> bipartition(const Graph& g);

struct CompleteBipartiteWitness {
  int a = 0;  // part holding the lowest-index non-isolated vertex
  int b = 0;
  int isolated = 0;
  friend bool operator==(const CompleteBipartiteWitness&, const CompleteBipartiteWitness&) = default;
};

/// Some K_{a,b} (a, b >= 1) once all degree-0 vertices are deleted.
std::optional<CompleteBipartiteWitness> complete_bipartite_plus_isolated(const Graph& g);

struct Regular {
  int k;
  friend bool operator==(const Regular&, const Regular&) = default;
};
struct BipartiteSemiRegular {
  int r;  // degree on part A
  int s;  // degree on part B
  friend bool operator==(const BipartiteSemiRegular&, const BipartiteSemiRegular&) = default;
};
/// Every degree is delta or n-1, both occurring.
struct Bidegreed {
  int delta;
  int full;
  friend bool operator==(const Bidegreed&, const Bidegreed&) = default;
};
struct OtherClass {
  friend bool operator==(const OtherClass&, const OtherClass&) = default;
};

using RegularityClass = std::variant<Regular, BipartiteSemiRegular, Bidegreed, OtherClass>;

bool is_regular(const Graph& g);
bool is_bipartite_semiregular(const Graph& g);
bool is_bidegreed_delta_full(const Graph& g);

/// Most specific class; precedence Regular > BipartiteSemiRegular > Bidegreed > Other.
RegularityClass classify_regularity(const Graph& g);
std::string to_string(const RegularityClass& c);

struct NeighborhoodDegreeSums {
  std::vector<std::int64_t> open;    // sum of d(u) over N(v)
  std::vector<std::int64_t> closed;  // sum of d(u) over N[v]
  std::int64_t max_open = 0;
  std::int64_t max_closed = 0;
};

NeighborhoodDegreeSums neighborhood_degree_sums(const Graph& g);

std::int64_t count_triangles_brute(const Graph& g);
/// Lexicographically first triangle (u < v < w).
std::optional<std::array<Vertex, 3>> find_triangle(const Graph& g);

struct InducedSubgraph {
  Graph graph;
  std::vector<Vertex> original;  // new label i -> original vertex
};

/// Vertices of S are sorted and deduplicated before relabelling.
InducedSubgraph induced_subgraph(const Graph& g, std::span<const Vertex> vertices);

}  // namespace spectool
