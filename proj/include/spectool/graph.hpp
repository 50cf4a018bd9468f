#pragma once

#include <bit>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "spectool/error.hpp"

namespace spectool {

using Vertex = int;
using Edge = std::pair<Vertex, Vertex>;

// Calls f(v) for every set bit v of a multi-word bitset, in increasing order.
template <typename F>
void for_each_bit(std::span<const std::uint64_t> words, F&& f) {
  for (std::size_t w = 0; w < words.size(); ++w) {
    std::uint64_t bits = words[w];
    while (bits != 0) {
      const int b = std::countr_zero(bits);
      f(static_cast<Vertex>(w * 64 + b));
      bits &= bits - 1;
    }
  }
}

inline int popcount(std::span<const std::uint64_t> words) {
  int c = 0;
  for (auto w : words) c += std::popcount(w);
  return c;
}

/// Immutable simple undirected graph.
///
/// Adjacency is stored as one fixed-width bitset row per vertex; row v has
/// bit u set iff {u, v} is an edge. Rows use as many 64-bit words as the
/// order requires, so the same type serves the tiny exhaustive sweeps and
/// the few-hundred-vertex fuzz corpora. Build instances with GraphBuilder.
class Graph {
 public:
  Graph() = default;

  /// Edgeless graph on n vertices.
  explicit Graph(int n);

  static Graph from_edges(int n, std::span<const Edge> edges);

  int order() const noexcept { return n_; }
  std::int64_t edge_count() const noexcept { return m_; }
  int words_per_row() const noexcept { return words_; }

  bool has_edge(Vertex u, Vertex v) const {
    return (bits_[static_cast<std::size_t>(u) * words_ + (v >> 6)] >> (v & 63)) & 1u;
  }

  std::span<const std::uint64_t> row(Vertex v) const {
    return {bits_.data() + static_cast<std::size_t>(v) * words_, static_cast<std::size_t>(words_)};
  }

  int degree(Vertex v) const { return popcount(row(v)); }
  std::vector<int> degrees() const;
  std::vector<Vertex> neighbors(Vertex v) const;
  /// Edges as (u, v) with u < v, ordered by v then u (graph6 bit order).
  std::vector<Edge> edges() const;

  void check_vertex(Vertex v) const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.bits_ == b.bits_;
  }

 private:
  friend class GraphBuilder;

  int n_ = 0;
  int words_ = 0;
  std::int64_t m_ = 0;
  std::vector<std::uint64_t> bits_;
};

class GraphBuilder {
 public:
  explicit GraphBuilder(int n);

  /// Adds {u, v}. Loops are rejected; repeated edges are idempotent.
  GraphBuilder& add_edge(Vertex u, Vertex v);
  bool has_edge(Vertex u, Vertex v) const { return g_.has_edge(u, v); }
  int order() const { return g_.n_; }

  Graph build() &&;
  Graph build() const&;

 private:
  Graph g_;
};

}  // namespace spectool
