#include "spectool/graph.hpp"

#include <string>

namespace spectool {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::kMalformedHeader: return "MalformedHeader";
    case ErrorCode::kBadPadding: return "BadPadding";
    case ErrorCode::kTruncatedBody: return "TruncatedBody";
    case ErrorCode::kUnsupportedOrder: return "UnsupportedOrder";
    case ErrorCode::kInvalidOrder: return "InvalidOrder";
    case ErrorCode::kInvalidArgument: return "InvalidArgument";
    case ErrorCode::kEmptyGraph: return "EmptyGraph";
    case ErrorCode::kOutOfRangeVertex: return "OutOfRangeVertex";
    case ErrorCode::kParseError: return "ParseError";
    case ErrorCode::kNonConvergence: return "NonConvergence";
    case ErrorCode::kNonIntegral: return "NonIntegral";
    case ErrorCode::kDisconnectedInput: return "DisconnectedInput";
    case ErrorCode::kPreconditionViolated: return "PreconditionViolated";
    case ErrorCode::kNotTight: return "NotTight";
    case ErrorCode::kExpansionMismatch: return "ExpansionMismatch";
    case ErrorCode::kHypothesisNotMet: return "HypothesisNotMet";
    case ErrorCode::kOrderTooLarge: return "OrderTooLarge";
  }
  return "Unknown";
}

Graph::Graph(int n) {
  if (n < 0) throw Error(ErrorCode::kInvalidOrder, "negative order " + std::to_string(n));
  n_ = n;
  words_ = (n + 63) / 64;
  bits_.assign(static_cast<std::size_t>(n) * words_, 0);
}

Graph Graph::from_edges(int n, std::span<const Edge> edges) {
  GraphBuilder b(n);
  for (auto [u, v] : edges) b.add_edge(u, v);
  return std::move(b).build();
}

void Graph::check_vertex(Vertex v) const {
  if (v < 0 || v >= n_) {
    throw Error(ErrorCode::kOutOfRangeVertex,
                "vertex " + std::to_string(v) + " not in [0, " + std::to_string(n_) + ")");
  }
}

std::vector<int> Graph::degrees() const {
  std::vector<int> d(n_);
  for (Vertex v = 0; v < n_; ++v) d[v] = degree(v);
  return d;
}

std::vector<Vertex> Graph::neighbors(Vertex v) const {
  std::vector<Vertex> out;
  for_each_bit(row(v), [&](Vertex u) { out.push_back(u); });
  return out;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(static_cast<std::size_t>(m_));
  for (Vertex v = 1; v < n_; ++v) {
    for (Vertex u = 0; u < v; ++u) {
      if (has_edge(u, v)) out.emplace_back(u, v);
    }
  }
  return out;
}

GraphBuilder::GraphBuilder(int n) : g_(n) {}

GraphBuilder& GraphBuilder::add_edge(Vertex u, Vertex v) {
  g_.check_vertex(u);
  g_.check_vertex(v);
  if (u == v) throw Error(ErrorCode::kInvalidArgument, "loop at vertex " + std::to_string(u));
  if (!g_.has_edge(u, v)) {
    const auto w = static_cast<std::size_t>(g_.words_);
    g_.bits_[u * w + (v >> 6)] |= std::uint64_t{1} << (v & 63);
    g_.bits_[v * w + (u >> 6)] |= std::uint64_t{1} << (u & 63);
    ++g_.m_;
  }
  return *this;
}

Graph GraphBuilder::build() && { return std::move(g_); }
Graph GraphBuilder::build() const& { return g_; }

}  // namespace spectool
