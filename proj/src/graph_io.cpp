#include "spectool/graph_io.hpp"

#include <algorithm>
#include <charconv>
#include <istream>
#include <ostream>
#include <sstream>

namespace spectool {

namespace {

constexpr std::string_view kHeader = ">>graph6<<";

std::size_t body_length(int n) {
  const std::size_t bits = static_cast<std::size_t>(n) * (n - 1) / 2;
  return (bits + 5) / 6;
}

}  // namespace

Graph from_graph6(std::string_view text) {
  if (text.empty()) throw Error(ErrorCode::kMalformedHeader, "empty graph6 string");
  const auto c0 = static_cast<unsigned char>(text[0]);
  if (c0 == 126) throw Error(ErrorCode::kUnsupportedOrder, "long-form graph6 (n > 62)");
  if (c0 < 63 || c0 > 126) throw Error(ErrorCode::kMalformedHeader, "order byte out of range");
  const int n = c0 - 63;
  const std::size_t expected = body_length(n);
  const std::string_view body = text.substr(1);
  if (body.size() < expected) {
    throw Error(ErrorCode::kTruncatedBody, "expected " + std::to_string(expected) +
                                               " body bytes, got " + std::to_string(body.size()));
  }
  if (body.size() > expected) {
    throw Error(ErrorCode::kMalformedHeader, "body longer than the order byte allows");
  }

  GraphBuilder b(n);
  std::size_t bit = 0;
  const std::size_t total = static_cast<std::size_t>(n) * (n - 1) / 2;
  int u = 0, v = 1;
  for (std::size_t i = 0; i < body.size(); ++i) {
    const auto c = static_cast<unsigned char>(body[i]);
    if (c < 63 || c > 126) {
      throw Error(ErrorCode::kParseError, "invalid graph6 byte at offset " + std::to_string(i + 1));
    }
    const int group = c - 63;
    for (int k = 5; k >= 0; --k, ++bit) {
      const bool set = (group >> k) & 1;
      if (bit >= total) {
        if (set) throw Error(ErrorCode::kBadPadding, "nonzero pad bit");
        continue;
      }
      if (set) b.add_edge(u, v);
      if (++u == v) {
        u = 0;
        ++v;
      }
    }
  }
  return std::move(b).build();
}

std::string to_graph6(const Graph& g) {
  const int n = g.order();
  if (n > kMaxGraph6Order) {
    throw Error(ErrorCode::kUnsupportedOrder, "order " + std::to_string(n) + " exceeds 62");
  }
  std::string out;
  out.reserve(1 + body_length(n));
  out.push_back(static_cast<char>(n + 63));
  int group = 0, filled = 0;
  for (Vertex v = 1; v < n; ++v) {
    for (Vertex u = 0; u < v; ++u) {
      group = (group << 1) | (g.has_edge(u, v) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(group + 63));
        group = filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>((group << (6 - filled)) + 63));
  return out;
}

std::vector<ParsedLine> read_graph6_lines(std::istream& in) {
  std::vector<ParsedLine> out;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ' || line.back() == '\t')) {
      line.pop_back();
    }
    std::string_view s = line;
    if (s.starts_with(kHeader)) s.remove_prefix(kHeader.size());
    if (s.empty()) continue;
    try {
      out.push_back({lineno, from_graph6(s)});
    } catch (const Error& e) {
      throw Error(ErrorCode::kParseError, "line " + std::to_string(lineno) + ": " + e.what());
    }
  }
  return out;
}

namespace {

// Whitespace-separated integer tokens, each tagged with its 1-based line.
class TokenReader {
 public:
  explicit TokenReader(std::istream& in) : in_(in) {}

  bool next(long long& value, int& line) {
    while (pos_ >= tokens_.size()) {
      std::string text;
      if (!std::getline(in_, text)) return false;
      ++line_;
      tokens_.clear();
      pos_ = 0;
      std::istringstream ls(text);
      for (std::string t; ls >> t;) tokens_.push_back(t);
    }
    line = line_;
    const std::string& t = tokens_[pos_++];
    const auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), value);
    if (ec != std::errc() || ptr != t.data() + t.size()) {
      throw Error(ErrorCode::kParseError,
                  "line " + std::to_string(line) + ": expected an integer, got '" + t + "'");
    }
    return true;
  }

  int line() const { return line_; }

 private:
  std::istream& in_;
  std::vector<std::string> tokens_;
  std::size_t pos_ = 0;
  int line_ = 0;
};

}  // namespace

Graph read_edge_list(std::istream& in) {
  TokenReader reader(in);
  long long n = 0, m = 0;
  int line = 0;
  if (!reader.next(n, line) || !reader.next(m, line)) {
    throw Error(ErrorCode::kParseError, "line " + std::to_string(std::max(reader.line(), 1)) +
                                            ": missing \"n m\" header");
  }
  if (n < 0 || m < 0) {
    throw Error(ErrorCode::kParseError, "line " + std::to_string(line) + ": negative header value");
  }
  if (n > (1 << 20)) {
    throw Error(ErrorCode::kParseError, "line " + std::to_string(line) + ": order too large");
  }
  GraphBuilder b(static_cast<int>(n));
  for (long long i = 0; i < m; ++i) {
    long long u = 0, v = 0;
    if (!reader.next(u, line) || !reader.next(v, line)) {
      throw Error(ErrorCode::kParseError, "line " + std::to_string(reader.line()) + ": expected " +
                                              std::to_string(m) + " edges, got " + std::to_string(i));
    }
    if (u < 0 || v < 0 || u >= n || v >= n) {
      throw Error(ErrorCode::kOutOfRangeVertex, "line " + std::to_string(line) + ": edge " +
                                                    std::to_string(u) + " " + std::to_string(v) +
                                                    " out of range");
    }
    if (u == v) {
      throw Error(ErrorCode::kParseError, "line " + std::to_string(line) + ": self-loop at " +
                                              std::to_string(u));
    }
    b.add_edge(static_cast<Vertex>(u), static_cast<Vertex>(v));
  }
  long long extra = 0;
  if (reader.next(extra, line)) {
    throw Error(ErrorCode::kParseError, "line " + std::to_string(line) + ": trailing data after " +
                                            std::to_string(m) + " edges");
  }
  return std::move(b).build();
}

void write_edge_list(std::ostream& out, const Graph& g) {
  out << g.order() << ' ' << g.edge_count() << '\n';
  for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
}

std::string to_edge_list(const Graph& g) {
  std::ostringstream os;
  write_edge_list(os, g);
  return os.str();
}

}  // namespace spectool
