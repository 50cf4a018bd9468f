#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "spectool/graph.hpp"

namespace spectool {

// graph6 short form only: orders 0..62.
inline constexpr int kMaxGraph6Order = 62;

Graph from_graph6(std::string_view text);
std::string to_graph6(const Graph& g);

struct ParsedLine {
  int line_number = 0;
  Graph graph;
};

/// Reads one graph6 string per line. Blank lines are ignored and a leading
/// ">>graph6<<" marker is stripped. Parse failures rethrow as kParseError
/// with the 1-based line number in the message.
std::vector<ParsedLine> read_graph6_lines(std::istream& in);

/// Plain edge list: "n m" header, then m lines "u v" (0-indexed).
Graph read_edge_list(std::istream& in);
void write_edge_list(std::ostream& out, const Graph& g);
std::string to_edge_list(const Graph& g);

}  // namespace spectool
