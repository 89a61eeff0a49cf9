#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "kcon/graph.hpp"

namespace kcon {

enum class GraphFormat { EdgeList, Graph6 };

GraphFormat parse_format(std::string_view name);
std::string_view to_string(GraphFormat f);

struct ParseOptions {
  int limit_n = kMaxVertices;  // desk-scale guard, never above kMaxVertices
};

// Edge list: first token n, then one "u v" pair per line. Blank lines and
// lines starting with '#' are skipped. Errors carry a 1-based line number.
Graph parse_edge_list(std::string_view text, ParseOptions opts = {});
// Canonical form: "n\n" then "u v\n" with u < v in lexicographic order.
std::string to_edge_list(const Graph& g);

// Standard graph6 (optional ">>graph6<<" header, trailing newline tolerated).
// Errors carry a 0-based byte offset.
Graph parse_graph6(std::string_view text, ParseOptions opts = {});
// No header, no trailing newline.
std::string to_graph6(const Graph& g);

Graph parse_graph(std::string_view text, GraphFormat f, ParseOptions opts = {});
std::string serialize(const Graph& g, GraphFormat f);

// One graph per non-empty line.
std::vector<Graph> parse_graph6_lines(std::string_view text, ParseOptions opts = {});

}  // namespace kcon
