#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "secdom/graph.hpp"

namespace secdom {

enum class GraphFormat { Graph6, EdgeList };

std::optional<GraphFormat> parse_format_name(std::string_view name);
std::string_view format_name(GraphFormat f);

struct GraphDocument {
    GraphFormat format;
    std::string payload;
};

// graph6: N(n) header (one byte n+63 for n <= 62, else '~' plus three
// bytes), then the upper triangle in column order (0,1),(0,2),(1,2),(0,3),...
// packed six bits per byte, high bit first, zero padded, each byte +63.
// An optional ">>graph6<<" prefix and trailing whitespace are accepted.
//
// edge-list: first line "n m", then m lines "u v" (0-indexed). Emission
// sorts pairs with u < v and ends every line with '\n'.
//
// Throws ParseError on malformed input and GraphError on self-loops or
// out-of-range endpoints.
Graph parse_graph(const GraphDocument& doc);
GraphDocument emit_graph(const Graph& g, GraphFormat format);

std::string to_graph6(const Graph& g);
Graph from_graph6(std::string_view text);
std::string to_edge_list(const Graph& g);
Graph from_edge_list(std::string_view text);

// Edge-list if the first non-blank line holds two integer tokens, else graph6.
GraphFormat detect_format(std::string_view text);

}  // namespace secdom
