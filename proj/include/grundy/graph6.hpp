#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "grundy/graph.hpp"

namespace grundy {

// Any malformed textual graph input (graph6 or edge list).
struct FormatError : std::runtime_error {
    explicit FormatError(const std::string& what) : std::runtime_error(what) {}
};

// graph6: one graph per line, printable bytes 63..126, upper triangle packed
// column by column, six bits per byte, high bit first. We handle the plain
// format with 1-byte and 4-byte vertex counts (enough for the 64-vertex cap);
// sparse6, digraph6 and the incremental form are rejected up front. The
// optional ">>graph6<<" header is tolerated and stripped.
Graph parse_graph6(std::string_view line, int max_vertices = kMaxVertices);
std::string to_graph6(const Graph& g);

// Plain text edge list: header "n m", then m lines "u v", 0-based.
Graph parse_edge_list(std::string_view text, int max_vertices = kMaxVertices);
std::string to_edge_list(const Graph& g);

}  // namespace grundy
