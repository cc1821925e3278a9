#pragma once

#include <istream>
#include <string>
#include <string_view>
#include <vector>

#include "rcm/graph.hpp"

namespace rcm {

// graph6: optional ">>graph6<<" header, size prefix N(n), then the upper
// triangle x(0,1) x(0,2) x(1,2) x(0,3) ... packed big-endian into 6-bit
// groups, each written as byte value + 63.

/// Parses one graph6 line. Vertices are 0..n-1. Throws ParseError with the byte offset.
Graph parse_graph6(std::string_view text);

/// Encodes `g` with its vertices relabelled 0..n-1 in ascending id order.
std::string to_graph6(const Graph& g);

/// All non-empty lines of a graph6 stream.
std::vector<Graph> read_graph6_stream(std::istream& in);

/// One "u v" pair per line; a lone id declares an isolated vertex; '#' starts a comment.
Graph parse_edge_list(std::istream& in);

/// Loads a graph file, choosing graph6 or edge list by content.
Graph load_graph(const std::string& path);

}  // namespace rcm
