#pragma once

#include <string>

#include "hypo/graph.hpp"

namespace hypo {

/// Encodes a graph in graph6 format: N(n) followed by the upper triangle of
/// the adjacency matrix in column-major order, packed 6 bits per byte with
/// offset 63. Orders above 62 use the long form (leading byte 126).
std::string to_graph6(const Graph& g);

/// Inverse of to_graph6. Rejects malformed input (bad header, characters
/// outside [63, 126], wrong length, nonzero padding) with
/// std::invalid_argument naming the byte offset, and orders above
/// order_bound() likewise.
Graph from_graph6(const std::string& text);

}  // namespace hypo
