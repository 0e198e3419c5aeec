#pragma once

#include <optional>
#include <vector>

#include "hypo/graph.hpp"

namespace hypo {

/// Two-sided edge cut: deleting `edges` from the host graph leaves exactly
/// two connected components with vertex sets `side_a` (containing the
/// smallest vertex) and `side_b`. Every cut edge has one endpoint per side.
struct EdgeCut {
  std::vector<Edge> edges;   // sorted lexicographically
  std::vector<int> side_a;   // sorted; contains vertex 0 of the host
  std::vector<int> side_b;   // sorted

  bool operator==(const EdgeCut&) const = default;
};

/// Builds the EdgeCut determined by a vertex bipartition: F = all edges of g
/// with one endpoint in `side_bits` and one outside. Returns nullopt unless
/// both sides induce connected nonempty subgraphs (i.e. G-F has exactly two
/// components).
std::optional<EdgeCut> cut_from_side(const Graph& g, std::uint64_t side_bits);

/// All edge subsets F with |F| <= max_size whose deletion leaves exactly two
/// connected components. Note this admits non-minimal cuts as long as every
/// member of F crosses the resulting bipartition. Deterministic order:
/// ascending |F|, then lexicographic on the sorted edge list.
std::vector<EdgeCut> enumerate_two_sided_cuts(const Graph& g, int max_size);

/// Minimum number of edges whose deletion disconnects g. Requires a
/// connected graph on >= 2 vertices.
int edge_connectivity(const Graph& g);

/// All minimum-size two-sided cuts realizing edge_connectivity(g), in the
/// same deterministic order as enumerate_two_sided_cuts.
std::vector<EdgeCut> minimum_cuts(const Graph& g);

/// The two components of g - cut.edges as graphs, relabeled over the sorted
/// side vertex sets (first = the side containing vertex 0).
std::pair<Graph, Graph> split_at_cut(const Graph& g, const EdgeCut& cut);

}  // namespace hypo
