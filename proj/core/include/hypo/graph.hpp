#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace hypo {

/// Undirected edge, normalized so that first < second.
using Edge = std::pair<int, int>;

inline Edge make_edge(int u, int v) { return u < v ? Edge{u, v} : Edge{v, u}; }

/// Global cap on graph order. Defaults to 32; the environment variable
/// HYPO_ORDER_BOUND overrides it (valid range 1..64, fixed by the 64-bit
/// adjacency rows). Read once per process.
int order_bound();

/// Simple undirected graph on vertices 0..n-1.
///
/// Adjacency is kept as one 64-bit mask per vertex, so membership tests and
/// neighbor scans are single-word operations. Values are immutable after
/// construction; all "mutators" return a new graph.
class Graph {
 public:
  Graph() = default;  // the empty graph (order 0)

  /// Builds a graph from an explicit edge list. Duplicate edges collapse.
  /// Throws std::invalid_argument on loops, out-of-range endpoints, or
  /// n outside [0, order_bound()].
  static Graph from_edge_list(int n, std::span<const Edge> edges);
  static Graph from_edge_list(int n, std::initializer_list<Edge> edges);

  int order() const { return n_; }
  int size() const { return m_; }

  bool has_edge(int u, int v) const {
    return u != v && (adj_[u] >> v) & std::uint64_t{1};
  }
  std::uint64_t neighbor_mask(int v) const { return adj_[v]; }
  int degree(int v) const;
  int max_degree() const;
  int min_degree() const;

  std::vector<int> neighbors(int v) const;
  std::vector<Edge> edges() const;               // sorted lexicographically
  std::vector<int> degree_sequence() const;      // sorted descending

  /// New graph with one extra vertex (label n) adjacent to the vertices in
  /// `neighbor_bits`.
  Graph with_vertex(std::uint64_t neighbor_bits) const;

  /// New graph with the given edges removed. Edges absent from the graph
  /// throw std::invalid_argument.
  Graph without_edges(std::span<const Edge> cut) const;

  /// Induced subgraph on `verts`, relabeled 0..k-1 in the order given.
  Graph induced(std::span<const int> verts) const;

  /// Relabeled copy: vertex v becomes perm[v]. perm must be a permutation
  /// of 0..n-1.
  Graph permuted(std::span<const int> perm) const;

  bool operator==(const Graph&) const = default;

 private:
  int n_ = 0;
  int m_ = 0;
  std::vector<std::uint64_t> adj_;
};

Graph disjoint_union(const Graph& a, const Graph& b);

bool is_connected(const Graph& g);  // false for the empty graph

/// Maximal connected vertex sets, each sorted ascending, whole list sorted
/// by smallest member.
std::vector<std::vector<int>> connected_components(const Graph& g);

/// c(G) = m - n + 1. Throws std::invalid_argument on disconnected input,
/// naming the components found.
int cyclomatic_number(const Graph& g);

/// Result of iterated pendant-vertex deletion: the 2-core relabeled to
/// 0..k-1 plus the map back to host vertex labels.
struct CoreMap {
  Graph core;
  std::vector<int> to_host;  // to_host[i] = host label of core vertex i
};

CoreMap two_core(const Graph& g);

/// The graph left after repeatedly deleting degree<=1 vertices. Empty for
/// trees and isolated vertices; otherwise the maximal subgraph with minimum
/// degree >= 2 (relabeled).
Graph strip_pendants(const Graph& g);

/// True iff g contains a 4-cycle: some vertex pair with >= 2 common
/// neighbors.
bool has_quadrangle(const Graph& g);

}  // namespace hypo
