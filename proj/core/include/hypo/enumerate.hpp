#pragma once

#include <functional>
#include <string>
#include <vector>

#include "hypo/graph.hpp"
#include "hypo/spectral.hpp"

namespace hypo {

enum class ClassFilter {
  AllConnected,
  TreesOnly,          // m = n-1
  CyclicOnly,         // m >= n, i.e. cyclomatic number >= 1
  QuadrangleFreeOnly  // no C4 subgraph
};

struct EnumSpec {
  int n_max = 1;
  int delta_max = 3;
  ClassFilter filter = ClassFilter::AllConnected;
  bool min_edges_n = false;  // additionally require m >= n
};

/// Streams every connected graph with 1 <= n <= n_max and max degree
/// <= delta_max matching the class filter, one representative per
/// isomorphism class, in deterministic order: ascending n, then
/// lexicographic canonical form. Generation is canonical augmentation: a
/// child produced by attaching a fresh vertex survives only if the fresh
/// vertex lies in the automorphism orbit of the child's canonical deletion
/// vertex, which makes each isomorphism class reachable exactly once.
/// The callback receives each graph with its canonical form.
void for_each_connected_graph(
    const EnumSpec& spec,
    const std::function<void(const Graph&, const std::string&)>& fn);

std::vector<Graph> connected_graphs(const EnumSpec& spec);

/// All pairwise non-isomorphic trees with n <= n_max, Delta <= delta_max.
std::vector<Graph> trees(int n_max, int delta_max);

struct ClassifiedGraph {
  Graph graph;
  std::string canonical;
  EnergyVerdict verdict;
};

/// Classifies every graph in the stream. `jobs` workers run the parallel
/// map; the output order is the stream order regardless of jobs. An
/// UnresolvedVerdict anywhere aborts the scan (nothing may stay
/// unclassified).
std::vector<ClassifiedGraph> classify_stream(const EnumSpec& spec,
                                             int jobs = 1);

/// The hypoenergetic members of the stream, in stream order.
std::vector<ClassifiedGraph> hypoenergetic_scan(const EnumSpec& spec,
                                                int jobs = 1);

}  // namespace hypo
