#pragma once

#include <string>
#include <vector>

#include "hypo/graph.hpp"

namespace hypo {

/// Result of canonical labeling.
struct CanonicalRun {
  /// Canonical form: graph6 of the canonically relabeled graph. Two graphs
  /// get equal forms iff they are isomorphic.
  std::string form;
  /// labeling[v] = position of vertex v in the canonical graph.
  std::vector<int> labeling;
  /// orbit[v] = smallest vertex in v's automorphism orbit.
  std::vector<int> orbit;
};

/// Complete (non-heuristic) canonical labeling by equitable color
/// refinement plus backtracking over every individualization of the first
/// non-singleton color class. The canonical form is the lexicographic
/// minimum of the relabeled graph6 strings over all refinement leaves;
/// automorphism orbits fall out of the set of minimum leaves.
CanonicalRun canonical_run(const Graph& g);

std::string canonical_form(const Graph& g);

inline bool isomorphic(const Graph& a, const Graph& b) {
  return a.order() == b.order() && a.size() == b.size() &&
         canonical_form(a) == canonical_form(b);
}

}  // namespace hypo
