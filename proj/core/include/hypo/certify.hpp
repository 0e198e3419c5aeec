#pragma once

#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "hypo/cuts.hpp"
#include "hypo/graph.hpp"

namespace hypo {

enum class LeafReason { TreeBase, SmallCyclomaticBase };
enum class CutStrategy { ProofGuided, Exhaustive };
enum class CaseLabel {
  Case1,      // kappa' of the 2-core is 1
  Subcase21,  // kappa' = 2, both sides of the base cut cyclic
  Subcase22,  // kappa' = 2, one side acyclic
  Subcase31,  // kappa' = 3, both sides cyclic
  Subcase32,  // kappa' = 3, one side acyclic
  Fallback    // exhaustive search
};

std::string_view to_string(LeafReason reason);
std::string_view to_string(CutStrategy strategy);
std::string_view to_string(CaseLabel label);

struct CutReport {
  CutStrategy strategy;
  int kappa_core;  // edge connectivity of the pendant-stripped graph
  CaseLabel label;
  int cut_size;
};

/// Node of a decomposition certificate: either a leaf with a base-case
/// reason, or a cut with the two component subtrees (left = the component
/// containing vertex 0, both children relabeled over their sorted vertex
/// sets).
struct CertNode {
  Graph graph;
  std::optional<LeafReason> leaf_reason;
  std::optional<EdgeCut> cut;
  std::optional<CutReport> cut_report;  // filled by certify, not serialized
  std::unique_ptr<CertNode> left;
  std::unique_ptr<CertNode> right;

  bool is_leaf() const { return leaf_reason.has_value(); }
};

struct Certificate {
  std::unique_ptr<CertNode> root;
};

/// Claim-1 conditions, verbatim: deleting F leaves exactly two components,
/// both with 0 <= c < c(g), neither isomorphic to a catalog graph.
/// Recomputed from scratch; the cut's cached side partition is not trusted.
/// Throws if cut edges are not edges of g. Requires connected g with
/// c(g) >= 1.
bool is_good_cut(const Graph& g, const EdgeCut& cut);

/// First good cut in deterministic stream order over sizes 1..max_size
/// (lexicographic within each size), or nullopt. Requires c(g) >= 3.
std::optional<std::pair<EdgeCut, CutReport>> find_good_cut_exhaustive(
    const Graph& g, int max_size = 4);

/// Mirrors the inductive case analysis: candidates are the minimum cuts of
/// the pendant-stripped core lifted to g (groups with both sides cyclic
/// first, then lexicographic). A candidate that fails only because a side
/// is an exceptional graph spawns repair candidates: subsets (size <= 4) of
/// the edges incident to that side and its neighbors. Falls back to the
/// exhaustive search, labeled Fallback. Requires c(g) >= 3.
std::optional<std::pair<EdgeCut, CutReport>> find_good_cut_proof_guided(
    const Graph& g);

class CertifyError : public std::runtime_error {
 public:
  CertifyError(const std::string& message, std::string stuck);
  /// graph6 of the subgraph where no good cut was found.
  std::string stuck_graph6;
};

/// Builds a decomposition certificate by induction on the cyclomatic
/// number: trees are TreeBase leaves, c in {1,2} are SmallCyclomaticBase
/// leaves, c >= 3 nodes get a good cut and recurse on both components.
/// Requires connected input with max degree <= 3, not isomorphic to a
/// catalog graph. Throws CertifyError when no good cut of size <= 4 exists
/// at some node.
Certificate certify(const Graph& g);

/// Line format: header "CERT n m", then a pre-order walk with one record
/// per node: "CUT <graph6> <u-v> ..." or
/// "LEAF <TreeBase|SmallCyclomaticBase> <graph6>".
std::string serialize_certificate(const Certificate& cert);

/// Inverse of serialize_certificate. Throws std::invalid_argument on
/// malformed syntax; semantic violations (bad cuts, wrong children) are
/// left for verify_certificate to reject.
Certificate parse_certificate(const std::string& text);

struct NodeCheck {
  int index = 0;  // pre-order position
  bool leaf = false;
  int n = 0;
  int m = 0;
  /// Leaf: E - n. Cut: E(G) - E(G1) - E(G2).
  double slack = 0.0;
};

struct VerifyReport {
  bool accepted = false;
  std::string failure;  // names the node and the violated condition
  std::vector<NodeCheck> nodes;
  double root_energy = 0.0;
  double root_slack = 0.0;  // E(root) - n(root)
};

/// Independent re-check of a certificate. Structure is re-derived with a
/// union-find component search and brute-force permutation isomorphism
/// (none of certify's search machinery); numerics check
/// E(G) >= E(G1) + E(G2) - 1e-8 at cuts and E >= n - 1e-8 at leaves.
VerifyReport verify_certificate(const Certificate& cert);

}  // namespace hypo
