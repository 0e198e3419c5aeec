#include "hypo/certify.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <functional>
#include <numeric>
#include <ostream>
#include <set>
#include <sstream>

#include "hypo/catalog.hpp"
#include "hypo/graph6.hpp"
#include "hypo/spectral.hpp"

namespace hypo {

std::string_view to_string(LeafReason reason) {
  return reason == LeafReason::TreeBase ? "TreeBase" : "SmallCyclomaticBase";
}

std::string_view to_string(CutStrategy strategy) {
  return strategy == CutStrategy::ProofGuided ? "proof-guided" : "exhaustive";
}

std::string_view to_string(CaseLabel label) {
  switch (label) {
    case CaseLabel::Case1: return "Case 1";
    case CaseLabel::Subcase21: return "Subcase 2.1";
    case CaseLabel::Subcase22: return "Subcase 2.2";
    case CaseLabel::Subcase31: return "Subcase 3.1";
    case CaseLabel::Subcase32: return "Subcase 3.2";
    case CaseLabel::Fallback: return "fallback";
  }
  return "?";
}

namespace {

// Assembles the EdgeCut for an explicit edge set, or nullopt when deleting
// it does not leave exactly two components with every edge crossing.
std::optional<EdgeCut> make_cut(const Graph& g, std::vector<Edge> f) {
  std::sort(f.begin(), f.end());
  f.erase(std::unique(f.begin(), f.end()), f.end());
  auto comps = connected_components(g.without_edges(f));
  if (comps.size() != 2) return std::nullopt;
  std::uint64_t a_bits = 0;
  for (int v : comps[0]) a_bits |= std::uint64_t{1} << v;
  for (auto [u, v] : f)
    if (((a_bits >> u) & 1) == ((a_bits >> v) & 1)) return std::nullopt;
  return EdgeCut{std::move(f), std::move(comps[0]), std::move(comps[1])};
}

bool side_cyclic(const Graph& g, const std::vector<int>& side) {
  Graph h = g.induced(side);
  return h.size() >= h.order();
}

CaseLabel label_for(int kappa, bool both_cyclic) {
  switch (kappa) {
    case 1: return CaseLabel::Case1;
    case 2: return both_cyclic ? CaseLabel::Subcase21 : CaseLabel::Subcase22;
    case 3: return both_cyclic ? CaseLabel::Subcase31 : CaseLabel::Subcase32;
    default: return CaseLabel::Fallback;
  }
}

void require_inductive_regime(const Graph& g, const char* who) {
  if (!is_connected(g))
    throw std::invalid_argument(std::string(who) + " needs a connected graph");
  if (cyclomatic_number(g) < 3)
    throw std::invalid_argument(std::string(who) +
                                " needs cyclomatic number >= 3");
}

// Repair search around a base candidate whose only defect is an
// exceptional side: try every edge set of size <= 4 drawn from the edges
// incident to the exceptional side or its neighborhood, in (size, lex)
// order. This covers the proof's hand-built replacement cuts, which always
// stay within one step of the offending side.
std::optional<EdgeCut> repair_candidate(const Graph& g, const EdgeCut& base,
                                        std::uint64_t exceptional_bits) {
  std::uint64_t zone = exceptional_bits;
  for (std::uint64_t bits = exceptional_bits; bits; bits &= bits - 1)
    zone |= g.neighbor_mask(std::countr_zero(bits));
  std::vector<Edge> pool;
  for (auto e : g.edges())
    if (((zone >> e.first) & 1) || ((zone >> e.second) & 1))
      pool.push_back(e);
  const int p = static_cast<int>(pool.size());
  for (int s = 1; s <= std::min(4, p); ++s) {
    std::vector<int> idx(static_cast<std::size_t>(s));
    std::iota(idx.begin(), idx.end(), 0);
    while (true) {
      std::vector<Edge> f;
      f.reserve(static_cast<std::size_t>(s));
      for (int i : idx) f.push_back(pool[static_cast<std::size_t>(i)]);
      if (f != base.edges)
        if (auto cut = make_cut(g, f); cut && is_good_cut(g, *cut))
          return cut;
      int i = s - 1;
      while (i >= 0 && idx[static_cast<std::size_t>(i)] == p - s + i) --i;
      if (i < 0) break;
      ++idx[static_cast<std::size_t>(i)];
      for (int j = i + 1; j < s; ++j)
        idx[static_cast<std::size_t>(j)] =
            idx[static_cast<std::size_t>(j - 1)] + 1;
    }
  }
  return std::nullopt;
}

}  // namespace

bool is_good_cut(const Graph& g, const EdgeCut& cut) {
  if (!is_connected(g))
    throw std::invalid_argument("is_good_cut needs a connected graph");
  const int k = cyclomatic_number(g);
  if (k < 1)
    throw std::invalid_argument("is_good_cut needs a cyclic graph");
  for (auto [u, v] : cut.edges)
    if (u < 0 || u >= g.order() || v < 0 || v >= g.order() ||
        !g.has_edge(u, v))
      throw std::invalid_argument("cut edge (" + std::to_string(u) + ", " +
                                  std::to_string(v) +
                                  ") is not an edge of the graph");

  auto comps = connected_components(g.without_edges(cut.edges));
  if (comps.size() != 2) return false;
  std::uint64_t a_bits = 0;
  for (int v : comps[0]) a_bits |= std::uint64_t{1} << v;
  for (auto [u, v] : cut.edges)
    if (((a_bits >> u) & 1) == ((a_bits >> v) & 1)) return false;
  for (const auto& side : comps) {
    Graph h = g.induced(side);
    const int ci = h.size() - h.order() + 1;
    if (ci < 0 || ci >= k) return false;
    if (is_exceptional(h)) return false;
  }
  return true;
}

std::optional<std::pair<EdgeCut, CutReport>> find_good_cut_exhaustive(
    const Graph& g, int max_size) {
  require_inductive_regime(g, "find_good_cut_exhaustive");
  const Graph core = two_core(g).core;
  const int kappa = core.order() >= 2 ? edge_connectivity(core) : 0;
  for (const EdgeCut& cut : enumerate_two_sided_cuts(g, max_size))
    if (is_good_cut(g, cut))
      return std::make_pair(
          cut, CutReport{CutStrategy::Exhaustive, kappa, CaseLabel::Fallback,
                         static_cast<int>(cut.edges.size())});
  return std::nullopt;
}

std::optional<std::pair<EdgeCut, CutReport>> find_good_cut_proof_guided(
    const Graph& g) {
  require_inductive_regime(g, "find_good_cut_proof_guided");
  const int k = cyclomatic_number(g);
  const CoreMap cm = two_core(g);
  const int kappa = edge_connectivity(cm.core);

  struct Candidate {
    EdgeCut cut;
    bool both_cyclic;
  };
  std::vector<Candidate> candidates;
  for (const EdgeCut& core_cut : minimum_cuts(cm.core)) {
    std::vector<Edge> f;
    f.reserve(core_cut.edges.size());
    for (auto [u, v] : core_cut.edges)
      f.push_back(make_edge(cm.to_host[static_cast<std::size_t>(u)],
                            cm.to_host[static_cast<std::size_t>(v)]));
    if (auto lifted = make_cut(g, std::move(f))) {
      bool bc = side_cyclic(g, lifted->side_a) &&
                side_cyclic(g, lifted->side_b);
      candidates.push_back({std::move(*lifted), bc});
    }
  }
  // The proof treats the both-sides-cyclic shape of each case first
  // (Subcase x.1), then the tree-side shape (x.2); mirror that, then break
  // ties lexicographically.
  std::stable_sort(candidates.begin(), candidates.end(),
                   [](const Candidate& a, const Candidate& b) {
                     if (a.both_cyclic != b.both_cyclic)
                       return a.both_cyclic && !b.both_cyclic;
                     return a.cut.edges < b.cut.edges;
                   });

  for (const Candidate& cand : candidates) {
    const CaseLabel label = label_for(kappa, cand.both_cyclic);
    if (is_good_cut(g, cand.cut))
      return std::make_pair(
          cand.cut, CutReport{CutStrategy::ProofGuided, kappa, label,
                              static_cast<int>(cand.cut.edges.size())});

    // A minimum-cut candidate always satisfies the cyclomatic descent, so
    // failure means an exceptional side; swap in nearby edges.
    std::uint64_t exceptional_bits = 0;
    bool descent_ok = true;
    for (const auto* side : {&cand.cut.side_a, &cand.cut.side_b}) {
      Graph h = g.induced(*side);
      const int ci = h.size() - h.order() + 1;
      if (ci >= k) descent_ok = false;
      if (is_exceptional(h))
        for (int v : *side) exceptional_bits |= std::uint64_t{1} << v;
    }
    if (descent_ok && exceptional_bits != 0)
      if (auto repaired = repair_candidate(g, cand.cut, exceptional_bits))
        return std::make_pair(
            *repaired,
            CutReport{CutStrategy::ProofGuided, kappa, label,
                      static_cast<int>(repaired->edges.size())});
  }
  return find_good_cut_exhaustive(g, 4);
}

CertifyError::CertifyError(const std::string& message, std::string stuck)
    : std::runtime_error(message + " [stuck subgraph: " + stuck + "]"),
      stuck_graph6(std::move(stuck)) {}

namespace {

std::unique_ptr<CertNode> build_node(const Graph& g) {
  auto node = std::make_unique<CertNode>();
  node->graph = g;
  const int c = g.size() - g.order() + 1;
  if (c == 0) {
    node->leaf_reason = LeafReason::TreeBase;
    return node;
  }
  if (c <= 2) {
    node->leaf_reason = LeafReason::SmallCyclomaticBase;
    return node;
  }
  auto found = find_good_cut_proof_guided(g);
  if (!found)
    throw CertifyError("no good cut of size <= 4 exists", to_graph6(g));
  node->cut = found->first;
  node->cut_report = found->second;
  auto [g1, g2] = split_at_cut(g, found->first);
  node->left = build_node(g1);
  node->right = build_node(g2);
  return node;
}

}  // namespace

Certificate certify(const Graph& g) {
  if (!is_connected(g))
    throw std::invalid_argument("certify needs a connected graph");
  if (g.max_degree() > 3)
    throw std::invalid_argument("certify needs max degree <= 3");
  if (auto name = is_exceptional(g))
    throw std::invalid_argument("certify: input is exceptional (" +
                                std::string(to_string(*name)) + ")");
  return Certificate{build_node(g)};
}

namespace {

void write_node(const CertNode& node, std::ostream& out) {
  if (node.is_leaf()) {
    out << "LEAF " << to_string(*node.leaf_reason) << ' '
        << to_graph6(node.graph) << '\n';
    return;
  }
  out << "CUT " << to_graph6(node.graph);
  for (auto [u, v] : node.cut->edges) out << ' ' << u << '-' << v;
  out << '\n';
  write_node(*node.left, out);
  write_node(*node.right, out);
}

std::vector<std::string> split_ws(const std::string& line) {
  std::istringstream in(line);
  std::vector<std::string> out;
  std::string tok;
  while (in >> tok) out.push_back(tok);
  return out;
}

int parse_vertex(const std::string& text) {
  if (text.empty() ||
      !std::all_of(text.begin(), text.end(),
                   [](unsigned char ch) { return std::isdigit(ch); }))
    throw std::invalid_argument("bad vertex index '" + text + "'");
  return std::stoi(text);
}

Edge parse_edge_token(const std::string& tok) {
  auto dash = tok.find('-');
  if (dash == std::string::npos || dash == 0 || dash + 1 >= tok.size())
    throw std::invalid_argument("bad edge token '" + tok +
                                "' (expected u-v)");
  return {parse_vertex(tok.substr(0, dash)),
          parse_vertex(tok.substr(dash + 1))};
}

// Side partitions are not serialized; rebuild them when the edges are
// structurally valid, and otherwise leave them empty for the verifier to
// reject.
void fill_sides(const Graph& g, EdgeCut& cut) {
  for (auto [u, v] : cut.edges)
    if (u < 0 || u >= g.order() || v < 0 || v >= g.order() ||
        !g.has_edge(u, v))
      return;
  std::vector<Edge> unique_edges = cut.edges;
  unique_edges.erase(std::unique(unique_edges.begin(), unique_edges.end()),
                     unique_edges.end());
  if (unique_edges.size() != cut.edges.size()) return;
  auto comps = connected_components(g.without_edges(cut.edges));
  if (comps.size() != 2) return;
  cut.side_a = std::move(comps[0]);
  cut.side_b = std::move(comps[1]);
}

std::unique_ptr<CertNode> parse_node(
    const std::vector<std::vector<std::string>>& records, std::size_t& i) {
  if (i >= records.size())
    throw std::invalid_argument("certificate truncated at record " +
                                std::to_string(i));
  const std::vector<std::string>& tok = records[i];
  ++i;
  auto node = std::make_unique<CertNode>();
  if (tok.at(0) == "LEAF") {
    if (tok.size() != 3)
      throw std::invalid_argument(
          "LEAF record needs exactly a reason and a graph6 string");
    if (tok[1] == "TreeBase")
      node->leaf_reason = LeafReason::TreeBase;
    else if (tok[1] == "SmallCyclomaticBase")
      node->leaf_reason = LeafReason::SmallCyclomaticBase;
    else
      throw std::invalid_argument("unknown leaf reason '" + tok[1] + "'");
    node->graph = from_graph6(tok[2]);
    return node;
  }
  if (tok.at(0) == "CUT") {
    if (tok.size() < 3)
      throw std::invalid_argument(
          "CUT record needs a graph6 string and at least one edge");
    node->graph = from_graph6(tok[1]);
    EdgeCut cut;
    for (std::size_t t = 2; t < tok.size(); ++t) {
      auto [u, v] = parse_edge_token(tok[t]);
      cut.edges.push_back(make_edge(u, v));
    }
    std::sort(cut.edges.begin(), cut.edges.end());
    fill_sides(node->graph, cut);
    node->cut = std::move(cut);
    node->left = parse_node(records, i);
    node->right = parse_node(records, i);
    return node;
  }
  throw std::invalid_argument("unknown certificate record '" + tok[0] + "'");
}

}  // namespace

std::string serialize_certificate(const Certificate& cert) {
  if (!cert.root) throw std::invalid_argument("certificate has no root");
  std::ostringstream out;
  out << "CERT " << cert.root->graph.order() << ' '
      << cert.root->graph.size() << '\n';
  write_node(*cert.root, out);
  return out.str();
}

Certificate parse_certificate(const std::string& text) {
  std::vector<std::vector<std::string>> records;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    auto tok = split_ws(line);
    if (!tok.empty()) records.push_back(std::move(tok));
  }
  if (records.empty() || records[0].size() != 3 || records[0][0] != "CERT")
    throw std::invalid_argument("missing CERT header");
  const int n = parse_vertex(records[0][1]);
  const int m = parse_vertex(records[0][2]);
  std::size_t i = 1;
  Certificate cert{parse_node(records, i)};
  if (i != records.size())
    throw std::invalid_argument("trailing certificate records after the tree");
  if (cert.root->graph.order() != n || cert.root->graph.size() != m)
    throw std::invalid_argument("CERT header does not match the root graph");
  return cert;
}

// ---- independent verification -------------------------------------------
//
// Everything below re-derives structure on its own: union-find for
// components (the library search uses BFS reachability) and brute-force
// permutation isomorphism (the search uses canonical forms).

namespace {

struct Reject {
  std::string message;
};

std::vector<std::vector<int>> uf_components(const Graph& g,
                                            const std::vector<Edge>& removed) {
  const int n = g.order();
  std::vector<int> parent(static_cast<std::size_t>(n));
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int v) {
    while (parent[static_cast<std::size_t>(v)] != v) {
      parent[static_cast<std::size_t>(v)] =
          parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(v)])];
      v = parent[static_cast<std::size_t>(v)];
    }
    return v;
  };
  const std::set<Edge> rem(removed.begin(), removed.end());
  for (auto e : g.edges()) {
    if (rem.count(e)) continue;
    int a = find(e.first), b = find(e.second);
    if (a != b) parent[static_cast<std::size_t>(std::max(a, b))] = std::min(a, b);
  }
  std::vector<std::vector<int>> comps;
  std::vector<int> slot(static_cast<std::size_t>(n), -1);
  for (int v = 0; v < n; ++v) {
    int r = find(v);
    if (slot[static_cast<std::size_t>(r)] == -1) {
      slot[static_cast<std::size_t>(r)] = static_cast<int>(comps.size());
      comps.emplace_back();
    }
    comps[static_cast<std::size_t>(slot[static_cast<std::size_t>(r)])]
        .push_back(v);
  }
  return comps;
}

bool perm_isomorphic(const Graph& a, const Graph& b) {
  if (a.order() != b.order() || a.size() != b.size()) return false;
  if (a.degree_sequence() != b.degree_sequence()) return false;
  const int n = a.order();
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  const auto edges = a.edges();
  do {
    bool ok = true;
    for (auto [u, v] : edges)
      if (!b.has_edge(perm[static_cast<std::size_t>(u)],
                      perm[static_cast<std::size_t>(v)])) {
        ok = false;
        break;
      }
    if (ok) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

std::optional<CatalogName> exceptional_by_perm(const Graph& g) {
  for (const CatalogEntry& entry : exceptional_catalog())
    if (perm_isomorphic(g, *entry.graph)) return entry.name;
  return std::nullopt;
}

double check_node(const CertNode& node, VerifyReport& rep, int& counter) {
  const int my = counter++;
  const Graph& g = node.graph;
  auto fail = [&](const std::string& what) {
    return Reject{"node " + std::to_string(my) +
                  (node.is_leaf() ? " (leaf): " : " (cut): ") + what};
  };
  rep.nodes.push_back(NodeCheck{my, node.is_leaf(), g.order(), g.size(), 0.0});
  const std::size_t slot = rep.nodes.size() - 1;

  if (node.is_leaf()) {
    if (node.left || node.right) throw fail("leaf has children");
    if (node.cut) throw fail("leaf carries a cut");
    if (g.order() == 0) throw fail("empty graph");
    if (uf_components(g, {}).size() != 1) throw fail("graph is disconnected");
    const int c = g.size() - g.order() + 1;
    if (*node.leaf_reason == LeafReason::TreeBase) {
      if (c != 0) throw fail("TreeBase graph is not a tree");
    } else {
      if (c < 1 || c > 2)
        throw fail("SmallCyclomaticBase graph has cyclomatic number " +
                   std::to_string(c) + ", expected 1 or 2");
    }
    if (auto name = exceptional_by_perm(g))
      throw fail("graph is exceptional (" + std::string(to_string(*name)) +
                 ")");
    const double e = energy(g);
    const double slack = e - g.order();
    if (slack < -1e-8) throw fail("energy below order");
    rep.nodes[slot].slack = slack;
    return e;
  }

  if (!node.cut) throw fail("cut node lacks a cut");
  if (!node.left || !node.right) throw fail("cut node lacks two children");
  std::vector<Edge> f = node.cut->edges;
  if (f.empty()) throw fail("empty cut");
  std::sort(f.begin(), f.end());
  if (std::adjacent_find(f.begin(), f.end()) != f.end())
    throw fail("duplicate cut edge");
  for (auto [u, v] : f)
    if (u < 0 || u >= g.order() || v < 0 || v >= g.order() ||
        !g.has_edge(u, v))
      throw fail("cut edge " + std::to_string(u) + "-" + std::to_string(v) +
                 " is not an edge of the graph");
  auto comps = uf_components(g, f);
  if (comps.size() != 2)
    throw fail("cut leaves " + std::to_string(comps.size()) +
               " components, expected 2");
  std::uint64_t a_bits = 0;
  for (int v : comps[0]) a_bits |= std::uint64_t{1} << v;
  for (auto [u, v] : f)
    if (((a_bits >> u) & 1) == ((a_bits >> v) & 1))
      throw fail("cut edge " + std::to_string(u) + "-" + std::to_string(v) +
                 " does not cross the partition");
  if (!(node.left->graph == g.induced(comps[0])))
    throw fail("left child does not match the component containing vertex 0");
  if (!(node.right->graph == g.induced(comps[1])))
    throw fail("right child does not match the second component");
  const int k = g.size() - g.order() + 1;
  for (const CertNode* child : {node.left.get(), node.right.get()}) {
    const int ci = child->graph.size() - child->graph.order() + 1;
    if (ci < 0 || ci >= k)
      throw fail("child cyclomatic number " + std::to_string(ci) +
                 " is not in [0, " + std::to_string(k) + ")");
    if (auto name = exceptional_by_perm(child->graph))
      throw fail("child is exceptional (" + std::string(to_string(*name)) +
                 ")");
  }
  const double el = check_node(*node.left, rep, counter);
  const double er = check_node(*node.right, rep, counter);
  const double e = energy(g);
  const double slack = e - el - er;
  if (slack < -1e-8)
    throw fail("energy smaller than the sum over the cut components");
  rep.nodes[slot].slack = slack;
  return e;
}

}  // namespace

VerifyReport verify_certificate(const Certificate& cert) {
  VerifyReport rep;
  if (!cert.root) {
    rep.failure = "certificate has no root";
    return rep;
  }
  int counter = 0;
  try {
    const double e = check_node(*cert.root, rep, counter);
    rep.root_energy = e;
    rep.root_slack = e - cert.root->graph.order();
    if (rep.root_slack < -1e-8) throw Reject{"root: energy below order"};
    rep.accepted = true;
  } catch (const Reject& reject) {
    rep.accepted = false;
    rep.failure = reject.message;
  }
  return rep;
}

}  // namespace hypo
