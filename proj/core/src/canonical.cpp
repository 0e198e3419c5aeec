#include "hypo/canonical.hpp"

#include <algorithm>
#include <numeric>

#include "hypo/graph6.hpp"

namespace hypo {

namespace {

// Equitable refinement. Each round recolors by (current color, sorted
// multiset of neighbor colors) and re-compacts ids in lexicographic
// signature order; stops when the class count stabilizes. Both the
// signatures and the id assignment depend only on isomorphism-invariant
// data, so the refinement commutes with automorphisms.
void refine(const Graph& g, std::vector<int>& colors) {
  const int n = g.order();
  if (n == 0) return;
  auto distinct = [](std::vector<int> v) {
    std::sort(v.begin(), v.end());
    return std::unique(v.begin(), v.end()) - v.begin();
  };
  long classes = distinct(colors);
  while (true) {
    std::vector<std::pair<std::vector<int>, int>> sigs(
        static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) {
      std::vector<int> sig{colors[static_cast<std::size_t>(v)]};
      for (int u : g.neighbors(v))
        sig.push_back(colors[static_cast<std::size_t>(u)]);
      std::sort(sig.begin() + 1, sig.end());
      sigs[static_cast<std::size_t>(v)] = {std::move(sig), v};
    }
    std::sort(sigs.begin(), sigs.end());
    long new_classes = 0;
    for (std::size_t i = 0; i < sigs.size(); ++i) {
      if (i == 0 || sigs[i].first != sigs[i - 1].first) ++new_classes;
      colors[static_cast<std::size_t>(sigs[i].second)] =
          static_cast<int>(new_classes - 1);
    }
    if (new_classes == classes) return;  // same count => same partition
    classes = new_classes;
  }
}

struct Search {
  const Graph& g;
  std::string best;
  std::vector<std::vector<int>> best_labelings;

  void descend(std::vector<int> colors) {
    refine(g, colors);
    const int n = g.order();
    // first color class with >= 2 members, by color id
    std::vector<int> count(static_cast<std::size_t>(n), 0);
    for (int c : colors) ++count[static_cast<std::size_t>(c)];
    int cell = -1;
    for (int c = 0; c < n; ++c)
      if (count[static_cast<std::size_t>(c)] >= 2) {
        cell = c;
        break;
      }
    if (cell == -1) {  // discrete: colors form the labeling
      std::string s = to_graph6(g.permuted(colors));
      if (best.empty() || s < best) {
        best = std::move(s);
        best_labelings.assign(1, colors);
      } else if (s == best) {
        best_labelings.push_back(colors);
      }
      return;
    }
    for (int v = 0; v < n; ++v)
      if (colors[static_cast<std::size_t>(v)] == cell) {
        std::vector<int> child = colors;
        child[static_cast<std::size_t>(v)] = n;  // fresh singleton id
        descend(std::move(child));
      }
  }
};

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(static_cast<std::size_t>(n)) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  int find(int v) {
    while (parent[static_cast<std::size_t>(v)] != v) {
      parent[static_cast<std::size_t>(v)] =
          parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(v)])];
      v = parent[static_cast<std::size_t>(v)];
    }
    return v;
  }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[static_cast<std::size_t>(std::max(a, b))] = std::min(a, b);
  }
};

}  // namespace

CanonicalRun canonical_run(const Graph& g) {
  const int n = g.order();
  if (n == 0) return {to_graph6(g), {}, {}};

  Search search{g, {}, {}};
  search.descend(std::vector<int>(static_cast<std::size_t>(n), 0));

  CanonicalRun out;
  out.form = std::move(search.best);
  out.labeling = search.best_labelings.front();

  // Every pair of minimum leaves composes to an automorphism; the minimum
  // leaves are exactly the coset Aut(g) . L0, so uniting v with
  // L^{-1}(L0(v)) over all leaves yields the full orbit partition.
  UnionFind uf(n);
  const std::vector<int>& l0 = out.labeling;
  std::vector<int> inv(static_cast<std::size_t>(n));
  for (const auto& l : search.best_labelings) {
    for (int v = 0; v < n; ++v) inv[static_cast<std::size_t>(l[static_cast<std::size_t>(v)])] = v;
    for (int v = 0; v < n; ++v)
      uf.unite(v, inv[static_cast<std::size_t>(l0[static_cast<std::size_t>(v)])]);
  }
  out.orbit.resize(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) out.orbit[static_cast<std::size_t>(v)] = uf.find(v);
  return out;
}

std::string canonical_form(const Graph& g) { return canonical_run(g).form; }

}  // namespace hypo
