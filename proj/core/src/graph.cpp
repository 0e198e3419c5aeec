#include "hypo/graph.hpp"

#include <algorithm>
#include <bit>
#include <cstdlib>
#include <functional>
#include <stdexcept>

namespace hypo {

int order_bound() {
  static const int bound = [] {
    const char* raw = std::getenv("HYPO_ORDER_BOUND");
    if (!raw || !*raw) return 32;
    char* end = nullptr;
    long v = std::strtol(raw, &end, 10);
    if (end == raw || *end != '\0' || v < 1 || v > 64)
      throw std::invalid_argument(
          "HYPO_ORDER_BOUND must be an integer in [1, 64], got \"" +
          std::string(raw) + "\"");
    return static_cast<int>(v);
  }();
  return bound;
}

Graph Graph::from_edge_list(int n, std::span<const Edge> edges) {
  if (n < 0 || n > order_bound())
    throw std::invalid_argument("graph order " + std::to_string(n) +
                                " outside [0, " +
                                std::to_string(order_bound()) + "]");
  Graph g;
  g.n_ = n;
  g.adj_.assign(static_cast<std::size_t>(n), 0);
  for (auto [u, v] : edges) {
    if (u < 0 || u >= n || v < 0 || v >= n)
      throw std::invalid_argument("edge (" + std::to_string(u) + ", " +
                                  std::to_string(v) +
                                  ") out of range for order " +
                                  std::to_string(n));
    if (u == v)
      throw std::invalid_argument("loop at vertex " + std::to_string(u));
    g.adj_[u] |= std::uint64_t{1} << v;
    g.adj_[v] |= std::uint64_t{1} << u;
  }
  for (int v = 0; v < n; ++v) g.m_ += std::popcount(g.adj_[v]);
  g.m_ /= 2;
  return g;
}

Graph Graph::from_edge_list(int n, std::initializer_list<Edge> edges) {
  return from_edge_list(n, std::span<const Edge>(edges.begin(), edges.size()));
}

int Graph::degree(int v) const { return std::popcount(adj_[v]); }

int Graph::max_degree() const {
  int d = 0;
  for (int v = 0; v < n_; ++v) d = std::max(d, degree(v));
  return d;
}

int Graph::min_degree() const {
  if (n_ == 0) return 0;
  int d = 64;
  for (int v = 0; v < n_; ++v) d = std::min(d, degree(v));
  return d;
}

std::vector<int> Graph::neighbors(int v) const {
  std::vector<int> out;
  for (std::uint64_t bits = adj_[v]; bits; bits &= bits - 1)
    out.push_back(std::countr_zero(bits));
  return out;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(static_cast<std::size_t>(m_));
  for (int u = 0; u < n_; ++u) {
    std::uint64_t bits = adj_[u] >> (u + 1) << (u + 1);  // neighbors > u
    for (; bits; bits &= bits - 1) out.emplace_back(u, std::countr_zero(bits));
  }
  return out;
}

std::vector<int> Graph::degree_sequence() const {
  std::vector<int> out(static_cast<std::size_t>(n_));
  for (int v = 0; v < n_; ++v) out[static_cast<std::size_t>(v)] = degree(v);
  std::sort(out.begin(), out.end(), std::greater<int>());
  return out;
}

Graph Graph::with_vertex(std::uint64_t neighbor_bits) const {
  if (n_ + 1 > order_bound())
    throw std::invalid_argument("with_vertex would exceed order bound " +
                                std::to_string(order_bound()));
  if (n_ < 64 && (neighbor_bits >> n_) != 0)
    throw std::invalid_argument("neighbor mask references missing vertices");
  Graph g = *this;
  g.adj_.push_back(neighbor_bits);
  for (std::uint64_t bits = neighbor_bits; bits; bits &= bits - 1)
    g.adj_[static_cast<std::size_t>(std::countr_zero(bits))] |=
        std::uint64_t{1} << n_;
  g.n_ = n_ + 1;
  g.m_ = m_ + std::popcount(neighbor_bits);
  return g;
}

Graph Graph::without_edges(std::span<const Edge> cut) const {
  Graph g = *this;
  for (auto [u, v] : cut) {
    if (u < 0 || u >= n_ || v < 0 || v >= n_ || !g.has_edge(u, v))
      throw std::invalid_argument("cannot remove absent edge (" +
                                  std::to_string(u) + ", " +
                                  std::to_string(v) + ")");
    g.adj_[u] &= ~(std::uint64_t{1} << v);
    g.adj_[v] &= ~(std::uint64_t{1} << u);
    --g.m_;
  }
  return g;
}

Graph Graph::induced(std::span<const int> verts) const {
  std::vector<int> pos(static_cast<std::size_t>(n_), -1);
  for (std::size_t i = 0; i < verts.size(); ++i) {
    int v = verts[i];
    if (v < 0 || v >= n_)
      throw std::invalid_argument("vertex " + std::to_string(v) +
                                  " out of range");
    if (pos[static_cast<std::size_t>(v)] != -1)
      throw std::invalid_argument("vertex " + std::to_string(v) +
                                  " repeated in induced set");
    pos[static_cast<std::size_t>(v)] = static_cast<int>(i);
  }
  std::vector<Edge> kept;
  for (std::size_t i = 0; i < verts.size(); ++i) {
    std::uint64_t bits = adj_[static_cast<std::size_t>(verts[i])];
    for (; bits; bits &= bits - 1) {
      int w = std::countr_zero(bits);
      int j = pos[static_cast<std::size_t>(w)];
      if (j > static_cast<int>(i)) kept.emplace_back(static_cast<int>(i), j);
    }
  }
  return from_edge_list(static_cast<int>(verts.size()), kept);
}

Graph Graph::permuted(std::span<const int> perm) const {
  if (static_cast<int>(perm.size()) != n_)
    throw std::invalid_argument("permutation length mismatch");
  std::vector<bool> seen(static_cast<std::size_t>(n_), false);
  for (int v : perm) {
    if (v < 0 || v >= n_ || seen[static_cast<std::size_t>(v)])
      throw std::invalid_argument("not a permutation of 0..n-1");
    seen[static_cast<std::size_t>(v)] = true;
  }
  std::vector<Edge> relabeled;
  relabeled.reserve(static_cast<std::size_t>(m_));
  for (auto [u, v] : edges())
    relabeled.push_back(make_edge(perm[static_cast<std::size_t>(u)],
                                  perm[static_cast<std::size_t>(v)]));
  return from_edge_list(n_, relabeled);
}

Graph disjoint_union(const Graph& a, const Graph& b) {
  std::vector<Edge> all = a.edges();
  for (auto [u, v] : b.edges()) all.emplace_back(u + a.order(), v + a.order());
  return Graph::from_edge_list(a.order() + b.order(), all);
}

namespace {

// Reachable set of `start` as a bitmask (mask-parallel BFS).
std::uint64_t reach(const Graph& g, int start) {
  std::uint64_t seen = std::uint64_t{1} << start;
  std::uint64_t frontier = seen;
  while (frontier) {
    std::uint64_t next = 0;
    for (std::uint64_t bits = frontier; bits; bits &= bits - 1)
      next |= g.neighbor_mask(std::countr_zero(bits));
    frontier = next & ~seen;
    seen |= next;
  }
  return seen;
}

}  // namespace

bool is_connected(const Graph& g) {
  if (g.order() == 0) return false;
  std::uint64_t all = g.order() == 64 ? ~std::uint64_t{0}
                                      : (std::uint64_t{1} << g.order()) - 1;
  return reach(g, 0) == all;
}

std::vector<std::vector<int>> connected_components(const Graph& g) {
  std::vector<std::vector<int>> comps;
  std::uint64_t done = 0;
  for (int v = 0; v < g.order(); ++v) {
    if ((done >> v) & 1) continue;
    std::uint64_t comp = reach(g, v);
    done |= comp;
    std::vector<int>& verts = comps.emplace_back();
    for (std::uint64_t bits = comp; bits; bits &= bits - 1)
      verts.push_back(std::countr_zero(bits));
  }
  return comps;
}

int cyclomatic_number(const Graph& g) {
  if (!is_connected(g)) {
    auto comps = connected_components(g);
    throw std::invalid_argument(
        "cyclomatic number needs a connected graph; got " +
        std::to_string(comps.size()) + " components on " +
        std::to_string(g.order()) + " vertices");
  }
  return g.size() - g.order() + 1;
}

CoreMap two_core(const Graph& g) {
  std::vector<std::uint64_t> adj(static_cast<std::size_t>(g.order()));
  for (int v = 0; v < g.order(); ++v)
    adj[static_cast<std::size_t>(v)] = g.neighbor_mask(v);
  bool changed = true;
  std::uint64_t alive = g.order() == 64 ? ~std::uint64_t{0}
                        : g.order() == 0
                            ? 0
                            : (std::uint64_t{1} << g.order()) - 1;
  while (changed) {
    changed = false;
    for (std::uint64_t bits = alive; bits; bits &= bits - 1) {
      int v = std::countr_zero(bits);
      if (std::popcount(adj[static_cast<std::size_t>(v)]) <= 1) {
        alive &= ~(std::uint64_t{1} << v);
        for (std::uint64_t nb = adj[static_cast<std::size_t>(v)]; nb;
             nb &= nb - 1)
          adj[static_cast<std::size_t>(std::countr_zero(nb))] &=
              ~(std::uint64_t{1} << v);
        adj[static_cast<std::size_t>(v)] = 0;
        changed = true;
      }
    }
  }
  CoreMap out;
  for (std::uint64_t bits = alive; bits; bits &= bits - 1)
    out.to_host.push_back(std::countr_zero(bits));
  out.core = g.induced(out.to_host);
  return out;
}

Graph strip_pendants(const Graph& g) { return two_core(g).core; }

bool has_quadrangle(const Graph& g) {
  for (int u = 0; u < g.order(); ++u)
    for (int v = u + 1; v < g.order(); ++v)
      if (std::popcount(g.neighbor_mask(u) & g.neighbor_mask(v)) >= 2)
        return true;
  return false;
}

}  // namespace hypo
