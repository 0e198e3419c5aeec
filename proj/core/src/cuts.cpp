#include "hypo/cuts.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <numeric>
#include <queue>
#include <stdexcept>

namespace hypo {

namespace {

std::uint64_t to_bits(const std::vector<int>& verts) {
  std::uint64_t bits = 0;
  for (int v : verts) bits |= std::uint64_t{1} << v;
  return bits;
}

std::vector<int> to_list(std::uint64_t bits) {
  std::vector<int> out;
  for (; bits; bits &= bits - 1) out.push_back(std::countr_zero(bits));
  return out;
}

}  // namespace

std::optional<EdgeCut> cut_from_side(const Graph& g, std::uint64_t side_bits) {
  const int n = g.order();
  const std::uint64_t all =
      n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
  side_bits &= all;
  const std::uint64_t other = all & ~side_bits;
  if (side_bits == 0 || other == 0) return std::nullopt;

  EdgeCut cut;
  for (auto [u, v] : g.edges()) {
    bool au = (side_bits >> u) & 1, av = (side_bits >> v) & 1;
    if (au != av) cut.edges.emplace_back(u, v);
  }
  std::uint64_t a = (side_bits & 1) ? side_bits : other;
  std::uint64_t b = all & ~a;
  cut.side_a = to_list(a);
  cut.side_b = to_list(b);
  if (!is_connected(g.induced(cut.side_a)) ||
      !is_connected(g.induced(cut.side_b)))
    return std::nullopt;
  return cut;
}

std::vector<EdgeCut> enumerate_two_sided_cuts(const Graph& g, int max_size) {
  std::vector<EdgeCut> out;
  const std::vector<Edge> all = g.edges();
  const int m = static_cast<int>(all.size());
  for (int s = 1; s <= std::min(max_size, m); ++s) {
    std::vector<int> idx(static_cast<std::size_t>(s));
    std::iota(idx.begin(), idx.end(), 0);
    while (true) {
      std::vector<Edge> f;
      f.reserve(static_cast<std::size_t>(s));
      for (int i : idx) f.push_back(all[static_cast<std::size_t>(i)]);
      auto comps = connected_components(g.without_edges(f));
      if (comps.size() == 2) {
        std::uint64_t a_bits = to_bits(comps[0]);
        bool crossing = true;
        for (auto [u, v] : f)
          if (((a_bits >> u) & 1) == ((a_bits >> v) & 1)) {
            crossing = false;
            break;
          }
        if (crossing)
          out.push_back(EdgeCut{std::move(f), std::move(comps[0]),
                                std::move(comps[1])});
      }
      int i = s - 1;
      while (i >= 0 && idx[static_cast<std::size_t>(i)] == m - s + i) --i;
      if (i < 0) break;
      ++idx[static_cast<std::size_t>(i)];
      for (int j = i + 1; j < s; ++j)
        idx[static_cast<std::size_t>(j)] =
            idx[static_cast<std::size_t>(j - 1)] + 1;
    }
  }
  return out;
}

int edge_connectivity(const Graph& g) {
  if (g.order() < 2)
    throw std::invalid_argument(
        "edge connectivity needs at least 2 vertices");
  if (!is_connected(g))
    throw std::invalid_argument("edge connectivity needs a connected graph");
  const int n = g.order();

  // kappa' = min over t != 0 of max-flow(0, t); unit capacities, BFS
  // augmentation. Flow values are tiny (<= max degree), so this is cheap.
  int best = std::numeric_limits<int>::max();
  for (int t = 1; t < n; ++t) {
    std::vector<std::vector<int>> cap(
        static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n), 0));
    for (auto [u, v] : g.edges()) {
      cap[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)] = 1;
      cap[static_cast<std::size_t>(v)][static_cast<std::size_t>(u)] = 1;
    }
    int flow = 0;
    while (flow < best) {
      std::vector<int> prev(static_cast<std::size_t>(n), -1);
      prev[0] = 0;
      std::queue<int> q;
      q.push(0);
      while (!q.empty() && prev[static_cast<std::size_t>(t)] == -1) {
        int u = q.front();
        q.pop();
        for (int v = 0; v < n; ++v)
          if (prev[static_cast<std::size_t>(v)] == -1 &&
              cap[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)] >
                  0) {
            prev[static_cast<std::size_t>(v)] = u;
            q.push(v);
          }
      }
      if (prev[static_cast<std::size_t>(t)] == -1) break;
      for (int v = t; v != 0; v = prev[static_cast<std::size_t>(v)]) {
        int u = prev[static_cast<std::size_t>(v)];
        --cap[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)];
        ++cap[static_cast<std::size_t>(v)][static_cast<std::size_t>(u)];
      }
      ++flow;
    }
    best = std::min(best, flow);
    if (best == 1) break;  // cannot go lower on a connected graph
  }
  return best;
}

std::vector<EdgeCut> minimum_cuts(const Graph& g) {
  // Every disconnecting set of size kappa' leaves exactly two components and
  // consists solely of crossing edges, and no smaller subset disconnects, so
  // the bounded enumeration returns precisely the minimum cuts.
  return enumerate_two_sided_cuts(g, edge_connectivity(g));
}

std::pair<Graph, Graph> split_at_cut(const Graph& g, const EdgeCut& cut) {
  return {g.induced(cut.side_a), g.induced(cut.side_b)};
}

}  // namespace hypo
