#include "hypo/enumerate.hpp"

#include <algorithm>
#include <atomic>
#include <mutex>
#include <optional>
#include <set>
#include <stdexcept>
#include <thread>

#include "hypo/canonical.hpp"

namespace hypo {

namespace {

void validate(const EnumSpec& spec) {
  if (spec.n_max < 0 || spec.n_max > order_bound())
    throw std::invalid_argument("n_max " + std::to_string(spec.n_max) +
                                " outside [0, " +
                                std::to_string(order_bound()) + "]");
  if (spec.delta_max < 1 || spec.delta_max > 63)
    throw std::invalid_argument("delta_max must be in [1, 63]");
}

// The deletion vertex: scanning canonical positions n-1 downward, the first
// vertex whose removal keeps the graph connected. Position classes are
// well-defined up to automorphism and non-cutness is orbit-invariant, so
// the orbit of this vertex is an isomorphism invariant.
int canonical_deletion_vertex(const Graph& g, const CanonicalRun& run) {
  const int n = g.order();
  std::vector<int> at_pos(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v)
    at_pos[static_cast<std::size_t>(run.labeling[static_cast<std::size_t>(v)])] = v;
  for (int p = n - 1; p >= 0; --p) {
    int v = at_pos[static_cast<std::size_t>(p)];
    if (n == 1) return v;
    std::vector<int> rest;
    rest.reserve(static_cast<std::size_t>(n - 1));
    for (int u = 0; u < n; ++u)
      if (u != v) rest.push_back(u);
    if (is_connected(g.induced(rest))) return v;
  }
  throw std::logic_error("connected graph without a non-cut vertex");
}

using Level = std::vector<std::pair<std::string, Graph>>;  // sorted by form

Level extend_level(const Level& parents, int delta_max, bool trees_only,
                   bool quad_free_only) {
  Level out;
  for (const auto& [parent_form, parent] : parents) {
    const int np = parent.order();
    std::vector<int> eligible;
    for (int v = 0; v < np; ++v)
      if (parent.degree(v) < delta_max) eligible.push_back(v);
    const int k = static_cast<int>(eligible.size());
    const int max_s = trees_only ? 1 : std::min(delta_max, k);

    std::set<std::string> accepted;  // per-parent isomorph rejection
    for (int s = 1; s <= max_s; ++s) {
      std::vector<int> idx(static_cast<std::size_t>(s));
      for (int i = 0; i < s; ++i) idx[static_cast<std::size_t>(i)] = i;
      while (true) {
        std::uint64_t bits = 0;
        for (int i : idx)
          bits |= std::uint64_t{1}
                  << eligible[static_cast<std::size_t>(i)];
        Graph child = parent.with_vertex(bits);
        if (!quad_free_only || !has_quadrangle(child)) {
          CanonicalRun run = canonical_run(child);
          int d = canonical_deletion_vertex(child, run);
          if (run.orbit[static_cast<std::size_t>(d)] ==
                  run.orbit[static_cast<std::size_t>(np)] &&
              accepted.insert(run.form).second)
            out.emplace_back(std::move(run.form), std::move(child));
        }
        int i = s - 1;
        while (i >= 0 && idx[static_cast<std::size_t>(i)] == k - s + i) --i;
        if (i < 0) break;
        ++idx[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < s; ++j)
          idx[static_cast<std::size_t>(j)] =
              idx[static_cast<std::size_t>(j - 1)] + 1;
      }
    }
  }
  std::sort(out.begin(), out.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  return out;
}

bool emit_ok(const Graph& g, const EnumSpec& spec) {
  if (spec.min_edges_n && g.size() < g.order()) return false;
  switch (spec.filter) {
    case ClassFilter::AllConnected: return true;
    case ClassFilter::TreesOnly: return g.size() == g.order() - 1;
    case ClassFilter::CyclicOnly: return g.size() >= g.order();
    case ClassFilter::QuadrangleFreeOnly: return true;  // pruned upstream
  }
  return true;
}

}  // namespace

void for_each_connected_graph(
    const EnumSpec& spec,
    const std::function<void(const Graph&, const std::string&)>& fn) {
  validate(spec);
  if (spec.n_max < 1) return;
  Graph s1 = Graph::from_edge_list(1, {});
  Level level{{canonical_form(s1), s1}};
  for (int n = 1; n <= spec.n_max; ++n) {
    if (n > 1)
      level = extend_level(level, spec.delta_max,
                           spec.filter == ClassFilter::TreesOnly,
                           spec.filter == ClassFilter::QuadrangleFreeOnly);
    for (const auto& [form, g] : level)
      if (emit_ok(g, spec)) fn(g, form);
  }
}

std::vector<Graph> connected_graphs(const EnumSpec& spec) {
  std::vector<Graph> out;
  for_each_connected_graph(
      spec, [&out](const Graph& g, const std::string&) { out.push_back(g); });
  return out;
}

std::vector<Graph> trees(int n_max, int delta_max) {
  return connected_graphs(
      EnumSpec{n_max, delta_max, ClassFilter::TreesOnly, false});
}

std::vector<ClassifiedGraph> classify_stream(const EnumSpec& spec, int jobs) {
  if (jobs < 1) throw std::invalid_argument("jobs must be >= 1");
  std::vector<std::pair<Graph, std::string>> stream;
  for_each_connected_graph(spec,
                           [&stream](const Graph& g, const std::string& form) {
                             stream.emplace_back(g, form);
                           });

  std::vector<std::optional<EnergyVerdict>> verdicts(stream.size());
  std::exception_ptr failure;
  std::mutex failure_mutex;
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    while (true) {
      std::size_t i = next.fetch_add(1);
      if (i >= stream.size()) return;
      try {
        verdicts[i] = classify(stream[i].first);
      } catch (...) {
        std::lock_guard<std::mutex> lock(failure_mutex);
        if (!failure) failure = std::current_exception();
        return;
      }
    }
  };
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int j = 0; j < jobs; ++j) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  if (failure) std::rethrow_exception(failure);

  std::vector<ClassifiedGraph> out;
  out.reserve(stream.size());
  for (std::size_t i = 0; i < stream.size(); ++i)
    out.push_back(ClassifiedGraph{std::move(stream[i].first),
                                  std::move(stream[i].second), *verdicts[i]});
  return out;
}

std::vector<ClassifiedGraph> hypoenergetic_scan(const EnumSpec& spec,
                                                int jobs) {
  std::vector<ClassifiedGraph> all = classify_stream(spec, jobs);
  std::vector<ClassifiedGraph> hits;
  for (auto& record : all)
    if (record.verdict.hypoenergetic) hits.push_back(std::move(record));
  return hits;
}

}  // namespace hypo
