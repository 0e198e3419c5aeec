// Microbenchmarks for the hot paths: canonical labeling, dense eigensolves,
// census extension and certificate construction.

#include <benchmark/benchmark.h>

#include <cstdlib>
#include <random>
#include <vector>

#include "hypo/canonical.hpp"
#include "hypo/catalog.hpp"
#include "hypo/certify.hpp"
#include "hypo/enumerate.hpp"
#include "hypo/graph.hpp"
#include "hypo/graph6.hpp"
#include "hypo/spectral.hpp"

namespace {

// Deterministic connected graph with max degree 3: a cycle plus chords.
hypo::Graph chorded_cycle(int n, unsigned seed) {
  std::vector<hypo::Edge> edges;
  for (int v = 0; v < n; ++v) edges.push_back({v, (v + 1) % n});
  std::mt19937 rng(seed);
  std::vector<int> spare;
  for (int v = 0; v < n; ++v) spare.push_back(v);
  while (spare.size() >= 2) {
    std::swap(spare[rng() % spare.size()], spare.back());
    int a = spare.back();
    spare.pop_back();
    std::swap(spare[rng() % spare.size()], spare.back());
    int b = spare.back();
    spare.pop_back();
    if (a == b || std::abs(a - b) == 1 || std::abs(a - b) == n - 1) continue;
    if (a > b) std::swap(a, b);
    edges.push_back({a, b});
  }
  return hypo::Graph::from_edge_list(n, edges);
}

void BM_canonical_form(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  hypo::Graph g = chorded_cycle(n, 42);
  for (auto _ : state)
    benchmark::DoNotOptimize(hypo::canonical_form(g));
}
BENCHMARK(BM_canonical_form)->Arg(10)->Arg(16)->Arg(24)->Arg(32);

void BM_energy(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  hypo::Graph g = chorded_cycle(n, 7);
  for (auto _ : state)
    benchmark::DoNotOptimize(hypo::energy(g));
}
BENCHMARK(BM_energy)->Arg(10)->Arg(16)->Arg(24)->Arg(32);

void BM_char_poly_int(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  hypo::Graph g = chorded_cycle(n, 7);
  for (auto _ : state)
    benchmark::DoNotOptimize(hypo::char_poly_int(g));
}
BENCHMARK(BM_char_poly_int)->Arg(10)->Arg(16)->Arg(24);

void BM_census(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    long count = 0;
    hypo::for_each_connected_graph(
        hypo::EnumSpec{n, 3},
        [&](const hypo::Graph&, const std::string&) { ++count; });
    benchmark::DoNotOptimize(count);
  }
}
BENCHMARK(BM_census)->Arg(7)->Arg(8)->Arg(9)->Unit(benchmark::kMillisecond);

void BM_certify_corpus(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  std::vector<hypo::Graph> corpus;
  const std::string k23 =
      hypo::canonical_form(hypo::catalog_graph(hypo::CatalogName::K23));
  hypo::for_each_connected_graph(
      hypo::EnumSpec{n, 3, hypo::ClassFilter::CyclicOnly},
      [&](const hypo::Graph& g, const std::string& form) {
        if (form != k23) corpus.push_back(g);
      });
  for (auto _ : state) {
    for (const hypo::Graph& g : corpus)
      benchmark::DoNotOptimize(hypo::certify(g));
  }
  state.SetItemsProcessed(state.iterations() *
                          static_cast<long>(corpus.size()));
}
BENCHMARK(BM_certify_corpus)->Arg(8)->Arg(9)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
