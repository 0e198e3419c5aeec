#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "doctest.h"
#include "hypo/graph.hpp"
#include "hypo/graph6.hpp"

using hypo::Edge;
using hypo::Graph;

TEST_SUITE("graph6") {

TEST_CASE("known encodings") {
  // Hand-packed: 6 bits per byte, offset 63, upper triangle column-major.
  CHECK(hypo::to_graph6(Graph::from_edge_list(1, {})) == "@");
  CHECK(hypo::to_graph6(Graph::from_edge_list(2, {{0, 1}})) == "A_");
  CHECK(hypo::to_graph6(Graph::from_edge_list(3, {{0, 1}, {1, 2}})) == "Bg");
  CHECK(hypo::to_graph6(Graph::from_edge_list(3, {{0, 1}, {0, 2}, {1, 2}})) ==
        "Bw");
  CHECK(hypo::to_graph6(Graph::from_edge_list(
            4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}})) == "Cl");
  CHECK(hypo::to_graph6(Graph::from_edge_list(
            4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}})) == "C~");
  CHECK(hypo::to_graph6(Graph::from_edge_list(2, {})) == "A?");
}

TEST_CASE("decoding inverts encoding on known strings") {
  CHECK(hypo::from_graph6("@") == Graph::from_edge_list(1, {}));
  CHECK(hypo::from_graph6("A_") == Graph::from_edge_list(2, {{0, 1}}));
  CHECK(hypo::from_graph6("C~") ==
        Graph::from_edge_list(4,
                              {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}));
}

TEST_CASE("round trip over random graphs") {
  std::mt19937 rng(20240817);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 32u);
    std::vector<Edge> edges;
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v)
        if (rng() % 4u == 0) edges.push_back({u, v});
    Graph g = Graph::from_edge_list(n, edges);
    CHECK(hypo::from_graph6(hypo::to_graph6(g)) == g);
  }
}

TEST_CASE("empty order zero graph") {
  Graph g;
  std::string s = hypo::to_graph6(g);
  CHECK(hypo::from_graph6(s) == g);
}

TEST_CASE("malformed inputs are rejected with byte offsets") {
  CHECK_THROWS_AS(hypo::from_graph6(""), std::invalid_argument);
  // Character below the printable graph6 range.
  CHECK_THROWS_WITH_AS(hypo::from_graph6("B\x20g"),
                       doctest::Contains("byte"), std::invalid_argument);
  // Too few adjacency bytes for n=5.
  CHECK_THROWS_AS(hypo::from_graph6("D"), std::invalid_argument);
  // Too many adjacency bytes.
  CHECK_THROWS_AS(hypo::from_graph6("A__"), std::invalid_argument);
  // Padding bits after the upper triangle must be zero: n=2 has one
  // adjacency bit and five padding bits.
  CHECK_THROWS_AS(hypo::from_graph6("A~"), std::invalid_argument);
}

TEST_CASE("orders above the bound are rejected") {
  // Short-form order 40 exceeds the default bound of 32.
  if (hypo::order_bound() < 40) {
    std::string s(1, static_cast<char>(63 + 40));
    CHECK_THROWS_AS(hypo::from_graph6(s), std::invalid_argument);
  }
  // Long-form header (126 prefix) advertising order 63.
  if (hypo::order_bound() < 63) {
    std::string s = "~";
    s += static_cast<char>(63);
    s += static_cast<char>(63);
    s += static_cast<char>(63 + 63);
    CHECK_THROWS_AS(hypo::from_graph6(s), std::invalid_argument);
  }
}

}  // TEST_SUITE

TEST_SUITE("graph6_large") {

// Run separately with HYPO_ORDER_BOUND=64 and --no-skip: exercises the
// long-form header used for orders above 62.
TEST_CASE("long form round trip at order 63" * doctest::skip()) {
  REQUIRE(hypo::order_bound() >= 63);
  std::vector<Edge> edges;
  for (int v = 0; v + 1 < 63; ++v) edges.push_back({v, v + 1});
  Graph path = Graph::from_edge_list(63, edges);
  std::string s = hypo::to_graph6(path);
  REQUIRE(s.size() >= 4);
  CHECK(s[0] == '~');
  CHECK(hypo::from_graph6(s) == path);

  std::mt19937 rng(63);
  for (int trial = 0; trial < 20; ++trial) {
    const int n = 63 + static_cast<int>(rng() % 2u);
    std::vector<Edge> es;
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v)
        if (rng() % 8u == 0) es.push_back({u, v});
    Graph g = Graph::from_edge_list(n, es);
    CHECK(hypo::from_graph6(hypo::to_graph6(g)) == g);
  }
}

}  // TEST_SUITE
