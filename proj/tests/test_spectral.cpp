#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "hypo/catalog.hpp"
#include "hypo/graph.hpp"
#include "hypo/graph6.hpp"
#include "hypo/spectral.hpp"

using hypo::BigInt;
using hypo::Graph;
using hypo::IntPoly;

namespace {

Graph k4() {
  return Graph::from_edge_list(
      4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
}

Graph k23() {
  return Graph::from_edge_list(
      5, {{0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 3}, {1, 4}});
}

Graph cycle(int n) {
  std::vector<hypo::Edge> edges;
  for (int v = 0; v + 1 < n; ++v) edges.push_back({v, v + 1});
  edges.push_back({0, n - 1});
  return Graph::from_edge_list(n, edges);
}

}  // namespace

TEST_SUITE("spectral") {

TEST_CASE("eigenvalues of a diagonal matrix") {
  std::vector<double> a{3, 0, 0, 0, -1, 0, 0, 0, 2};
  auto eig = hypo::eigenvalues_symmetric(a, 3);
  REQUIRE(eig.size() == 3);
  CHECK(eig[0] == doctest::Approx(3).epsilon(1e-12));
  CHECK(eig[1] == doctest::Approx(2).epsilon(1e-12));
  CHECK(eig[2] == doctest::Approx(-1).epsilon(1e-12));
}

TEST_CASE("symmetric input is enforced") {
  std::vector<double> bad{0, 1, 0, 0};
  CHECK_THROWS_AS(hypo::eigenvalues_symmetric(bad, 2), std::invalid_argument);
  std::vector<double> wrong_size{0, 1, 1};
  CHECK_THROWS_AS(hypo::eigenvalues_symmetric(wrong_size, 2),
                  std::invalid_argument);
}

TEST_CASE("known spectra") {
  auto s = hypo::spectrum(Graph::from_edge_list(2, {{0, 1}}));
  REQUIRE(s.eigenvalues.size() == 2);
  CHECK(s.eigenvalues[0] == doctest::Approx(1).epsilon(1e-10));
  CHECK(s.eigenvalues[1] == doctest::Approx(-1).epsilon(1e-10));
  CHECK(s.n == 2);
  CHECK(s.m == 1);

  auto c4 = hypo::spectrum(cycle(4));
  CHECK(c4.eigenvalues[0] == doctest::Approx(2).epsilon(1e-10));
  CHECK(c4.eigenvalues[1] == doctest::Approx(0).epsilon(1e-10));
  CHECK(c4.eigenvalues[2] == doctest::Approx(0).epsilon(1e-10));
  CHECK(c4.eigenvalues[3] == doctest::Approx(-2).epsilon(1e-10));

  auto k = hypo::spectrum(k4());
  CHECK(k.eigenvalues[0] == doctest::Approx(3).epsilon(1e-10));
  for (int i = 1; i < 4; ++i)
    CHECK(k.eigenvalues[static_cast<std::size_t>(i)] ==
          doctest::Approx(-1).epsilon(1e-10));

  auto b = hypo::spectrum(k23());
  CHECK(b.eigenvalues[0] == doctest::Approx(std::sqrt(6)).epsilon(1e-10));
  CHECK(b.eigenvalues[4] == doctest::Approx(-std::sqrt(6)).epsilon(1e-10));
  for (int i = 1; i < 4; ++i)
    CHECK(b.eigenvalues[static_cast<std::size_t>(i)] ==
          doctest::Approx(0).epsilon(1e-10));

  // C5: eigenvalues 2cos(2 pi j / 5).
  auto c5 = hypo::spectrum(cycle(5));
  const double phi = 2 * std::numbers::pi / 5;
  CHECK(c5.eigenvalues[0] == doctest::Approx(2).epsilon(1e-10));
  CHECK(c5.eigenvalues[1] == doctest::Approx(2 * std::cos(phi)).epsilon(1e-10));
  CHECK(c5.eigenvalues[2] == doctest::Approx(2 * std::cos(phi)).epsilon(1e-10));
  CHECK(c5.eigenvalues[3] ==
        doctest::Approx(2 * std::cos(2 * phi)).epsilon(1e-10));
  CHECK(c5.eigenvalues[4] ==
        doctest::Approx(2 * std::cos(2 * phi)).epsilon(1e-10));
}

TEST_CASE("energies in closed form") {
  CHECK(hypo::energy(k23()) == doctest::Approx(2 * std::sqrt(6)).epsilon(1e-11));
  CHECK(hypo::energy(k4()) == doctest::Approx(6).epsilon(1e-11));
  Graph w = Graph::from_edge_list(
      7, {{0, 1}, {0, 3}, {0, 4}, {1, 2}, {2, 5}, {2, 6}});
  CHECK(hypo::energy(w) == doctest::Approx(4 + 2 * std::sqrt(2)).epsilon(1e-11));
  Graph p4 = Graph::from_edge_list(4, {{0, 1}, {1, 2}, {2, 3}});
  CHECK(hypo::energy(p4) == doctest::Approx(2 * std::sqrt(5)).epsilon(1e-11));
  CHECK(hypo::energy(Graph::from_edge_list(1, {})) == doctest::Approx(0));
  CHECK(hypo::energy(Graph{}) == doctest::Approx(0));
}

TEST_CASE("energy is additive over disjoint unions") {
  Graph u = hypo::disjoint_union(k4(), k23());
  CHECK(hypo::energy(u) ==
        doctest::Approx(6 + 2 * std::sqrt(6)).epsilon(1e-10));
}

TEST_CASE("integer characteristic polynomials") {
  auto check_coeffs = [](const Graph& g, const std::vector<long long>& want) {
    IntPoly p = hypo::char_poly_int(g);
    REQUIRE(p.coeffs.size() == want.size());
    for (std::size_t i = 0; i < want.size(); ++i)
      CHECK(p.coeffs[i] == BigInt(want[i]));
  };
  // Constant term first (coeffs[k] multiplies x^k).
  check_coeffs(Graph::from_edge_list(1, {}), {0, 1});
  check_coeffs(Graph::from_edge_list(2, {{0, 1}}), {-1, 0, 1});
  check_coeffs(Graph::from_edge_list(3, {{0, 1}, {1, 2}}), {0, -2, 0, 1});
  check_coeffs(cycle(4), {0, 0, -4, 0, 1});
  check_coeffs(k4(), {-3, -8, -6, 0, 1});
  check_coeffs(k23(), {0, 0, 0, -6, 0, 1});
  Graph w = Graph::from_edge_list(
      7, {{0, 1}, {0, 3}, {0, 4}, {1, 2}, {2, 5}, {2, 6}});
  check_coeffs(w, {0, 0, 0, 8, 0, -6, 0, 1});
}

TEST_CASE("characteristic polynomial matches the spectrum") {
  for (const auto& entry : hypo::exceptional_catalog()) {
    const Graph& g = *entry.graph;
    IntPoly p = hypo::char_poly_int(g);
    CHECK(p.degree() == g.order());
    const double scale =
        g.order() * std::pow(std::max(1, g.max_degree()), g.order());
    for (double lambda : hypo::spectrum(g).eigenvalues)
      CHECK(std::abs(p.eval(lambda)) <= 1e-6 * scale);
  }
}

TEST_CASE("pretty printing") {
  Graph w = Graph::from_edge_list(
      7, {{0, 1}, {0, 3}, {0, 4}, {1, 2}, {2, 5}, {2, 6}});
  CHECK(hypo::char_poly_int(w).pretty() == "x^7 - 6x^5 + 8x^3");
  CHECK(hypo::char_poly_int(k23()).pretty() == "x^5 - 6x^3");
  CHECK(hypo::char_poly_int(Graph::from_edge_list(1, {})).pretty() == "x");
  CHECK(hypo::char_poly_int(k4()).pretty() == "x^4 - 6x^2 - 8x - 3");
  IntPoly zero;
  zero.coeffs = {BigInt(0)};
  CHECK(zero.pretty() == "0");
}

TEST_CASE("polynomial evaluation") {
  IntPoly p = hypo::char_poly_int(k4());  // (x-3)(x+1)^3
  CHECK(p.eval(3.0) == doctest::Approx(0).epsilon(1e-12));
  CHECK(p.eval(-1.0) == doctest::Approx(0).epsilon(1e-12));
  CHECK(p.eval(0.0) == doctest::Approx(-3));
  CHECK(p.eval(1.0) == doctest::Approx((1 - 3) * 8).epsilon(1e-12));
}

TEST_CASE("classification of clear margins") {
  auto v = hypo::classify(k23());
  CHECK(v.hypoenergetic);
  CHECK(v.tier == hypo::PrecisionTier::Standard);
  CHECK(v.margin == doctest::Approx(2 * std::sqrt(6) - 5).epsilon(1e-9));

  auto s1 = hypo::classify(Graph::from_edge_list(1, {}));
  CHECK(s1.hypoenergetic);
  CHECK(s1.margin == doctest::Approx(-1));

  auto c6 = hypo::classify(cycle(6));
  CHECK_FALSE(c6.hypoenergetic);
  CHECK(c6.margin == doctest::Approx(2).epsilon(1e-9));

  CHECK_THROWS_AS(hypo::classify(Graph{}), std::invalid_argument);
}

TEST_CASE("classification of exact ties") {
  // Graphs with energy exactly n: a perfect tie no floating tier can
  // decide. The integral spectrum settles each one exactly.
  auto k2 = hypo::classify(Graph::from_edge_list(2, {{0, 1}}));
  CHECK_FALSE(k2.hypoenergetic);
  CHECK(k2.tier == hypo::PrecisionTier::Exact);
  CHECK(k2.margin == 0.0);
  CHECK(k2.energy == 2.0);

  auto c4 = hypo::classify(cycle(4));
  CHECK_FALSE(c4.hypoenergetic);
  CHECK(c4.tier == hypo::PrecisionTier::Exact);
  CHECK(c4.margin == 0.0);

  Graph k33 = Graph::from_edge_list(6, {{0, 3}, {0, 4}, {0, 5}, {1, 3},
                                        {1, 4}, {1, 5}, {2, 3}, {2, 4},
                                        {2, 5}});
  auto v33 = hypo::classify(k33);
  CHECK_FALSE(v33.hypoenergetic);
  CHECK(v33.tier == hypo::PrecisionTier::Exact);
  CHECK(v33.margin == 0.0);
  CHECK(v33.energy == 6.0);

  // The double star (two adjacent centers, two leaves each) has spectrum
  // {2, 1, 0, 0, -1, -2}: energy exactly 6 on 6 vertices.
  Graph t6 = hypo::from_graph6("ERC_");
  REQUIRE(t6.order() == 6);
  REQUIRE(t6.size() == 5);
  auto vt = hypo::classify(t6);
  CHECK_FALSE(vt.hypoenergetic);
  CHECK(vt.tier == hypo::PrecisionTier::Exact);
  CHECK(vt.margin == 0.0);
}

TEST_CASE("unresolved verdict carries both estimates") {
  hypo::UnresolvedVerdict err(4.9999999, 5.0000001, 5);
  CHECK(err.standard_energy == doctest::Approx(4.9999999));
  CHECK(err.escalated_energy == doctest::Approx(5.0000001));
  CHECK(err.n == 5);
  CHECK(std::string(err.what()).find("unresolved") != std::string::npos);
}

}  // TEST_SUITE
