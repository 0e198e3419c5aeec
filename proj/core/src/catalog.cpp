#include "hypo/catalog.hpp"

#include <array>

#include "hypo/canonical.hpp"

namespace hypo {

std::string_view to_string(CatalogName name) {
  switch (name) {
    case CatalogName::S1: return "S1";
    case CatalogName::S3: return "S3";
    case CatalogName::S4: return "S4";
    case CatalogName::W: return "W";
    case CatalogName::K23: return "K23";
  }
  return "?";
}

namespace {

const std::array<Graph, 5>& graphs() {
  static const std::array<Graph, 5> g = {
      Graph::from_edge_list(1, {}),
      Graph::from_edge_list(3, {{0, 1}, {0, 2}}),
      Graph::from_edge_list(4, {{0, 1}, {0, 2}, {0, 3}}),
      Graph::from_edge_list(
          7, {{0, 1}, {0, 3}, {0, 4}, {1, 2}, {2, 5}, {2, 6}}),
      Graph::from_edge_list(
          5, {{0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 3}, {1, 4}}),
  };
  return g;
}

constexpr std::array<CatalogName, 5> kNames = {
    CatalogName::S1, CatalogName::S3, CatalogName::S4, CatalogName::W,
    CatalogName::K23};

}  // namespace

const Graph& catalog_graph(CatalogName name) {
  return graphs()[static_cast<std::size_t>(name)];
}

std::span<const CatalogEntry> exceptional_catalog() {
  static const std::array<CatalogEntry, 5> entries = [] {
    std::array<CatalogEntry, 5> out{};
    for (std::size_t i = 0; i < 5; ++i)
      out[i] = {kNames[i], &graphs()[i]};
    return out;
  }();
  return entries;
}

std::optional<CatalogName> is_exceptional(const Graph& g) {
  static const std::array<std::string, 5> forms = [] {
    std::array<std::string, 5> out;
    for (std::size_t i = 0; i < 5; ++i) out[i] = canonical_form(graphs()[i]);
    return out;
  }();
  for (std::size_t i = 0; i < 5; ++i) {
    const Graph& c = graphs()[i];
    if (g.order() != c.order() || g.size() != c.size()) continue;
    if (canonical_form(g) == forms[i]) return kNames[i];
  }
  return std::nullopt;
}

}  // namespace hypo
