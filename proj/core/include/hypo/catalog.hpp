#pragma once

#include <optional>
#include <span>
#include <string_view>

#include "hypo/graph.hpp"

namespace hypo {

/// The five exceptional graphs: the only hypoenergetic connected graphs
/// with maximum degree <= 3. Orders 1, 3, 4, 7, 5.
enum class CatalogName { S1, S3, S4, W, K23 };

std::string_view to_string(CatalogName name);

/// S1: the single vertex.
/// S3: the star on 3 vertices (= the path P3).
/// S4: the star on 4 vertices.
/// W:  the 7-vertex tree with two degree-3 centers, each carrying two
///     leaves, joined through a middle vertex. Frozen edge list; a test
///     regenerates it as the unique hypoenergetic 7-vertex tree.
/// K23: the complete bipartite graph with parts of sizes 2 and 3.
const Graph& catalog_graph(CatalogName name);

struct CatalogEntry {
  CatalogName name;
  const Graph* graph;
};

std::span<const CatalogEntry> exceptional_catalog();

/// The catalog name if g is isomorphic to a catalog member, else nullopt.
/// Order/size pre-filter first, canonical-form comparison second.
std::optional<CatalogName> is_exceptional(const Graph& g);

}  // namespace hypo
