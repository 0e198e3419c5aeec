#pragma once

#include <string>

#include "hypo/graph.hpp"

namespace hypo {

/// Plain edge-list text: first line "n m", then m lines "u v" with 0-based
/// indices. Blank lines and lines starting with '#' are ignored; '#' also
/// starts an end-of-line comment. Throws std::invalid_argument on malformed
/// input, naming the line.
Graph parse_edge_list_text(const std::string& text);

std::string format_edge_list(const Graph& g);

}  // namespace hypo
