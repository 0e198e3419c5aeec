#include "hypo/io.hpp"

#include <sstream>
#include <stdexcept>
#include <vector>

namespace hypo {

Graph parse_edge_list_text(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  bool have_header = false;
  int n = 0, m = 0;
  std::vector<Edge> edges;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos)
      line.erase(hash);
    std::istringstream fields(line);
    int a, b;
    if (!(fields >> a)) {
      if (line.find_first_not_of(" \t\r\n\v\f") == std::string::npos)
        continue;  // blank or comment-only line
      throw std::invalid_argument("edge list line " + std::to_string(lineno) +
                                  ": expected two integers");
    }
    if (!(fields >> b))
      throw std::invalid_argument("edge list line " + std::to_string(lineno) +
                                  ": expected two integers");
    std::string extra;
    if (fields >> extra)
      throw std::invalid_argument("edge list line " + std::to_string(lineno) +
                                  ": trailing content '" + extra + "'");
    if (!have_header) {
      if (a < 0 || b < 0)
        throw std::invalid_argument("edge list line " +
                                    std::to_string(lineno) +
                                    ": negative count in header");
      n = a;
      m = b;
      have_header = true;
    } else {
      edges.emplace_back(a, b);
    }
  }
  if (!have_header)
    throw std::invalid_argument("edge list input has no \"n m\" header");
  if (static_cast<int>(edges.size()) != m)
    throw std::invalid_argument(
        "edge list header promises " + std::to_string(m) + " edges, found " +
        std::to_string(edges.size()));
  return Graph::from_edge_list(n, edges);
}

std::string format_edge_list(const Graph& g) {
  std::ostringstream out;
  out << g.order() << ' ' << g.size() << '\n';
  for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
  return out.str();
}

}  // namespace hypo
