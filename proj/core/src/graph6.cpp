#include "hypo/graph6.hpp"

#include <stdexcept>

namespace hypo {

namespace {

void append_bits(std::string& out, int& fill, int bit) {
  if (fill == 0) out.push_back(63);
  out.back() = static_cast<char>(((out.back() - 63) << 1 | bit) + 63);
  if (++fill == 6) fill = 0;
}

[[noreturn]] void bad(std::size_t offset, const std::string& what) {
  throw std::invalid_argument("graph6 parse error at byte " +
                              std::to_string(offset) + ": " + what);
}

}  // namespace

std::string to_graph6(const Graph& g) {
  const int n = g.order();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + 63));
  } else {
    // long form: 126 then n in 18 bits, big-endian 6-bit groups
    out.push_back(126);
    out.push_back(static_cast<char>(((n >> 12) & 63) + 63));
    out.push_back(static_cast<char>(((n >> 6) & 63) + 63));
    out.push_back(static_cast<char>((n & 63) + 63));
  }
  int fill = 0;
  std::size_t header = out.size();
  for (int v = 1; v < n; ++v)
    for (int u = 0; u < v; ++u) append_bits(out, fill, g.has_edge(u, v));
  if (fill != 0)  // zero-pad the final group
    while (fill != 0) append_bits(out, fill, 0);
  // An order-0/1 graph has no triangle bits; the header alone suffices.
  (void)header;
  return out;
}

Graph from_graph6(const std::string& text) {
  std::size_t pos = 0;
  auto next = [&]() -> int {
    if (pos >= text.size()) bad(pos, "unexpected end of input");
    unsigned char c = static_cast<unsigned char>(text[pos]);
    if (c < 63 || c > 126)
      bad(pos, "character " + std::to_string(int{c}) + " outside [63, 126]");
    ++pos;
    return c - 63;
  };

  int n;
  int first = next();
  if (first == 63) {  // byte 126: long or extra-long form
    int second = next();
    if (second == 63)
      bad(pos - 1, "order above 18 bits is not supported");
    n = (second << 12) | (next() << 6) | next();
  } else {
    n = first;
  }
  if (n > order_bound())
    bad(0, "order " + std::to_string(n) + " exceeds bound " +
               std::to_string(order_bound()));

  const long bits_needed = static_cast<long>(n) * (n - 1) / 2;
  const std::size_t bytes_needed =
      static_cast<std::size_t>((bits_needed + 5) / 6);
  if (text.size() - pos != bytes_needed)
    bad(text.size(), "expected " + std::to_string(bytes_needed) +
                         " adjacency bytes, got " +
                         std::to_string(text.size() - pos));

  std::vector<Edge> edges;
  long bit = 0;
  int buffer = 0, avail = 0;
  std::size_t byte_at = pos;
  for (int v = 1; v < n; ++v) {
    for (int u = 0; u < v; ++u, ++bit) {
      if (avail == 0) {
        byte_at = pos;
        buffer = next();
        avail = 6;
      }
      if ((buffer >> (avail - 1)) & 1) edges.emplace_back(u, v);
      --avail;
    }
  }
  if (avail > 0 && (buffer & ((1 << avail) - 1)) != 0)
    bad(byte_at, "nonzero padding bits");
  return Graph::from_edge_list(n, edges);
}

}  // namespace hypo
