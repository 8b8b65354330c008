#include "matchkit/graph6.hpp"

namespace matchkit {

namespace {
constexpr int kBias = 63;
constexpr int kHiByte = 126;
}  // namespace

Graph from_graph6(std::string_view text) {
  std::size_t pos = 0;
  auto next = [&](const char* context) -> int {
    if (pos >= text.size())
      throw parse_error(std::string("truncated graph6 input in ") + context, pos);
    unsigned char c = static_cast<unsigned char>(text[pos]);
    if (c < kBias || c > kHiByte)
      throw parse_error("byte outside graph6 range 63..126", pos);
    ++pos;
    return c - kBias;
  };

  long n;
  if (pos < text.size() && text[pos] == '~') {
    ++pos;
    if (pos < text.size() && text[pos] == '~')
      throw parse_error("8-byte order encoding is beyond the 64-vertex capacity", pos);
    n = next("order");
    n = (n << 6) | next("order");
    n = (n << 6) | next("order");
  } else {
    n = next("order");
  }
  if (n > kMaxVertices)
    throw capacity_error("graph6 order " + std::to_string(n) +
                         " exceeds the 64-vertex capacity");

  Graph g(static_cast<int>(n));
  int group = 0, bits_left = 0;
  for (int col = 1; col < n; ++col)
    for (int row = 0; row < col; ++row) {
      if (bits_left == 0) {
        group = next("edge bits");
        bits_left = 6;
      }
      if (group >> (bits_left - 1) & 1) g.add_edge(row, col);
      --bits_left;
    }
  if (pos != text.size())
    throw parse_error("trailing bytes after graph6 body", pos);
  return g;
}

std::string to_graph6(const Graph& g) {
  int n = g.order();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(kBias + n));
  } else {
    out.push_back('~');
    out.push_back(static_cast<char>(kBias + (n >> 12 & 63)));
    out.push_back(static_cast<char>(kBias + (n >> 6 & 63)));
    out.push_back(static_cast<char>(kBias + (n & 63)));
  }
  int group = 0, bits = 0;
  for (int col = 1; col < n; ++col)
    for (int row = 0; row < col; ++row) {
      group = group << 1 | (g.adjacent(row, col) ? 1 : 0);
      if (++bits == 6) {
        out.push_back(static_cast<char>(kBias + group));
        group = 0;
        bits = 0;
      }
    }
  if (bits > 0)
    out.push_back(static_cast<char>(kBias + (group << (6 - bits))));
  return out;
}

}  // namespace matchkit
