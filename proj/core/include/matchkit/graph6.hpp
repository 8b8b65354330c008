#ifndef MATCHKIT_GRAPH6_HPP
#define MATCHKIT_GRAPH6_HPP

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

#include "matchkit/graph.hpp"

namespace matchkit {

class parse_error : public std::runtime_error {
public:
  parse_error(const std::string& what, std::size_t offset)
      : std::runtime_error(what + " (byte " + std::to_string(offset) + ")"),
        offset_(offset) {}
  std::size_t offset() const { return offset_; }

private:
  std::size_t offset_;
};

/// Decode one graph6 line (without the trailing newline).
Graph from_graph6(std::string_view text);

/// Encode in canonical graph6: short header for ν ≤ 62, "~" long form above.
std::string to_graph6(const Graph& g);

}  // namespace matchkit

#endif
