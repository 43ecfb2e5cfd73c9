#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

#include "packcol/graph.hpp"

namespace packcol {

class graph6_error : public std::runtime_error {
 public:
  graph6_error(const std::string& what, std::size_t offset)
      : std::runtime_error(what + " (byte " + std::to_string(offset) + ")"),
        offset_(offset) {}
  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

// Decodes one graph6 line. The standard ">>graph6<<" header is tolerated.
Graph parse_graph6(std::string_view line);

// Canonical headerless encoding, bit-exact in the upper-triangle
// column-major order of the format.
std::string write_graph6(const Graph& g);

}  // namespace packcol
