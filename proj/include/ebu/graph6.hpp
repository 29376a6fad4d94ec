// graph6 text codec: 6-bit chunks of the upper-triangle adjacency bits in
// column-major order, offset by 63. Short form covers n <= 62; the '~'
// extended header covers larger n up to the library vertex cap.
#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

#include "ebu/graph.hpp"

namespace ebu {

struct Graph6Error : std::runtime_error {
    Graph6Error(const std::string& what, std::size_t offset)
        : std::runtime_error("graph6 parse error at byte " + std::to_string(offset) + ": " + what),
          byte_offset(offset) {}
    std::size_t byte_offset;
};

std::string encode_graph6(const Graph& g);
Graph decode_graph6(const std::string& text);

}  // namespace ebu
