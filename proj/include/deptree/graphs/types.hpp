#pragma once

#include <compare>
#include <cstdint>

namespace deptree {

/// Vertices are sentence positions in the original word order, numbered 1..n.
using Vertex = std::uint32_t;
/// Positions of a linear arrangement, numbered 1..n.
using Position = std::uint32_t;

struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

}  // namespace deptree
