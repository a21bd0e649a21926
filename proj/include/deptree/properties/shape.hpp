#pragma once

#include <algorithm>

#include "deptree/graphs.hpp"

namespace deptree {

/// Membership in common tree classes. The flags are independent: a star is
/// also a bistar, a caterpillar and a spider.
struct TreeShapeFlags {
  bool linear = false;
  bool star = false;
  bool quasistar = false;
  bool bistar = false;
  bool caterpillar = false;
  bool spider = false;

  friend bool operator==(const TreeShapeFlags&, const TreeShapeFlags&) = default;
};

inline TreeShapeFlags tree_shape(const FreeTree& t) {
  const auto n = t.num_vertices();
  TreeShapeFlags f;

  std::size_t max_degree = 0, branching = 0;
  for (Vertex v = 1; v <= n; ++v) {
    max_degree = std::max(max_degree, t.degree(v));
    if (t.degree(v) >= 3) ++branching;
  }
  f.linear = max_degree <= 2;
  f.star = max_degree == n - 1;
  // A star with one edge subdivided: hub of degree n-2, the remaining
  // vertex hanging from one of the hub's leaves.
  f.quasistar = n >= 4 && max_degree == n - 2;
  f.spider = branching <= 1;

  f.bistar = n <= 2;
  for (const Edge& e : t.edges()) {
    if (t.degree(e.u) + t.degree(e.v) - 1 == n - 1) f.bistar = true;
  }

  f.caterpillar = true;
  for (Vertex v = 1; v <= n && f.caterpillar; ++v) {
    if (t.degree(v) < 2) continue;
    std::size_t internal = 0;
    for (Vertex w : t.neighbours(v)) {
      if (t.degree(w) >= 2) ++internal;
    }
    if (internal > 2) f.caterpillar = false;
  }
  return f;
}

inline TreeShapeFlags tree_shape(const RootedTree& t) { return tree_shape(t.free()); }

}  // namespace deptree
