#pragma once

#include <algorithm>
#include <vector>

#include "deptree/graphs.hpp"

namespace deptree {

/// One vertex, or two adjacent vertices, in increasing order.
struct CentreResult {
  std::vector<Vertex> vertices;

  std::size_t size() const noexcept { return vertices.size(); }
  Vertex front() const { return vertices.front(); }
  friend bool operator==(const CentreResult&, const CentreResult&) = default;
};

/// Vertices of minimum eccentricity, found by stripping leaves layer by layer.
inline CentreResult centre(const FreeTree& t) {
  const auto n = t.num_vertices();
  if (n <= 2) {
    CentreResult r;
    for (Vertex v = 1; v <= n; ++v) r.vertices.push_back(v);
    return r;
  }
  std::vector<std::size_t> degree(n + 1);
  std::vector<Vertex> layer;
  for (Vertex v = 1; v <= n; ++v) {
    degree[v] = t.degree(v);
    if (degree[v] == 1) layer.push_back(v);
  }
  std::size_t remaining = n;
  while (remaining > 2) {
    remaining -= layer.size();
    std::vector<Vertex> next;
    for (Vertex leaf : layer) {
      for (Vertex w : t.neighbours(leaf)) {
        if (--degree[w] == 1) next.push_back(w);
      }
    }
    layer = std::move(next);
  }
  std::sort(layer.begin(), layer.end());
  return {layer};
}

/// Vertices minimising the size of the largest component left after removal.
inline CentreResult centroid(const FreeTree& t) {
  const auto n = t.num_vertices();
  const RootedTree r = RootedTree::root_at(t, 1);
  const auto size = r.subtree_sizes();
  CentreResult res;
  for (Vertex v = 1; v <= n; ++v) {
    std::size_t largest = n - size[v];
    for (Vertex c : r.children(v)) largest = std::max(largest, size[c]);
    if (2 * largest <= n) res.vertices.push_back(v);
  }
  return res;
}

}  // namespace deptree
