#pragma once

#include <algorithm>
#include <cstdint>
#include <vector>

#include "deptree/graphs.hpp"
#include "deptree/linarr/metrics.hpp"

namespace deptree {

/// Per-gap dependency flux. Gap g lies between positions g and g+1; an edge
/// spans g when its leftmost endpoint is at or before g and its rightmost
/// endpoint is after g.
struct FluxProfile {
  /// Number of edges spanning each gap; index 0 is gap 1.
  std::vector<std::uint32_t> size;
  /// Largest set of pairwise vertex-disjoint spanning edges per gap.
  std::vector<std::uint32_t> weight;

  std::size_t num_gaps() const noexcept { return size.size(); }
};

namespace detail {

/// Maximum matching of a forest given as an edge list. Repeatedly matches a
/// leaf with its only neighbour, which is optimal on forests.
inline std::uint32_t forest_matching(const std::vector<Edge>& edges) {
  if (edges.empty()) return 0;
  std::vector<Vertex> ids;
  ids.reserve(2 * edges.size());
  for (const Edge& e : edges) {
    ids.push_back(e.u);
    ids.push_back(e.v);
  }
  std::sort(ids.begin(), ids.end());
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
  auto index = [&ids](Vertex v) {
    return static_cast<std::size_t>(std::lower_bound(ids.begin(), ids.end(), v) - ids.begin());
  };

  const std::size_t k = ids.size();
  std::vector<std::vector<std::size_t>> adj(k);
  for (const Edge& e : edges) {
    adj[index(e.u)].push_back(index(e.v));
    adj[index(e.v)].push_back(index(e.u));
  }
  std::vector<std::size_t> degree(k);
  std::vector<bool> gone(k, false);
  std::vector<std::size_t> leaves;
  for (std::size_t i = 0; i < k; ++i) {
    degree[i] = adj[i].size();
    if (degree[i] == 1) leaves.push_back(i);
  }

  std::uint32_t matched = 0;
  auto remove = [&](std::size_t x) {
    gone[x] = true;
    for (std::size_t y : adj[x]) {
      if (gone[y]) continue;
      if (--degree[y] == 1) leaves.push_back(y);
    }
  };
  while (!leaves.empty()) {
    const std::size_t leaf = leaves.back();
    leaves.pop_back();
    if (gone[leaf] || degree[leaf] != 1) continue;
    std::size_t mate = k;
    for (std::size_t y : adj[leaf]) {
      if (!gone[y]) mate = y;
    }
    ++matched;
    gone[leaf] = true;
    remove(mate);
  }
  return matched;
}

}  // namespace detail

inline FluxProfile flux(const FreeTree& t, const Arrangement& a) {
  detail::check_sizes(t.num_vertices(), a);
  const auto n = t.num_vertices();
  if (n < 2) throw Error(ErrorCode::NoEdges, "flux needs at least one edge");
  const auto spans = detail::edge_spans(t, a);

  FluxProfile f;
  f.size.assign(n - 1, 0);
  f.weight.assign(n - 1, 0);
  std::vector<Edge> spanning;
  for (Position g = 1; g < n; ++g) {
    spanning.clear();
    for (const auto& s : spans) {
      if (s.left <= g && g < s.right) spanning.push_back({s.u, s.v});
    }
    f.size[g - 1] = static_cast<std::uint32_t>(spanning.size());
    f.weight[g - 1] = detail::forest_matching(spanning);
  }
  return f;
}

inline FluxProfile flux(const RootedTree& t, const Arrangement& a) { return flux(t.free(), a); }

}  // namespace deptree
