#pragma once

#include <algorithm>
#include <cstdint>
#include <string>
#include <vector>

#include "deptree/error.hpp"
#include "deptree/graphs.hpp"
#include "deptree/numeric.hpp"

namespace deptree {

namespace detail {

inline void check_sizes(std::size_t tree_size, const Arrangement& a) {
  if (tree_size != a.size()) {
    throw Error(ErrorCode::SizeMismatch, "tree has " + std::to_string(tree_size) +
                                             " vertices, arrangement has " + std::to_string(a.size()));
  }
}

/// Edge as an interval of positions, left < right.
struct Span {
  Position left;
  Position right;
  Vertex u;
  Vertex v;
};

inline std::vector<Span> edge_spans(const FreeTree& t, const Arrangement& a) {
  std::vector<Span> spans;
  spans.reserve(t.num_edges());
  for (const Edge& e : t.edges()) {
    Position pu = a.position(e.u), pv = a.position(e.v);
    if (pu > pv) std::swap(pu, pv);
    spans.push_back({pu, pv, e.u, e.v});
  }
  return spans;
}

inline bool spans_cross(const Span& a, const Span& b) {
  return (a.left < b.left && b.left < a.right && a.right < b.right) ||
         (b.left < a.left && a.left < b.right && b.right < a.right);
}

}  // namespace detail

/// Sum of edge lengths D, where the length of {u,v} is |pos(u) - pos(v)|.
inline std::uint64_t sum_edge_lengths(const FreeTree& t, const Arrangement& a) {
  detail::check_sizes(t.num_vertices(), a);
  std::uint64_t d = 0;
  for (Vertex u = 1; u <= t.num_vertices(); ++u) {
    for (Vertex v : t.neighbours(u)) {
      if (u < v) {
        const Position pu = a.position(u), pv = a.position(v);
        d += pu > pv ? pu - pv : pv - pu;
      }
    }
  }
  return d;
}

inline std::uint64_t sum_edge_lengths(const RootedTree& t, const Arrangement& a) {
  return sum_edge_lengths(t.free(), a);
}

enum class CrossingsAlgorithm { brute_pairs, sweep };

/// Number of crossings C: unordered pairs of edges with four distinct
/// endpoints whose position intervals properly interleave.
inline std::uint64_t num_crossings(const FreeTree& t, const Arrangement& a,
                                   CrossingsAlgorithm algorithm = CrossingsAlgorithm::sweep) {
  detail::check_sizes(t.num_vertices(), a);
  const auto spans = detail::edge_spans(t, a);

  if (algorithm == CrossingsAlgorithm::brute_pairs) {
    std::uint64_t c = 0;
    for (std::size_t i = 0; i < spans.size(); ++i) {
      for (std::size_t j = i + 1; j < spans.size(); ++j) {
        if (detail::spans_cross(spans[i], spans[j])) ++c;
      }
    }
    return c;
  }

  // Sweep over left endpoints. A previously inserted edge (l', r') crosses
  // (l, r) iff l' < l < r' < r; edges sharing the same left endpoint are
  // queried before any of them is inserted. Right endpoints live in a
  // Fenwick tree indexed by position.
  const auto n = t.num_vertices();
  std::vector<std::uint32_t> fenwick(n + 1, 0);
  auto add = [&](Position p) {
    for (; p <= n; p += p & (~p + 1)) ++fenwick[p];
  };
  auto prefix = [&](Position p) {
    std::uint64_t s = 0;
    for (; p > 0; p -= p & (~p + 1)) s += fenwick[p];
    return s;
  };

  std::vector<std::vector<Position>> rights_by_left(n + 1);
  for (const auto& s : spans) rights_by_left[s.left].push_back(s.right);

  std::uint64_t c = 0;
  for (Position l = 1; l <= n; ++l) {
    for (Position r : rights_by_left[l]) c += prefix(r - 1) - prefix(l);
    for (Position r : rights_by_left[l]) add(r);
  }
  return c;
}

inline std::uint64_t num_crossings(const RootedTree& t, const Arrangement& a,
                                   CrossingsAlgorithm algorithm = CrossingsAlgorithm::sweep) {
  return num_crossings(t.free(), a, algorithm);
}

/// Proportion of edges whose head precedes its dependent.
inline Rational head_initial_ratio(const RootedTree& t, const Arrangement& a) {
  detail::check_sizes(t.num_vertices(), a);
  if (t.num_vertices() < 2) throw Error(ErrorCode::NoEdges, "head-initial ratio needs at least one edge");
  std::uint64_t initial = 0;
  for (const Edge& e : t.edges()) {
    if (a.position(e.u) < a.position(e.v)) ++initial;
  }
  return Rational(initial, t.num_edges());
}

}  // namespace deptree
