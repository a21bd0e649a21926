#pragma once

#include <algorithm>
#include <cstdint>
#include <vector>

#include "deptree/error.hpp"
#include "deptree/graphs.hpp"
#include "deptree/numeric.hpp"

namespace deptree {

/// Number Q of unordered pairs of edges that share no vertex.
inline std::uint64_t num_independent_edge_pairs(const FreeTree& t) {
  const std::uint64_t m = t.num_edges();
  std::uint64_t q = m * (m - (m > 0 ? 1 : 0)) / 2;
  for (Vertex v = 1; v <= t.num_vertices(); ++v) {
    const std::uint64_t k = t.degree(v);
    q -= k * (k - (k > 0 ? 1 : 0)) / 2;
  }
  return q;
}

inline std::uint64_t num_independent_edge_pairs(const RootedTree& t) {
  return num_independent_edge_pairs(t.free());
}

enum class DegreeKind { total, in, out };

/// m-th raw moment of the degree distribution: (1/n) sum_v deg(v)^m.
inline Rational degree_moment(const RootedTree& t, unsigned m, DegreeKind kind = DegreeKind::total) {
  BigInt sum = 0;
  for (Vertex v = 1; v <= t.num_vertices(); ++v) {
    std::size_t k = 0;
    switch (kind) {
      case DegreeKind::total: k = t.free().degree(v); break;
      case DegreeKind::in: k = t.in_degree(v); break;
      case DegreeKind::out: k = t.out_degree(v); break;
    }
    sum += power(k, m);
  }
  return Rational(sum, BigInt(t.num_vertices()));
}

inline Rational degree_moment(const FreeTree& t, unsigned m) {
  BigInt sum = 0;
  for (Vertex v = 1; v <= t.num_vertices(); ++v) sum += power(t.degree(v), m);
  return Rational(sum, BigInt(t.num_vertices()));
}

/// Position of the second degree moment between a path (0) and a star (1).
inline Rational hubiness(const FreeTree& t) {
  const auto n = t.num_vertices();
  if (n < 4) throw Error(ErrorCode::TooSmall, "hubiness needs n >= 4");
  const Rational k2 = degree_moment(t, 2);
  const Rational path(BigInt(4 * n - 6), BigInt(n));
  const Rational star(BigInt(n - 1));
  return (k2 - path) / (star - path);
}

inline Rational hubiness(const RootedTree& t) { return hubiness(t.free()); }

/// Depth of every vertex below the root (index 0 unused).
inline std::vector<std::size_t> depths(const RootedTree& t) {
  std::vector<std::size_t> d(t.num_vertices() + 1, 0);
  for (Vertex v : t.preorder()) {
    if (v != t.root()) d[v] = d[t.parent(v)] + 1;
  }
  return d;
}

/// Mean depth of the non-root vertices.
inline Rational mean_hierarchical_distance(const RootedTree& t) {
  if (t.num_vertices() < 2) throw Error(ErrorCode::NoEdges, "mean hierarchical distance needs n >= 2");
  const auto d = depths(t);
  std::uint64_t sum = 0;
  for (std::size_t v = 1; v < d.size(); ++v) sum += d[v];
  return Rational(BigInt(sum), BigInt(t.num_edges()));
}

/// E[D] over uniformly random unconstrained arrangements: (n^2 - 1) / 3.
inline Rational expected_D_unconstrained(std::size_t n) {
  if (n < 2) throw Error(ErrorCode::NoEdges, "expected D needs n >= 2");
  return Rational(BigInt(n - 1) * BigInt(n + 1), BigInt(3));
}

inline Rational expected_D_unconstrained(const FreeTree& t) { return expected_D_unconstrained(t.num_vertices()); }
inline Rational expected_D_unconstrained(const RootedTree& t) { return expected_D_unconstrained(t.num_vertices()); }

/// E[C] over uniformly random unconstrained arrangements: Q / 3.
inline Rational expected_C_unconstrained(const FreeTree& t) {
  if (t.num_vertices() < 2) throw Error(ErrorCode::NoEdges, "expected C needs n >= 2");
  return Rational(BigInt(num_independent_edge_pairs(t)), BigInt(3));
}

inline Rational expected_C_unconstrained(const RootedTree& t) { return expected_C_unconstrained(t.free()); }

}  // namespace deptree
