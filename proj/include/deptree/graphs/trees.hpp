#pragma once

#include <algorithm>
#include <numeric>
#include <span>
#include <string>
#include <vector>

#include "deptree/error.hpp"
#include "deptree/graphs/head_vector.hpp"
#include "deptree/graphs/types.hpp"

namespace deptree {

/// Undirected tree on vertices 1..n. Immutable once built; every
/// constructor path validates the tree invariants.
class FreeTree {
public:
  /// The single-vertex tree.
  FreeTree() : adjacency_(2) {}

  static FreeTree from_edge_list(std::size_t n, std::span<const Edge> edges) {
    if (n == 0) throw Error(ErrorCode::OutOfRange, "a tree needs at least one vertex");
    if (edges.size() != n - 1) {
      throw Error(ErrorCode::NotATree, "expected " + std::to_string(n - 1) + " edges, got " +
                                           std::to_string(edges.size()));
    }
    std::vector<Vertex> dsu(n + 1);
    std::iota(dsu.begin(), dsu.end(), Vertex{0});
    auto find = [&dsu](Vertex x) {
      while (dsu[x] != x) x = dsu[x] = dsu[dsu[x]];
      return x;
    };

    FreeTree t;
    t.adjacency_.assign(n + 1, {});
    for (const Edge& e : edges) {
      if (e.u < 1 || e.u > n || e.v < 1 || e.v > n) {
        throw Error(ErrorCode::OutOfRange, "edge endpoint outside 1.." + std::to_string(n));
      }
      if (e.u == e.v) throw Error(ErrorCode::SelfLoop, "self-loop at vertex " + std::to_string(e.u));
      const auto& nu = t.adjacency_[e.u];
      if (std::find(nu.begin(), nu.end(), e.v) != nu.end()) {
        throw Error(ErrorCode::DuplicateEdge,
                    "edge {" + std::to_string(e.u) + "," + std::to_string(e.v) + "} repeated");
      }
      const Vertex ru = find(e.u), rv = find(e.v);
      if (ru == rv) throw Error(ErrorCode::NotATree, "edges contain a cycle");
      dsu[ru] = rv;
      t.adjacency_[e.u].push_back(e.v);
      t.adjacency_[e.v].push_back(e.u);
    }
    for (auto& nbrs : t.adjacency_) std::sort(nbrs.begin(), nbrs.end());
    return t;
  }

  static FreeTree from_edge_list(std::size_t n, std::initializer_list<Edge> edges) {
    return from_edge_list(n, std::span<const Edge>(edges.begin(), edges.size()));
  }

  std::size_t num_vertices() const noexcept { return adjacency_.size() - 1; }
  std::size_t num_edges() const noexcept { return num_vertices() - 1; }

  std::span<const Vertex> neighbours(Vertex v) const { return adjacency_.at(v); }
  std::size_t degree(Vertex v) const { return adjacency_.at(v).size(); }

  bool has_edge(Vertex u, Vertex v) const {
    const auto& nu = adjacency_.at(u);
    return std::binary_search(nu.begin(), nu.end(), v);
  }

  /// Edges as (u, v) with u < v, sorted lexicographically.
  std::vector<Edge> edges() const {
    std::vector<Edge> es;
    es.reserve(num_edges());
    for (Vertex u = 1; u <= num_vertices(); ++u) {
      for (Vertex v : adjacency_[u]) {
        if (u < v) es.push_back({u, v});
      }
    }
    return es;
  }

  friend bool operator==(const FreeTree& a, const FreeTree& b) { return a.adjacency_ == b.adjacency_; }

private:
  std::vector<std::vector<Vertex>> adjacency_;  // index 0 unused
};

/// A free tree with a designated root and edges oriented away from it
/// (head -> dependent).
class RootedTree {
public:
  RootedTree() : parent_(2, 0), children_(2), root_(1) {}

  static RootedTree root_at(FreeTree tree, Vertex root) {
    const auto n = tree.num_vertices();
    if (root < 1 || root > n) {
      throw Error(ErrorCode::OutOfRange, "root " + std::to_string(root) + " outside 1.." + std::to_string(n));
    }
    RootedTree t;
    t.root_ = root;
    t.parent_.assign(n + 1, 0);
    t.children_.assign(n + 1, {});
    std::vector<Vertex> stack{root};
    std::vector<bool> seen(n + 1, false);
    seen[root] = true;
    while (!stack.empty()) {
      const Vertex v = stack.back();
      stack.pop_back();
      for (Vertex w : tree.neighbours(v)) {
        if (seen[w]) continue;
        seen[w] = true;
        t.parent_[w] = v;
        t.children_[v].push_back(w);
        stack.push_back(w);
      }
    }
    for (auto& c : t.children_) std::sort(c.begin(), c.end());
    t.tree_ = std::move(tree);
    return t;
  }

  static RootedTree from_head_vector(const HeadVector& h) {
    const auto n = h.size();
    std::vector<Edge> edges;
    edges.reserve(n - 1);
    for (Vertex i = 1; i <= n; ++i) {
      if (h.head(i) != 0) edges.push_back({h.head(i), i});
    }
    return root_at(FreeTree::from_edge_list(n, edges), h.root());
  }

  const FreeTree& free() const noexcept { return tree_; }
  std::size_t num_vertices() const noexcept { return tree_.num_vertices(); }
  std::size_t num_edges() const noexcept { return tree_.num_edges(); }
  Vertex root() const noexcept { return root_; }
  /// Head of `v`; 0 for the root.
  Vertex parent(Vertex v) const { return parent_.at(v); }
  std::span<const Vertex> children(Vertex v) const { return children_.at(v); }
  std::size_t out_degree(Vertex v) const { return children_.at(v).size(); }
  std::size_t in_degree(Vertex v) const { return v == root_ ? 0 : 1; }

  HeadVector to_head_vector() const {
    return HeadVector(std::vector<Vertex>(parent_.begin() + 1, parent_.end()));
  }

  /// Oriented edges (head, dependent), ordered by dependent.
  std::vector<Edge> edges() const {
    std::vector<Edge> es;
    es.reserve(num_edges());
    for (Vertex v = 1; v <= num_vertices(); ++v) {
      if (v != root_) es.push_back({parent_[v], v});
    }
    return es;
  }

  /// Vertices in an order where every vertex precedes its children.
  std::vector<Vertex> preorder() const {
    std::vector<Vertex> order;
    order.reserve(num_vertices());
    std::vector<Vertex> stack{root_};
    while (!stack.empty()) {
      const Vertex v = stack.back();
      stack.pop_back();
      order.push_back(v);
      const auto& c = children_[v];
      for (auto it = c.rbegin(); it != c.rend(); ++it) stack.push_back(*it);
    }
    return order;
  }

  /// Number of vertices in the subtree of each vertex (index 0 unused).
  std::vector<std::size_t> subtree_sizes() const {
    std::vector<std::size_t> size(num_vertices() + 1, 1);
    size[0] = 0;
    const auto order = preorder();
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
      if (*it != root_) size[parent_[*it]] += size[*it];
    }
    return size;
  }

  friend bool operator==(const RootedTree& a, const RootedTree& b) {
    return a.root_ == b.root_ && a.tree_ == b.tree_;
  }

private:
  FreeTree tree_;
  std::vector<Vertex> parent_;
  std::vector<std::vector<Vertex>> children_;
  Vertex root_;
};

inline FreeTree from_edge_list(std::size_t n, std::span<const Edge> edges) {
  return FreeTree::from_edge_list(n, edges);
}
inline RootedTree from_head_vector(const HeadVector& h) { return RootedTree::from_head_vector(h); }
inline RootedTree from_head_vector(std::string_view text) {
  return RootedTree::from_head_vector(HeadVector::parse(text));
}
inline HeadVector to_head_vector(const RootedTree& t) { return t.to_head_vector(); }
inline RootedTree root_at(const FreeTree& t, Vertex r) { return RootedTree::root_at(t, r); }
inline const FreeTree& to_free(const RootedTree& t) { return t.free(); }

/// Path 1-2-...-n.
inline FreeTree path_tree(std::size_t n) {
  std::vector<Edge> es;
  for (Vertex v = 1; v < n; ++v) es.push_back({v, v + 1});
  return FreeTree::from_edge_list(n, es);
}

/// Star with hub 1 and leaves 2..n.
inline FreeTree star_tree(std::size_t n) {
  std::vector<Edge> es;
  for (Vertex v = 2; v <= n; ++v) es.push_back({1, v});
  return FreeTree::from_edge_list(n, es);
}

}  // namespace deptree
