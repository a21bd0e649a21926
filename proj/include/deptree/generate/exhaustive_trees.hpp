#pragma once

#include <algorithm>
#include <iterator>
#include <optional>
#include <type_traits>
#include <vector>

#include "deptree/error.hpp"
#include "deptree/generate/counting.hpp"
#include "deptree/graphs.hpp"

namespace deptree {

namespace detail {

/// Decodes a Prüfer sequence over 1..n (length n - 2) into its tree.
inline FreeTree decode_pruefer(std::size_t n, const std::vector<Vertex>& seq) {
  if (n == 1) return FreeTree();
  std::vector<std::size_t> degree(n + 1, 1);
  for (Vertex x : seq) ++degree[x];
  std::vector<Edge> edges;
  edges.reserve(n - 1);
  // Linear-time decoding: `leaf` is the smallest current leaf.
  Vertex ptr = 1;
  while (degree[ptr] != 1) ++ptr;
  Vertex leaf = ptr;
  for (Vertex x : seq) {
    edges.push_back({leaf, x});
    if (--degree[x] == 1 && x < ptr) {
      leaf = x;
    } else {
      ++ptr;
      while (degree[ptr] != 1) ++ptr;
      leaf = ptr;
    }
    degree[edges.back().u] = 0;
  }
  edges.push_back({leaf, static_cast<Vertex>(n)});
  return FreeTree::from_edge_list(n, edges);
}

/// Rooted tree from a level sequence in preorder (root level first).
inline RootedTree from_level_sequence(const std::vector<std::size_t>& level) {
  const auto n = level.size();
  if (n == 1) return RootedTree();
  std::vector<Vertex> heads(n, 0);
  std::vector<Vertex> last_at(n + 1, 0);  // most recent vertex on each level
  const std::size_t base = level[0];
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t l = level[i] - base;
    if (l > 0) heads[i] = last_at[l - 1];
    last_at[l] = static_cast<Vertex>(i + 1);
  }
  return RootedTree::from_head_vector(HeadVector(std::move(heads)));
}

}  // namespace detail

/// Lazily enumerates every tree of a kind on n vertices exactly once.
///
/// Labeled kinds walk all Prüfer sequences (and all roots when rooted);
/// unlabeled rooted trees are generated as canonical level sequences in
/// reverse lexicographic order; unlabeled free trees by the
/// Wright-Richmond-Odlyzko-McKay successor rule on centre-rooted level
/// sequences. Each item is produced in O(n) amortised time.
class TreeEnumerator {
public:
  TreeEnumerator(TreeKind kind, std::size_t n) : kind_(kind), n_(n) {
    if (n == 0) throw Error(ErrorCode::OutOfRange, "trees need at least one vertex");
    if (kind_.labeled()) {
      if (n_ > 2) seq_.assign(n_ - 2, 1);
    } else if (kind_.rooted()) {
      level_.resize(n_);
      for (std::size_t i = 0; i < n_; ++i) level_[i] = i + 1;
    } else if (n_ > 1) {
      for (std::size_t i = 0; i <= n_ / 2; ++i) level_.push_back(i);
      for (std::size_t i = 1; i < (n_ + 1) / 2; ++i) level_.push_back(i);
      if (!next_free_tree()) done_ = true;
    }
  }

  TreeKind kind() const noexcept { return kind_; }
  std::size_t size() const noexcept { return n_; }
  bool done() const noexcept { return done_; }

  /// Current tree as rooted; free kinds are rooted at vertex 1.
  RootedTree rooted() const {
    if (kind_.labeled()) return RootedTree::root_at(detail::decode_pruefer(n_, seq_), root_);
    if (n_ == 1) return RootedTree();
    return detail::from_level_sequence(level_);
  }

  FreeTree free() const {
    if (kind_.labeled()) return detail::decode_pruefer(n_, seq_);
    return rooted().free();
  }

  void advance() {
    if (done_) return;
    if (kind_.labeled()) {
      if (kind_.rooted() && root_ < n_) {
        ++root_;
        return;
      }
      root_ = 1;
      // Odometer over Prüfer sequences.
      std::size_t i = seq_.size();
      while (i > 0 && seq_[i - 1] == n_) seq_[--i] = 1;
      if (i == 0) {
        done_ = true;
      } else {
        ++seq_[i - 1];
      }
      return;
    }
    if (n_ == 1) {
      done_ = true;
      return;
    }
    if (kind_.rooted()) {
      if (!next_rooted_sequence(level_)) done_ = true;
      return;
    }
    if (!next_rooted_sequence(level_) || !next_free_tree()) done_ = true;
  }

  /// Range support: `for (const auto& t : TreeEnumerator(...).rooted_trees())`.
  template <typename T>
  class Iterator {
  public:
    using value_type = T;
    using difference_type = std::ptrdiff_t;
    explicit Iterator(TreeEnumerator* e) : e_(e) { load(); }
    const T& operator*() const { return *current_; }
    const T* operator->() const { return &*current_; }
    Iterator& operator++() {
      e_->advance();
      load();
      return *this;
    }
    void operator++(int) { ++*this; }
    friend bool operator==(const Iterator& it, std::default_sentinel_t) { return it.e_->done(); }

  private:
    void load() {
      if (e_->done()) return;
      if constexpr (std::is_same_v<T, FreeTree>) {
        current_ = e_->free();
      } else {
        current_ = e_->rooted();
      }
    }
    TreeEnumerator* e_;
    std::optional<T> current_;
  };

  template <typename T>
  struct Range {
    TreeEnumerator* e;
    Iterator<T> begin() { return Iterator<T>(e); }
    std::default_sentinel_t end() { return {}; }
  };

  Range<FreeTree> free_trees() { return {this}; }
  Range<RootedTree> rooted_trees() { return {this}; }

private:
  /// Next rooted level sequence, modifying only positions from `p` on.
  /// Levels here may start at any base; the root is level[0].
  static bool next_rooted_sequence(std::vector<std::size_t>& level, std::size_t p) {
    if (p == 0) return false;
    std::size_t q = p - 1;
    while (level[q] != level[p] - 1) --q;
    for (std::size_t i = p; i < level.size(); ++i) level[i] = level[i - p + q];
    return true;
  }

  /// Beyer-Hedetniemi successor: last vertex deeper than a child of the
  /// root is moved up and the tail copies its parent's subtree.
  static bool next_rooted_sequence(std::vector<std::size_t>& level) {
    const std::size_t child_level = level[0] + 1;
    std::size_t p = level.size() - 1;
    while (p > 0 && level[p] == child_level) --p;
    return next_rooted_sequence(level, p);
  }

  /// Splits a centre-rooted sequence into the first root branch (levels
  /// shifted up by one) and the rest (root included).
  static void split(const std::vector<std::size_t>& level, std::vector<std::size_t>& left,
                    std::vector<std::size_t>& rest) {
    std::size_t m = level.size();
    bool one_found = false;
    for (std::size_t i = 0; i < level.size(); ++i) {
      if (level[i] == 1) {
        if (one_found) {
          m = i;
          break;
        }
        one_found = true;
      }
    }
    left.clear();
    rest.assign(1, 0);
    for (std::size_t i = 1; i < m; ++i) left.push_back(level[i] - 1);
    for (std::size_t i = m; i < level.size(); ++i) rest.push_back(level[i]);
  }

  /// Advances level_ to the next sequence that is the canonical encoding of
  /// a free tree, or reports exhaustion.
  bool next_free_tree() {
    std::vector<std::size_t> left, rest;
    split(level_, left, rest);
    const std::size_t left_height = *std::max_element(left.begin(), left.end());
    const std::size_t rest_height = *std::max_element(rest.begin(), rest.end());
    bool valid = rest_height >= left_height;
    if (valid && rest_height == left_height) {
      if (left.size() > rest.size()) {
        valid = false;
      } else if (left.size() == rest.size() && left > rest) {
        valid = false;
      }
    }
    if (valid) return true;

    const std::size_t p = left.size();
    const std::size_t old = level_[p];
    if (!next_rooted_sequence(level_, p)) return false;
    if (old > 2) {
      split(level_, left, rest);
      const std::size_t h = *std::max_element(left.begin(), left.end());
      const std::size_t len = h + 1;
      for (std::size_t i = 0; i < len; ++i) level_[level_.size() - len + i] = i + 1;
    }
    return true;
  }

  TreeKind kind_;
  std::size_t n_;
  bool done_ = false;
  std::vector<Vertex> seq_;         // labeled kinds
  Vertex root_ = 1;                 // labeled rooted
  std::vector<std::size_t> level_;  // unlabeled kinds
};

}  // namespace deptree
