#pragma once

#include <memory>
#include <vector>

#include "deptree/error.hpp"
#include "deptree/generate/counting.hpp"
#include "deptree/generate/exhaustive_trees.hpp"
#include "deptree/generate/rng.hpp"
#include "deptree/graphs.hpp"

namespace deptree {

/// Uniform sampler for trees of one kind. Counting tables for the unlabeled
/// kinds are kept between draws, so reuse one sampler for many samples.
///
/// Unlabeled rooted trees: the root's forest is built by picking a tree
/// size d and a multiplicity j with probability proportional to
/// d * rooted(d) * forest(k - j*d), attaching j copies of one random d-tree
/// and recursing on the remaining k - j*d vertices. Unlabeled free trees
/// are split by their centroid count: one centroid means a rooted tree
/// whose root branches are all smaller than n/2; two centroids means an
/// unordered pair of rooted (n/2)-trees joined by an edge.
class RandomTreeGenerator {
public:
  RandomTreeGenerator(TreeKind kind, std::size_t n) : kind_(kind), n_(n) {
    if (n == 0) throw Error(ErrorCode::OutOfRange, "trees need at least one vertex");
  }

  TreeKind kind() const noexcept { return kind_; }
  std::size_t size() const noexcept { return n_; }

  /// Next tree. Free kinds are returned rooted at vertex 1.
  RootedTree rooted(Rng& rng) {
    if (n_ == 1) return RootedTree();
    if (kind_.labeled()) {
      std::vector<Vertex> seq(n_ >= 2 ? n_ - 2 : 0);
      for (auto& x : seq) x = static_cast<Vertex>(rng.between(1, n_));
      FreeTree t = detail::decode_pruefer(n_, seq);
      const Vertex root = kind_.rooted() ? static_cast<Vertex>(rng.between(1, n_)) : 1;
      return RootedTree::root_at(std::move(t), root);
    }
    std::vector<Vertex> parent;  // 0-based; parent[0] unused
    if (kind_.rooted()) {
      parent.push_back(0);
      forest(parent, 0, n_ - 1, n_ - 1, rng);
    } else {
      free_unlabeled(parent, rng);
    }
    std::vector<Vertex> heads(n_);
    for (std::size_t i = 1; i < n_; ++i) heads[i] = parent[i] + 1;
    heads[0] = 0;
    return RootedTree::from_head_vector(HeadVector(std::move(heads)));
  }

  FreeTree free(Rng& rng) { return rooted(rng).free(); }

private:
  /// Appends a uniform forest on k vertices, trees of size at most m, all
  /// hanging from `root` (an index already in `parent`).
  void forest(std::vector<Vertex>& parent, Vertex root, std::size_t k, std::size_t m, Rng& rng) {
    while (k > 0) {
      const BigInt total = BigInt(k) * counts_.forest(m, k);
      BigInt pick = rng.below(total);
      std::size_t chosen_d = 0, chosen_j = 0;
      for (std::size_t d = 1; d <= std::min(m, k) && chosen_d == 0; ++d) {
        const BigInt dr = BigInt(d) * counts_.rooted(d);
        for (std::size_t j = 1; j * d <= k; ++j) {
          const BigInt w = dr * counts_.forest(m, k - j * d);
          if (pick < w) {
            chosen_d = d;
            chosen_j = j;
            break;
          }
          pick -= w;
        }
      }
      // One random d-tree, copied j times under `root`.
      std::vector<Vertex> sub{0};
      forest(sub, 0, chosen_d - 1, chosen_d - 1, rng);
      for (std::size_t c = 0; c < chosen_j; ++c) append_copy(parent, sub, root);
      k -= chosen_j * chosen_d;
    }
  }

  static void append_copy(std::vector<Vertex>& parent, const std::vector<Vertex>& sub, Vertex attach) {
    const auto offset = static_cast<Vertex>(parent.size());
    parent.push_back(attach);
    for (std::size_t i = 1; i < sub.size(); ++i) parent.push_back(sub[i] + offset);
  }

  void free_unlabeled(std::vector<Vertex>& parent, Rng& rng) {
    const std::size_t m = (n_ - 1) / 2;
    const BigInt one_centroid = counts_.forest(m, n_ - 1);
    BigInt two_centroids = 0;
    BigInt r = 0;
    if (n_ % 2 == 0) {
      r = counts_.rooted(n_ / 2);
      two_centroids = r * (r + 1) / 2;
    }
    if (rng.below(one_centroid + two_centroids) < one_centroid) {
      parent.push_back(0);
      forest(parent, 0, n_ - 1, m, rng);
      return;
    }
    const std::size_t half = n_ / 2;
    std::vector<Vertex> a{0};
    forest(a, 0, half - 1, half - 1, rng);
    std::vector<Vertex> b = a;
    if (rng.below(r + 1) != 0) {
      b.assign(1, 0);
      forest(b, 0, half - 1, half - 1, rng);
    }
    parent = a;
    append_copy(parent, b, 0);
  }

  TreeKind kind_;
  std::size_t n_;
  UnlabeledCounts counts_;
};

inline RootedTree random_rooted_tree(TreeKind kind, std::size_t n, Rng& rng) {
  return RandomTreeGenerator(kind, n).rooted(rng);
}

inline FreeTree random_free_tree(TreeKind kind, std::size_t n, Rng& rng) {
  return RandomTreeGenerator(kind, n).free(rng);
}

}  // namespace deptree
