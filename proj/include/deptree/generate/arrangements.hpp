#pragma once

#include <algorithm>
#include <numeric>
#include <string>
#include <string_view>
#include <vector>

#include "deptree/error.hpp"
#include "deptree/generate/rng.hpp"
#include "deptree/graphs.hpp"
#include "deptree/numeric.hpp"

namespace deptree {

enum class Constraint { unconstrained, planar, projective };

inline std::string_view to_string(Constraint c) {
  switch (c) {
    case Constraint::unconstrained: return "unconstrained";
    case Constraint::planar: return "planar";
    case Constraint::projective: return "projective";
  }
  return "";
}

inline Constraint parse_constraint(std::string_view s) {
  if (s == "unconstrained") return Constraint::unconstrained;
  if (s == "planar") return Constraint::planar;
  if (s == "projective") return Constraint::projective;
  throw Error(ErrorCode::InvalidArgument, "unknown constraint '" + std::string(s) + "'");
}

/// Largest n accepted by ArrangementEnumerator unless overridden.
inline constexpr std::size_t default_arrangement_limit = 12;

/// Number of arrangements of `t` satisfying the constraint:
/// n! unconstrained, prod_v (children(v) + 1)! projective,
/// n * prod_v deg(v)! planar.
inline BigInt count_arrangements(const RootedTree& t, Constraint c) {
  const auto n = t.num_vertices();
  BigInt total = 1;
  switch (c) {
    case Constraint::unconstrained: return factorial(n);
    case Constraint::projective:
      for (Vertex v = 1; v <= n; ++v) total *= factorial(t.out_degree(v) + 1);
      return total;
    case Constraint::planar:
      for (Vertex v = 1; v <= n; ++v) total *= factorial(t.free().degree(v));
      return total * n;
  }
  return total;
}

inline BigInt count_arrangements(const FreeTree& t, Constraint c) {
  if (c == Constraint::projective) throw Error(ErrorCode::KindMismatch, "projective arrangements need a root");
  return count_arrangements(RootedTree::root_at(t, 1), c);
}

namespace detail {

/// Expands per-vertex blocks into a vertex order. block[v] lists v together
/// with its children in the order they appear.
inline std::vector<Vertex> expand_blocks(Vertex root, const std::vector<std::vector<Vertex>>& block) {
  std::vector<Vertex> order;
  order.reserve(block.size() - 1);
  struct Frame {
    Vertex v;
    std::size_t i;
  };
  std::vector<Frame> stack{{root, 0}};
  while (!stack.empty()) {
    Frame& f = stack.back();
    if (f.i == block[f.v].size()) {
      stack.pop_back();
      continue;
    }
    const Vertex x = block[f.v][f.i++];
    if (x == f.v) {
      order.push_back(x);
    } else {
      stack.push_back({x, 0});
    }
  }
  return order;
}

inline std::vector<std::vector<Vertex>> initial_blocks(const RootedTree& t, bool root_first) {
  std::vector<std::vector<Vertex>> block(t.num_vertices() + 1);
  for (Vertex v = 1; v <= t.num_vertices(); ++v) {
    block[v].push_back(v);
    for (Vertex c : t.children(v)) block[v].push_back(c);
    if (!(root_first && v == t.root())) std::sort(block[v].begin(), block[v].end());
  }
  return block;
}

}  // namespace detail

/// Lazily enumerates every arrangement of a tree under a constraint.
///
/// Projective arrangements correspond one-to-one to choices of an order for
/// each vertex's block (the vertex and its children). Planar arrangements
/// correspond one-to-one to a choice of first vertex r plus a projective
/// arrangement of the tree rooted at r in which r comes first.
class ArrangementEnumerator {
public:
  ArrangementEnumerator(const RootedTree& t, Constraint c, std::size_t limit = default_arrangement_limit)
      : tree_(t), constraint_(c) {
    const auto n = t.num_vertices();
    if (n > limit) {
      throw Error(ErrorCode::SizeLimitExceeded,
                  "arrangement enumeration limited to n <= " + std::to_string(limit));
    }
    switch (c) {
      case Constraint::unconstrained:
        order_.resize(n);
        std::iota(order_.begin(), order_.end(), Vertex{1});
        break;
      case Constraint::projective: block_ = detail::initial_blocks(tree_, false); break;
      case Constraint::planar:
        planar_root_ = 1;
        rooted_ = RootedTree::root_at(tree_.free(), planar_root_);
        block_ = detail::initial_blocks(rooted_, true);
        break;
    }
  }

  ArrangementEnumerator(const FreeTree& t, Constraint c, std::size_t limit = default_arrangement_limit)
      : ArrangementEnumerator(RootedTree::root_at(t, 1), check_free(c), limit) {}

  bool done() const noexcept { return done_; }

  Arrangement current() const {
    switch (constraint_) {
      case Constraint::unconstrained: return Arrangement::from_order(order_);
      case Constraint::projective: return Arrangement::from_order(detail::expand_blocks(tree_.root(), block_));
      case Constraint::planar: return Arrangement::from_order(detail::expand_blocks(planar_root_, block_));
    }
    return {};
  }

  void advance() {
    if (done_) return;
    switch (constraint_) {
      case Constraint::unconstrained:
        done_ = !std::next_permutation(order_.begin(), order_.end());
        break;
      case Constraint::projective: done_ = !step_blocks(0); break;
      case Constraint::planar:
        if (!step_blocks(planar_root_)) {
          if (planar_root_ == tree_.num_vertices()) {
            done_ = true;
          } else {
            ++planar_root_;
            rooted_ = RootedTree::root_at(tree_.free(), planar_root_);
            block_ = detail::initial_blocks(rooted_, true);
          }
        }
        break;
    }
  }

private:
  static Constraint check_free(Constraint c) {
    if (c == Constraint::projective) throw Error(ErrorCode::KindMismatch, "projective arrangements need a root");
    return c;
  }

  /// Odometer step over block permutations. The block of `fixed_root`
  /// keeps its first element in place.
  bool step_blocks(Vertex fixed_root) {
    for (Vertex v = 1; v < block_.size(); ++v) {
      auto begin = block_[v].begin();
      if (v == fixed_root) ++begin;
      if (std::next_permutation(begin, block_[v].end())) return true;
    }
    return false;
  }

  RootedTree tree_;
  Constraint constraint_;
  bool done_ = false;
  std::vector<Vertex> order_;
  std::vector<std::vector<Vertex>> block_;
  Vertex planar_root_ = 0;
  RootedTree rooted_;
};

/// Uniformly random arrangement under a constraint.
inline Arrangement random_arrangement(const RootedTree& t, Constraint c, Rng& rng) {
  const auto n = t.num_vertices();
  auto shuffle = [&rng](auto begin, auto end) {
    const auto len = static_cast<std::uint64_t>(end - begin);
    for (std::uint64_t i = len; i > 1; --i) std::iter_swap(begin + (i - 1), begin + rng.below(i));
  };
  switch (c) {
    case Constraint::unconstrained: {
      std::vector<Vertex> order(n);
      std::iota(order.begin(), order.end(), Vertex{1});
      shuffle(order.begin(), order.end());
      return Arrangement::from_order(order);
    }
    case Constraint::projective: {
      auto block = detail::initial_blocks(t, false);
      for (Vertex v = 1; v <= n; ++v) shuffle(block[v].begin(), block[v].end());
      return Arrangement::from_order(detail::expand_blocks(t.root(), block));
    }
    case Constraint::planar: {
      // Every first vertex admits the same number of completions.
      const auto r = static_cast<Vertex>(rng.between(1, n));
      const RootedTree rt = RootedTree::root_at(t.free(), r);
      auto block = detail::initial_blocks(rt, true);
      for (Vertex v = 1; v <= n; ++v) shuffle(block[v].begin() + (v == r ? 1 : 0), block[v].end());
      return Arrangement::from_order(detail::expand_blocks(r, block));
    }
  }
  return {};
}

inline Arrangement random_arrangement(const FreeTree& t, Constraint c, Rng& rng) {
  if (c == Constraint::projective) throw Error(ErrorCode::KindMismatch, "projective arrangements need a root");
  return random_arrangement(RootedTree::root_at(t, 1), c, rng);
}

}  // namespace deptree
