#pragma once

#include <algorithm>
#include <cassert>
#include <cstdint>
#include <numeric>
#include <utility>
#include <vector>

#include "deptree/error.hpp"
#include "deptree/graphs.hpp"
#include "deptree/linarr/classify.hpp"
#include "deptree/linarr/metrics.hpp"
#include "deptree/properties/centre.hpp"

namespace deptree {

struct MinArrangementResult {
  std::uint64_t value = 0;
  Arrangement arrangement;
};

enum class UnconstrainedAlgorithm { shiloach, chung, exhaustive };
enum class PlanarAlgorithm { hochberg_stallmann, exhaustive };
enum class ProjectiveAlgorithm { gildea_temperley, exhaustive };

/// Largest n accepted by the exhaustive solvers unless overridden.
inline constexpr std::size_t default_exhaustive_limit = 10;

namespace detail {

inline void check_exhaustive_limit(std::size_t n, std::size_t limit) {
  if (n > limit) {
    throw Error(ErrorCode::SizeLimitExceeded, "exhaustive search limited to n <= " + std::to_string(limit) +
                                                  ", got n = " + std::to_string(n));
  }
}

/// Minimum over all permutations that satisfy `accept`.
template <typename Accept>
MinArrangementResult exhaustive_minimum(const FreeTree& t, std::size_t limit, Accept accept) {
  const auto n = t.num_vertices();
  check_exhaustive_limit(n, limit);
  std::vector<Vertex> order(n);
  std::iota(order.begin(), order.end(), Vertex{1});
  const auto edges = t.edges();
  std::vector<Position> pos(n + 1);
  MinArrangementResult best;
  bool found = false;
  do {
    for (std::size_t i = 0; i < n; ++i) pos[order[i]] = static_cast<Position>(i + 1);
    std::uint64_t d = 0;
    for (const Edge& e : edges) d += pos[e.u] > pos[e.v] ? pos[e.u] - pos[e.v] : pos[e.v] - pos[e.u];
    if (found && d >= best.value) continue;
    const Arrangement a = Arrangement::from_order(order);
    if (!accept(a)) continue;
    best = {d, a};
    found = true;
  } while (std::next_permutation(order.begin(), order.end()));
  return best;
}

/// Minimum linear arrangement by recursive decomposition around a centroid.
///
/// Free part: with centroid c and its two largest branches B1, B2, an
/// optimum places B1 at the left end (its root as far right as possible),
/// B2 mirrored at the right end and the rest of the tree in between,
/// itself arranged optimally. Anchored part (root r must connect to a
/// vertex further right): r's largest branch goes at the far left and the
/// remainder, containing r, is arranged freely after it.
///
/// The batched variant keeps stripping pairs of branches off the same
/// centroid for as long as it remains a centroid of what is left, nesting
/// each new pair inside the previous one.
class MinLinearArrangement {
public:
  struct Part {
    std::uint64_t cost = 0;
    std::vector<Vertex> order;
  };

  MinLinearArrangement(const FreeTree& t, bool batched)
      : t_(t), batched_(batched), comp_(t.num_vertices() + 1, 0), parent_(t.num_vertices() + 1, 0),
        size_(t.num_vertices() + 1, 0) {}

  Part solve() { return free_part(1); }

private:
  /// DFS over the component containing `root`; fills parent_ and size_.
  std::size_t explore(Vertex root) {
    const auto id = comp_[root];
    seen_.clear();
    parent_[root] = 0;
    std::vector<Vertex> stack{root};
    while (!stack.empty()) {
      const Vertex v = stack.back();
      stack.pop_back();
      seen_.push_back(v);
      size_[v] = 1;
      for (Vertex w : t_.neighbours(v)) {
        if (comp_[w] == id && w != parent_[v]) {
          parent_[w] = v;
          stack.push_back(w);
        }
      }
    }
    for (auto it = seen_.rbegin(); it != seen_.rend(); ++it) {
      if (*it != root) size_[parent_[*it]] += size_[*it];
    }
    return seen_.size();
  }

  /// Moves the branch at `sub_root` (seen from `cut`) into a new component.
  void split_off(Vertex sub_root, Vertex cut) {
    const auto old_id = comp_[sub_root];
    const auto id = ++next_comp_;
    std::vector<Vertex> stack{sub_root};
    comp_[sub_root] = id;
    while (!stack.empty()) {
      const Vertex v = stack.back();
      stack.pop_back();
      for (Vertex w : t_.neighbours(v)) {
        if (w != cut && comp_[w] == old_id) {
          comp_[w] = id;
          stack.push_back(w);
        }
      }
    }
  }

  Vertex find_centroid(Vertex any) {
    const auto n = explore(any);
    for (Vertex v : seen_) {
      std::size_t largest = n - size_[v];
      for (Vertex w : t_.neighbours(v)) {
        if (comp_[w] == comp_[v] && parent_[w] == v) largest = std::max(largest, size_[w]);
      }
      if (2 * largest <= n) return v;
    }
    return any;
  }

  /// Branches of `v` in its component as (size, neighbour), largest first.
  std::vector<std::pair<std::size_t, Vertex>> branches(Vertex v) {
    explore(v);
    std::vector<std::pair<std::size_t, Vertex>> b;
    for (Vertex w : t_.neighbours(v)) {
      if (comp_[w] == comp_[v]) b.emplace_back(size_[w], w);
    }
    std::sort(b.begin(), b.end(), [](const auto& x, const auto& y) {
      return x.first != y.first ? x.first > y.first : x.second < y.second;
    });
    return b;
  }

  Part free_part(Vertex any) {
    const auto n = explore(any);
    if (n == 1) return {0, {any}};
    const Vertex c = find_centroid(any);
    auto b = branches(c);
    if (b.size() == 1) {
      split_off(b[0].second, c);
      Part p = anchored(b[0].second);
      p.order.push_back(c);
      p.cost += 1;
      return p;
    }

    std::vector<Part> left, right;
    std::uint64_t cost = 0;
    std::size_t remaining = n;
    while (true) {
      const Vertex r1 = b[0].second, r2 = b[1].second;
      remaining -= b[0].first + b[1].first;
      split_off(r1, c);
      split_off(r2, c);
      left.push_back(anchored(r1));
      right.push_back(anchored(r2));
      cost += left.back().cost + right.back().cost + remaining + 1;
      if (!batched_ || remaining < 3) break;
      b = branches(c);
      if (2 * b[0].first > remaining) break;
    }

    Part mid = free_part(c);
    Part out;
    out.cost = cost + mid.cost;
    out.order.reserve(n);
    for (const Part& p : left) out.order.insert(out.order.end(), p.order.begin(), p.order.end());
    out.order.insert(out.order.end(), mid.order.begin(), mid.order.end());
    for (auto it = right.rbegin(); it != right.rend(); ++it) {
      out.order.insert(out.order.end(), it->order.rbegin(), it->order.rend());
    }
    return out;
  }

  /// Minimises D plus the number of vertices placed right of `r`.
  Part anchored(Vertex r) {
    const auto n = explore(r);
    if (n == 1) return {0, {r}};
    const auto b = branches(r);
    const Vertex r1 = b[0].second;
    split_off(r1, r);
    Part far = anchored(r1);
    Part rest = free_part(r);
    far.cost += rest.cost + rest.order.size();
    far.order.insert(far.order.end(), rest.order.begin(), rest.order.end());
    return far;
  }

  const FreeTree& t_;
  bool batched_;
  std::vector<std::uint32_t> comp_;
  std::uint32_t next_comp_ = 0;
  std::vector<Vertex> parent_;
  std::vector<std::size_t> size_;
  std::vector<Vertex> seen_;
};

/// Optimal projective order: children sorted by decreasing subtree size are
/// placed alternately on both sides, largest outermost. The root starts on
/// its left; any other vertex sends its largest child away from its parent.
inline std::vector<Vertex> projective_order(const RootedTree& t) {
  const auto size = t.subtree_sizes();
  std::vector<Vertex> out;
  out.reserve(t.num_vertices());

  enum class Side { none, left, right };
  // Iterative expansion: each item is either a vertex to emit or a subtree
  // to expand, processed from a stack in reverse.
  struct Item {
    Vertex v;
    Side side;
    bool expand;
  };
  std::vector<Item> stack{{t.root(), Side::none, true}};
  while (!stack.empty()) {
    const Item it = stack.back();
    stack.pop_back();
    if (!it.expand) {
      out.push_back(it.v);
      continue;
    }
    std::vector<Vertex> ch(t.children(it.v).begin(), t.children(it.v).end());
    std::stable_sort(ch.begin(), ch.end(), [&size](Vertex a, Vertex b) { return size[a] > size[b]; });
    std::vector<Vertex> left, right;  // both outermost first
    const bool first_left = it.side != Side::right;
    for (std::size_t i = 0; i < ch.size(); ++i) {
      ((i % 2 == 0) == first_left ? left : right).push_back(ch[i]);
    }
    // Emission order: left (outermost first), v, right (innermost first).
    std::vector<Item> seq;
    for (Vertex c : left) seq.push_back({c, Side::left, true});
    seq.push_back({it.v, Side::none, false});
    for (auto r = right.rbegin(); r != right.rend(); ++r) seq.push_back({*r, Side::right, true});
    for (auto r = seq.rbegin(); r != seq.rend(); ++r) stack.push_back(*r);
  }
  return out;
}

}  // namespace detail

inline MinArrangementResult min_D_unconstrained(const FreeTree& t,
                                                UnconstrainedAlgorithm algorithm = UnconstrainedAlgorithm::shiloach,
                                                std::size_t exhaustive_limit = default_exhaustive_limit) {
  if (algorithm == UnconstrainedAlgorithm::exhaustive) {
    return detail::exhaustive_minimum(t, exhaustive_limit, [](const Arrangement&) { return true; });
  }
  detail::MinLinearArrangement solver(t, algorithm == UnconstrainedAlgorithm::shiloach);
  auto part = solver.solve();
  MinArrangementResult r{part.cost, Arrangement::from_order(part.order)};
  assert(sum_edge_lengths(t, r.arrangement) == r.value);
  return r;
}

inline MinArrangementResult min_D_unconstrained(const RootedTree& t,
                                                UnconstrainedAlgorithm algorithm = UnconstrainedAlgorithm::shiloach,
                                                std::size_t exhaustive_limit = default_exhaustive_limit) {
  return min_D_unconstrained(t.free(), algorithm, exhaustive_limit);
}

inline MinArrangementResult min_D_projective(const RootedTree& t,
                                             ProjectiveAlgorithm algorithm = ProjectiveAlgorithm::gildea_temperley,
                                             std::size_t exhaustive_limit = default_exhaustive_limit) {
  if (algorithm == ProjectiveAlgorithm::exhaustive) {
    return detail::exhaustive_minimum(t.free(), exhaustive_limit,
                                      [&t](const Arrangement& a) { return is_projective(t, a); });
  }
  const auto a = Arrangement::from_order(detail::projective_order(t));
  return {sum_edge_lengths(t, a), a};
}

/// Planar optimum: the projective optimum when rooted at a centroid.
inline MinArrangementResult min_D_planar(const FreeTree& t,
                                         PlanarAlgorithm algorithm = PlanarAlgorithm::hochberg_stallmann,
                                         std::size_t exhaustive_limit = default_exhaustive_limit) {
  if (algorithm == PlanarAlgorithm::exhaustive) {
    return detail::exhaustive_minimum(t, exhaustive_limit, [&t](const Arrangement& a) { return is_planar(t, a); });
  }
  MinArrangementResult best;
  bool found = false;
  for (Vertex c : centroid(t).vertices) {
    auto r = min_D_projective(RootedTree::root_at(t, c));
    if (!found || r.value < best.value) {
      best = std::move(r);
      found = true;
    }
  }
  return best;
}

inline MinArrangementResult min_D_planar(const RootedTree& t,
                                         PlanarAlgorithm algorithm = PlanarAlgorithm::hochberg_stallmann,
                                         std::size_t exhaustive_limit = default_exhaustive_limit) {
  return min_D_planar(t.free(), algorithm, exhaustive_limit);
}

}  // namespace deptree
