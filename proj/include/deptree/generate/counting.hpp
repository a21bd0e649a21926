#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "deptree/error.hpp"
#include "deptree/numeric.hpp"

namespace deptree {

enum class Labeling { labeled, unlabeled };
enum class Rooting { free, rooted };

struct TreeKind {
  Labeling labeling = Labeling::unlabeled;
  Rooting rooting = Rooting::free;

  bool rooted() const noexcept { return rooting == Rooting::rooted; }
  bool labeled() const noexcept { return labeling == Labeling::labeled; }

  /// "labeled-free", "labeled-rooted", "unlabeled-free" or "unlabeled-rooted".
  std::string name() const {
    return std::string(labeled() ? "labeled" : "unlabeled") + (rooted() ? "-rooted" : "-free");
  }

  static TreeKind parse(std::string_view s) {
    if (s == "labeled-free") return {Labeling::labeled, Rooting::free};
    if (s == "labeled-rooted") return {Labeling::labeled, Rooting::rooted};
    if (s == "unlabeled-free") return {Labeling::unlabeled, Rooting::free};
    if (s == "unlabeled-rooted") return {Labeling::unlabeled, Rooting::rooted};
    throw Error(ErrorCode::InvalidArgument, "unknown tree kind '" + std::string(s) + "'");
  }

  friend bool operator==(const TreeKind&, const TreeKind&) = default;
};

inline constexpr TreeKind labeled_free{Labeling::labeled, Rooting::free};
inline constexpr TreeKind labeled_rooted{Labeling::labeled, Rooting::rooted};
inline constexpr TreeKind unlabeled_free{Labeling::unlabeled, Rooting::free};
inline constexpr TreeKind unlabeled_rooted{Labeling::unlabeled, Rooting::rooted};

/// Counts of unlabeled rooted trees and of forests of them, grown on demand.
///
/// rooted(k) is the number of rooted trees on k vertices. forest(m, k) is
/// the number of forests on k vertices whose trees all have at most m
/// vertices; with m >= k it equals rooted(k + 1). Both obey
///   k * F(k) = sum_{j=1..k} (sum_{d | j, d <= m} d * rooted(d)) * F(k - j).
class UnlabeledCounts {
public:
  const BigInt& rooted(std::size_t k) {
    grow(k);
    return rooted_[k];
  }

  /// Forests on k vertices with every tree of size at most `max_part`.
  const BigInt& forest(std::size_t max_part, std::size_t k) {
    if (max_part >= k) return rooted(k + 1);
    auto& table = restricted_[max_part];
    if (table.empty()) table.push_back(1);
    while (table.size() <= k) {
      const std::size_t s = table.size();
      grow(std::min(max_part, s));
      BigInt sum = 0;
      for (std::size_t j = 1; j <= s; ++j) sum += divisor_sum(j, max_part) * table[s - j];
      table.push_back(sum / s);
    }
    return table[k];
  }

private:
  /// sum over divisors d of j with d <= m of d * rooted(d).
  BigInt divisor_sum(std::size_t j, std::size_t m) const {
    BigInt s = 0;
    for (std::size_t d = 1; d <= std::min(j, m); ++d) {
      if (j % d == 0) s += BigInt(d) * rooted_[d];
    }
    return s;
  }

  void grow(std::size_t k) {
    if (rooted_.empty()) rooted_ = {0, 1};  // rooted(0) = 0, rooted(1) = 1
    while (rooted_.size() <= k) {
      // rooted(s) = unrestricted forests on s - 1 vertices.
      const std::size_t f = rooted_.size() - 1;
      BigInt sum = 0;
      for (std::size_t j = 1; j <= f; ++j) sum += divisor_sum(j, j) * rooted_[f - j + 1];
      rooted_.push_back(sum / f);
    }
  }

  std::vector<BigInt> rooted_;
  std::map<std::size_t, std::vector<BigInt>> restricted_;
};

/// Number of trees of the given kind on n vertices.
inline BigInt count_trees(TreeKind kind, std::size_t n) {
  if (n == 0) throw Error(ErrorCode::OutOfRange, "trees need at least one vertex");
  if (kind.labeled()) {
    if (kind.rooted()) return power(n, n - 1);
    return n == 1 ? BigInt(1) : power(n, n - 2);
  }
  UnlabeledCounts c;
  if (kind.rooted()) return c.rooted(n);
  // Trees with a single centroid are rooted trees whose root branches all
  // have fewer than n/2 vertices; trees with two centroids are unordered
  // pairs of rooted trees on n/2 vertices joined at their roots.
  BigInt total = c.forest((n - 1) / 2, n - 1);
  if (n % 2 == 0) {
    const BigInt& r = c.rooted(n / 2);
    total += r * (r + 1) / 2;
  }
  return total;
}

}  // namespace deptree
