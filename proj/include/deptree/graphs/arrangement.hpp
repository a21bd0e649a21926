#pragma once

#include <numeric>
#include <span>
#include <string>
#include <vector>

#include "deptree/error.hpp"
#include "deptree/graphs/types.hpp"

namespace deptree {

/// Linear arrangement: a bijection between vertices 1..n and positions 1..n.
class Arrangement {
public:
  Arrangement() : Arrangement(identity(1)) {}

  static Arrangement identity(std::size_t n) {
    Arrangement a(n);
    std::iota(a.position_.begin(), a.position_.end(), Position{0});
    a.vertex_ = a.position_;
    return a;
  }

  /// `positions[i]` is the position of vertex i+1.
  static Arrangement from_positions(std::span<const Position> positions) {
    const auto n = positions.size();
    Arrangement a(n);
    for (std::size_t i = 0; i < n; ++i) {
      const Position p = positions[i];
      if (p < 1 || p > n || a.vertex_[p] != 0) {
        throw Error(ErrorCode::InvalidArgument, "positions do not form a permutation of 1..n");
      }
      a.position_[i + 1] = p;
      a.vertex_[p] = static_cast<Vertex>(i + 1);
    }
    return a;
  }

  /// `order[i]` is the vertex placed at position i+1.
  static Arrangement from_order(std::span<const Vertex> order) {
    const auto n = order.size();
    Arrangement a(n);
    for (std::size_t i = 0; i < n; ++i) {
      const Vertex v = order[i];
      if (v < 1 || v > n || a.position_[v] != 0) {
        throw Error(ErrorCode::InvalidArgument, "order is not a permutation of 1..n");
      }
      a.vertex_[i + 1] = v;
      a.position_[v] = static_cast<Position>(i + 1);
    }
    return a;
  }

  std::size_t size() const noexcept { return position_.size() - 1; }
  Position position(Vertex v) const { return position_[v]; }
  Vertex vertex_at(Position p) const { return vertex_[p]; }

  /// Positions of vertices 1..n, in vertex order.
  std::vector<Position> positions() const { return {position_.begin() + 1, position_.end()}; }
  /// Vertices in left-to-right order.
  std::vector<Vertex> order() const { return {vertex_.begin() + 1, vertex_.end()}; }

  Arrangement mirrored() const {
    const auto n = size();
    Arrangement a(n);
    for (Vertex v = 1; v <= n; ++v) {
      const Position p = static_cast<Position>(n + 1 - position_[v]);
      a.position_[v] = p;
      a.vertex_[p] = v;
    }
    return a;
  }

  std::string to_string() const {
    std::string s;
    for (std::size_t v = 1; v < position_.size(); ++v) {
      if (v > 1) s += ' ';
      s += std::to_string(position_[v]);
    }
    return s;
  }

  friend bool operator==(const Arrangement& a, const Arrangement& b) { return a.position_ == b.position_; }
  friend bool operator<(const Arrangement& a, const Arrangement& b) { return a.position_ < b.position_; }

private:
  explicit Arrangement(std::size_t n) : position_(n + 1, 0), vertex_(n + 1, 0) {}

  std::vector<Position> position_;  // index 0 unused
  std::vector<Vertex> vertex_;      // index 0 unused
};

}  // namespace deptree
