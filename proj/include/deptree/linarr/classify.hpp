#pragma once

#include <vector>

#include "deptree/graphs.hpp"
#include "deptree/linarr/metrics.hpp"

namespace deptree {

struct ArrangementFlags {
  bool projective = false;
  bool planar = false;
  bool one_endpoint_crossing = false;

  friend bool operator==(const ArrangementFlags&, const ArrangementFlags&) = default;
};

/// True when some edge {u,v} has pos(u) < pos(r) < pos(v).
inline bool is_covered(const FreeTree& t, const Arrangement& a, Vertex r) {
  detail::check_sizes(t.num_vertices(), a);
  const Position pr = a.position(r);
  for (const Edge& e : t.edges()) {
    Position l = a.position(e.u), h = a.position(e.v);
    if (l > h) std::swap(l, h);
    if (l < pr && pr < h) return true;
  }
  return false;
}

inline bool is_planar(const FreeTree& t, const Arrangement& a) { return num_crossings(t, a) == 0; }

inline bool is_projective(const RootedTree& t, const Arrangement& a) {
  return is_planar(t.free(), a) && !is_covered(t.free(), a, t.root());
}

/// Every edge's crossing edges share a common vertex. O(m^2).
inline bool is_one_endpoint_crossing(const FreeTree& t, const Arrangement& a) {
  detail::check_sizes(t.num_vertices(), a);
  const auto spans = detail::edge_spans(t, a);
  for (std::size_t i = 0; i < spans.size(); ++i) {
    // Candidate common vertices: the endpoints of the first crossing edge.
    bool have_first = false;
    Vertex c1 = 0, c2 = 0;
    for (std::size_t j = 0; j < spans.size(); ++j) {
      if (i == j || !detail::spans_cross(spans[i], spans[j])) continue;
      const Vertex x = spans[j].u, y = spans[j].v;
      if (!have_first) {
        have_first = true;
        c1 = x;
        c2 = y;
        continue;
      }
      if (c1 != 0 && c1 != x && c1 != y) c1 = 0;
      if (c2 != 0 && c2 != x && c2 != y) c2 = 0;
      if (c1 == 0 && c2 == 0) return false;
    }
  }
  return true;
}

inline ArrangementFlags classify_arrangement(const RootedTree& t, const Arrangement& a) {
  ArrangementFlags f;
  f.planar = is_planar(t.free(), a);
  f.projective = f.planar && !is_covered(t.free(), a, t.root());
  f.one_endpoint_crossing = f.planar || is_one_endpoint_crossing(t.free(), a);
  return f;
}

}  // namespace deptree
