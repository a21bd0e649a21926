#pragma once

// Brute-force reference implementations used only by the tests. They work
// on plain edge lists and position vectors and share no code with the
// library, so agreement between the two is meaningful.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace oracle {

using Edges = std::vector<std::pair<int, int>>;
/// pos[v] = position of vertex v (1-based; pos[0] unused).
using Positions = std::vector<int>;

inline std::vector<int> parse_heads(const std::string& text) {
  std::istringstream in(text);
  std::vector<int> h;
  int x;
  while (in >> x) h.push_back(x);
  return h;
}

/// (head, dependent) pairs of a head vector.
inline Edges edges_of(const std::vector<int>& heads) {
  Edges e;
  for (int i = 1; i <= static_cast<int>(heads.size()); ++i) {
    if (heads[i - 1] != 0) e.emplace_back(heads[i - 1], i);
  }
  return e;
}

inline int root_of(const std::vector<int>& heads) {
  for (int i = 0; i < static_cast<int>(heads.size()); ++i) {
    if (heads[i] == 0) return i + 1;
  }
  return 0;
}

inline Positions identity_positions(int n) {
  Positions p(n + 1);
  std::iota(p.begin(), p.end(), 0);
  return p;
}

inline long D(const Edges& edges, const Positions& pos) {
  long d = 0;
  for (auto [u, v] : edges) d += std::abs(pos[u] - pos[v]);
  return d;
}

inline bool cross(std::pair<int, int> a, std::pair<int, int> b, const Positions& pos) {
  std::set<int> ends{a.first, a.second, b.first, b.second};
  if (ends.size() < 4) return false;
  int l1 = std::min(pos[a.first], pos[a.second]), r1 = std::max(pos[a.first], pos[a.second]);
  int l2 = std::min(pos[b.first], pos[b.second]), r2 = std::max(pos[b.first], pos[b.second]);
  return (l1 < l2 && l2 < r1 && r1 < r2) || (l2 < l1 && l1 < r2 && r2 < r1);
}

inline long C(const Edges& edges, const Positions& pos) {
  long c = 0;
  for (std::size_t i = 0; i < edges.size(); ++i) {
    for (std::size_t j = i + 1; j < edges.size(); ++j) c += cross(edges[i], edges[j], pos);
  }
  return c;
}

inline bool covered(const Edges& edges, const Positions& pos, int r) {
  for (auto [u, v] : edges) {
    if (std::min(pos[u], pos[v]) < pos[r] && pos[r] < std::max(pos[u], pos[v])) return true;
  }
  return false;
}

inline bool projective(const Edges& edges, const Positions& pos, int root) {
  return C(edges, pos) == 0 && !covered(edges, pos, root);
}

/// For every edge, some vertex is shared by all edges crossing it.
inline bool one_endpoint_crossing(const Edges& edges, const Positions& pos) {
  for (const auto& e : edges) {
    std::vector<std::pair<int, int>> crossing;
    for (const auto& f : edges) {
      if (cross(e, f, pos)) crossing.push_back(f);
    }
    if (crossing.empty()) continue;
    bool ok = false;
    for (int cand : {crossing[0].first, crossing[0].second}) {
      bool all = true;
      for (const auto& f : crossing) all = all && (f.first == cand || f.second == cand);
      ok = ok || all;
    }
    if (!ok) return false;
  }
  return true;
}

/// Largest set of pairwise vertex-disjoint edges, by exhaustive search.
inline int max_disjoint(const Edges& edges, std::size_t i = 0, std::set<int> used = {}) {
  if (i == edges.size()) return 0;
  int best = max_disjoint(edges, i + 1, used);
  auto [u, v] = edges[i];
  if (!used.count(u) && !used.count(v)) {
    used.insert(u);
    used.insert(v);
    best = std::max(best, 1 + max_disjoint(edges, i + 1, used));
  }
  return best;
}

/// (size, weight) per gap 1..n-1.
inline std::vector<std::pair<int, int>> flux(const Edges& edges, const Positions& pos, int n) {
  std::vector<std::pair<int, int>> out;
  for (int g = 1; g < n; ++g) {
    Edges span;
    for (auto [u, v] : edges) {
      if (std::min(pos[u], pos[v]) <= g && g < std::max(pos[u], pos[v])) span.emplace_back(u, v);
    }
    out.emplace_back(static_cast<int>(span.size()), max_disjoint(span));
  }
  return out;
}

inline long Q(const Edges& edges) {
  long q = 0;
  for (std::size_t i = 0; i < edges.size(); ++i) {
    for (std::size_t j = i + 1; j < edges.size(); ++j) {
      std::set<int> s{edges[i].first, edges[i].second, edges[j].first, edges[j].second};
      q += s.size() == 4;
    }
  }
  return q;
}

/// Calls f(pos) for all n! arrangements.
inline void for_each_arrangement(int n, const std::function<void(const Positions&)>& f) {
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 1);
  Positions pos(n + 1, 0);
  do {
    for (int i = 0; i < n; ++i) pos[order[i]] = i + 1;
    f(pos);
  } while (std::next_permutation(order.begin(), order.end()));
}

inline std::vector<std::vector<int>> adjacency(int n, const Edges& edges) {
  std::vector<std::vector<int>> adj(n + 1);
  for (auto [u, v] : edges) {
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  return adj;
}

inline std::vector<int> degrees(int n, const Edges& edges) {
  std::vector<int> d(n + 1, 0);
  for (auto [u, v] : edges) ++d[u], ++d[v];
  return d;
}

/// Nested-parenthesis code of the tree rooted at r (recursive AHU).
inline std::string ahu(const std::vector<std::vector<int>>& adj, int r, int parent = 0) {
  std::vector<std::string> kids;
  for (int w : adj[r]) {
    if (w != parent) kids.push_back(ahu(adj, w, r));
  }
  std::sort(kids.begin(), kids.end());
  std::string s = "(";
  for (auto& k : kids) s += k;
  return s + ")";
}

/// Free code: smallest rooted code over all possible roots.
inline std::string free_code(int n, const Edges& edges) {
  const auto adj = adjacency(n, edges);
  std::string best;
  for (int r = 1; r <= n; ++r) {
    auto s = ahu(adj, r);
    if (best.empty() || s < best) best = s;
  }
  return best;
}

/// Labeled trees on 1..n rooted at 1 whose parent labels are smaller than
/// the child's: every rooted shape appears at least once.
inline std::vector<std::vector<int>> increasing_trees(int n) {
  std::vector<std::vector<int>> out;
  std::vector<int> heads(n, 0);
  std::function<void(int)> rec = [&](int i) {
    if (i > n) {
      out.push_back(heads);
      return;
    }
    for (int p = 1; p < i; ++p) {
      heads[i - 1] = p;
      rec(i + 1);
    }
  };
  rec(2);
  return out;
}

/// Parent functions on 1..n with root `root` that form trees, i.e. every
/// labeled tree rooted at `root`; calls f(heads).
inline void for_each_labeled_rooted(int n, int root, const std::function<void(const std::vector<int>&)>& f) {
  std::vector<int> heads(n, 0);
  std::vector<int> others;
  for (int v = 1; v <= n; ++v) {
    if (v != root) others.push_back(v);
  }
  std::function<void(std::size_t)> rec = [&](std::size_t k) {
    if (k == others.size()) {
      for (int v : others) {
        int x = v, steps = 0;
        while (x != root && steps <= n) x = heads[x - 1], ++steps;
        if (x != root) return;
      }
      f(heads);
      return;
    }
    const int v = others[k];
    for (int p = 1; p <= n; ++p) {
      if (p == v) continue;
      heads[v - 1] = p;
      rec(k + 1);
    }
  };
  rec(0);
}

/// Backtracking isomorphism search: extends a vertex map in breadth-first
/// order of `a`, only trying images adjacent to the image of the parent and
/// of matching degree. rb = 0 means free (any image for a's first vertex).
inline bool isomorphic(int n, const Edges& a, int ra, int nb, const Edges& b, int rb) {
  if (n != nb) return false;
  if (n == 1) return true;
  const auto adj_a = adjacency(n, a), adj_b = adjacency(n, b);
  const auto deg_a = degrees(n, a), deg_b = degrees(n, b);
  auto sa = deg_a, sb = deg_b;
  std::sort(sa.begin(), sa.end());
  std::sort(sb.begin(), sb.end());
  if (sa != sb) return false;

  const int start = ra ? ra : 1;
  std::vector<int> order{start}, parent(n + 1, 0);
  std::vector<bool> seen(n + 1, false);
  seen[start] = true;
  for (std::size_t i = 0; i < order.size(); ++i) {
    for (int w : adj_a[order[i]]) {
      if (!seen[w]) seen[w] = true, parent[w] = order[i], order.push_back(w);
    }
  }
  std::vector<int> image(n + 1, 0);
  std::vector<bool> used(n + 1, false);
  std::function<bool(std::size_t)> rec = [&](std::size_t i) -> bool {
    if (i == order.size()) return true;
    const int v = order[i];
    std::vector<int> candidates;
    if (i == 0) {
      if (rb) {
        candidates.push_back(rb);
      } else {
        for (int x = 1; x <= n; ++x) candidates.push_back(x);
      }
    } else {
      candidates = adj_b[image[parent[v]]];
    }
    for (int x : candidates) {
      if (used[x] || deg_a[v] != deg_b[x]) continue;
      image[v] = x;
      used[x] = true;
      if (rec(i + 1)) return true;
      used[x] = false;
    }
    return false;
  };
  return rec(0);
}

inline std::vector<int> distances_from(int n, const std::vector<std::vector<int>>& adj, int s) {
  std::vector<int> d(n + 1, -1), q{s};
  d[s] = 0;
  for (std::size_t i = 0; i < q.size(); ++i) {
    for (int w : adj[q[i]]) {
      if (d[w] < 0) d[w] = d[q[i]] + 1, q.push_back(w);
    }
  }
  return d;
}

inline std::vector<int> centre(int n, const Edges& edges) {
  const auto adj = adjacency(n, edges);
  std::vector<int> ecc(n + 1, 0);
  for (int v = 1; v <= n; ++v) {
    auto d = distances_from(n, adj, v);
    ecc[v] = *std::max_element(d.begin() + 1, d.end());
  }
  const int best = *std::min_element(ecc.begin() + 1, ecc.end());
  std::vector<int> out;
  for (int v = 1; v <= n; ++v) {
    if (ecc[v] == best) out.push_back(v);
  }
  return out;
}

/// Largest component left after deleting v.
inline int largest_remainder(int n, const Edges& edges, int v) {
  Edges rest;
  for (auto e : edges) {
    if (e.first != v && e.second != v) rest.push_back(e);
  }
  const auto adj = adjacency(n, rest);
  std::vector<bool> seen(n + 1, false);
  seen[v] = true;
  int best = 0;
  for (int s = 1; s <= n; ++s) {
    if (seen[s]) continue;
    int size = 0;
    std::vector<int> st{s};
    seen[s] = true;
    while (!st.empty()) {
      int x = st.back();
      st.pop_back();
      ++size;
      for (int w : adj[x]) {
        if (!seen[w]) seen[w] = true, st.push_back(w);
      }
    }
    best = std::max(best, size);
  }
  return best;
}

inline std::vector<int> centroid(int n, const Edges& edges) {
  std::vector<int> r(n + 1);
  for (int v = 1; v <= n; ++v) r[v] = largest_remainder(n, edges, v);
  const int best = *std::min_element(r.begin() + 1, r.end());
  std::vector<int> out;
  for (int v = 1; v <= n; ++v) {
    if (r[v] == best) out.push_back(v);
  }
  return out;
}

/// Non-leaf vertices induce a path (or nothing).
inline bool caterpillar(int n, const Edges& edges) {
  const auto deg = degrees(n, edges);
  Edges spine;
  int inner = 0;
  for (int v = 1; v <= n; ++v) inner += deg[v] >= 2;
  for (auto [u, v] : edges) {
    if (deg[u] >= 2 && deg[v] >= 2) spine.emplace_back(u, v);
  }
  if (inner <= 1) return true;
  const auto d = degrees(n, spine);
  return static_cast<int>(spine.size()) == inner - 1 && *std::max_element(d.begin(), d.end()) <= 2;
}

/// Depth sum / (n - 1).
inline std::pair<long, long> mhd(const std::vector<int>& heads) {
  long sum = 0;
  for (int i = 1; i <= static_cast<int>(heads.size()); ++i) {
    int x = i;
    while (heads[x - 1] != 0) x = heads[x - 1], ++sum;
  }
  return {sum, static_cast<long>(heads.size()) - 1};
}

}  // namespace oracle
