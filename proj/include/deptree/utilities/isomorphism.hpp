#pragma once

#include <algorithm>
#include <map>
#include <string>
#include <vector>

#include "deptree/graphs.hpp"
#include "deptree/properties/centre.hpp"

namespace deptree {

/// Canonical code of a rooted tree: a leaf is "10" and any other vertex is
/// "1", followed by its children's codes in increasing lexicographic order,
/// followed by "0". Two rooted trees are isomorphic iff their codes match.
inline std::string canonical_code(const RootedTree& t) {
  const auto order = t.preorder();
  std::vector<std::string> code(t.num_vertices() + 1);
  std::vector<std::string> parts;
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    const Vertex v = *it;
    parts.clear();
    for (Vertex c : t.children(v)) parts.push_back(std::move(code[c]));
    std::sort(parts.begin(), parts.end());
    std::string s = "1";
    for (const auto& p : parts) s += p;
    s += '0';
    code[v] = std::move(s);
  }
  return code[t.root()];
}

/// Canonical code of a free tree: the smallest rooted code over its centre.
inline std::string canonical_code(const FreeTree& t) {
  std::string best;
  for (Vertex c : centre(t).vertices) {
    std::string s = canonical_code(RootedTree::root_at(t, c));
    if (best.empty() || s < best) best = std::move(s);
  }
  return best;
}

enum class IsomorphismMode { rooted, free };

namespace detail {

/// Level-by-level signature of a rooted tree: equal signatures iff the trees
/// are isomorphic. Vertices on a level are named by the sorted names of their
/// children, so equal names mean isomorphic subtrees.
inline std::vector<std::vector<std::size_t>> level_names(const RootedTree& t) {
  const auto n = t.num_vertices();
  std::vector<std::size_t> depth(n + 1, 0);
  std::vector<std::vector<Vertex>> levels(1);
  for (Vertex v : t.preorder()) {
    if (v != t.root()) depth[v] = depth[t.parent(v)] + 1;
    if (depth[v] >= levels.size()) levels.resize(depth[v] + 1);
    levels[depth[v]].push_back(v);
  }
  std::vector<std::size_t> name(n + 1, 0);
  std::vector<std::vector<std::size_t>> out(levels.size());
  for (std::size_t d = levels.size(); d-- > 0;) {
    std::map<std::vector<std::size_t>, std::size_t> ids;
    std::vector<std::vector<std::size_t>> keys;
    keys.reserve(levels[d].size());
    for (Vertex v : levels[d]) {
      std::vector<std::size_t> key;
      for (Vertex c : t.children(v)) key.push_back(name[c]);
      std::sort(key.begin(), key.end());
      keys.push_back(std::move(key));
    }
    for (const auto& k : keys) ids.emplace(k, 0);
    std::size_t next = 0;
    for (auto& [k, id] : ids) id = next++;
    for (std::size_t i = 0; i < levels[d].size(); ++i) name[levels[d][i]] = ids[keys[i]];
    // Sorted child-name multisets of the level. Names are assigned in key
    // order, so two trees whose deeper levels agree also agree on names.
    std::vector<std::vector<std::size_t>> sorted(keys);
    std::sort(sorted.begin(), sorted.end());
    out[d].clear();
    for (const auto& k : sorted) {
      out[d].push_back(k.size());
      out[d].insert(out[d].end(), k.begin(), k.end());
    }
  }
  return out;
}

}  // namespace detail

/// Rooted isomorphism by level-wise naming; O(n log n).
inline bool are_isomorphic(const RootedTree& a, const RootedTree& b) {
  if (a.num_vertices() != b.num_vertices()) return false;
  return detail::level_names(a) == detail::level_names(b);
}

/// Free isomorphism: compares rootings at centre vertices.
inline bool are_isomorphic(const FreeTree& a, const FreeTree& b) {
  if (a.num_vertices() != b.num_vertices()) return false;
  const auto ca = centre(a), cb = centre(b);
  if (ca.size() != cb.size()) return false;
  const RootedTree ra = RootedTree::root_at(a, ca.front());
  for (Vertex c : cb.vertices) {
    if (are_isomorphic(ra, RootedTree::root_at(b, c))) return true;
  }
  return false;
}

inline bool are_isomorphic(const RootedTree& a, const RootedTree& b, IsomorphismMode mode) {
  return mode == IsomorphismMode::rooted ? are_isomorphic(a, b) : are_isomorphic(a.free(), b.free());
}

}  // namespace deptree
