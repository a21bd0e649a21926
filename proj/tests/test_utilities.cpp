#include <gtest/gtest.h>

#include "support/helpers.hpp"

using namespace deptree;

namespace {

/// The same tree with vertex v renamed perm[v-1].
RootedTree relabel(const RootedTree& t, const std::vector<Vertex>& perm) {
  std::vector<Edge> edges;
  for (const Edge& e : t.edges()) edges.push_back({perm[e.u - 1], perm[e.v - 1]});
  return root_at(from_edge_list(t.num_vertices(), edges), perm[t.root() - 1]);
}

std::vector<Vertex> shuffled(std::size_t n, Rng& rng) {
  std::vector<Vertex> p(n);
  std::iota(p.begin(), p.end(), Vertex{1});
  for (std::size_t i = n; i > 1; --i) std::swap(p[i - 1], p[rng.below(i)]);
  return p;
}

}  // namespace

TEST(CanonicalCode, Examples) {
  EXPECT_EQ(canonical_code(RootedTree()), "10");
  EXPECT_EQ(canonical_code(FreeTree()), "10");
  EXPECT_EQ(canonical_code(from_head_vector("0 1 2")), canonical_code(from_head_vector("2 3 0")));
  EXPECT_NE(canonical_code(from_head_vector("0 1 2")), canonical_code(from_head_vector("0 1 1")));
  EXPECT_EQ(canonical_code(path_tree(5)), canonical_code(from_head_vector("2 0 2 3 4").free()));
}

TEST(AreIsomorphic, Examples) {
  const auto a = from_head_vector("0 1 2 3");
  const auto b = from_head_vector("2 3 0 3");
  EXPECT_TRUE(are_isomorphic(a, b, IsomorphismMode::free));
  EXPECT_FALSE(are_isomorphic(a, b, IsomorphismMode::rooted));
  EXPECT_FALSE(are_isomorphic(path_tree(3), path_tree(4)));
}

TEST(AreIsomorphic, InvariantUnderRelabeling) {
  Rng rng(3);
  for (int i = 0; i < 300; ++i) {
    const auto n = rng.between(1, 40);
    const auto t = support::random_tree(rng, n);
    const auto u = relabel(t, shuffled(n, rng));
    EXPECT_TRUE(are_isomorphic(t, u));
    EXPECT_TRUE(are_isomorphic(t.free(), u.free()));
    EXPECT_EQ(canonical_code(t), canonical_code(u));
    EXPECT_EQ(canonical_code(t.free()), canonical_code(u.free()));
  }
}

TEST(AreIsomorphic, AgreesWithPermutationSearch) {
  Rng rng(9);
  for (int i = 0; i < 2000; ++i) {
    const auto n = rng.between(1, 9);
    const auto a = random_rooted_tree(unlabeled_rooted, n, rng);
    const auto b = relabel(random_rooted_tree(unlabeled_rooted, n, rng), shuffled(n, rng));
    const int nn = static_cast<int>(n);
    const auto ea = support::edges_of(a), eb = support::edges_of(b);
    EXPECT_EQ(are_isomorphic(a, b), oracle::isomorphic(nn, ea, a.root(), nn, eb, b.root()));
    EXPECT_EQ(are_isomorphic(a.free(), b.free()), oracle::isomorphic(nn, ea, 0, nn, eb, 0));
  }
}
