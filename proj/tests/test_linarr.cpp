#include <gtest/gtest.h>

#include "support/helpers.hpp"

using namespace deptree;
using support::rational;

namespace {

Arrangement id(std::size_t n) { return Arrangement::identity(n); }

const RootedTree& crossing() {
  static const auto t = from_head_vector(support::crossing_sentence);
  return t;
}

const RootedTree& projective_example() {
  static const auto t = from_head_vector(support::projective_sentence);
  return t;
}

}  // namespace

TEST(SumEdgeLengths, ExampleSentences) {
  EXPECT_EQ(sum_edge_lengths(projective_example(), id(10)), 15u);
  EXPECT_EQ(sum_edge_lengths(crossing(), id(9)), 19u);
  EXPECT_EQ(sum_edge_lengths(path_tree(3), id(3)), 2u);
}

TEST(SumEdgeLengths, SizeMismatch) {
  EXPECT_THROW(sum_edge_lengths(path_tree(3), id(4)), Error);
  try {
    num_crossings(path_tree(3), id(2));
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::SizeMismatch);
  }
}

TEST(Crossings, ExampleSentences) {
  EXPECT_EQ(num_crossings(crossing(), id(9)), 2u);
  EXPECT_EQ(num_crossings(projective_example(), id(10)), 0u);
  const std::vector<Position> pos{1, 3, 2, 4};
  EXPECT_EQ(num_crossings(path_tree(4), Arrangement::from_positions(pos)), 1u);
  EXPECT_EQ(num_crossings(path_tree(4), Arrangement::from_positions(pos), CrossingsAlgorithm::brute_pairs), 1u);
}

TEST(Classify, ExampleSentences) {
  EXPECT_EQ(classify_arrangement(projective_example(), id(10)), (ArrangementFlags{true, true, true}));
  EXPECT_EQ(classify_arrangement(crossing(), id(9)), (ArrangementFlags{false, false, false}));
  const std::vector<Vertex> order{2, 1, 3};
  EXPECT_TRUE(is_projective(root_at(path_tree(3), 2), Arrangement::from_order(order)));
  // Edge 2-3 spans the root: planar but not projective.
  EXPECT_FALSE(is_projective(from_head_vector("0 1 2"), Arrangement::from_order(std::vector<Vertex>{2, 1, 3})));
  EXPECT_TRUE(is_planar(path_tree(3), Arrangement::from_order(std::vector<Vertex>{1, 3, 2})));
}

TEST(Classify, OneEndpointCrossingWithSharedVertex) {
  // Edges (1,3) and (2,4),(2,5) cross it; both share vertex 2.
  const auto t = FreeTree::from_edge_list(5, {{1, 3}, {2, 4}, {2, 5}, {3, 2}});
  EXPECT_TRUE(is_one_endpoint_crossing(t, id(5)));
  EXPECT_FALSE(is_planar(t, id(5)));
}

TEST(HeadInitialRatio, Examples) {
  EXPECT_EQ(head_initial_ratio(crossing(), id(9)), rational(5, 8));
  EXPECT_EQ(head_initial_ratio(from_head_vector("0 1 2"), id(3)), rational(1));
  EXPECT_EQ(head_initial_ratio(from_head_vector("2 3 0"), id(3)), rational(0));
  EXPECT_THROW(head_initial_ratio(RootedTree(), id(1)), Error);
}

TEST(Flux, Examples) {
  const auto f = flux(crossing(), id(9));
  ASSERT_EQ(f.num_gaps(), 8u);
  EXPECT_EQ(f.size[1], 2u);  // gap between positions 2 and 3
  EXPECT_EQ(f.weight[1], 1u);
  const auto p = flux(path_tree(3), id(3));
  EXPECT_EQ(p.size[0], 1u);
  EXPECT_EQ(p.weight[0], 1u);
  EXPECT_THROW(flux(FreeTree(), id(1)), Error);
}

TEST(MinD, Examples) {
  EXPECT_EQ(min_D_unconstrained(star_tree(5)).value, 6u);
  EXPECT_EQ(min_D_planar(star_tree(5)).value, 6u);
  EXPECT_EQ(min_D_projective(root_at(star_tree(5), 1)).value, 6u);
  EXPECT_EQ(min_D_projective(from_head_vector("0 1 2")).value, 2u);
  for (std::size_t n = 1; n <= 12; ++n) {
    EXPECT_EQ(min_D_unconstrained(path_tree(n)).value, n - 1);
    EXPECT_EQ(min_D_planar(path_tree(n)).value, n - 1);
  }
  const auto exhaustive = min_D_unconstrained(crossing(), UnconstrainedAlgorithm::exhaustive);
  EXPECT_EQ(min_D_unconstrained(crossing()).value, exhaustive.value);
  EXPECT_EQ(min_D_unconstrained(crossing(), UnconstrainedAlgorithm::chung).value, exhaustive.value);
}

TEST(MinD, ReturnedArrangementAchievesValue) {
  const auto t = crossing();
  const auto u = min_D_unconstrained(t);
  EXPECT_EQ(sum_edge_lengths(t, u.arrangement), u.value);
  const auto pl = min_D_planar(t);
  EXPECT_EQ(sum_edge_lengths(t, pl.arrangement), pl.value);
  EXPECT_TRUE(is_planar(t.free(), pl.arrangement));
  const auto pr = min_D_projective(t);
  EXPECT_EQ(sum_edge_lengths(t, pr.arrangement), pr.value);
  EXPECT_TRUE(is_projective(t, pr.arrangement));
}

TEST(MinD, ExhaustiveLimit) {
  try {
    min_D_unconstrained(path_tree(11), UnconstrainedAlgorithm::exhaustive);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::SizeLimitExceeded);
  }
  EXPECT_EQ(min_D_unconstrained(path_tree(11), UnconstrainedAlgorithm::exhaustive, 11).value, 10u);
}

TEST(MinD, SingleVertex) {
  EXPECT_EQ(min_D_unconstrained(FreeTree()).value, 0u);
  EXPECT_EQ(min_D_planar(FreeTree()).value, 0u);
  EXPECT_EQ(min_D_projective(RootedTree()).value, 0u);
}

TEST(MinD, AgreesWithExhaustiveSearchOnRandomTrees) {
  Rng rng(5);
  for (int i = 0; i < 300; ++i) {
    const auto n = rng.between(1, 8);
    const auto t = support::random_tree(rng, n);
    const auto e = support::edges_of(t);
    long best = -1, best_planar = -1, best_proj = -1;
    oracle::for_each_arrangement(static_cast<int>(n), [&](const oracle::Positions& p) {
      const long d = oracle::D(e, p);
      if (best < 0 || d < best) best = d;
      if (oracle::C(e, p) == 0) {
        if (best_planar < 0 || d < best_planar) best_planar = d;
        if (!oracle::covered(e, p, static_cast<int>(t.root())) && (best_proj < 0 || d < best_proj)) best_proj = d;
      }
    });
    EXPECT_EQ(min_D_unconstrained(t).value, static_cast<std::uint64_t>(best));
    EXPECT_EQ(min_D_unconstrained(t, UnconstrainedAlgorithm::chung).value, static_cast<std::uint64_t>(best));
    EXPECT_EQ(min_D_planar(t).value, static_cast<std::uint64_t>(best_planar));
    EXPECT_EQ(min_D_projective(t).value, static_cast<std::uint64_t>(best_proj));
  }
}

TEST(MinD, LargeTreesKeepOrderingAndAgree) {
  Rng rng(17);
  for (int i = 0; i < 30; ++i) {
    const auto t = support::random_tree(rng, rng.between(50, 400));
    const auto u = min_D_unconstrained(t);
    EXPECT_EQ(u.value, min_D_unconstrained(t, UnconstrainedAlgorithm::chung).value);
    EXPECT_EQ(sum_edge_lengths(t, u.arrangement), u.value);
    const auto pl = min_D_planar(t).value;
    const auto pr = min_D_projective(t).value;
    EXPECT_LE(u.value, pl);
    EXPECT_LE(pl, pr);
  }
}

TEST(Property, MetricsAgreeWithOraclesOnRandomInputs) {
  Rng rng(23);
  for (int i = 0; i < 1000; ++i) {
    const auto n = rng.between(1, 50);
    const auto t = support::random_tree(rng, n);
    const auto a = support::random_order(rng, n);
    const auto e = support::edges_of(t);
    const auto p = support::positions_of(a);
    const auto d = sum_edge_lengths(t, a);
    EXPECT_EQ(d, static_cast<std::uint64_t>(oracle::D(e, p)));
    const auto c = num_crossings(t, a);
    EXPECT_EQ(c, static_cast<std::uint64_t>(oracle::C(e, p)));
    EXPECT_EQ(num_crossings(t, a, CrossingsAlgorithm::brute_pairs), c);
    const auto flags = classify_arrangement(t, a);
    EXPECT_EQ(flags.planar, c == 0);
    EXPECT_EQ(flags.projective, oracle::projective(e, p, static_cast<int>(t.root())));
    EXPECT_EQ(flags.one_endpoint_crossing, oracle::one_endpoint_crossing(e, p));
    if (n < 2) continue;
    // Flux-sum identity: every edge is counted once per gap it spans.
    const auto f = flux(t, a);
    std::uint64_t total = 0;
    for (auto s : f.size) total += s;
    EXPECT_EQ(total, d);
    for (std::size_t g = 0; g < f.num_gaps(); ++g) EXPECT_LE(f.weight[g], f.size[g]);
  }
}

TEST(Property, FluxWeightMatchesExhaustiveMatching) {
  Rng rng(29);
  for (int i = 0; i < 300; ++i) {
    const auto n = rng.between(2, 14);
    const auto t = support::random_tree(rng, n);
    const auto a = support::random_order(rng, n);
    const auto expected = oracle::flux(support::edges_of(t), support::positions_of(a), static_cast<int>(n));
    const auto f = flux(t, a);
    for (std::size_t g = 0; g < f.num_gaps(); ++g) {
      EXPECT_EQ(static_cast<int>(f.size[g]), expected[g].first);
      EXPECT_EQ(static_cast<int>(f.weight[g]), expected[g].second);
    }
  }
}
