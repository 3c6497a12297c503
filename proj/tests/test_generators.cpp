#include "tracking/flow.hpp"
#include "tracking/fvs.hpp"
#include "tracking/generators.hpp"

#include <gtest/gtest.h>

using namespace tracking;

TEST(Rng, MatchesStandardEngine) {
  // mt19937_64 with its default seed produces 14514284786278117030 first,
  // which ends in 0 and is far below the rejection limit for bound 10.
  Rng rng(5489);
  EXPECT_EQ(rng.below(10), 0u);
  Rng a(42), b(42);
  for (int i = 0; i < 100; ++i)
    ASSERT_EQ(a.between(-3, 17), b.between(-3, 17));
}

TEST(Rng, BetweenStaysInRange) {
  Rng rng(3);
  std::vector<int> seen(5, 0);
  for (int i = 0; i < 2000; ++i) {
    long long x = rng.between(2, 6);
    ASSERT_GE(x, 2);
    ASSERT_LE(x, 6);
    ++seen[static_cast<std::size_t>(x - 2)];
  }
  for (int c : seen)
    EXPECT_GT(c, 300);
}

TEST(MixSeed, SpreadsNeighbouringSeeds) {
  EXPECT_NE(mix_seed(0), mix_seed(1));
  EXPECT_EQ(mix_seed(12345), mix_seed(12345));
  // The SplitMix64 reference output for state 0 after one step.
  EXPECT_EQ(mix_seed(0), 0xe220a8397b1dcdafULL);
}

TEST(Theta, Shapes) {
  Instance c4 = gen_theta(2, 2);
  EXPECT_EQ(c4.graph.vertex_count(), 4u);
  EXPECT_EQ(c4.graph.edge_count(), 4u);
  EXPECT_FALSE(c4.graph.has_edge(c4.s, c4.t));

  Instance path = gen_theta(1, 3);
  EXPECT_EQ(path.graph.vertex_count(), 4u);
  EXPECT_TRUE(is_forest(path.graph));

  EXPECT_THROW(gen_theta(1, 1), std::invalid_argument);
  EXPECT_THROW(gen_theta(0, 2), std::invalid_argument);

  for (std::size_t p = 1; p <= 6; ++p)
    for (std::size_t len = 2; len <= 4; ++len) {
      Instance inst = gen_theta(p, len);
      EXPECT_EQ(inst.graph.vertex_count(), 2 + p * (len - 1));
      EXPECT_EQ(inst.graph.edge_count(), p * len);
      EXPECT_EQ(max_vertex_disjoint_paths(inst.graph, inst.s, inst.t), static_cast<int>(p));
    }
}

TEST(TreeSink, Shapes) {
  for (std::size_t leaves = 2; leaves <= 7; ++leaves) {
    Instance at_t = gen_tree_sink(leaves, true);
    EXPECT_EQ(at_t.graph.vertex_count(), 2 * leaves);
    EXPECT_EQ(at_t.graph.edge_count(), 3 * leaves - 2);
    EXPECT_EQ(at_t.graph.degree(at_t.t), leaves);
    EXPECT_TRUE(is_forest(without_vertices(at_t.graph, {at_t.t})));

    Instance inner = gen_tree_sink(leaves, false);
    EXPECT_EQ(inner.graph.vertex_count(), 2 * leaves);
    EXPECT_NE(inner.s, inner.t);
    // The sink is the last vertex added and is not a terminal.
    const VertexId sink = static_cast<VertexId>(2 * leaves - 1);
    EXPECT_FALSE(inner.is_terminal(sink));
    EXPECT_EQ(inner.graph.degree(sink), leaves);
  }
  EXPECT_THROW(gen_tree_sink(1, true), std::invalid_argument);
}

TEST(Flower, Shapes) {
  for (std::size_t trees = 2; trees <= 4; ++trees)
    for (std::size_t lpt = 2; lpt <= 4; ++lpt) {
      Instance inst = gen_flower(trees, lpt);
      EXPECT_EQ(inst.graph.vertex_count(), trees * (2 * lpt - 1) + 1);
      EXPECT_EQ(inst.graph.edge_count(), trees * (2 * lpt - 2) + (trees - 1) + trees * lpt);
      const VertexId sink = static_cast<VertexId>(inst.graph.vertex_count() - 1);
      EXPECT_EQ(inst.graph.degree(sink), trees * lpt);
      EXPECT_TRUE(is_forest(without_vertices(inst.graph, {sink})));
    }
  EXPECT_THROW(gen_flower(1, 3), std::invalid_argument);
  EXPECT_THROW(gen_flower(3, 1), std::invalid_argument);
}

TEST(RandomConnected, SmallCases) {
  Instance edge = gen_random_connected(2, 1, 1);
  EXPECT_EQ(edge.graph.edge_count(), 1u);
  EXPECT_TRUE(edge.graph.has_edge(edge.s, edge.t));

  Instance tree = gen_random_connected(5, 4, 11);
  EXPECT_TRUE(is_forest(tree.graph));
  EXPECT_TRUE(reachable_from(tree.graph, 0)[4]);

  EXPECT_THROW(gen_random_connected(4, 2, 1), std::invalid_argument);
  EXPECT_THROW(gen_random_connected(4, 7, 1), std::invalid_argument);
  EXPECT_THROW(gen_random_connected(1, 0, 1), std::invalid_argument);
}

TEST(RandomConnected, FrozenSample) {
  // instances/random_6_9_7.txt holds the same graph in 1-based form.
  Instance inst = gen_random_connected(6, 9, 7);
  EXPECT_EQ(inst.s, 0u);
  EXPECT_EQ(inst.t, 2u);
  EXPECT_EQ(inst.graph.edges(),
            (std::vector<Edge>{{0, 1}, {0, 3}, {0, 4}, {0, 5}, {1, 2}, {1, 3}, {1, 4}, {1, 5}, {3, 5}}));
}

TEST(RandomSubdivided, AddsOneVertexPerSubdivision) {
  Instance base = gen_random_connected(6, 8, 21);
  Instance sub = gen_random_subdivided(6, 8, 3, 21);
  EXPECT_EQ(sub.graph.vertex_count(), 9u);
  EXPECT_EQ(sub.graph.edge_count(), 11u);
  EXPECT_EQ(sub.s, base.s);
  EXPECT_EQ(sub.t, base.t);
  for (VertexId v = 6; v < 9; ++v)
    EXPECT_EQ(sub.graph.degree(v), 2u);
  EXPECT_THROW(gen_random_subdivided(4, 3, 4, 1), std::invalid_argument);
}

TEST(Generate, DispatchesOnFamily) {
  EXPECT_EQ(generate({Family::Theta, {3, 2}}).graph.edges(), gen_theta(3, 2).graph.edges());
  EXPECT_EQ(generate({Family::RandomConnected, {6, 9}, 7}).graph.edges(), gen_random_connected(6, 9, 7).graph.edges());
  EXPECT_EQ(generate({Family::PathChain, {4}}).graph.edge_count(), 4u);
  EXPECT_THROW(generate({Family::Theta, {3}}), std::invalid_argument);
  EXPECT_THROW(generate({Family::Flower, {2, -1}}), std::invalid_argument);
}

// --- Properties -------------------------------------------------------------

TEST(GeneratorProperty, RandomGraphsAreConnectedSimpleAndDeterministic) {
  for (std::uint64_t seed = 1; seed <= 300; ++seed) {
    Rng rng(seed);
    const auto n = static_cast<std::size_t>(rng.between(2, 12));
    const auto m = static_cast<std::size_t>(rng.between(static_cast<long long>(n - 1),
                                                        static_cast<long long>(n * (n - 1) / 2)));
    Instance a = gen_random_connected(n, m, seed);
    Instance b = gen_random_connected(n, m, seed);
    ASSERT_EQ(a.graph.edges(), b.graph.edges());
    ASSERT_EQ(a.s, b.s);
    ASSERT_EQ(a.graph.vertex_count(), n);
    ASSERT_EQ(a.graph.edge_count(), m);
    ASSERT_NE(a.s, a.t);
    ASSERT_EQ(a.graph.audit(), "");
    auto seen = reachable_from(a.graph, 0);
    for (VertexId v = 0; v < n; ++v)
      ASSERT_TRUE(seen[v]) << "seed " << seed;
    // The terminals realise the diameter.
    const auto from_s = bfs_distances(a.graph, a.s);
    for (VertexId u = 0; u < n; ++u) {
      auto d = bfs_distances(a.graph, u);
      for (VertexId v = 0; v < n; ++v)
        ASSERT_LE(d[v], from_s[a.t]);
    }
  }
}
