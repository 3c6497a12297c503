#include "fixtures.hpp"

#include "tracking/flow.hpp"
#include "tracking/generators.hpp"
#include "tracking/oracle.hpp"

#include <gtest/gtest.h>

using namespace tracking;

TEST(VertexOnPath, ThetaMiddleVertices) {
  Instance inst = gen_theta(3, 2);
  for (VertexId v : inst.graph.vertices())
    EXPECT_TRUE(vertex_on_st_path(inst, v)) << v;
}

TEST(VertexOnPath, PendantIsDead) {
  Instance inst = fixtures::theta3_pendant();
  EXPECT_FALSE(vertex_on_st_path(inst, 5));
  EXPECT_TRUE(vertex_on_st_path(inst, 2));
}

TEST(VertexOnPath, CycleVertex) { EXPECT_TRUE(vertex_on_st_path(fixtures::c4(), 1)); }

TEST(VertexOnPath, TerminalsNeedConnectivity) {
  Instance inst = fixtures::instance_of(4, 0, 1, {{0, 2}, {1, 3}});
  EXPECT_FALSE(vertex_on_st_path(inst, 0));
  EXPECT_FALSE(vertex_on_st_path(inst, 2));
}

TEST(EdgeOnPath, Examples) {
  EXPECT_TRUE(edge_on_st_path(fixtures::c4(), 1, 2));
  // The chord between the two middle vertices is live: s-a-b-t uses it.
  EXPECT_TRUE(edge_on_st_path(fixtures::c4_chord(), 1, 3));
  // An edge inside a block hanging off the path is dead.
  EXPECT_FALSE(edge_on_st_path(fixtures::pendant_cycle(), 3, 4));
  EXPECT_TRUE(edge_on_st_path(fixtures::c4_chord(), 0, 1));
  EXPECT_TRUE(edge_on_st_path(fixtures::single_edge(), 0, 1));
  EXPECT_THROW(edge_on_st_path(fixtures::c4(), 0, 2), GraphError);
}

TEST(DisjointPaths, Examples) {
  EXPECT_EQ(max_vertex_disjoint_paths(gen_theta(4, 2).graph, 0, 1), 4);
  Graph tree = fixtures::graph_of(6, {{0, 1}, {1, 2}, {1, 3}, {3, 4}, {3, 5}});
  for (VertexId u = 0; u < 6; ++u)
    for (VertexId v = u + 1; v < 6; ++v)
      EXPECT_EQ(max_vertex_disjoint_paths(tree, u, v), 1);
  const Graph k4 = fixtures::k4().graph;
  for (VertexId u = 0; u < 4; ++u)
    for (VertexId v = u + 1; v < 4; ++v)
      EXPECT_EQ(max_vertex_disjoint_paths(k4, u, v), 3);
  EXPECT_EQ(max_vertex_disjoint_paths(gen_theta(6, 2).graph, 0, 1, 3), 3);
  EXPECT_THROW(max_vertex_disjoint_paths(k4, 2, 2), GraphError);
}

TEST(LocalLinkage, Examples) {
  Instance theta = gen_theta(3, 2);
  EXPECT_TRUE(has_local_linkage(theta, theta.s, theta.t, {2}));
  EXPECT_TRUE(has_local_linkage(fixtures::path4(), 1, 2, {}));
  // a=3 and b=5 sit on a cycle that meets the rest of the graph only at c=2.
  Instance cut = fixtures::pendant_cycle();
  EXPECT_FALSE(has_local_linkage(cut, 3, 5, {}));
  EXPECT_TRUE(has_local_linkage(cut, 0, 1, {}));
}

TEST(LocalLinkage, RejectsBadArguments) {
  Instance inst = gen_theta(3, 2);
  EXPECT_THROW(has_local_linkage(inst, 2, 3, {0}), GraphError);
  EXPECT_THROW(has_local_linkage(inst, 2, 3, {2}), GraphError);
  EXPECT_THROW(has_local_linkage(inst, 2, 2, {}), GraphError);
}

// ---------------------------------------------------------------------------
// Property checks against path enumeration on small random graphs with
// arbitrary terminals (so that dead vertices and edges are common).

namespace {

Instance random_instance(std::uint64_t seed) {
  Rng rng(seed);
  const auto n = static_cast<std::size_t>(rng.between(3, 8));
  const auto room = static_cast<long long>(n * (n - 1) / 2 - (n - 1));
  const auto m = n - 1 + static_cast<std::size_t>(rng.between(0, std::min<long long>(room, 5)));
  Instance inst = gen_random_connected(n, m, seed);
  inst.s = static_cast<VertexId>(rng.below(n));
  do
    inst.t = static_cast<VertexId>(rng.below(n));
  while (inst.t == inst.s);
  return inst;
}

// All simple paths from `from` to `to` in g.
void paths_between(const Graph& g, VertexId from, VertexId to, std::vector<std::vector<VertexId>>& out,
                   std::vector<VertexId>& cur, std::vector<bool>& used) {
  if (from == to) {
    out.push_back(cur);
    return;
  }
  for (VertexId w : g.neighbors(from))
    if (!used[w]) {
      used[w] = true;
      cur.push_back(w);
      paths_between(g, w, to, out, cur, used);
      cur.pop_back();
      used[w] = false;
    }
}

std::vector<std::vector<VertexId>> all_paths(const Graph& g, VertexId from, VertexId to) {
  std::vector<std::vector<VertexId>> out;
  if (!g.contains(from) || !g.contains(to))
    return out;
  std::vector<VertexId> cur{from};
  std::vector<bool> used(g.capacity(), false);
  used[from] = true;
  paths_between(g, from, to, out, cur, used);
  return out;
}

// Menger by brute force: the smallest vertex set whose removal (together
// with a direct edge) separates u from v, plus one for a direct edge.
int brute_disjoint_paths(const Graph& g, VertexId u, VertexId v) {
  Graph h = g;
  int direct = 0;
  if (h.has_edge(u, v)) {
    h.remove_edge(u, v);
    direct = 1;
  }
  std::vector<VertexId> others;
  for (VertexId x : h.vertices())
    if (x != u && x != v)
      others.push_back(x);
  for (std::size_t r = 0; r <= others.size(); ++r) {
    bool separated = false;
    detail::for_each_combination(others, r, [&](const std::vector<VertexId>& cut) {
      separated = !reachable_from(without_vertices(h, cut), u)[v];
      return separated;
    });
    if (separated)
      return static_cast<int>(r) + direct;
  }
  return static_cast<int>(others.size()) + direct;
}

bool brute_linkage(const Instance& inst, VertexId a, VertexId b, const std::vector<VertexId>& forbidden) {
  Graph h = without_vertices(inst.graph, forbidden);
  auto disjoint = [](const std::vector<VertexId>& p, const std::vector<VertexId>& q) {
    for (VertexId x : p)
      if (std::find(q.begin(), q.end(), x) != q.end())
        return false;
    return true;
  };
  for (auto [x, y] : {Edge{a, b}, Edge{b, a}})
    for (const auto& p : all_paths(h, inst.s, x))
      for (const auto& q : all_paths(h, y, inst.t))
        if (disjoint(p, q))
          return true;
  return false;
}

} // namespace

TEST(FlowProperty, VertexAndEdgeOnPathMatchEnumeration) {
  for (std::uint64_t seed = 1; seed <= 300; ++seed) {
    Instance inst = random_instance(seed);
    auto paths = enumerate_st_paths(inst, 1'000'000);
    std::set<VertexId> on_vertex;
    std::set<Edge> on_edge;
    for (const auto& p : paths) {
      on_vertex.insert(p.begin(), p.end());
      for (std::size_t i = 0; i + 1 < p.size(); ++i)
        on_edge.insert(make_edge(p[i], p[i + 1]));
    }
    for (VertexId v : inst.graph.vertices())
      ASSERT_EQ(vertex_on_st_path(inst, v), on_vertex.count(v) == 1) << "seed " << seed << " v " << v;
    for (auto [u, v] : inst.graph.edges())
      ASSERT_EQ(edge_on_st_path(inst, u, v), on_edge.count({u, v}) == 1) << "seed " << seed;
  }
}

TEST(FlowProperty, DisjointPathsMatchMenger) {
  for (std::uint64_t seed = 1; seed <= 150; ++seed) {
    Instance inst = random_instance(seed);
    const auto verts = inst.graph.vertices();
    for (VertexId u : verts)
      for (VertexId v : verts) {
        if (u < v) {
          ASSERT_EQ(max_vertex_disjoint_paths(inst.graph, u, v), brute_disjoint_paths(inst.graph, u, v))
              << "seed " << seed << " pair " << u << "," << v;
        }
      }
  }
}

TEST(FlowProperty, LinkageMatchesPathPairs) {
  for (std::uint64_t seed = 1; seed <= 150; ++seed) {
    Instance inst = random_instance(seed);
    Rng rng(seed * 7919);
    std::vector<VertexId> inner;
    for (VertexId v : inst.graph.vertices())
      if (!inst.is_terminal(v))
        inner.push_back(v);
    for (VertexId a : inst.graph.vertices()) {
      for (VertexId b : inst.graph.vertices()) {
        if (a >= b)
          continue;
        std::vector<VertexId> forbidden;
        for (VertexId x : inner)
          if (x != a && x != b && rng.below(3) == 0)
            forbidden.push_back(x);
        ASSERT_EQ(has_local_linkage(inst, a, b, forbidden), brute_linkage(inst, a, b, forbidden))
            << "seed " << seed << " pair " << a << "," << b;
      }
    }
  }
}
