//===-- generators.hpp -- deterministic instance families -----------------===//
//
// gen_theta            s and t joined by p internally disjoint paths
// gen_tree_sink        binary tree whose leaves all touch one sink
// gen_flower           several such trees sharing the sink
// gen_random_connected random spanning tree plus random extra edges
// gen_random_subdivided the same with some edges subdivided
//
// Randomness comes from a seeded mt19937_64 and our own bounded draw, so a
// seed produces the same instance with every standard library.
//
//===----------------------------------------------------------------------===//

#pragma once

#include "graph.hpp"

#include <limits>
#include <numeric>
#include <random>
#include <string>

namespace tracking {

class Rng {
public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  // Uniform in [0, bound); bound > 0.
  std::uint64_t below(std::uint64_t bound) {
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                                std::numeric_limits<std::uint64_t>::max() % bound;
    std::uint64_t x;
    do
      x = engine_();
    while (x >= limit);
    return x % bound;
  }

  // Uniform in [lo, hi].
  long long between(long long lo, long long hi) {
    return lo + static_cast<long long>(below(static_cast<std::uint64_t>(hi - lo + 1)));
  }

  template <typename T>
  void shuffle(std::vector<T>& items) {
    for (std::size_t i = items.size(); i > 1; --i)
      std::swap(items[i - 1], items[below(i)]);
  }

private:
  std::mt19937_64 engine_;
};

// SplitMix64 step, used to derive per-item seeds from a run seed.
inline std::uint64_t mix_seed(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

inline Instance gen_theta(std::size_t p, std::size_t len) {
  if (p < 1 || len < 2)
    throw std::invalid_argument("theta graph needs p >= 1 and len >= 2");
  Instance inst{Graph(2), 0, 1, 0};
  for (std::size_t i = 0; i < p; ++i) {
    VertexId prev = inst.s;
    for (std::size_t j = 0; j + 1 < len; ++j) {
      VertexId v = inst.graph.add_vertex();
      inst.graph.add_edge(prev, v);
      prev = v;
    }
    inst.graph.add_edge(prev, inst.t);
  }
  return inst;
}

namespace detail {

// Binary tree with `leaves` leaves, children split ceil/floor; returns root.
inline VertexId grow_binary_tree(Graph& g, std::size_t leaves, std::vector<VertexId>& leaf_out,
                                 std::vector<VertexId>& internal_out) {
  VertexId root = g.add_vertex();
  if (leaves == 1) {
    leaf_out.push_back(root);
    return root;
  }
  internal_out.push_back(root);
  VertexId left = grow_binary_tree(g, (leaves + 1) / 2, leaf_out, internal_out);
  g.add_edge(root, left);
  VertexId right = grow_binary_tree(g, leaves / 2, leaf_out, internal_out);
  g.add_edge(root, right);
  return root;
}

} // namespace detail

// Tree rooted at s with `leaf_count` leaves, all adjacent to a sink x. With
// sink_is_t the sink is t; otherwise x is an ordinary vertex and t sits in
// the tree: the last internal non-root vertex, or the last leaf if the tree
// has no such vertex.
inline Instance gen_tree_sink(std::size_t leaf_count, bool sink_is_t) {
  if (leaf_count < 2)
    throw std::invalid_argument("tree-sink structure needs at least two leaves");
  Instance inst;
  std::vector<VertexId> leaves, internal;
  inst.s = detail::grow_binary_tree(inst.graph, leaf_count, leaves, internal);
  VertexId sink = inst.graph.add_vertex();
  for (VertexId leaf : leaves)
    inst.graph.add_edge(leaf, sink);
  if (sink_is_t) {
    inst.t = sink;
  } else {
    internal.erase(std::remove(internal.begin(), internal.end(), inst.s), internal.end());
    inst.t = internal.empty() ? leaves.back() : internal.back();
  }
  return inst;
}

// `trees` binary trees with `leaves_per_tree` leaves each; every leaf is
// adjacent to one shared sink, consecutive roots are joined by an edge, s is
// the first root and t the last.
inline Instance gen_flower(std::size_t trees, std::size_t leaves_per_tree) {
  if (trees < 2 || leaves_per_tree < 2)
    throw std::invalid_argument("flower needs >= 2 trees with >= 2 leaves each");
  Instance inst;
  std::vector<VertexId> roots, leaves, internal;
  for (std::size_t i = 0; i < trees; ++i)
    roots.push_back(detail::grow_binary_tree(inst.graph, leaves_per_tree, leaves, internal));
  for (std::size_t i = 0; i + 1 < trees; ++i)
    inst.graph.add_edge(roots[i], roots[i + 1]);
  VertexId sink = inst.graph.add_vertex();
  for (VertexId leaf : leaves)
    inst.graph.add_edge(leaf, sink);
  inst.s = roots.front();
  inst.t = roots.back();
  return inst;
}

// Connected simple graph on n vertices with m edges: a random recursive
// spanning tree over a shuffled vertex order, plus m-n+1 edges drawn from the
// complement. Terminals are the farthest pair, ties broken by smallest ids.
inline Instance gen_random_connected(std::size_t n, std::size_t m, std::uint64_t seed) {
  if (n < 2 || m + 1 < n || m > n * (n - 1) / 2)
    throw std::invalid_argument("infeasible (n,m) for a connected simple graph");
  Rng rng(seed);
  Instance inst{Graph(n), 0, 1, 0};
  std::vector<VertexId> order(n);
  std::iota(order.begin(), order.end(), 0);
  rng.shuffle(order);
  for (std::size_t i = 1; i < n; ++i)
    inst.graph.add_edge(order[i], order[rng.below(i)]);
  std::vector<Edge> missing;
  for (VertexId u = 0; u < n; ++u)
    for (VertexId v = u + 1; v < n; ++v)
      if (!inst.graph.has_edge(u, v))
        missing.emplace_back(u, v);
  rng.shuffle(missing);
  for (std::size_t i = 0; i < m - (n - 1); ++i)
    inst.graph.add_edge(missing[i].first, missing[i].second);

  long long best = -1;
  for (VertexId u = 0; u < n; ++u) {
    auto dist = bfs_distances(inst.graph, u);
    for (VertexId v = u + 1; v < n; ++v)
      if (dist[v] > best) {
        best = dist[v];
        inst.s = u;
        inst.t = v;
      }
  }
  return inst;
}

// gen_random_connected(n, m, seed) with `subdivisions` distinct edges each
// replaced by a path of length two. Long degree-2 chains and parallel
// degree-2 bundles are rare in plain random graphs; this produces both.
inline Instance gen_random_subdivided(std::size_t n, std::size_t m, std::size_t subdivisions, std::uint64_t seed) {
  Instance inst = gen_random_connected(n, m, seed);
  if (subdivisions > m)
    throw std::invalid_argument("cannot subdivide more edges than the graph has");
  Rng rng(mix_seed(seed ^ 0x5bd1e995ULL)); // independent of the base graph's stream
  auto edges = inst.graph.edges();
  rng.shuffle(edges);
  for (std::size_t i = 0; i < subdivisions; ++i) {
    auto [u, v] = edges[i];
    VertexId mid = inst.graph.add_vertex();
    inst.graph.remove_edge(u, v);
    inst.graph.add_edge(u, mid);
    inst.graph.add_edge(mid, v);
  }
  return inst;
}

enum class Family { Theta, TreeSink, Flower, RandomConnected, PathChain, RandomSubdivided };

struct GenSpec {
  Family family;
  std::vector<long long> params;
  std::uint64_t seed = 0;
};

// Path s - ... - t with `length` edges.
inline Instance gen_path_chain(std::size_t length) {
  if (length < 1)
    throw std::invalid_argument("path needs at least one edge");
  Instance inst{Graph(length + 1), 0, static_cast<VertexId>(length), 0};
  for (VertexId v = 0; v < length; ++v)
    inst.graph.add_edge(v, v + 1);
  return inst;
}

inline Instance generate(const GenSpec& spec) {
  auto param = [&](std::size_t i) {
    if (i >= spec.params.size() || spec.params[i] < 0)
      throw std::invalid_argument("missing or negative generator parameter");
    return static_cast<std::size_t>(spec.params[i]);
  };
  switch (spec.family) {
  case Family::Theta: return gen_theta(param(0), param(1));
  case Family::TreeSink: return gen_tree_sink(param(0), param(1) != 0);
  case Family::Flower: return gen_flower(param(0), param(1));
  case Family::RandomConnected: return gen_random_connected(param(0), param(1), spec.seed);
  case Family::PathChain: return gen_path_chain(param(0));
  case Family::RandomSubdivided: return gen_random_subdivided(param(0), param(1), param(2), spec.seed);
  }
  throw std::invalid_argument("unknown family");
}

} // namespace tracking
