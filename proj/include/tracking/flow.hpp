//===-- flow.hpp -- unit-capacity vertex-disjoint path primitives ----------===//
//
// All structural queries reduce to a max-flow on the vertex-split digraph:
// every vertex x becomes in(x) -> out(x) with capacity 1 (or unbounded for
// the flow endpoints) and every undirected edge {u,v} becomes out(u)->in(v)
// and out(v)->in(u) with capacity 1. Flow values needed are tiny (2, or at
// most k+2), so plain BFS augmentation with an early stop is enough.
//
//===----------------------------------------------------------------------===//

#pragma once

#include "graph.hpp"

#include <limits>
#include <optional>
#include <queue>

namespace tracking {

namespace detail {

class UnitFlowNetwork {
public:
  explicit UnitFlowNetwork(std::size_t nodes) : out_(nodes) {}

  void add_arc(std::size_t from, std::size_t to, int cap) {
    out_[from].push_back(arcs_.size());
    arcs_.push_back({to, cap});
    out_[to].push_back(arcs_.size());
    arcs_.push_back({from, 0});
  }

  // Augments from src to dst until no path remains or `limit` units flow.
  int max_flow(std::size_t src, std::size_t dst, int limit) {
    int flow = 0;
    std::vector<std::size_t> via(out_.size());
    while (flow < limit) {
      std::vector<bool> seen(out_.size(), false);
      std::queue<std::size_t> q;
      q.push(src);
      seen[src] = true;
      while (!q.empty() && !seen[dst]) {
        std::size_t u = q.front();
        q.pop();
        for (std::size_t a : out_[u]) {
          std::size_t w = arcs_[a].to;
          if (arcs_[a].cap > 0 && !seen[w]) {
            seen[w] = true;
            via[w] = a;
            q.push(w);
          }
        }
      }
      if (!seen[dst])
        break;
      for (std::size_t x = dst; x != src;) {
        std::size_t a = via[x];
        arcs_[a].cap -= 1;
        arcs_[a ^ 1].cap += 1;
        x = arcs_[a ^ 1].to;
      }
      ++flow;
    }
    return flow;
  }

private:
  struct Arc {
    std::size_t to;
    int cap;
  };
  std::vector<std::vector<std::size_t>> out_;
  std::vector<Arc> arcs_;
};

constexpr int kUnbounded = std::numeric_limits<int>::max() / 4;

// Builds the vertex-split network for g. Vertices listed in `free_vertices`
// get unbounded capacity; node ids are in(v)=2v and out(v)=2v+1, followed by
// `extra_nodes` spare nodes starting at 2*capacity.
inline UnitFlowNetwork split_network(const Graph& g, std::initializer_list<VertexId> free_vertices,
                                     std::size_t extra_nodes = 0) {
  UnitFlowNetwork net(2 * g.capacity() + extra_nodes);
  for (VertexId v : g.vertices()) {
    bool is_free = std::find(free_vertices.begin(), free_vertices.end(), v) != free_vertices.end();
    net.add_arc(2 * v, 2 * v + 1, is_free ? kUnbounded : 1);
    for (VertexId w : g.neighbors(v))
      net.add_arc(2 * v + 1, 2 * w, 1);
  }
  return net;
}

} // namespace detail

// True iff some simple s-t path in `g` passes through v. A path through an
// inner vertex v is a pair of paths v->s and v->t sharing only v, i.e. a flow
// of value 2 from v into a super-sink fed by s and t.
inline bool vertex_on_st_path(const Graph& g, VertexId s, VertexId t, VertexId v) {
  if (!g.contains(v))
    throw GraphError("unknown vertex id " + std::to_string(v));
  if (v == s || v == t)
    return reachable_from(g, s)[t];
  const std::size_t sink = 2 * g.capacity();
  auto net = detail::split_network(g, {v}, 1);
  net.add_arc(2 * s + 1, sink, 1);
  net.add_arc(2 * t + 1, sink, 1);
  return net.max_flow(2 * v, sink, 2) >= 2;
}

inline bool vertex_on_st_path(const Instance& inst, VertexId v) {
  return vertex_on_st_path(inst.graph, inst.s, inst.t, v);
}

// True iff some simple s-t path uses the edge {u,v}; decided by subdividing
// the edge and asking about the subdivision vertex.
inline bool edge_on_st_path(const Instance& inst, VertexId u, VertexId v) {
  if (!inst.graph.has_edge(u, v))
    throw GraphError("(" + std::to_string(u) + "," + std::to_string(v) + ") is not an edge");
  Graph h = inst.graph;
  h.remove_edge(u, v);
  VertexId w = h.add_vertex();
  h.add_edge(u, w);
  h.add_edge(w, v);
  return vertex_on_st_path(h, inst.s, inst.t, w);
}

// Maximum number of internally vertex-disjoint u-v paths; an edge {u,v}
// counts as one path. Stops counting once `limit` paths are found.
inline int max_vertex_disjoint_paths(const Graph& g, VertexId u, VertexId v,
                                     int limit = detail::kUnbounded) {
  if (!g.contains(u) || !g.contains(v))
    throw GraphError("unknown vertex id");
  if (u == v)
    throw GraphError("disjoint paths need two distinct endpoints");
  auto net = detail::split_network(g, {u, v});
  return net.max_flow(2 * u, 2 * v + 1, limit);
}

// Decides whether {a,b} is a local source/destination pair for the subgraph
// made of a, b and `forbidden`: true iff G - forbidden has vertex-disjoint
// paths s->a and b->t, or s->b and a->t. A fresh vertex adjacent to exactly a
// and b lies on a simple s-t path iff such a pair exists.
inline bool has_local_linkage(const Instance& inst, VertexId a, VertexId b,
                              const std::vector<VertexId>& forbidden) {
  auto banned = [&](VertexId x) {
    return std::find(forbidden.begin(), forbidden.end(), x) != forbidden.end();
  };
  if (banned(inst.s) || banned(inst.t))
    throw GraphError("terminals may not be forbidden");
  if (banned(a) || banned(b))
    throw GraphError("linkage endpoints may not be forbidden");
  if (a == b)
    throw GraphError("linkage endpoints must differ");
  Graph h = without_vertices(inst.graph, forbidden);
  VertexId w = h.add_vertex();
  h.add_edge(w, a);
  h.add_edge(w, b);
  return vertex_on_st_path(h, inst.s, inst.t, w);
}

} // namespace tracking
