//===-- graph.hpp -- undirected simple graph and s-t instance --------------===//
//
// Vertex ids are dense indices that stay valid for the lifetime of a graph:
// removing a vertex only marks it dead, so ids are never reused and events
// recorded against one state of the graph can be replayed on another.
//
//===----------------------------------------------------------------------===//

#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <queue>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace tracking {

using VertexId = std::uint32_t;
using Edge = std::pair<VertexId, VertexId>;

inline Edge make_edge(VertexId u, VertexId v) { return u < v ? Edge{u, v} : Edge{v, u}; }

class GraphError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

class Graph {
public:
  Graph() = default;
  explicit Graph(std::size_t n) : adj_(n), alive_(n, true), live_count_(n) {}

  VertexId add_vertex() {
    adj_.emplace_back();
    alive_.push_back(true);
    ++live_count_;
    return static_cast<VertexId>(adj_.size() - 1);
  }

  // Number of ids ever handed out (live or dead).
  std::size_t capacity() const { return adj_.size(); }
  std::size_t vertex_count() const { return live_count_; }
  std::size_t edge_count() const { return edge_count_; }

  bool contains(VertexId v) const { return v < adj_.size() && alive_[v]; }

  void add_edge(VertexId u, VertexId v) {
    require(u);
    require(v);
    if (u == v)
      throw GraphError("self-loop on vertex " + std::to_string(u));
    if (!adj_[u].insert(v).second)
      throw GraphError("parallel edge (" + std::to_string(u) + "," + std::to_string(v) + ")");
    adj_[v].insert(u);
    ++edge_count_;
  }

  void remove_edge(VertexId u, VertexId v) {
    require(u);
    require(v);
    if (adj_[u].erase(v) == 0)
      throw GraphError("no edge (" + std::to_string(u) + "," + std::to_string(v) + ")");
    adj_[v].erase(u);
    --edge_count_;
  }

  void remove_vertex(VertexId v) {
    require(v);
    for (VertexId w : adj_[v])
      adj_[w].erase(v);
    edge_count_ -= adj_[v].size();
    adj_[v].clear();
    alive_[v] = false;
    --live_count_;
  }

  bool has_edge(VertexId u, VertexId v) const {
    return contains(u) && contains(v) && adj_[u].count(v) != 0;
  }

  std::size_t degree(VertexId v) const {
    require(v);
    return adj_[v].size();
  }

  const std::set<VertexId>& neighbors(VertexId v) const {
    require(v);
    return adj_[v];
  }

  // Live vertices in ascending id order.
  std::vector<VertexId> vertices() const {
    std::vector<VertexId> out;
    out.reserve(live_count_);
    for (VertexId v = 0; v < adj_.size(); ++v)
      if (alive_[v])
        out.push_back(v);
    return out;
  }

  // Edges as (smaller, larger) pairs in lexicographic order.
  std::vector<Edge> edges() const {
    std::vector<Edge> out;
    out.reserve(edge_count_);
    for (VertexId u = 0; u < adj_.size(); ++u)
      if (alive_[u])
        for (VertexId v : adj_[u])
          if (u < v)
            out.emplace_back(u, v);
    return out;
  }

  // Verifies symmetry, simplicity and the cached counters. Returns an empty
  // string when the graph is consistent, otherwise a description of the
  // first violation found.
  std::string audit() const {
    std::size_t live = 0, half_edges = 0;
    for (VertexId u = 0; u < adj_.size(); ++u) {
      if (!alive_[u]) {
        if (!adj_[u].empty())
          return "dead vertex " + std::to_string(u) + " has neighbors";
        continue;
      }
      ++live;
      half_edges += adj_[u].size();
      for (VertexId v : adj_[u]) {
        if (v == u)
          return "self-loop on " + std::to_string(u);
        if (!contains(v))
          return "edge to dead vertex " + std::to_string(v);
        if (adj_[v].count(u) == 0)
          return "asymmetric edge (" + std::to_string(u) + "," + std::to_string(v) + ")";
      }
    }
    if (live != live_count_)
      return "live vertex counter out of sync";
    if (half_edges != 2 * edge_count_)
      return "edge counter out of sync";
    return {};
  }

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.alive_ == b.alive_ && a.adj_ == b.adj_;
  }

private:
  void require(VertexId v) const {
    if (!contains(v))
      throw GraphError("unknown vertex id " + std::to_string(v));
  }

  std::vector<std::set<VertexId>> adj_;
  std::vector<bool> alive_;
  std::size_t live_count_ = 0;
  std::size_t edge_count_ = 0;
};

struct Instance {
  Graph graph;
  VertexId s = 0;
  VertexId t = 1;
  long long k = 0;

  // Throws GraphError when the terminals or budget are invalid.
  void validate() const {
    if (!graph.contains(s) || !graph.contains(t))
      throw GraphError("terminal is not a vertex of the graph");
    if (s == t)
      throw GraphError("source and destination coincide");
    if (k < 0)
      throw GraphError("negative budget");
  }

  bool is_terminal(VertexId v) const { return v == s || v == t; }

  friend bool operator==(const Instance&, const Instance&) = default;
};

// Vertices reachable from `from` in g, as a membership vector indexed by id.
inline std::vector<bool> reachable_from(const Graph& g, VertexId from) {
  std::vector<bool> seen(g.capacity(), false);
  if (!g.contains(from))
    return seen;
  std::queue<VertexId> q;
  q.push(from);
  seen[from] = true;
  while (!q.empty()) {
    VertexId u = q.front();
    q.pop();
    for (VertexId w : g.neighbors(u))
      if (!seen[w]) {
        seen[w] = true;
        q.push(w);
      }
  }
  return seen;
}

inline bool terminals_connected(const Instance& inst) {
  return reachable_from(inst.graph, inst.s)[inst.t];
}

// Unweighted BFS distances from `from`; unreachable entries are -1.
inline std::vector<long long> bfs_distances(const Graph& g, VertexId from) {
  std::vector<long long> dist(g.capacity(), -1);
  std::queue<VertexId> q;
  dist[from] = 0;
  q.push(from);
  while (!q.empty()) {
    VertexId u = q.front();
    q.pop();
    for (VertexId w : g.neighbors(u))
      if (dist[w] < 0) {
        dist[w] = dist[u] + 1;
        q.push(w);
      }
  }
  return dist;
}

// Induced subgraph on the live vertices not in `removed`; ids are preserved.
inline Graph without_vertices(const Graph& g, const std::vector<VertexId>& removed) {
  Graph h = g;
  for (VertexId v : removed)
    if (h.contains(v))
      h.remove_vertex(v);
  return h;
}

inline std::string describe(const Instance& inst) {
  std::ostringstream os;
  os << "n=" << inst.graph.vertex_count() << " m=" << inst.graph.edge_count()
     << " s=" << inst.s << " t=" << inst.t << " k=" << inst.k << " E={";
  bool first = true;
  for (auto [u, v] : inst.graph.edges()) {
    os << (first ? "" : " ") << u << "-" << v;
    first = false;
  }
  os << "}";
  return os.str();
}

} // namespace tracking
