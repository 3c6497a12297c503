//===-- fvs.hpp -- feedback vertex sets and forest decomposition ----------===//
//
// fvs_2approx -- local-ratio 2-approximation (Bafna, Berman, Fujito) with
//                exact rational weights
// is_forest / forest_decompose -- certification and tree enumeration of G-S
//
//===----------------------------------------------------------------------===//

#pragma once

#include "graph.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <array>
#include <map>
#include <optional>
#include <numeric>

namespace tracking {

// |E| = |V| - #components holds exactly for forests.
inline bool is_forest(const Graph& g) {
  std::size_t components = 0;
  std::vector<bool> seen(g.capacity(), false);
  for (VertexId v : g.vertices()) {
    if (seen[v])
      continue;
    ++components;
    auto r = reachable_from(g, v);
    for (VertexId w = 0; w < r.size(); ++w)
      if (r[w])
        seen[w] = true;
  }
  return g.edge_count() + components == g.vertex_count();
}

inline bool is_feedback_vertex_set(const Graph& g, const std::vector<VertexId>& S) {
  return is_forest(without_vertices(g, S));
}

namespace detail {

using Weight = boost::multiprecision::cpp_rational;

// Repeatedly strips vertices of degree <= 1.
inline void strip_low_degree(Graph& g) {
  std::vector<VertexId> stack;
  for (VertexId v : g.vertices())
    if (g.degree(v) <= 1)
      stack.push_back(v);
  while (!stack.empty()) {
    VertexId v = stack.back();
    stack.pop_back();
    if (!g.contains(v))
      continue;
    std::vector<VertexId> nbrs(g.neighbors(v).begin(), g.neighbors(v).end());
    g.remove_vertex(v);
    for (VertexId w : nbrs)
      if (g.degree(w) == 1)
        stack.push_back(w);
  }
}

// A cycle in which at most one vertex has degree above two, in a graph of
// minimum degree 2. Either a whole component that is a cycle, or a maximal
// chain of degree-2 vertices whose two ends attach to the same vertex.
inline std::optional<std::vector<VertexId>> find_semidisjoint_cycle(const Graph& g) {
  std::vector<bool> visited(g.capacity(), false);
  for (VertexId start : g.vertices()) {
    if (visited[start] || g.degree(start) != 2)
      continue;
    // Walk both directions along degree-2 vertices.
    std::vector<VertexId> chain{start};
    visited[start] = true;
    std::array<VertexId, 2> ends{};
    bool closed = false;
    auto nb = g.neighbors(start).begin();
    std::array<VertexId, 2> first_step{*nb, *std::next(nb)};
    for (int dir = 0; dir < 2 && !closed; ++dir) {
      VertexId prev = start, cur = first_step[dir];
      while (g.degree(cur) == 2 && cur != start) {
        if (dir == 0)
          chain.push_back(cur);
        else
          chain.insert(chain.begin(), cur);
        visited[cur] = true;
        VertexId a = *g.neighbors(cur).begin(), b = *std::next(g.neighbors(cur).begin());
        VertexId next = (a == prev) ? b : a;
        prev = cur;
        cur = next;
      }
      if (cur == start)
        closed = true;
      else
        ends[dir] = cur;
    }
    if (closed)
      return chain;
    if (ends[0] == ends[1]) {
      chain.push_back(ends[0]);
      return chain;
    }
  }
  return std::nullopt;
}

} // namespace detail

// Returns a feedback vertex set of size at most twice the minimum, sorted by
// id. Local ratio phase: while the (degree >= 2 core of the) graph is
// nonempty, subtract a weight function that is either uniform on a
// semidisjoint cycle or proportional to degree-1; zero-weight vertices enter
// the solution. Reverse-delete then drops redundant picks.
inline std::vector<VertexId> fvs_2approx(const Graph& g) {
  using detail::Weight;
  Graph core = g;
  detail::strip_low_degree(core);
  std::vector<Weight> weight(g.capacity(), Weight(1));
  std::vector<VertexId> picked;

  while (core.vertex_count() > 0) {
    auto cycle = detail::find_semidisjoint_cycle(core);
    if (cycle) {
      Weight gamma = weight[cycle->front()];
      for (VertexId v : *cycle)
        gamma = std::min(gamma, weight[v]);
      for (VertexId v : *cycle)
        weight[v] -= gamma;
    } else {
      std::optional<Weight> gamma;
      for (VertexId v : core.vertices()) {
        Weight ratio = weight[v] / Weight(core.degree(v) - 1);
        if (!gamma || ratio < *gamma)
          gamma = ratio;
      }
      for (VertexId v : core.vertices())
        weight[v] -= *gamma * Weight(core.degree(v) - 1);
    }
    for (VertexId v : core.vertices())
      if (weight[v] == 0) {
        picked.push_back(v);
        core.remove_vertex(v);
      }
    detail::strip_low_degree(core);
  }

  std::vector<VertexId> solution = picked;
  for (auto it = picked.rbegin(); it != picked.rend(); ++it) {
    std::vector<VertexId> trial;
    for (VertexId v : solution)
      if (v != *it)
        trial.push_back(v);
    if (is_feedback_vertex_set(g, trial))
      solution = std::move(trial);
  }
  std::sort(solution.begin(), solution.end());
  return solution;
}

// Connected components of g - S, each sorted ascending; components ordered by
// their smallest id (the canonical root). Throws if g - S has a cycle.
inline std::vector<std::vector<VertexId>> forest_decompose(const Graph& g,
                                                           const std::vector<VertexId>& S) {
  Graph rest = without_vertices(g, S);
  if (!is_forest(rest))
    throw GraphError("vertex set is not a feedback vertex set");
  std::vector<std::vector<VertexId>> trees;
  std::vector<bool> seen(g.capacity(), false);
  for (VertexId root : rest.vertices()) {
    if (seen[root])
      continue;
    auto r = reachable_from(rest, root);
    std::vector<VertexId> tree;
    for (VertexId v = 0; v < r.size(); ++v)
      if (r[v]) {
        seen[v] = true;
        tree.push_back(v);
      }
    trees.push_back(std::move(tree));
  }
  return trees;
}

} // namespace tracking
