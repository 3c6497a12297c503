//===-- oracle.hpp -- brute-force ground truth for small instances --------===//
//
// Everything here enumerates: all simple s-t paths, all tracker subsets in
// increasing cardinality, all vertex subsets for feedback vertex sets. It is
// meant for instances of roughly a dozen vertices and is independent of the
// flow machinery used by the reduction rules.
//
//===----------------------------------------------------------------------===//

#pragma once

#include "graph.hpp"

#include <functional>
#include <map>
#include <numeric>
#include <optional>

namespace tracking {

inline constexpr std::size_t kDefaultPathCap = 10'000;

class PathExplosion : public std::runtime_error {
public:
  explicit PathExplosion(std::size_t cap)
      : std::runtime_error("more than " + std::to_string(cap) + " s-t paths"), cap_(cap) {}
  std::size_t cap() const { return cap_; }

private:
  std::size_t cap_;
};

class NoPathError : public std::runtime_error {
public:
  NoPathError() : std::runtime_error("no s-t path exists") {}
};

// Simple s-t path as its vertex sequence from s to t.
using PathSeq = std::vector<VertexId>;

struct TrackingSet {
  std::vector<VertexId> members; // sorted, unique

  TrackingSet() = default;
  explicit TrackingSet(std::vector<VertexId> ids) : members(std::move(ids)) {
    std::sort(members.begin(), members.end());
    members.erase(std::unique(members.begin(), members.end()), members.end());
  }
  bool contains(VertexId v) const { return std::binary_search(members.begin(), members.end(), v); }
  std::size_t size() const { return members.size(); }
  friend bool operator==(const TrackingSet&, const TrackingSet&) = default;
};

// All simple s-t paths in lexicographic order of their vertex sequences.
inline std::vector<PathSeq> enumerate_st_paths(const Instance& inst, std::size_t cap = kDefaultPathCap) {
  if (cap == 0)
    throw std::invalid_argument("path cap must be positive");
  const Graph& g = inst.graph;
  std::vector<PathSeq> paths;
  std::vector<bool> on_path(g.capacity(), false);
  PathSeq current{inst.s};
  on_path[inst.s] = true;

  // Prune branches that cannot reach t without revisiting the current path.
  auto can_reach_t = [&](VertexId from) {
    std::vector<bool> seen = on_path;
    std::vector<VertexId> stack{from};
    seen[from] = true;
    while (!stack.empty()) {
      VertexId u = stack.back();
      stack.pop_back();
      if (u == inst.t)
        return true;
      for (VertexId w : g.neighbors(u))
        if (!seen[w]) {
          seen[w] = true;
          stack.push_back(w);
        }
    }
    return false;
  };

  std::function<void(VertexId)> extend = [&](VertexId u) {
    for (VertexId w : g.neighbors(u)) {
      if (on_path[w])
        continue;
      current.push_back(w);
      if (w == inst.t) {
        if (paths.size() == cap)
          throw PathExplosion(cap);
        paths.push_back(current);
      } else {
        on_path[w] = true;
        if (can_reach_t(w))
          extend(w);
        on_path[w] = false;
      }
      current.pop_back();
    }
  };
  if (inst.s == inst.t)
    throw GraphError("source and destination coincide");
  extend(inst.s);
  return paths;
}

inline std::vector<VertexId> project_sequence(const PathSeq& path, const TrackingSet& trackers) {
  std::vector<VertexId> out;
  for (VertexId v : path)
    if (trackers.contains(v))
      out.push_back(v);
  return out;
}

// Two paths whose tracker sequences coincide, if any.
inline std::optional<std::pair<std::size_t, std::size_t>>
find_collision(const std::vector<PathSeq>& paths, const TrackingSet& trackers) {
  std::vector<std::vector<VertexId>> seqs;
  seqs.reserve(paths.size());
  for (const auto& p : paths)
    seqs.push_back(project_sequence(p, trackers));
  std::vector<std::size_t> order(paths.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return seqs[a] != seqs[b] ? seqs[a] < seqs[b] : a < b;
  });
  for (std::size_t i = 1; i < order.size(); ++i)
    if (seqs[order[i - 1]] == seqs[order[i]])
      return std::pair{order[i - 1], order[i]};
  return std::nullopt;
}

inline bool is_tracking_set(const std::vector<PathSeq>& paths, const TrackingSet& trackers) {
  return !find_collision(paths, trackers).has_value();
}

inline bool is_tracking_set(const Instance& inst, const TrackingSet& trackers,
                            std::size_t cap = kDefaultPathCap) {
  return is_tracking_set(enumerate_st_paths(inst, cap), trackers);
}

namespace detail {

// Calls visit(subset) for every r-subset of `items` in lexicographic order
// until visit returns true; returns whether it did.
template <typename Visit>
bool for_each_combination(const std::vector<VertexId>& items, std::size_t r, Visit&& visit) {
  const std::size_t n = items.size();
  if (r > n)
    return false;
  std::vector<std::size_t> idx(r);
  std::iota(idx.begin(), idx.end(), 0);
  std::vector<VertexId> subset(r);
  for (;;) {
    for (std::size_t i = 0; i < r; ++i)
      subset[i] = items[idx[i]];
    if (visit(subset))
      return true;
    std::size_t i = r;
    while (i > 0 && idx[i - 1] == n - r + i - 1)
      --i;
    if (i == 0)
      return false;
    ++idx[i - 1];
    for (std::size_t j = i; j < r; ++j)
      idx[j] = idx[j - 1] + 1;
  }
}

// Bitmask-based distinctness check; requires capacity <= 64.
class MaskedPaths {
public:
  explicit MaskedPaths(const std::vector<PathSeq>& paths) : paths_(paths) {}

  bool separates(std::uint64_t tracker_mask) const {
    std::vector<std::vector<VertexId>> seqs;
    seqs.reserve(paths_.size());
    for (const auto& p : paths_) {
      std::vector<VertexId> seq;
      for (VertexId v : p)
        if (tracker_mask >> v & 1u)
          seq.push_back(v);
      seqs.push_back(std::move(seq));
    }
    std::sort(seqs.begin(), seqs.end());
    return std::adjacent_find(seqs.begin(), seqs.end()) == seqs.end();
  }

private:
  const std::vector<PathSeq>& paths_;
};

} // namespace detail

struct MinTrackingResult {
  std::size_t size;
  TrackingSet witness;
};

// Smallest tracking set drawn from V \ {s,t}; the witness is the
// lexicographically least set among those of minimum size.
inline MinTrackingResult min_tracking_set(const Instance& inst, std::size_t cap = kDefaultPathCap) {
  auto paths = enumerate_st_paths(inst, cap);
  if (paths.empty())
    throw NoPathError();
  if (inst.graph.capacity() > 64)
    throw std::invalid_argument("oracle supports at most 64 vertex ids");
  std::vector<VertexId> candidates;
  for (VertexId v : inst.graph.vertices())
    if (!inst.is_terminal(v))
      candidates.push_back(v);
  detail::MaskedPaths masked(paths);
  for (std::size_t r = 0; r <= candidates.size(); ++r) {
    std::optional<TrackingSet> found;
    detail::for_each_combination(candidates, r, [&](const std::vector<VertexId>& subset) {
      std::uint64_t mask = 0;
      for (VertexId v : subset)
        mask |= std::uint64_t{1} << v;
      if (!masked.separates(mask))
        return false;
      found = TrackingSet(subset);
      return true;
    });
    if (found)
      return {r, *found};
  }
  // Unreachable: distinct simple paths always differ in their inner vertices.
  throw std::logic_error("no tracking set found among inner vertices");
}

inline constexpr std::size_t kExactFvsLimit = 24;

struct MinFvsResult {
  std::size_t size;
  std::vector<VertexId> witness;
};

inline MinFvsResult min_fvs_exact(const Graph& g) {
  if (g.vertex_count() > kExactFvsLimit)
    throw std::invalid_argument("exact FVS limited to " + std::to_string(kExactFvsLimit) + " vertices");
  auto verts = g.vertices();
  auto acyclic_without = [&](const std::vector<VertexId>& removed) {
    Graph h = without_vertices(g, removed);
    // Forest test by union-find over surviving edges.
    std::vector<VertexId> parent(g.capacity());
    std::iota(parent.begin(), parent.end(), 0);
    std::function<VertexId(VertexId)> find = [&](VertexId x) {
      return parent[x] == x ? x : parent[x] = find(parent[x]);
    };
    for (auto [u, v] : h.edges()) {
      VertexId ru = find(u), rv = find(v);
      if (ru == rv)
        return false;
      parent[ru] = rv;
    }
    return true;
  };
  for (std::size_t r = 0; r <= verts.size(); ++r) {
    std::optional<std::vector<VertexId>> found;
    detail::for_each_combination(verts, r, [&](const std::vector<VertexId>& subset) {
      if (!acyclic_without(subset))
        return false;
      found = subset;
      return true;
    });
    if (found)
      return {r, *found};
  }
  throw std::logic_error("unreachable: removing every vertex leaves a forest");
}

struct EquivalenceReport {
  std::size_t min_before;
  std::size_t min_after;
  std::size_t forced;
  bool pass;
};

// A rule that forces `forced` trackers is exact when the minimum drops by
// precisely that amount.
inline EquivalenceReport check_rule_equivalence(const Instance& before, const Instance& after,
                                                std::size_t forced, std::size_t cap = kDefaultPathCap) {
  auto m1 = min_tracking_set(before, cap).size;
  auto m2 = min_tracking_set(after, cap).size;
  return {m1, m2, forced, m1 == m2 + forced};
}

} // namespace tracking
