//===-- kernel.hpp -- global NO-rules and the kernelization pipeline ------===//
//
// After the local rules are exhausted the instance is probed with budget
// bounds derived from a 2-approximate feedback vertex set S and the forest
// G - S:
//
//   disjoint paths  more than k+1 internally disjoint u-v paths
//   FVS size        |S| > 2k
//   per sink        f in S whose tree-sink structures hold > 3k neighbours,
//                   or more than k such structures
//   V1 / V2         |V1| > 6k^2,  |V2| > 20k^2 - 7k
//
// Survivors must satisfy |V| <= 104k^2 - 18k and |E| <= 132k^2 - 27k; a
// violation is reported as an internal error, never as a NO.
//
//===----------------------------------------------------------------------===//

#pragma once

#include "fvs.hpp"
#include "reduction.hpp"

#include <map>
#include <optional>
#include <string>

namespace tracking {

// ---------------------------------------------------------------------------
// Bound arithmetic.

inline long long v1_limit(long long k) { return 6 * k * k; }
inline long long v2_limit(long long k) { return 20 * k * k - 7 * k; }
inline long long v4_limit(long long k) { return 78 * k * k - 15 * k; }
inline long long vertex_limit(long long k) { return 104 * k * k - 18 * k; }
inline long long edge_limit(long long k) { return 132 * k * k - 27 * k; }
inline long long planar_vertex_limit(long long k) { return 10 * k - 3; }

// ---------------------------------------------------------------------------
// Forest categories.

struct VertexCategorization {
  std::vector<VertexId> S;
  std::vector<std::vector<VertexId>> trees;
  std::vector<VertexId> V1, V2, V3, V4;
  std::size_t E1 = 0, E2 = 0, E3 = 0;
  std::map<VertexId, std::size_t> tree_of;
};

// V1: shares an S-neighbour with a vertex of its own tree.
// V2: shares an S-neighbour with a vertex of another tree.
// V3: has S-neighbours, none shared with any other forest vertex.
// V4: no S-neighbour.
// V1 and V2 may overlap; Ei counts all edges between Vi and S.
inline VertexCategorization categorize(const Instance& inst, const std::vector<VertexId>& S) {
  const Graph& g = inst.graph;
  VertexCategorization cat;
  cat.S = S;
  std::sort(cat.S.begin(), cat.S.end());
  cat.trees = forest_decompose(g, cat.S);
  for (std::size_t i = 0; i < cat.trees.size(); ++i)
    for (VertexId v : cat.trees[i])
      cat.tree_of[v] = i;

  auto in_s = [&](VertexId v) { return std::binary_search(cat.S.begin(), cat.S.end(), v); };
  // Forest neighbours of every f in S, grouped by tree.
  std::map<VertexId, std::map<std::size_t, std::size_t>> per_tree;
  for (VertexId f : cat.S)
    for (VertexId v : g.neighbors(f))
      if (!in_s(v))
        ++per_tree[f][cat.tree_of.at(v)];

  for (const auto& tree : cat.trees)
    for (VertexId v : tree) {
      const std::size_t own = cat.tree_of.at(v);
      bool has_s = false, shares_same = false, shares_other = false;
      std::size_t s_edges = 0;
      for (VertexId f : g.neighbors(v)) {
        if (!in_s(f))
          continue;
        has_s = true;
        ++s_edges;
        for (auto [tree_idx, cnt] : per_tree[f]) {
          if (tree_idx == own && cnt >= 2)
            shares_same = true;
          if (tree_idx != own && cnt >= 1)
            shares_other = true;
        }
      }
      if (!has_s) {
        cat.V4.push_back(v);
        continue;
      }
      if (shares_same) {
        cat.V1.push_back(v);
        cat.E1 += s_edges;
      }
      if (shares_other) {
        cat.V2.push_back(v);
        cat.E2 += s_edges;
      }
      if (!shares_same && !shares_other) {
        cat.V3.push_back(v);
        cat.E3 += s_edges;
      }
    }
  for (auto* part : {&cat.V1, &cat.V2, &cat.V3, &cat.V4})
    std::sort(part->begin(), part->end());
  return cat;
}

struct TreeSinkRecord {
  VertexId sink;
  std::size_t tree;
  std::size_t delta;
  friend bool operator==(const TreeSinkRecord&, const TreeSinkRecord&) = default;
};

// One record per (f in S, tree of G - S) where f has at least two
// neighbours in the tree; ordered by sink, then tree index.
inline std::vector<TreeSinkRecord> tree_sink_census(const Instance& inst, const std::vector<VertexId>& S) {
  auto cat = categorize(inst, S);
  std::vector<TreeSinkRecord> records;
  for (VertexId f : cat.S) {
    std::map<std::size_t, std::size_t> counts;
    for (VertexId v : inst.graph.neighbors(f))
      if (auto it = cat.tree_of.find(v); it != cat.tree_of.end())
        ++counts[it->second];
    for (auto [tree, delta] : counts)
      if (delta >= 2)
        records.push_back({f, tree, delta});
  }
  return records;
}

// ---------------------------------------------------------------------------
// NO-rules. Each returns a witness when the instance is certified NO.

struct DisjointPathsWitness {
  VertexId u, v;
  int paths;
};

inline std::optional<DisjointPathsWitness> disjoint_paths_no_check(const Instance& inst) {
  if (inst.k < 0)
    throw std::invalid_argument("negative budget");
  const int limit = static_cast<int>(std::min<long long>(inst.k + 2, 1 << 20));
  auto verts = inst.graph.vertices();
  for (std::size_t i = 0; i < verts.size(); ++i) {
    // Fewer than k+2 neighbours on either end rules the pair out early.
    if (static_cast<long long>(inst.graph.degree(verts[i])) < inst.k + 2)
      continue;
    for (std::size_t j = i + 1; j < verts.size(); ++j) {
      if (static_cast<long long>(inst.graph.degree(verts[j])) < inst.k + 2)
        continue;
      int paths = max_vertex_disjoint_paths(inst.graph, verts[i], verts[j], limit);
      if (paths > inst.k + 1)
        return DisjointPathsWitness{verts[i], verts[j], paths};
    }
  }
  return std::nullopt;
}

struct FvsBound {
  std::vector<VertexId> S;
  bool no;
};

inline FvsBound rule7_fvs_bound(const Instance& inst) {
  auto S = fvs_2approx(inst.graph);
  bool no = static_cast<long long>(S.size()) > 2 * inst.k;
  return {std::move(S), no};
}

struct SinkWitness {
  VertexId sink;
  std::size_t structures;
  std::size_t delta_sum;
};

// NO iff some sink's structures hold more than 3k neighbours in total, or
// it anchors more than k structures (each needs its own tracker).
inline std::optional<SinkWitness> per_sink_bound(const std::vector<TreeSinkRecord>& census, long long k) {
  std::map<VertexId, SinkWitness> per_sink;
  for (const auto& r : census) {
    auto& w = per_sink.try_emplace(r.sink, SinkWitness{r.sink, 0, 0}).first->second;
    ++w.structures;
    w.delta_sum += r.delta;
  }
  for (const auto& [f, w] : per_sink)
    if (static_cast<long long>(w.delta_sum) > 3 * k || static_cast<long long>(w.structures) > k)
      return w;
  return std::nullopt;
}

inline bool rule8_v1_bound(const VertexCategorization& cat, long long k) {
  return static_cast<long long>(cat.V1.size()) > v1_limit(k);
}

inline bool rule9_v2_bound(const VertexCategorization& cat, long long k) {
  return static_cast<long long>(cat.V2.size()) > v2_limit(k);
}

struct KernelSizeCheck {
  bool ok = true;
  std::string message;
};

inline KernelSizeCheck kernel_size_assert(const Instance& inst, const VertexCategorization& cat) {
  const long long n = static_cast<long long>(inst.graph.vertex_count());
  const long long m = static_cast<long long>(inst.graph.edge_count());
  const long long v4 = static_cast<long long>(cat.V4.size());
  KernelSizeCheck check;
  auto fail = [&](const std::string& what) {
    check.ok = false;
    check.message += (check.message.empty() ? "" : "; ") + what;
  };
  if (n > vertex_limit(inst.k))
    fail("|V|=" + std::to_string(n) + " > " + std::to_string(vertex_limit(inst.k)));
  if (m > edge_limit(inst.k))
    fail("|E|=" + std::to_string(m) + " > " + std::to_string(edge_limit(inst.k)));
  if (v4 > v4_limit(inst.k))
    fail("|V4|=" + std::to_string(v4) + " > " + std::to_string(v4_limit(inst.k)));
  if (!check.ok)
    check.message += " [k=" + std::to_string(inst.k) + " |S|=" + std::to_string(cat.S.size()) +
                     " |V1|=" + std::to_string(cat.V1.size()) + " |V2|=" + std::to_string(cat.V2.size()) +
                     " |V3|=" + std::to_string(cat.V3.size()) + " |V4|=" + std::to_string(v4) + "]";
  return check;
}

struct PlanarDiagnostic {
  long long vertices;
  long long limit;
  bool within;
};

// Informational only: the caller vouches for planarity.
inline PlanarDiagnostic planar_bound_diag(const Instance& inst) {
  const long long n = static_cast<long long>(inst.graph.vertex_count());
  return {n, planar_vertex_limit(inst.k), n <= planar_vertex_limit(inst.k)};
}

// ---------------------------------------------------------------------------
// Pipeline.

enum class Verdict { Reduced, TrivialYes, No, NoPath };
enum class NoReason { BudgetExhausted, FvsTooLarge, DisjointPaths, PerSinkBound, V1Bound, V2Bound };

inline const char* verdict_name(Verdict v) {
  switch (v) {
  case Verdict::Reduced: return "Reduced";
  case Verdict::TrivialYes: return "TrivialYes";
  case Verdict::No: return "No";
  case Verdict::NoPath: return "NoPath";
  }
  return "?";
}

inline const char* no_reason_name(NoReason r) {
  switch (r) {
  case NoReason::BudgetExhausted: return "BudgetExhausted";
  case NoReason::FvsTooLarge: return "FvsTooLarge";
  case NoReason::DisjointPaths: return "DisjointPaths";
  case NoReason::PerSinkBound: return "PerSinkBound";
  case NoReason::V1Bound: return "V1Bound";
  case NoReason::V2Bound: return "V2Bound";
  }
  return "?";
}

struct KernelOutcome {
  Verdict verdict = Verdict::Reduced;
  Instance reduced; // the instance as left by the last stage that ran
  std::vector<VertexId> forced_trackers;
  ReductionTrace trace;
  std::optional<NoReason> no_reason;
  std::string witness; // human-readable, vertex ids 1-based as in instance files
  std::optional<VertexCategorization> categories;
  std::optional<KernelSizeCheck> size_check;
};

inline KernelOutcome kernelize(Instance inst, const RuleObserver& observer = {}) {
  inst.validate();
  KernelOutcome out;
  out.trace.initial_k = inst.k;
  auto finish = [&](Verdict v) {
    out.verdict = v;
    out.forced_trackers = out.trace.forced_trackers();
    out.reduced = std::move(inst);
    return out;
  };
  auto no = [&](NoReason why, std::string witness) {
    out.no_reason = why;
    out.witness = std::move(witness);
    return finish(Verdict::No);
  };

  auto local = exhaust_local_rules(inst, out.trace, observer);
  switch (local.status) {
  case LocalStatus::NoPath:
    return finish(Verdict::NoPath);
  case LocalStatus::TrivialYes:
    return finish(Verdict::TrivialYes);
  case LocalStatus::No: {
    std::string w = local.no_rule ? std::string(rule_name(*local.no_rule)) : "";
    if (local.bundle)
      w += ": " + std::to_string(local.bundle->m) + " parallel degree-2 vertices between " +
           std::to_string(local.bundle->a + 1) + " and " + std::to_string(local.bundle->b + 1);
    else
      w += ": budget fell below zero";
    return no(NoReason::BudgetExhausted, w);
  }
  case LocalStatus::Stable:
    break;
  }

  if (auto w = disjoint_paths_no_check(inst))
    return no(NoReason::DisjointPaths, std::to_string(w->paths) + " disjoint paths between " +
                                           std::to_string(w->u + 1) + " and " + std::to_string(w->v + 1));

  auto fvs = rule7_fvs_bound(inst);
  if (fvs.no)
    return no(NoReason::FvsTooLarge, "|S|=" + std::to_string(fvs.S.size()) + " > 2k");

  auto cat = categorize(inst, fvs.S);
  out.categories = cat;
  if (auto w = per_sink_bound(tree_sink_census(inst, fvs.S), inst.k))
    return no(NoReason::PerSinkBound, "sink " + std::to_string(w->sink + 1) + " anchors " +
                                          std::to_string(w->structures) + " structures with delta sum " +
                                          std::to_string(w->delta_sum));
  if (rule8_v1_bound(cat, inst.k))
    return no(NoReason::V1Bound, "|V1|=" + std::to_string(cat.V1.size()));
  if (rule9_v2_bound(cat, inst.k))
    return no(NoReason::V2Bound, "|V2|=" + std::to_string(cat.V2.size()));

  out.size_check = kernel_size_assert(inst, cat);
  return finish(Verdict::Reduced);
}

} // namespace tracking
