//===-- reduction.hpp -- local reduction rules and replayable trace -------===//
//
// Rules, in priority order:
//   R1  delete vertices and edges that lie on no simple s-t path
//   R2  a terminal of degree one (not adjacent to the other terminal) is
//       deleted and its neighbour becomes the terminal
//   R3  b with N(b) = {a,c} and deg(a) = deg(b) = 2 is contracted into (a,c);
//       neither a nor b may be a terminal
//   R4  V = {s,t}: trivially trackable
//   R5  a degree-2 vertex b inside a triangle is a forced tracker
//   R6  m >= 2 degree-2 vertices joining a local source/destination pair:
//       m-1 of them are forced trackers; NO when m > k+1
//
// exhaust_local_rules applies them with restart-from-R1 after every change.
//
//===----------------------------------------------------------------------===//

#pragma once

#include "flow.hpp"

#include <functional>
#include <map>
#include <optional>
#include <string>

namespace tracking {

enum class RuleId { R1V, R1E, R2, R3, R4, R5, R6 };

inline const char* rule_name(RuleId r) {
  switch (r) {
  case RuleId::R1V: return "R1V";
  case RuleId::R1E: return "R1E";
  case RuleId::R2: return "R2";
  case RuleId::R3: return "R3";
  case RuleId::R4: return "R4";
  case RuleId::R5: return "R5";
  case RuleId::R6: return "R6";
  }
  return "?";
}

inline constexpr std::array<RuleId, 7> kAllRules{RuleId::R1V, RuleId::R1E, RuleId::R2, RuleId::R3,
                                                 RuleId::R4,  RuleId::R5,  RuleId::R6};

struct TerminalRelabel {
  VertexId old_id;
  VertexId new_id;
  friend bool operator==(const TerminalRelabel&, const TerminalRelabel&) = default;
};

struct RuleEvent {
  RuleId rule;
  std::vector<VertexId> removed_vertices;
  std::vector<Edge> removed_edges;
  std::vector<Edge> added_edges;
  std::vector<VertexId> forced_trackers;
  long long k_delta = 0;
  std::optional<TerminalRelabel> relabeled_terminal;
};

struct ReductionTrace {
  long long initial_k = 0;
  std::vector<RuleEvent> events;
  // Non-fatal notes, e.g. an R3 match skipped because (a,c) already exists.
  std::vector<std::string> diagnostics;

  long long current_k() const {
    long long k = initial_k;
    for (const auto& e : events)
      k += e.k_delta;
    return k;
  }

  std::vector<VertexId> forced_trackers() const {
    std::vector<VertexId> out;
    for (const auto& e : events)
      out.insert(out.end(), e.forced_trackers.begin(), e.forced_trackers.end());
    std::sort(out.begin(), out.end());
    return out;
  }

  std::size_t count(RuleId r) const {
    return static_cast<std::size_t>(
        std::count_if(events.begin(), events.end(), [r](const RuleEvent& e) { return e.rule == r; }));
  }
};

// Applies one recorded mutation. Used for replay; the rules themselves go
// through the same routine so that replay is exact by construction.
inline void apply_event(Instance& inst, const RuleEvent& e) {
  for (auto [u, v] : e.removed_edges)
    inst.graph.remove_edge(u, v);
  for (VertexId v : e.removed_vertices)
    inst.graph.remove_vertex(v);
  for (auto [u, v] : e.added_edges)
    inst.graph.add_edge(u, v);
  if (e.relabeled_terminal) {
    if (inst.s == e.relabeled_terminal->old_id)
      inst.s = e.relabeled_terminal->new_id;
    else if (inst.t == e.relabeled_terminal->old_id)
      inst.t = e.relabeled_terminal->new_id;
    else
      throw GraphError("relabel event does not match a terminal");
  }
  inst.k += e.k_delta;
}

inline Instance replay(Instance original, const ReductionTrace& trace) {
  for (const auto& e : trace.events)
    apply_event(original, e);
  return original;
}

namespace detail {
inline void record(Instance& inst, ReductionTrace& trace, RuleEvent e) {
  apply_event(inst, e);
  trace.events.push_back(std::move(e));
}
} // namespace detail

// ---------------------------------------------------------------------------
// Individual rules. Each applies a single match (R1 applies all of them) and
// reports whether the instance changed.

inline bool rule1_prune(Instance& inst, ReductionTrace& trace) {
  bool changed = false;
  for (;;) {
    bool pass_changed = false;
    for (VertexId v : inst.graph.vertices())
      if (!vertex_on_st_path(inst, v)) {
        detail::record(inst, trace, RuleEvent{.rule = RuleId::R1V, .removed_vertices = {v}});
        pass_changed = true;
      }
    for (auto [u, v] : inst.graph.edges())
      if (!edge_on_st_path(inst, u, v)) {
        detail::record(inst, trace, RuleEvent{.rule = RuleId::R1E, .removed_edges = {{u, v}}});
        pass_changed = true;
      }
    if (!pass_changed)
      break;
    changed = true;
  }
  return changed;
}

inline bool rule2_relabel_terminal(Instance& inst, ReductionTrace& trace) {
  bool changed = false;
  for (bool progress = true; progress;) {
    progress = false;
    for (VertexId term : {inst.s, inst.t}) {
      VertexId other = term == inst.s ? inst.t : inst.s;
      if (inst.graph.degree(term) != 1)
        continue;
      VertexId next = *inst.graph.neighbors(term).begin();
      if (next == other)
        continue;
      detail::record(inst, trace,
                     RuleEvent{.rule = RuleId::R2,
                               .removed_vertices = {term},
                               .relabeled_terminal = TerminalRelabel{term, next}});
      progress = changed = true;
      break;
    }
  }
  return changed;
}

inline bool rule3_contract_deg2(Instance& inst, ReductionTrace& trace) {
  const Graph& g = inst.graph;
  for (VertexId b : g.vertices()) {
    if (inst.is_terminal(b) || g.degree(b) != 2)
      continue;
    VertexId x = *g.neighbors(b).begin(), y = *std::next(g.neighbors(b).begin());
    for (auto [a, c] : {Edge{x, y}, Edge{y, x}}) {
      if (g.degree(a) != 2 || inst.is_terminal(a))
        continue;
      if (g.has_edge(a, c)) {
        // 1-based, like every id a user sees.
        std::string note = "R3 skipped at b=" + std::to_string(b + 1) + ": edge (" + std::to_string(a + 1) +
                           "," + std::to_string(c + 1) + ") already present";
        if (std::find(trace.diagnostics.begin(), trace.diagnostics.end(), note) == trace.diagnostics.end())
          trace.diagnostics.push_back(std::move(note));
        continue;
      }
      detail::record(inst, trace,
                     RuleEvent{.rule = RuleId::R3, .removed_vertices = {b}, .added_edges = {make_edge(a, c)}});
      return true;
    }
  }
  return false;
}

inline bool rule4_trivial_yes(const Instance& inst) {
  return inst.graph.vertex_count() == 2 && inst.graph.has_edge(inst.s, inst.t);
}

enum class RuleOutcome { Unchanged, Changed, No };

inline RuleOutcome rule5_triangle(Instance& inst, ReductionTrace& trace) {
  const Graph& g = inst.graph;
  for (VertexId b : g.vertices()) {
    if (inst.is_terminal(b) || g.degree(b) != 2)
      continue;
    VertexId a = *g.neighbors(b).begin(), c = *std::next(g.neighbors(b).begin());
    if (!g.has_edge(a, c))
      continue;
    detail::record(inst, trace,
                   RuleEvent{.rule = RuleId::R5, .removed_vertices = {b}, .forced_trackers = {b}, .k_delta = -1});
    return inst.k < 0 ? RuleOutcome::No : RuleOutcome::Changed;
  }
  return RuleOutcome::Unchanged;
}

// Pairs (a,b) with their common non-terminal degree-2 neighbours, a < b.
inline std::map<Edge, std::vector<VertexId>> degree2_bundles(const Instance& inst) {
  std::map<Edge, std::vector<VertexId>> bundles;
  for (VertexId x : inst.graph.vertices()) {
    if (inst.is_terminal(x) || inst.graph.degree(x) != 2)
      continue;
    VertexId a = *inst.graph.neighbors(x).begin(), b = *std::next(inst.graph.neighbors(x).begin());
    bundles[make_edge(a, b)].push_back(x);
  }
  return bundles;
}

struct BundleNo {
  VertexId a, b;
  std::size_t m;
};

inline RuleOutcome rule6_parallel_bundle(Instance& inst, ReductionTrace& trace,
                                         std::optional<BundleNo>* no_witness = nullptr) {
  for (auto& [pair, bundle] : degree2_bundles(inst)) {
    if (bundle.size() < 2)
      continue;
    auto [a, b] = pair;
    if (!has_local_linkage(inst, a, b, bundle))
      continue;
    const auto m = static_cast<long long>(bundle.size());
    if (m > inst.k + 1) {
      if (no_witness)
        *no_witness = BundleNo{a, b, bundle.size()};
      return RuleOutcome::No;
    }
    std::vector<VertexId> forced(bundle.begin(), bundle.end() - 1);
    detail::record(inst, trace,
                   RuleEvent{.rule = RuleId::R6, .removed_vertices = forced, .forced_trackers = forced,
                             .k_delta = -(m - 1)});
    return inst.k < 0 ? RuleOutcome::No : RuleOutcome::Changed;
  }
  return RuleOutcome::Unchanged;
}

// ---------------------------------------------------------------------------

enum class LocalStatus { Stable, TrivialYes, No, NoPath };

struct LocalResult {
  LocalStatus status = LocalStatus::Stable;
  // Set when the status is No: the rule that exhausted the budget.
  std::optional<RuleId> no_rule;
  std::optional<BundleNo> bundle;
};

// One successful rule invocation as seen by an observer: the instance right
// before and right after, and the number of trackers it forced.
struct RuleApplication {
  int rule; // 1..6
  const Instance& before;
  const Instance& after;
  std::size_t forced;
};

using RuleObserver = std::function<void(const RuleApplication&)>;

inline LocalResult exhaust_local_rules(Instance& inst, ReductionTrace& trace,
                                       const RuleObserver& observer = {}) {
  inst.validate();
  if (trace.events.empty())
    trace.initial_k = inst.k;
  if (!terminals_connected(inst))
    return {LocalStatus::NoPath};

  std::optional<Instance> before;
  auto snapshot = [&] {
    if (observer)
      before = inst;
  };
  auto notify = [&](int rule, std::size_t forced) {
    if (observer)
      observer(RuleApplication{rule, *before, inst, forced});
  };

  for (;;) {
    snapshot();
    if (rule1_prune(inst, trace)) {
      notify(1, 0);
      continue;
    }
    if (rule2_relabel_terminal(inst, trace)) {
      notify(2, 0);
      continue;
    }
    if (rule3_contract_deg2(inst, trace)) {
      notify(3, 0);
      continue;
    }
    if (rule4_trivial_yes(inst)) {
      notify(4, 0);
      return {LocalStatus::TrivialYes};
    }
    switch (rule5_triangle(inst, trace)) {
    case RuleOutcome::No:
      notify(5, 1);
      return {LocalStatus::No, RuleId::R5};
    case RuleOutcome::Changed:
      notify(5, 1);
      continue;
    case RuleOutcome::Unchanged:
      break;
    }
    std::optional<BundleNo> witness;
    const std::size_t events_before = trace.events.size();
    switch (rule6_parallel_bundle(inst, trace, &witness)) {
    case RuleOutcome::No:
      if (trace.events.size() > events_before)
        notify(6, trace.events.back().forced_trackers.size());
      return {LocalStatus::No, RuleId::R6, witness};
    case RuleOutcome::Changed:
      notify(6, trace.events.back().forced_trackers.size());
      continue;
    case RuleOutcome::Unchanged:
      break;
    }
    return {LocalStatus::Stable};
  }
}

} // namespace tracking
