//===-- harness.hpp -- differential checks of the pipeline vs the oracle --===//
//
// check_instance runs, for one instance:
//   - every rule application of a full local-rule pass, checked for exact
//     minimum preservation (min before = min after + forced)
//   - trace replay and idempotence of the local pass
//   - the feedback vertex set relations (tracking minimum >= exact FVS,
//     approximation within factor 2, minimum tracking witness is an FVS)
//   - kernelize for every budget k in [0, n] against the oracle verdict
//
//===----------------------------------------------------------------------===//

#pragma once

#include "generators.hpp"
#include "kernel.hpp"
#include "oracle.hpp"

#include <array>
#include <map>
#include <sstream>

namespace tracking {

struct RuleCheckTally {
  std::size_t checks = 0;
  std::size_t failures = 0;
};

struct FuzzStats {
  std::size_t instances = 0;
  std::size_t pipeline_checks = 0;
  std::size_t pipeline_failures = 0;
  std::array<RuleCheckTally, 6> rules{}; // index = rule number - 1
  std::size_t replay_failures = 0;
  std::size_t idempotence_failures = 0;
  std::size_t reduced_outcomes = 0;
  std::size_t bound_violations = 0;
  std::size_t fvs_checks = 0;
  std::size_t fvs_lower_bound_failures = 0;
  std::size_t fvs_ratio_failures = 0;
  std::size_t witness_not_fvs = 0;
  std::map<std::string, std::size_t> verdicts;
  std::optional<std::uint64_t> first_failing_seed;
  std::vector<std::string> failures; // first few, for diagnosis

  bool clean() const {
    bool rules_ok = std::all_of(rules.begin(), rules.end(), [](const auto& r) { return r.failures == 0; });
    return rules_ok && pipeline_failures == 0 && replay_failures == 0 && idempotence_failures == 0 &&
           bound_violations == 0 && fvs_lower_bound_failures == 0 && fvs_ratio_failures == 0;
  }
};

struct CheckOptions {
  std::size_t path_cap = 200'000;
  bool rule_checks = true;
  bool fvs_checks = true;
  std::size_t max_failure_notes = 20;
};

namespace detail {
inline void note_failure(FuzzStats& stats, std::uint64_t seed, const CheckOptions& opt, std::string what) {
  if (!stats.first_failing_seed)
    stats.first_failing_seed = seed;
  if (stats.failures.size() < opt.max_failure_notes)
    stats.failures.push_back("seed " + std::to_string(seed) + ": " + std::move(what));
}
} // namespace detail

// `inst.k` is ignored; every budget in [0, n] is tried.
inline void check_instance(const Instance& inst, std::uint64_t seed, FuzzStats& stats,
                           const CheckOptions& opt = {}) {
  ++stats.instances;
  const std::size_t n = inst.graph.vertex_count();
  const auto truth = min_tracking_set(inst, opt.path_cap);

  if (opt.rule_checks) {
    Instance work = inst;
    work.k = static_cast<long long>(n);
    ReductionTrace trace;
    auto observer = [&](const RuleApplication& app) {
      auto& tally = stats.rules[app.rule - 1];
      ++tally.checks;
      if (app.rule == 4) {
        if (min_tracking_set(app.before, opt.path_cap).size != 0) {
          ++tally.failures;
          detail::note_failure(stats, seed, opt, "R4 fired on a graph needing trackers");
        }
        return;
      }
      auto rep = check_rule_equivalence(app.before, app.after, app.forced, opt.path_cap);
      if (!rep.pass) {
        ++tally.failures;
        detail::note_failure(stats, seed, opt,
                             "R" + std::to_string(app.rule) + " changed the minimum: " +
                                 std::to_string(rep.min_before) + " -> " + std::to_string(rep.min_after) +
                                 " with " + std::to_string(rep.forced) + " forced; before " +
                                 describe(app.before));
      }
    };
    Instance original = work;
    auto res = exhaust_local_rules(work, trace, observer);
    if (!(replay(original, trace) == work)) {
      ++stats.replay_failures;
      detail::note_failure(stats, seed, opt, "trace replay diverged");
    }
    if (res.status == LocalStatus::Stable) {
      const std::size_t events = trace.events.size();
      exhaust_local_rules(work, trace);
      if (trace.events.size() != events) {
        ++stats.idempotence_failures;
        detail::note_failure(stats, seed, opt, "second local pass changed the instance");
      }
    }
  }

  if (opt.fvs_checks && n <= kExactFvsLimit) {
    // The relations assume every vertex lies on an s-t path.
    Instance pruned = inst;
    ReductionTrace scratch;
    rule1_prune(pruned, scratch);
    ++stats.fvs_checks;
    auto exact = min_fvs_exact(pruned.graph);
    auto approx = fvs_2approx(pruned.graph);
    auto pruned_min = min_tracking_set(pruned, opt.path_cap);
    if (pruned_min.size < exact.size) {
      ++stats.fvs_lower_bound_failures;
      detail::note_failure(stats, seed, opt, "tracking minimum below minimum FVS");
    }
    if (approx.size() > 2 * exact.size || !is_feedback_vertex_set(pruned.graph, approx)) {
      ++stats.fvs_ratio_failures;
      detail::note_failure(stats, seed, opt, "FVS approximation outside factor 2");
    }
    if (!is_feedback_vertex_set(pruned.graph, pruned_min.witness.members))
      ++stats.witness_not_fvs;
  }

  const auto paths = enumerate_st_paths(inst, opt.path_cap);
  for (long long k = 0; k <= static_cast<long long>(n); ++k) {
    Instance probe = inst;
    probe.k = k;
    auto out = kernelize(probe);
    ++stats.pipeline_checks;
    ++stats.verdicts[verdict_name(out.verdict)];
    const bool yes = static_cast<long long>(truth.size) <= k;
    bool ok = true;
    std::string why;
    switch (out.verdict) {
    case Verdict::No:
      ok = !yes;
      why = "No verdict (" + std::string(no_reason_name(*out.no_reason)) + ": " + out.witness +
            ") but minimum is " + std::to_string(truth.size);
      break;
    case Verdict::TrivialYes:
      ok = yes && is_tracking_set(paths, TrackingSet(out.forced_trackers));
      why = "TrivialYes but minimum is " + std::to_string(truth.size) + " or forced set invalid";
      break;
    case Verdict::NoPath:
      ok = false;
      why = "NoPath on a connected instance";
      break;
    case Verdict::Reduced: {
      ++stats.reduced_outcomes;
      if (out.size_check && !out.size_check->ok) {
        ++stats.bound_violations;
        detail::note_failure(stats, seed, opt, "kernel bound violated: " + out.size_check->message);
      }
      const bool reduced_yes =
          static_cast<long long>(min_tracking_set(out.reduced, opt.path_cap).size) <= out.reduced.k;
      ok = reduced_yes == yes;
      why = "reduced instance answer differs from original";
      break;
    }
    }
    if (!ok) {
      ++stats.pipeline_failures;
      detail::note_failure(stats, seed, opt, "k=" + std::to_string(k) + ": " + why + " on " + describe(inst));
    }
  }
}

struct FuzzConfig {
  std::size_t count = 500;
  std::size_t max_n = 9;
  std::uint64_t seed = 1;
  bool subdivided = false; // draw from subdivided_instance instead
  CheckOptions checks;
};

// Instance i uses seed mix_seed(config.seed + i); n is uniform in
// [2, max_n] and m in [n-1, n(n-1)/2], skewed towards sparse graphs.
inline Instance fuzz_instance(std::uint64_t item_seed, std::size_t max_n) {
  Rng rng(item_seed);
  const long long top = static_cast<long long>(std::max<std::size_t>(max_n, 2));
  const auto n = static_cast<std::size_t>(rng.between(2, top));
  // Extra edges beyond a spanning tree: a uniform cap, then uniform below
  // it, which favours the sparse graphs where most rules fire.
  const auto room = static_cast<long long>(n * (n - 1) / 2 - (n - 1));
  const auto extra = rng.between(0, rng.between(0, room));
  const auto m = n - 1 + static_cast<std::size_t>(extra);
  return gen_random_connected(n, m, mix_seed(item_seed));
}

// Random graphs with subdivided edges, at most 10 vertices in total. Used to
// drive the degree-2 rules, which plain random graphs rarely trigger.
inline Instance subdivided_instance(std::uint64_t item_seed) {
  Rng rng(item_seed);
  const auto n = static_cast<std::size_t>(rng.between(3, 7));
  const auto room = static_cast<long long>(n * (n - 1) / 2 - (n - 1));
  const auto m = n - 1 + static_cast<std::size_t>(rng.between(0, std::min<long long>(room, 4)));
  const auto sub = static_cast<std::size_t>(rng.between(1, static_cast<long long>(std::min<std::size_t>(m, 10 - n))));
  return gen_random_subdivided(n, m, sub, mix_seed(item_seed));
}

inline FuzzStats run_fuzz(const FuzzConfig& config) {
  FuzzStats stats;
  for (std::size_t i = 0; i < config.count; ++i) {
    const std::uint64_t item_seed = mix_seed(config.seed + i);
    Instance inst = config.subdivided ? subdivided_instance(item_seed) : fuzz_instance(item_seed, config.max_n);
    check_instance(inst, item_seed, stats, config.checks);
  }
  return stats;
}

} // namespace tracking
