//===-- cli.hpp -- command-line front end ---------------------------------===//
//
// run_cli is the whole program minus main(), so the tests can drive it with
// string streams. Exit codes are part of the interface:
//
//   0  success (kernelize: Reduced or TrivialYes; verify: valid)
//   1  negative answer (kernelize: No or NoPath; verify: invalid; fuzz:
//      any disagreement; solve: no s-t path)
//   2  bad input or usage
//   3  path enumeration cap exceeded
//
//===----------------------------------------------------------------------===//

#pragma once

#include "harness.hpp"
#include "io.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <filesystem>
#include <fstream>
#include <ostream>

namespace tracking {

namespace cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitNegative = 1;
inline constexpr int kExitInput = 2;
inline constexpr int kExitPathCap = 3;

class InputError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline InstanceFile load(const std::string& path) {
  std::ifstream in(path);
  if (!in)
    throw InputError("cannot open '" + path + "'");
  try {
    return parse_instance(in);
  } catch (const ParseError& e) {
    throw InputError(path + ": " + e.what());
  }
}

inline std::string join_ids(const std::vector<VertexId>& ids, const char* sep = " ") {
  std::string out;
  for (std::size_t i = 0; i < ids.size(); ++i)
    out += (i ? sep : "") + std::to_string(ids[i] + 1);
  return out;
}

// ---------------------------------------------------------------------------
// Generator families by name. Parameters are named so that the experiment
// sweep can address them; defaults fill in whatever is not given.

struct FamilyDef {
  const char* name;
  Family family;
  std::vector<std::pair<const char*, long long>> params; // name, default (-1: required)
};

inline const std::vector<FamilyDef>& families() {
  static const std::vector<FamilyDef> defs{
      {"theta", Family::Theta, {{"p", -1}, {"len", 2}}},
      {"tree-sink", Family::TreeSink, {{"leaves", -1}, {"sink_t", 1}}},
      {"flower", Family::Flower, {{"trees", -1}, {"lpt", 2}}},
      {"random", Family::RandomConnected, {{"n", -1}, {"m", -1}}},
      {"path", Family::PathChain, {{"length", -1}}},
      {"subdivided", Family::RandomSubdivided, {{"n", -1}, {"m", -1}, {"sub", 1}}},
  };
  return defs;
}

inline const FamilyDef& find_family(const std::string& name) {
  for (const auto& f : families())
    if (name == f.name)
      return f;
  std::string known;
  for (const auto& f : families())
    known += std::string(known.empty() ? "" : ", ") + f.name;
  throw InputError("unknown family '" + name + "' (known: " + known + ")");
}

inline GenSpec make_spec(const FamilyDef& def, const std::map<std::string, long long>& values,
                         std::uint64_t seed) {
  GenSpec spec{def.family, {}, seed};
  for (auto [name, fallback] : def.params) {
    auto it = values.find(name);
    if (it == values.end() && fallback < 0)
      throw InputError(std::string("family ") + def.name + " needs parameter '" + name + "'");
    spec.params.push_back(it == values.end() ? fallback : it->second);
  }
  for (const auto& [name, value] : values) {
    bool known = std::any_of(def.params.begin(), def.params.end(),
                             [&](const auto& p) { return name == p.first; });
    if (!known)
      throw InputError(std::string("family ") + def.name + " has no parameter '" + name + "'");
  }
  return spec;
}

struct Range {
  long long lo = 0, hi = -1; // empty when lo > hi
};

// "N" or "LO:HI".
inline Range parse_range(const std::string& text) {
  auto number = [&](const std::string& s) {
    std::size_t used = 0;
    long long v = 0;
    try {
      v = std::stoll(s, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (s.empty() || used != s.size())
      throw InputError("bad number '" + s + "' in range '" + text + "'");
    return v;
  };
  auto colon = text.find(':');
  if (colon == std::string::npos) {
    long long v = number(text);
    return {v, v};
  }
  return {number(text.substr(0, colon)), number(text.substr(colon + 1))};
}

// "NAME=LO[:HI]"
inline std::pair<std::string, Range> parse_param(const std::string& text) {
  auto eq = text.find('=');
  if (eq == std::string::npos || eq == 0)
    throw InputError("parameter '" + text + "' is not NAME=LO[:HI]");
  return {text.substr(0, eq), parse_range(text.substr(eq + 1))};
}

// ---------------------------------------------------------------------------
// Subcommands.

struct KernelizeArgs {
  std::string input;
  std::optional<long long> k;
  bool json = false;
  bool planar = false;
  bool timing = false;
  bool no_write = false;
  std::string out_path;
};

inline void print_report(std::ostream& out, const KernelReport& r) {
  out << "verdict: " << r.verdict << "\n";
  if (r.no_reason)
    out << "reason: " << *r.no_reason << "\n";
  if (!r.witness.empty())
    out << "witness: " << r.witness << "\n";
  out << "original: n=" << r.original.n << " m=" << r.original.m << " k=" << r.original.k << "\n";
  if (r.reduced)
    out << "reduced: n=" << r.reduced->n << " m=" << r.reduced->m << " k=" << r.reduced->k << "\n";
  out << "residual k: " << r.residual_k << "\n";
  out << "forced trackers (" << r.forced_trackers.size() << "):";
  for (long long v : r.forced_trackers)
    out << " " << v;
  out << "\nrule firings:";
  for (const auto& [rule, count] : r.rule_counts)
    out << " " << rule << "=" << count;
  out << "\n";
  if (r.categories) {
    const auto& c = *r.categories;
    out << "categories: |S|=" << c.S << " |V1|=" << c.V1 << " |V2|=" << c.V2 << " |V3|=" << c.V3
        << " |V4|=" << c.V4 << " |E1|=" << c.E1 << " |E2|=" << c.E2 << " |E3|=" << c.E3 << "\n";
  }
  if (r.kernel_bounds)
    out << "kernel bound: |V| <= " << r.kernel_bounds->vertex_limit << ", |E| <= " << r.kernel_bounds->edge_limit
        << (r.kernel_bounds->ok ? " (holds)" : " (VIOLATED: " + r.kernel_bounds->message + ")") << "\n";
  if (r.planar)
    out << "planar diagnostic: " << r.planar->vertices << " vertices vs 10k-3 = " << r.planar->limit
        << (r.planar->within ? " (within)" : " (exceeds)") << "\n";
  for (const auto& d : r.diagnostics)
    out << "note: " << d << "\n";
}

inline int cmd_kernelize(const KernelizeArgs& a, std::ostream& out, std::ostream& err) {
  auto file = load(a.input);
  Instance inst = file.instance;
  if (a.k) {
    if (file.has_k && *a.k != inst.k)
      err << "warning: --k " << *a.k << " overrides k " << inst.k << " from " << a.input << "\n";
    inst.k = *a.k;
  } else if (!file.has_k) {
    throw InputError(a.input + " has no 'k' line; pass --k");
  }
  if (inst.k < 0)
    throw InputError("budget must be non-negative");

  const auto start = std::chrono::steady_clock::now();
  auto outcome = kernelize(inst);
  const auto elapsed = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start);
  auto report = make_report(inst, outcome, a.planar);

  if (outcome.verdict == Verdict::Reduced && !a.no_write) {
    const std::string path = a.out_path.empty() ? a.input + ".reduced" : a.out_path;
    std::ofstream f(path);
    if (!f)
      throw InputError("cannot write '" + path + "'");
    f << write_instance(outcome.reduced, nullptr,
                        {"kernel of " + std::filesystem::path(a.input).filename().string(),
                         "vertex i here is vertex id_map[i] of the input"});
    err << "reduced instance written to " << path << "\n";
  }

  if (a.json)
    out << nlohmann::json(report).dump(2) << "\n";
  else
    print_report(out, report);
  if (a.timing)
    err << "kernelize took " << elapsed.count() << " ms\n";

  const bool positive = outcome.verdict == Verdict::Reduced || outcome.verdict == Verdict::TrivialYes;
  return positive ? kExitOk : kExitNegative;
}

struct SolveArgs {
  std::string input;
  std::size_t cap = kDefaultPathCap;
};

inline int cmd_solve(const SolveArgs& a, std::ostream& out, std::ostream& err) {
  auto file = load(a.input);
  try {
    auto best = min_tracking_set(file.instance, a.cap);
    out << "minimum tracking set size: " << best.size << "\n";
    out << "witness: " << join_ids(best.witness.members) << "\n";
    if (file.has_k)
      out << "answer for k=" << file.instance.k << ": "
          << (static_cast<long long>(best.size) <= file.instance.k ? "YES" : "NO") << "\n";
    return kExitOk;
  } catch (const PathExplosion& e) {
    err << "error: " << e.what() << "; the exact solver only handles small instances. "
        << "Raise --cap, or run 'kernelize' first and solve the reduced instance.\n";
    return kExitPathCap;
  } catch (const NoPathError&) {
    out << "no s-t path: every set is trivially tracking\n";
    return kExitNegative;
  }
}

struct VerifyArgs {
  std::string input;
  std::vector<std::string> trackers;
  std::size_t cap = kDefaultPathCap;
};

inline int cmd_verify(const VerifyArgs& a, std::ostream& out, std::ostream& err) {
  auto file = load(a.input);
  const Instance& inst = file.instance;
  std::vector<VertexId> ids;
  for (const auto& token : a.trackers) {
    // Accept both "2 5 7" and "2,5,7".
    std::stringstream ss(token);
    std::string part;
    while (std::getline(ss, part, ',')) {
      if (part.empty())
        continue;
      Range r = parse_range(part);
      if (r.lo != r.hi || r.lo < 1 || r.lo > static_cast<long long>(inst.graph.capacity()))
        throw InputError("unknown vertex id '" + part + "'");
      ids.push_back(static_cast<VertexId>(r.lo - 1));
    }
  }
  TrackingSet trackers(ids);
  try {
    auto paths = enumerate_st_paths(inst, a.cap);
    auto clash = find_collision(paths, trackers);
    if (!clash) {
      out << "valid: " << paths.size() << " s-t paths, all sequences distinct\n";
      return kExitOk;
    }
    const auto& p = paths[clash->first];
    const auto& q = paths[clash->second];
    out << "invalid: two paths see the same tracker sequence ("
        << join_ids(project_sequence(p, trackers)) << ")\n";
    out << "path 1: " << join_ids(p) << "\n";
    out << "path 2: " << join_ids(q) << "\n";
    return kExitNegative;
  } catch (const PathExplosion& e) {
    err << "error: " << e.what() << "; raise --cap to verify larger instances\n";
    return kExitPathCap;
  }
}

struct GenArgs {
  std::string family;
  std::vector<std::string> params;
  std::uint64_t seed = 0;
  std::optional<long long> k;
  std::string out_path;
};

inline int cmd_gen(const GenArgs& a, std::ostream& out, std::ostream&) {
  const auto& def = find_family(a.family);
  std::map<std::string, long long> values;
  for (const auto& p : a.params) {
    auto [name, range] = parse_param(p);
    if (range.lo != range.hi)
      throw InputError("gen takes single values, not ranges: '" + p + "'");
    values[name] = range.lo;
  }
  Instance inst;
  try {
    inst = generate(make_spec(def, values, a.seed));
  } catch (const std::invalid_argument& e) {
    throw InputError(e.what());
  }
  if (a.k)
    inst.k = *a.k;
  std::string header = std::string("generated: ") + def.name;
  for (const auto& [name, value] : values)
    header += " " + name + "=" + std::to_string(value);
  header += " seed=" + std::to_string(a.seed);
  std::string text = write_instance(inst, nullptr, {header}, a.k.has_value());
  if (a.out_path.empty()) {
    out << text;
  } else {
    std::ofstream f(a.out_path);
    if (!f)
      throw InputError("cannot write '" + a.out_path + "'");
    f << text;
  }
  return kExitOk;
}

struct FuzzArgs {
  std::size_t count = 500;
  std::size_t max_n = 9;
  std::uint64_t seed = 1;
  std::size_t cap = 200'000;
  bool json = false;
};

inline nlohmann::json fuzz_summary_json(const FuzzArgs& a, const FuzzStats& s) {
  nlohmann::json rules = nlohmann::json::object();
  for (std::size_t i = 0; i < s.rules.size(); ++i)
    rules["R" + std::to_string(i + 1)] = {{"checks", s.rules[i].checks}, {"failures", s.rules[i].failures}};
  return {
      {"count", a.count},
      {"max_n", a.max_n},
      {"seed", a.seed},
      {"instances", s.instances},
      {"pipeline_checks", s.pipeline_checks},
      {"pipeline_failures", s.pipeline_failures},
      {"rules", rules},
      {"replay_failures", s.replay_failures},
      {"idempotence_failures", s.idempotence_failures},
      {"reduced_outcomes", s.reduced_outcomes},
      {"bound_violations", s.bound_violations},
      {"fvs_checks", s.fvs_checks},
      {"fvs_lower_bound_failures", s.fvs_lower_bound_failures},
      {"fvs_ratio_failures", s.fvs_ratio_failures},
      {"tracking_witness_not_fvs", s.witness_not_fvs},
      {"verdicts", s.verdicts},
      {"first_failing_seed", s.first_failing_seed ? nlohmann::json(*s.first_failing_seed) : nlohmann::json()},
      {"failures", s.failures},
      {"clean", s.clean()},
  };
}

inline int cmd_fuzz(const FuzzArgs& a, std::ostream& out, std::ostream&) {
  if (a.max_n < 2)
    throw InputError("--max-n must be at least 2");
  if (a.max_n > 12)
    throw InputError("--max-n above 12 is out of reach of the exact oracle");
  FuzzConfig config;
  config.count = a.count;
  config.max_n = a.max_n;
  config.seed = a.seed;
  config.checks.path_cap = a.cap;
  FuzzStats stats;
  try {
    stats = run_fuzz(config);
  } catch (const PathExplosion& e) {
    out << "error: " << e.what() << " while fuzzing; raise --cap\n";
    return kExitPathCap;
  }

  if (a.json) {
    out << fuzz_summary_json(a, stats).dump(2) << "\n";
  } else {
    out << "instances: " << stats.instances << " (seed " << a.seed << ", n <= " << a.max_n << ")\n";
    out << "pipeline checks: " << stats.pipeline_checks << ", disagreements: " << stats.pipeline_failures << "\n";
    for (std::size_t i = 0; i < stats.rules.size(); ++i)
      out << "rule " << i + 1 << ": " << stats.rules[i].checks << " applications, " << stats.rules[i].failures
          << " failures\n";
    out << "replay failures: " << stats.replay_failures << ", idempotence failures: " << stats.idempotence_failures
        << "\n";
    out << "reduced outcomes: " << stats.reduced_outcomes << ", bound violations: " << stats.bound_violations
        << "\n";
    out << "fvs checks: " << stats.fvs_checks << ", lower-bound failures: " << stats.fvs_lower_bound_failures
        << ", ratio failures: " << stats.fvs_ratio_failures << "\n";
    out << "verdicts:";
    for (const auto& [name, n] : stats.verdicts)
      out << " " << name << "=" << n;
    out << "\n";
    if (stats.first_failing_seed)
      out << "first failing seed: " << *stats.first_failing_seed << "\n";
    for (const auto& f : stats.failures)
      out << "  " << f << "\n";
    out << (stats.clean() ? "PASS" : "FAIL") << "\n";
  }
  return stats.clean() ? kExitOk : kExitNegative;
}

struct ExperimentArgs {
  std::string family;
  std::vector<std::string> params;
  std::string k_range = "0:3";
  std::uint64_t seed = 0;
  std::string csv_path;
  std::string plot_path;
};

inline constexpr const char* kCsvHeader =
    "family,params,k,verdict,n_before,m_before,n_after,m_after,bound_v,bound_e,forced";

struct ExperimentRow {
  std::string family, params;
  long long k;
  std::string verdict;
  long long n_before, m_before, n_after, m_after;
  std::optional<long long> bound_v, bound_e; // only meaningful for Reduced rows
  long long forced;
};

// Cartesian product of the parameter ranges, in the order the family
// declares its parameters; missing optional parameters take their default.
// n_after/m_after describe the instance as the pipeline left it; the bound
// columns are filled only for Reduced rows, the only ones it constrains.
inline std::vector<ExperimentRow> run_experiment(const ExperimentArgs& a) {
  std::vector<ExperimentRow> rows;
  if (a.family.empty())
    return rows;
  const auto& def = find_family(a.family);
  std::map<std::string, Range> ranges;
  for (const auto& p : a.params) {
    auto [name, range] = parse_param(p);
    ranges[name] = range;
  }
  for (const auto& [name, range] : ranges) {
    bool known = std::any_of(def.params.begin(), def.params.end(),
                             [&](const auto& p) { return name == p.first; });
    if (!known)
      throw InputError(std::string("family ") + def.name + " has no parameter '" + name + "'");
  }
  std::vector<std::pair<std::string, Range>> axes;
  for (auto [name, fallback] : def.params) {
    auto it = ranges.find(name);
    if (it != ranges.end())
      axes.emplace_back(name, it->second);
    else if (fallback >= 0)
      axes.emplace_back(name, Range{fallback, fallback});
    else
      throw InputError(std::string("family ") + def.name + " needs --param " + name + "=LO[:HI]");
  }
  const Range ks = parse_range(a.k_range);

  std::vector<long long> current(axes.size());
  auto visit = [&](auto&& self, std::size_t depth) -> void {
    if (depth == axes.size()) {
      std::map<std::string, long long> values;
      std::string label;
      for (std::size_t i = 0; i < axes.size(); ++i) {
        values[axes[i].first] = current[i];
        label += (i ? ";" : "") + axes[i].first + "=" + std::to_string(current[i]);
      }
      Instance base;
      try {
        base = generate(make_spec(def, values, a.seed));
      } catch (const std::invalid_argument& e) {
        throw InputError(std::string(e.what()) + " at " + label);
      }
      for (long long k = ks.lo; k <= ks.hi; ++k) {
        Instance inst = base;
        inst.k = k;
        auto o = kernelize(inst);
        ExperimentRow row{def.name,
                          label,
                          k,
                          verdict_name(o.verdict),
                          static_cast<long long>(inst.graph.vertex_count()),
                          static_cast<long long>(inst.graph.edge_count()),
                          static_cast<long long>(o.reduced.graph.vertex_count()),
                          static_cast<long long>(o.reduced.graph.edge_count()),
                          {},
                          {},
                          static_cast<long long>(o.forced_trackers.size())};
        if (o.verdict == Verdict::Reduced) {
          row.bound_v = vertex_limit(o.reduced.k);
          row.bound_e = edge_limit(o.reduced.k);
        }
        rows.push_back(std::move(row));
      }
      return;
    }
    for (long long v = axes[depth].second.lo; v <= axes[depth].second.hi; ++v) {
      current[depth] = v;
      self(self, depth + 1);
    }
  };
  if (ks.lo < 0)
    throw InputError("k range must be non-negative");
  visit(visit, 0);
  return rows;
}

inline std::string experiment_csv(const std::vector<ExperimentRow>& rows) {
  auto cell = [](const std::optional<long long>& x) { return x ? std::to_string(*x) : std::string(); };
  std::ostringstream os;
  os << kCsvHeader << "\n";
  for (const auto& r : rows)
    os << r.family << "," << r.params << "," << r.k << "," << r.verdict << "," << r.n_before << "," << r.m_before
       << "," << r.n_after << "," << r.m_after << "," << cell(r.bound_v) << "," << cell(r.bound_e) << ","
       << r.forced << "\n";
  return os.str();
}

// Self-contained gnuplot script: the Reduced rows are embedded as a data
// block, plotting kernel size against the vertex bound for each k.
inline std::string experiment_plot(const std::vector<ExperimentRow>& rows) {
  std::ostringstream os;
  os << "# gnuplot script: reduced vertex count vs the O(k^2) vertex bound\n";
  os << "$kernel << EOD\n";
  for (const auto& r : rows)
    if (r.verdict == "Reduced")
      os << r.k << " " << r.n_after << " " << *r.bound_v << "\n";
  os << "EOD\n";
  os << "set xlabel 'k'\nset ylabel 'vertices'\nset logscale y\nset key left top\n";
  os << "plot $kernel using 1:2 with points title 'reduced |V|', \\\n";
  os << "     $kernel using 1:3 with linespoints title '104k^2-18k'\n";
  return os.str();
}

inline int cmd_experiment(const ExperimentArgs& a, std::ostream& out, std::ostream& err) {
  auto rows = run_experiment(a);
  const std::string csv = experiment_csv(rows);
  if (a.csv_path.empty()) {
    out << csv;
  } else {
    std::ofstream f(a.csv_path);
    if (!f)
      throw InputError("cannot write '" + a.csv_path + "'");
    f << csv;
    err << rows.size() << " rows written to " << a.csv_path << "\n";
  }
  if (!a.plot_path.empty()) {
    std::ofstream f(a.plot_path);
    if (!f)
      throw InputError("cannot write '" + a.plot_path + "'");
    f << experiment_plot(rows);
  }
  return kExitOk;
}

} // namespace cli

inline int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  using namespace cli;
  CLI::App app{"Kernelization and exact solving for Tracking Paths"};
  app.require_subcommand(1);

  KernelizeArgs ka;
  auto* kern = app.add_subcommand("kernelize", "Reduce an instance to a kernel or decide it");
  kern->add_option("input", ka.input, "instance file")->required();
  kern->add_option("--k", ka.k, "budget (overrides the file's k line)");
  kern->add_flag("--json", ka.json, "print the report as JSON");
  kern->add_flag("--planar", ka.planar, "add the 10k-3 planar size diagnostic");
  kern->add_flag("--timing", ka.timing, "print elapsed time on stderr");
  kern->add_flag("--no-write", ka.no_write, "do not write the reduced instance");
  kern->add_option("--out", ka.out_path, "reduced instance path (default: <input>.reduced)");

  SolveArgs sa;
  auto* solve = app.add_subcommand("solve", "Exact minimum tracking set by exhaustive search");
  solve->add_option("input", sa.input, "instance file")->required();
  solve->add_option("--cap", sa.cap, "maximum number of s-t paths to enumerate");

  VerifyArgs va;
  auto* verify = app.add_subcommand("verify", "Check whether a vertex set is a tracking set");
  verify->add_option("input", va.input, "instance file")->required();
  verify->add_option("trackers", va.trackers, "tracker ids (1-based; space or comma separated)");
  verify->add_option("--cap", va.cap, "maximum number of s-t paths to enumerate");

  GenArgs ga;
  auto* gen = app.add_subcommand("gen", "Write a generated instance");
  gen->add_option("family", ga.family, "theta | tree-sink | flower | random | path | subdivided")->required();
  gen->add_option("--param,-p", ga.params, "NAME=VALUE, e.g. p=4")->take_all();
  gen->add_option("--seed", ga.seed, "seed for the random family");
  gen->add_option("--k", ga.k, "budget line to include");
  gen->add_option("--out,-o", ga.out_path, "output file (default: stdout)");

  FuzzArgs fa;
  auto* fuzz = app.add_subcommand("fuzz", "Differential test of the reductions against the exact oracle");
  fuzz->add_option("--count", fa.count, "number of random instances");
  fuzz->add_option("--max-n", fa.max_n, "largest vertex count");
  fuzz->add_option("--seed", fa.seed, "run seed");
  fuzz->add_option("--cap", fa.cap, "path enumeration cap per instance");
  fuzz->add_flag("--json", fa.json, "print the summary as JSON");

  ExperimentArgs ea;
  auto* exp = app.add_subcommand("experiment", "Sweep a generator family and record kernel sizes");
  exp->add_option("--family", ea.family, "generator family; omitted means an empty sweep");
  exp->add_option("--param,-p", ea.params, "NAME=LO[:HI], repeatable")->take_all();
  exp->add_option("--k", ea.k_range, "budget range LO[:HI] (default 0:3)");
  exp->add_option("--seed", ea.seed, "seed for the random family");
  exp->add_option("--csv", ea.csv_path, "CSV output path (default: stdout)");
  exp->add_option("--plot", ea.plot_path, "also write a gnuplot script here");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInput;
  }

  try {
    if (*kern)
      return cmd_kernelize(ka, out, err);
    if (*solve)
      return cmd_solve(sa, out, err);
    if (*verify)
      return cmd_verify(va, out, err);
    if (*gen)
      return cmd_gen(ga, out, err);
    if (*fuzz)
      return cmd_fuzz(fa, out, err);
    if (*exp)
      return cmd_experiment(ea, out, err);
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::invalid_argument& e) {
    // GraphError and the oracle's size limit both land here.
    err << "error: " << e.what() << "\n";
    return kExitInput;
  }
  return kExitInput;
}

} // namespace tracking
