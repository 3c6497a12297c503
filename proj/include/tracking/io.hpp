//===-- io.hpp -- instance files and machine-readable kernel reports ------===//
//
// Instance file (1-based ids, one record per line):
//
//   c <comment>
//   p tracking <n> <m>
//   s <id>
//   t <id>
//   k <budget>          optional
//   e <u> <v>           exactly m lines
//
// Internally ids are 0-based; file vertex i is internal vertex i-1.
//
//===----------------------------------------------------------------------===//

#pragma once

#include "kernel.hpp"

#include <json.hpp>

#include <istream>
#include <sstream>

namespace tracking {

class ParseError : public std::runtime_error {
public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const { return line_; }

private:
  std::size_t line_;
};

struct InstanceFile {
  Instance instance;
  bool has_k = false;
};

inline InstanceFile parse_instance(std::istream& in) {
  InstanceFile file;
  std::optional<std::size_t> n, m;
  std::optional<long long> s, t, k;
  std::size_t edges = 0, line_no = 0, header_line = 0;
  std::string line;

  auto read_id = [&](std::istringstream& is, const char* what) {
    long long id;
    if (!(is >> id))
      throw ParseError(line_no, std::string("expected ") + what);
    if (!n)
      throw ParseError(line_no, "record before the 'p tracking' header");
    if (id < 1 || id > static_cast<long long>(*n))
      throw ParseError(line_no, std::string(what) + " " + std::to_string(id) + " outside [1," +
                                    std::to_string(*n) + "]");
    return static_cast<VertexId>(id - 1);
  };
  auto expect_end = [&](std::istringstream& is) {
    std::string rest;
    if (is >> rest)
      throw ParseError(line_no, "trailing token '" + rest + "'");
  };

  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r')
      line.pop_back();
    std::istringstream is(line);
    std::string tag;
    if (!(is >> tag))
      continue;
    if (tag == "c")
      continue;
    if (tag == "p") {
      if (n)
        throw ParseError(line_no, "duplicate header");
      std::string kind;
      long long nv, me;
      if (!(is >> kind >> nv >> me) || kind != "tracking")
        throw ParseError(line_no, "malformed header, expected 'p tracking <n> <m>'");
      if (nv < 2 || me < 0)
        throw ParseError(line_no, "header needs n >= 2 and m >= 0");
      expect_end(is);
      n = static_cast<std::size_t>(nv);
      m = static_cast<std::size_t>(me);
      header_line = line_no;
      file.instance.graph = Graph(*n);
    } else if (tag == "s" || tag == "t") {
      auto& slot = tag == "s" ? s : t;
      VertexId id = read_id(is, "terminal id");
      if (slot)
        throw ParseError(line_no, "duplicate '" + tag + "' line");
      expect_end(is);
      slot = id;
    } else if (tag == "k") {
      if (k)
        throw ParseError(line_no, "duplicate 'k' line");
      long long budget;
      if (!(is >> budget) || budget < 0)
        throw ParseError(line_no, "budget must be a non-negative integer");
      expect_end(is);
      k = budget;
    } else if (tag == "e") {
      VertexId u = read_id(is, "vertex id");
      VertexId v = read_id(is, "vertex id");
      expect_end(is);
      if (u == v)
        throw ParseError(line_no, "self-loop");
      if (file.instance.graph.has_edge(u, v))
        throw ParseError(line_no, "duplicate edge");
      file.instance.graph.add_edge(u, v);
      ++edges;
    } else {
      throw ParseError(line_no, "unknown record '" + tag + "'");
    }
  }
  if (!n)
    throw ParseError(line_no, "missing 'p tracking' header");
  if (!s || !t)
    throw ParseError(line_no, "missing terminal line");
  if (*s == *t)
    throw ParseError(line_no, "s and t must differ");
  if (edges != *m)
    throw ParseError(header_line, "header announces " + std::to_string(*m) + " edges, found " +
                                      std::to_string(edges));
  file.instance.s = static_cast<VertexId>(*s);
  file.instance.t = static_cast<VertexId>(*t);
  file.instance.k = k.value_or(0);
  file.has_k = k.has_value();
  return file;
}

inline InstanceFile parse_instance(const std::string& text) {
  std::istringstream is(text);
  return parse_instance(is);
}

// Writes live vertices renumbered 1..n in ascending internal id order.
// id_map, when given, receives the internal id of each file vertex.
inline std::string write_instance(const Instance& inst, std::vector<VertexId>* id_map = nullptr,
                                  const std::vector<std::string>& comments = {}, bool with_k = true) {
  const auto verts = inst.graph.vertices();
  std::vector<std::size_t> file_id(inst.graph.capacity(), 0);
  for (std::size_t i = 0; i < verts.size(); ++i)
    file_id[verts[i]] = i + 1;
  std::ostringstream os;
  for (const auto& c : comments)
    os << "c " << c << "\n";
  os << "p tracking " << verts.size() << " " << inst.graph.edge_count() << "\n";
  os << "s " << file_id[inst.s] << "\n";
  os << "t " << file_id[inst.t] << "\n";
  if (with_k)
    os << "k " << inst.k << "\n";
  for (auto [u, v] : inst.graph.edges())
    os << "e " << file_id[u] << " " << file_id[v] << "\n";
  if (id_map)
    *id_map = verts;
  return os.str();
}

// ---------------------------------------------------------------------------
// Kernel report.

struct SizeTriple {
  long long n = 0, m = 0, k = 0;
  friend bool operator==(const SizeTriple&, const SizeTriple&) = default;
};

struct CategorySizes {
  long long S = 0, V1 = 0, V2 = 0, V3 = 0, V4 = 0, E1 = 0, E2 = 0, E3 = 0;
  friend bool operator==(const CategorySizes&, const CategorySizes&) = default;
};

struct BoundReport {
  long long vertex_limit = 0, edge_limit = 0;
  bool ok = true;
  std::string message;
  friend bool operator==(const BoundReport&, const BoundReport&) = default;
};

struct PlanarReport {
  long long vertices = 0, limit = 0;
  bool within = true;
  friend bool operator==(const PlanarReport&, const PlanarReport&) = default;
};

// Everything here is deterministic; timing is reported out of band.
// Vertex ids in forced_trackers refer to the input file (1-based); id_map[i]
// is the input id of vertex i+1 of the reduced instance.
struct KernelReport {
  std::string verdict;
  std::optional<std::string> no_reason;
  std::string witness;
  SizeTriple original;
  std::optional<SizeTriple> reduced;
  long long residual_k = 0;
  std::vector<long long> forced_trackers;
  std::map<std::string, long long> rule_counts;
  std::optional<CategorySizes> categories;
  std::optional<BoundReport> kernel_bounds;
  std::optional<PlanarReport> planar;
  std::vector<long long> id_map;
  std::vector<std::string> diagnostics;
  friend bool operator==(const KernelReport&, const KernelReport&) = default;
};

inline void to_json(nlohmann::json& j, const SizeTriple& x) { j = {{"n", x.n}, {"m", x.m}, {"k", x.k}}; }
inline void from_json(const nlohmann::json& j, SizeTriple& x) {
  j.at("n").get_to(x.n);
  j.at("m").get_to(x.m);
  j.at("k").get_to(x.k);
}
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(CategorySizes, S, V1, V2, V3, V4, E1, E2, E3)
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(BoundReport, vertex_limit, edge_limit, ok, message)
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(PlanarReport, vertices, limit, within)

namespace detail {
template <typename T>
nlohmann::json optional_json(const std::optional<T>& x) {
  return x ? nlohmann::json(*x) : nlohmann::json(nullptr);
}
template <typename T>
void optional_from(const nlohmann::json& j, const char* key, std::optional<T>& x) {
  if (j.contains(key) && !j.at(key).is_null())
    x = j.at(key).get<T>();
  else
    x.reset();
}
} // namespace detail

inline void to_json(nlohmann::json& j, const KernelReport& r) {
  j = nlohmann::json::object();
  j["verdict"] = r.verdict;
  j["no_reason"] = detail::optional_json(r.no_reason);
  j["witness"] = r.witness;
  j["original"] = r.original;
  j["reduced"] = detail::optional_json(r.reduced);
  j["residual_k"] = r.residual_k;
  j["forced_trackers"] = r.forced_trackers;
  j["rule_counts"] = r.rule_counts;
  j["categories"] = detail::optional_json(r.categories);
  j["kernel_bounds"] = detail::optional_json(r.kernel_bounds);
  j["planar"] = detail::optional_json(r.planar);
  j["id_map"] = r.id_map;
  j["diagnostics"] = r.diagnostics;
}

inline void from_json(const nlohmann::json& j, KernelReport& r) {
  j.at("verdict").get_to(r.verdict);
  detail::optional_from(j, "no_reason", r.no_reason);
  j.at("witness").get_to(r.witness);
  j.at("original").get_to(r.original);
  detail::optional_from(j, "reduced", r.reduced);
  j.at("residual_k").get_to(r.residual_k);
  j.at("forced_trackers").get_to(r.forced_trackers);
  j.at("rule_counts").get_to(r.rule_counts);
  detail::optional_from(j, "categories", r.categories);
  detail::optional_from(j, "kernel_bounds", r.kernel_bounds);
  detail::optional_from(j, "planar", r.planar);
  j.at("id_map").get_to(r.id_map);
  j.at("diagnostics").get_to(r.diagnostics);
}

// Assembles the report for `outcome`, computed from `original` (whose ids
// are the 0-based file ids).
inline KernelReport make_report(const Instance& original, const KernelOutcome& outcome, bool planar) {
  KernelReport r;
  r.verdict = verdict_name(outcome.verdict);
  if (outcome.no_reason)
    r.no_reason = no_reason_name(*outcome.no_reason);
  r.witness = outcome.witness;
  r.original = {static_cast<long long>(original.graph.vertex_count()),
                static_cast<long long>(original.graph.edge_count()), original.k};
  r.residual_k = outcome.trace.current_k();
  for (VertexId v : outcome.forced_trackers)
    r.forced_trackers.push_back(static_cast<long long>(v) + 1);
  for (RuleId rule : kAllRules)
    r.rule_counts[rule_name(rule)] = static_cast<long long>(outcome.trace.count(rule));
  r.diagnostics = outcome.trace.diagnostics;
  if (outcome.categories) {
    const auto& c = *outcome.categories;
    auto sz = [](const auto& v) { return static_cast<long long>(v.size()); };
    r.categories = CategorySizes{sz(c.S),  sz(c.V1), sz(c.V2), sz(c.V3), sz(c.V4), static_cast<long long>(c.E1),
                                 static_cast<long long>(c.E2), static_cast<long long>(c.E3)};
  }
  if (outcome.verdict == Verdict::Reduced) {
    const auto& red = outcome.reduced;
    r.reduced = SizeTriple{static_cast<long long>(red.graph.vertex_count()),
                           static_cast<long long>(red.graph.edge_count()), red.k};
    for (VertexId v : red.graph.vertices())
      r.id_map.push_back(static_cast<long long>(v) + 1);
    BoundReport b{vertex_limit(red.k), edge_limit(red.k), true, ""};
    if (outcome.size_check) {
      b.ok = outcome.size_check->ok;
      b.message = outcome.size_check->message;
    }
    r.kernel_bounds = b;
    if (planar) {
      auto d = planar_bound_diag(red);
      r.planar = PlanarReport{d.vertices, d.limit, d.within};
    }
  }
  return r;
}

} // namespace tracking
