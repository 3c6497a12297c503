#include "fixtures.hpp"

#include "tracking/generators.hpp"
#include "tracking/harness.hpp"
#include "tracking/io.hpp"

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>

using namespace tracking;

namespace {

std::size_t error_line(const std::string& text) {
  try {
    parse_instance(text);
  } catch (const ParseError& e) {
    return e.line();
  }
  return 0;
}

std::string read_file(const std::filesystem::path& p) {
  std::ifstream in(p);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

} // namespace

TEST(ParseInstance, C4File) {
  auto file = parse_instance("c a four-cycle\np tracking 4 4\ns 1\nt 3\nk 1\ne 1 2\ne 2 3\ne 3 4\ne 4 1\n");
  EXPECT_TRUE(file.has_k);
  EXPECT_EQ(file.instance.k, 1);
  EXPECT_EQ(file.instance.s, 0u);
  EXPECT_EQ(file.instance.t, 2u);
  EXPECT_EQ(file.instance.graph.edges(), (std::vector<Edge>{{0, 1}, {0, 3}, {1, 2}, {2, 3}}));
}

TEST(ParseInstance, ToleratesBlankLinesCrlfAndMissingK) {
  auto file = parse_instance("\r\np tracking 2 1\r\n\ns 2\nt 1\r\ne 2 1\n");
  EXPECT_FALSE(file.has_k);
  EXPECT_EQ(file.instance.k, 0);
  EXPECT_EQ(file.instance.s, 1u);
  EXPECT_TRUE(file.instance.graph.has_edge(0, 1));
}

TEST(ParseInstance, ErrorsCarryLineNumbers) {
  EXPECT_EQ(error_line("p tracking 3 1\ns 1\nt 2\ne 1 4\n"), 4u);
  EXPECT_EQ(error_line("p tracking 3 1\ns 1\nt 2\ne 1 1\n"), 4u);
  EXPECT_EQ(error_line("p tracking 3 2\ns 1\nt 2\ne 1 2\ne 2 1\n"), 5u);
  EXPECT_EQ(error_line("s 1\np tracking 3 0\n"), 1u);
  EXPECT_EQ(error_line("p tracking 3 0\np tracking 3 0\n"), 2u);
  EXPECT_EQ(error_line("p graph 3 0\n"), 1u);
  EXPECT_EQ(error_line("p tracking 1 0\n"), 1u);
  EXPECT_EQ(error_line("p tracking 3 0\ns 1\ns 2\n"), 3u);
  EXPECT_EQ(error_line("p tracking 3 0\ns 1\nt 2\nk -1\n"), 4u);
  EXPECT_EQ(error_line("p tracking 3 0\ns 1\nt 2\nk 1\nk 2\n"), 5u);
  EXPECT_EQ(error_line("p tracking 3 1\ns 1\nt 2\ne 1 2 3\n"), 4u);
  EXPECT_EQ(error_line("p tracking 3 1\ns 1\nt 2\nx 1\n"), 4u);
  EXPECT_EQ(error_line("p tracking 3 1\ns 1\nt 2\ne 1 x\n"), 4u);
  // Count mismatches point at the header.
  EXPECT_EQ(error_line("c hi\np tracking 3 2\ns 1\nt 2\ne 1 2\n"), 2u);
}

TEST(ParseInstance, FileLevelErrors) {
  EXPECT_THROW(parse_instance(""), ParseError);
  EXPECT_THROW(parse_instance("p tracking 3 0\ns 1\n"), ParseError);
  EXPECT_THROW(parse_instance("p tracking 3 0\ns 1\nt 1\n"), ParseError);
}

TEST(WriteInstance, Format) {
  Instance c4 = fixtures::c4(1);
  EXPECT_EQ(write_instance(c4, nullptr, {"hello"}),
            "c hello\np tracking 4 4\ns 1\nt 3\nk 1\ne 1 2\ne 1 4\ne 2 3\ne 3 4\n");
  EXPECT_EQ(write_instance(c4, nullptr, {}, false), "p tracking 4 4\ns 1\nt 3\ne 1 2\ne 1 4\ne 2 3\ne 3 4\n");
}

TEST(WriteInstance, RenumbersAfterDeletions) {
  Instance inst = fixtures::theta3_pendant();
  inst.graph.remove_vertex(5);
  inst.graph.remove_vertex(3);
  std::vector<VertexId> ids;
  auto text = write_instance(inst, &ids);
  EXPECT_EQ(ids, (std::vector<VertexId>{0, 1, 2, 4}));
  auto back = parse_instance(text).instance;
  EXPECT_EQ(back.graph.vertex_count(), 4u);
  EXPECT_EQ(back.graph.edges(), (std::vector<Edge>{{0, 2}, {0, 3}, {1, 2}, {1, 3}}));
}

TEST(SampleFiles, AllParse) {
  std::size_t count = 0;
  for (const auto& entry : std::filesystem::directory_iterator(TRACKING_SAMPLES_DIR)) {
    if (entry.path().extension() != ".txt")
      continue;
    ++count;
    EXPECT_NO_THROW(parse_instance(read_file(entry.path()))) << entry.path();
  }
  EXPECT_GE(count, 5u);
}

TEST(SampleFiles, RandomSampleMatchesGenerator) {
  auto file = parse_instance(read_file(std::filesystem::path(TRACKING_SAMPLES_DIR) / "random_6_9_7.txt"));
  Instance gen = gen_random_connected(6, 9, 7);
  EXPECT_EQ(file.instance.graph.edges(), gen.graph.edges());
  EXPECT_EQ(file.instance.s, gen.s);
  EXPECT_EQ(file.instance.t, gen.t);
}

TEST(KernelReportJson, NoOutcome) {
  Instance theta = gen_theta(4, 2);
  theta.k = 1;
  auto report = make_report(theta, kernelize(theta), true);
  EXPECT_EQ(report.verdict, "No");
  ASSERT_TRUE(report.no_reason.has_value());
  EXPECT_FALSE(report.reduced.has_value());
  EXPECT_FALSE(report.planar.has_value());
  EXPECT_EQ(report.original, (SizeTriple{6, 8, 1}));
  nlohmann::json j = report;
  EXPECT_TRUE(j["reduced"].is_null());
  EXPECT_TRUE(j["kernel_bounds"].is_null());
  EXPECT_EQ(j.get<KernelReport>(), report);
}

TEST(KernelReportJson, ForcedTrackersAreOneBased) {
  Instance theta = gen_theta(4, 2);
  theta.k = 3;
  auto report = make_report(theta, kernelize(theta), false);
  EXPECT_EQ(report.verdict, verdict_name(Verdict::TrivialYes));
  EXPECT_EQ(report.forced_trackers.size(), 3u);
  for (long long v : report.forced_trackers) {
    EXPECT_GE(v, 3);
    EXPECT_LE(v, 6);
  }
  EXPECT_EQ(report.residual_k, 0);
}

// --- Properties -------------------------------------------------------------

TEST(IoProperty, WriteThenParseIsIdentity) {
  for (std::uint64_t i = 0; i < 200; ++i) {
    Instance inst = fuzz_instance(mix_seed(40 + i), 12);
    inst.k = static_cast<long long>(i % 5);
    auto back = parse_instance(write_instance(inst));
    ASSERT_TRUE(back.has_k);
    ASSERT_EQ(back.instance.graph.edges(), inst.graph.edges());
    ASSERT_EQ(back.instance.s, inst.s);
    ASSERT_EQ(back.instance.t, inst.t);
    ASSERT_EQ(back.instance.k, inst.k);
  }
}

TEST(IoProperty, ReducedReportsRoundTripAndMapIds) {
  std::size_t reduced = 0;
  for (std::uint64_t i = 0; i < 400 && reduced < 20; ++i) {
    Instance inst = fuzz_instance(mix_seed(i), 9);
    inst.k = 2;
    auto outcome = kernelize(inst);
    auto report = make_report(inst, outcome, true);
    nlohmann::json j = report;
    ASSERT_EQ(j.get<KernelReport>(), report);
    ASSERT_EQ(nlohmann::json::parse(j.dump()), j);
    if (outcome.verdict != Verdict::Reduced)
      continue;
    ++reduced;
    ASSERT_TRUE(report.planar.has_value());
    ASSERT_TRUE(report.kernel_bounds.has_value());
    ASSERT_TRUE(report.kernel_bounds->ok);
    // The reduced file and the id map together recover the reduced graph.
    std::vector<VertexId> ids;
    auto file = parse_instance(write_instance(outcome.reduced, &ids)).instance;
    ASSERT_EQ(report.id_map.size(), ids.size());
    for (std::size_t x = 0; x < ids.size(); ++x)
      ASSERT_EQ(report.id_map[x], static_cast<long long>(ids[x]) + 1);
    for (auto [u, v] : file.graph.edges())
      ASSERT_TRUE(outcome.reduced.graph.has_edge(ids[u], ids[v]));
    ASSERT_EQ(file.graph.edge_count(), outcome.reduced.graph.edge_count());
  }
  EXPECT_GT(reduced, 0u);
}
