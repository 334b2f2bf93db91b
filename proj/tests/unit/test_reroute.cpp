#include <gtest/gtest.h>

#include "geoinsert/consistency.hpp"
#include "geoinsert/reroute.hpp"
#include "geoinsert/shortest_paths.hpp"
#include "geoinsert/testkit.hpp"

using namespace geoinsert;

namespace {

bool strictly_increasing(const std::vector<int>& v) {
  for (size_t i = 1; i < v.size(); ++i) {
    if (v[i] <= v[i - 1]) return false;
  }
  return true;
}

}  // namespace

TEST(Reroute, DegreeThreeShortestPathsAreConsistent) {
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    const auto report = check_degree3(testkit::hex_patch(3, 4, seed).dual());
    EXPECT_TRUE(report.all_consistent());
    EXPECT_GT(report.paths_checked, 0);
  }
  for (std::uint64_t seed = 1; seed <= 30; ++seed) {
    EXPECT_TRUE(check_degree3(testkit::gen_random_planar(16, 3, seed).dual()).all_consistent());
  }
  EXPECT_TRUE(check_degree3(testkit::cycle_c4().dual()).all_consistent());
}

TEST(Reroute, DegreeThreeRejectsHigherDegree) {
  EXPECT_THROW(check_degree3(testkit::gen_fig2(1).dual()), PreconditionError);
}

TEST(Reroute, ConsistentInputIsReturnedUnchanged) {
  const auto ed = testkit::wheel_i2().dual();
  RerouteTrace trace;
  EXPECT_EQ(reroute_degree5(ed, &trace), bfs_shortest(ed));
  EXPECT_EQ(trace.iterations(), 0);
  EXPECT_EQ(approx_delta(ed), bfs_shortest(ed));
}

TEST(Reroute, DegreeFiveRejectsHigherDegree) {
  EXPECT_THROW(reroute_degree5(testkit::gen_fig2(1).dual()), PreconditionError);
}

TEST(Reroute, DegreeFiveRepairsInconsistentShortestPaths) {
  int repaired = 0;
  for (std::uint64_t seed = 1; seed <= 120; ++seed) {
    for (int delta : {4, 5}) {
      const auto inst = testkit::gen_glued_blocks(4, delta, seed);
      const auto ed = inst.dual();
      const int dist = build_gsp(ed).length;
      RerouteTrace trace;
      const DualPath p = reroute_degree5(ed, &trace);
      ASSERT_TRUE(is_well_formed(ed, p)) << inst.name;
      EXPECT_TRUE(is_consistent(ed, p)) << inst.name;
      EXPECT_EQ(p.length(), dist) << inst.name;
      EXPECT_TRUE(strictly_increasing(trace.progress)) << inst.name;
      EXPECT_LE(trace.iterations(), dist) << inst.name;
      repaired += trace.iterations() > 0;
    }
  }
  EXPECT_GT(repaired, 10);
}

TEST(Reroute, ApproxMeetsRatioOnDegreeSixFamily) {
  for (int m = 1; m <= 3; ++m) {
    const auto ed = testkit::gen_fig2(m).dual();
    const int dist = build_gsp(ed).length;
    RerouteTrace trace;
    const DualPath p = approx_delta(ed, &trace);
    EXPECT_TRUE(is_consistent(ed, p));
    EXPECT_LE(p.length(), 4 * dist);
    EXPECT_TRUE(strictly_increasing(trace.progress));
    const auto oracle = testkit::oracle_shortest_consistent(ed);
    ASSERT_TRUE(oracle.conclusive());
    EXPECT_GE(p.length(), *oracle.optimum_length);
  }
}

TEST(Reroute, ApproxOnHighDegreeInstances) {
  for (std::uint64_t seed = 1; seed <= 60; ++seed) {
    const auto inst = testkit::gen_glued_blocks(5, 8, seed);
    const auto ed = inst.dual();
    const int dist = build_gsp(ed).length;
    const DualPath p = approx_delta(ed);
    EXPECT_TRUE(is_consistent(ed, p)) << inst.name;
    EXPECT_LE(p.length(), std::max(1, inst.graph.max_degree() - 2) * dist) << inst.name;
  }
}

// detours around cut vertices can re-enter a face; the loop is cut out
TEST(Reroute, ApproxErasesLoopsAtCutVertices) {
  int erased = 0;
  for (std::uint64_t seed = 1; seed <= 200; ++seed) {
    const auto inst = testkit::gen_glued_blocks(5, 8, seed);
    const auto ed = inst.dual();
    RerouteTrace trace;
    const DualPath p = approx_delta(ed, &trace);
    erased += trace.loops_erased;
    std::vector<char> seen(ed.node_count(), 0);
    for (NodeId v : p.nodes) {
      EXPECT_FALSE(seen[v]) << inst.name;
      seen[v] = 1;
    }
    EXPECT_TRUE(is_consistent(ed, p)) << inst.name;
  }
  EXPECT_GT(erased, 0);
}

TEST(Reroute, GoodSuffixOfConsistentPathIsWhole) {
  const auto ed = testkit::wheel_i2().dual();
  const DualPath p = bfs_shortest(ed);
  EXPECT_EQ(good_suffix_length(ed, p), p.length() - 2);
}
