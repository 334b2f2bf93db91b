#include <gtest/gtest.h>

#include "geoinsert/consistency.hpp"
#include "geoinsert/shortest_paths.hpp"
#include "geoinsert/testkit.hpp"

using namespace geoinsert;

namespace {

bool same_rotations(const Instance& a, const Instance& b) {
  return a.graph.rotations() == b.graph.rotations() && a.s == b.s && a.t == b.t;
}

}  // namespace

TEST(Testkit, GeneratorsAreDeterministic) {
  for (std::uint64_t seed : {1u, 7u, 99u}) {
    EXPECT_TRUE(same_rotations(testkit::gen_random_planar(20, 4, seed), testkit::gen_random_planar(20, 4, seed)));
    EXPECT_TRUE(
        same_rotations(testkit::gen_random_geometric(20, 4, seed), testkit::gen_random_geometric(20, 4, seed)));
    EXPECT_TRUE(same_rotations(testkit::gen_glued_blocks(3, 5, seed), testkit::gen_glued_blocks(3, 5, seed)));
  }
  EXPECT_FALSE(same_rotations(testkit::gen_random_planar(20, 4, 1), testkit::gen_random_planar(20, 4, 2)));
}

TEST(Testkit, GeneratorsRespectBounds) {
  for (int delta = 3; delta <= 8; ++delta) {
    for (std::uint64_t seed = 1; seed <= 15; ++seed) {
      for (const Instance& inst :
           {testkit::gen_random_planar(18, delta, seed), testkit::gen_random_geometric(18, delta, seed)}) {
        EXPECT_EQ(inst.graph.vertex_count(), 18) << inst.name;
        EXPECT_LE(max_degree(inst.graph), delta) << inst.name;
        EXPECT_TRUE(validate_embedding(inst.graph).ok()) << inst.name;
        EXPECT_NO_THROW(inst.dual()) << inst.name;
      }
    }
  }
}

TEST(Testkit, GluedBlocks) {
  EXPECT_THROW(testkit::gen_glued_blocks(1, 5, 1), std::invalid_argument);
  EXPECT_THROW(testkit::gen_glued_blocks(3, 3, 1), std::invalid_argument);
  int inconsistent = 0;
  for (std::uint64_t seed = 1; seed <= 60; ++seed) {
    const auto inst = testkit::gen_glued_blocks(4, 5, seed);
    EXPECT_LE(max_degree(inst.graph), 5) << inst.name;
    EXPECT_TRUE(validate_embedding(inst.graph).ok()) << inst.name;
    const auto ed = inst.dual();
    inconsistent += !is_consistent(ed, bfs_shortest(ed));
  }
  EXPECT_GT(inconsistent, 0);
}

TEST(Testkit, FixedInstances) {
  EXPECT_EQ(testkit::cycle_c4().dual().face_count(), 2);
  EXPECT_EQ(testkit::two_triangles().graph.edge_count(), 5);
  EXPECT_EQ(build_gsp(testkit::wheel_i2().dual()).length, 3);
  const auto hex = testkit::hex_patch(3, 4, 1);
  EXPECT_LE(max_degree(hex.graph), 3);
  EXPECT_TRUE(validate_embedding(hex.graph).ok());
}

TEST(Testkit, StraightLineEmbedding) {
  // unit square with one diagonal
  const auto g = testkit::embed_straight_line({{0, 0}, {1, 0}, {1, 1}, {0, 1}}, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 2}});
  EXPECT_TRUE(validate_embedding(g).ok());
  EXPECT_EQ(extract_faces(g).size(), 3u);
}

TEST(Testkit, DegreeSixFamily) {
  EXPECT_THROW(testkit::gen_fig2(0), std::invalid_argument);
  for (int m = 1; m <= 3; ++m) {
    const auto inst = testkit::gen_fig2(m);
    EXPECT_LE(max_degree(inst.graph), 6);
    const auto ed = inst.dual();
    const int dist = build_gsp(ed).length;
    for (const DualPath& p : enumerate_shortest(ed, 50)) EXPECT_FALSE(is_consistent(ed, p)) << m;
    const auto oracle = testkit::oracle_shortest_consistent(ed);
    ASSERT_TRUE(oracle.conclusive());
    EXPECT_GT(*oracle.optimum_length, dist);
    EXPECT_TRUE(is_consistent(ed, *oracle.witness));
    EXPECT_EQ(oracle.witness->length(), *oracle.optimum_length);
  }
}

TEST(Testkit, OracleIsOptimalAmongSimplePaths) {
  for (std::uint64_t seed = 1; seed <= 25; ++seed) {
    const auto ed = testkit::gen_random_planar(9, 5, seed).dual();
    const auto oracle = testkit::oracle_shortest_consistent(ed);
    ASSERT_TRUE(oracle.conclusive());
    int best = 1000;
    testkit::for_each_simple_path(ed, *oracle.optimum_length, [&](const DualPath& p) {
      if (is_consistent(ed, p)) best = std::min(best, p.length());
      return true;
    });
    EXPECT_EQ(best, *oracle.optimum_length);
  }
}

TEST(Testkit, OracleBound) {
  const auto ed = testkit::wheel_i2().dual();
  EXPECT_EQ(testkit::default_oracle_bound(ed), 3 * 3 + 6);
  const auto capped = testkit::oracle_shortest_consistent(testkit::gen_fig2(1).dual(), 2);
  EXPECT_FALSE(capped.conclusive());
  EXPECT_EQ(capped.search_bound, 2);
}
