#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>

#include "geoinsert/embedding.hpp"
#include "geoinsert/testkit.hpp"

using namespace geoinsert;

namespace {

int boundary_total(const EmbeddedGraph& g) {
  int total = 0;
  for (const Face& f : g.faces()) total += static_cast<int>(f.boundary.size());
  return total;
}

}  // namespace

TEST(Embedding, CycleHasTwoFacesOfLengthFour) {
  const auto g = testkit::cycle_c4().graph;
  const auto r = validate_embedding(g);
  EXPECT_TRUE(r.ok());
  EXPECT_EQ(r.faces, 2);
  for (const Face& f : extract_faces(g)) EXPECT_EQ(f.boundary.size(), 4u);
}

TEST(Embedding, PlanarK4HasFourTriangles) {
  const auto g = testkit::k4_planar().graph;
  EXPECT_TRUE(validate_embedding(g).ok());
  const auto faces = extract_faces(g);
  ASSERT_EQ(faces.size(), 4u);
  for (const Face& f : faces) EXPECT_EQ(f.boundary.size(), 3u);
}

TEST(Embedding, ReversedRotationBreaksEuler) {
  auto rot = testkit::k4_planar().graph.rotations();
  std::reverse(rot[3].begin(), rot[3].end());
  const auto g = EmbeddedGraph::from_rotations(rot);
  const auto r = validate_embedding(g);
  EXPECT_TRUE(r.connected);
  EXPECT_TRUE(r.simple);
  EXPECT_FALSE(r.euler);
  EXPECT_NE(r.faces, 4);
  EXPECT_THROW(EmbeddedGraph::checked(rot), InvalidEmbedding);
}

TEST(Embedding, PathTracesOneFaceTwice) {
  const auto g = testkit::path_p3().graph;
  const auto faces = extract_faces(g);
  ASSERT_EQ(faces.size(), 1u);
  EXPECT_EQ(faces[0].boundary.size(), 4u);
}

TEST(Embedding, DanglingDartIsStructuralError) {
  EXPECT_THROW(EmbeddedGraph::from_rotations({{1}, {0, 2}}), StructuralError);
  EXPECT_THROW(EmbeddedGraph::from_rotations({{1}, {}}), StructuralError);
}

TEST(Embedding, DisconnectedAndNonSimpleAreRejected) {
  const auto two_edges = EmbeddedGraph::from_rotations({{1}, {0}, {3}, {2}});
  EXPECT_FALSE(validate_embedding(two_edges).connected);
  const auto multi = EmbeddedGraph::from_rotations({{1, 1}, {0, 0}});
  EXPECT_FALSE(validate_embedding(multi).simple);
}

TEST(Embedding, FaceSuccessorFollowsLeftFace) {
  const auto g = testkit::k4_planar().graph;
  for (DartId d = 0; d < g.dart_count(); ++d) {
    const DartId n = g.face_successor(d);
    EXPECT_EQ(g.tail(n), g.head(d));
    EXPECT_EQ(g.left_face(n), g.left_face(d));
  }
}

TEST(Embedding, DualOfCycleIsFourParallelEdges) {
  const auto d = build_dual(testkit::cycle_c4().graph);
  EXPECT_EQ(d.vertex_count, 2);
  ASSERT_EQ(d.edges.size(), 4u);
  for (const auto& e : d.edges) EXPECT_NE(e.a, e.b);
}

TEST(Embedding, DualOfK4IsK4) {
  const auto d = build_dual(testkit::k4_planar().graph);
  ASSERT_EQ(d.vertex_count, 4);
  std::vector<std::pair<int, int>> pairs;
  for (const auto& e : d.edges) pairs.emplace_back(std::min(e.a, e.b), std::max(e.a, e.b));
  std::sort(pairs.begin(), pairs.end());
  EXPECT_EQ(std::unique(pairs.begin(), pairs.end()), pairs.end());
  EXPECT_EQ(pairs.size(), 6u);
}

TEST(Embedding, DualOfPathIsTwoLoops) {
  const auto d = build_dual(testkit::path_p3().graph);
  EXPECT_EQ(d.vertex_count, 1);
  ASSERT_EQ(d.edges.size(), 2u);
  for (const auto& e : d.edges) EXPECT_EQ(e.a, e.b);
}

TEST(Embedding, MaxDegree) {
  EXPECT_EQ(max_degree(testkit::cycle_c4().graph), 2);
  EXPECT_EQ(max_degree(testkit::k4_planar().graph), 3);
  EXPECT_EQ(max_degree(testkit::star(6).graph), 6);
}

TEST(Embedding, InvariantsOnRandomGraphs) {
  for (std::uint64_t seed = 1; seed <= 40; ++seed) {
    const auto inst = testkit::gen_random_planar(15, 5, seed);
    const auto& g = inst.graph;
    const auto r = validate_embedding(g);
    ASSERT_TRUE(r.ok()) << inst.name;
    EXPECT_EQ(boundary_total(g), 2 * g.edge_count());
    EXPECT_EQ(build_dual(g).edges.size(), static_cast<size_t>(g.edge_count()));
    // every dart on exactly one face
    std::vector<int> seen(g.dart_count(), 0);
    for (const Face& f : g.faces()) {
      for (DartId d : f.boundary) ++seen[d];
    }
    EXPECT_TRUE(std::all_of(seen.begin(), seen.end(), [](int c) { return c == 1; }));
  }
}
