#include <gtest/gtest.h>

#include "geoinsert/extended_dual.hpp"
#include "geoinsert/shortest_paths.hpp"
#include "geoinsert/testkit.hpp"

using namespace geoinsert;

namespace {

int attachments(const ExtendedDual& ed, NodeId terminal) {
  int k = 0;
  for (DualEdgeId e = 0; e < ed.edge_count(); ++e) {
    const DualEdge& de = ed.edge(e);
    if (de.is_attachment() && (de.a == terminal || de.b == terminal)) ++k;
  }
  return k;
}

}  // namespace

TEST(ExtendedDual, CycleAttachesEachTerminalToBothFaces) {
  const auto ed = testkit::cycle_c4().dual();
  EXPECT_EQ(ed.face_count(), 2);
  EXPECT_EQ(attachments(ed, ed.s_node()), 2);
  EXPECT_EQ(attachments(ed, ed.t_node()), 2);
}

TEST(ExtendedDual, TwoTrianglesHaveThreeCornersPerTerminal) {
  const auto inst = testkit::two_triangles();
  const auto ed = inst.dual();
  // one attachment per corner: s and t have degree 2 in K4 - st
  EXPECT_EQ(attachments(ed, ed.s_node()), 2);
  EXPECT_EQ(attachments(ed, ed.t_node()), 2);
  EXPECT_EQ(attachments(ed, ed.s_node()), inst.graph.degree(inst.s));
  EXPECT_EQ(attachments(ed, ed.t_node()), inst.graph.degree(inst.t));
}

TEST(ExtendedDual, LeafTerminalHasOneAttachment) {
  const auto inst = testkit::path_p3();
  const auto ed = inst.dual();
  EXPECT_EQ(attachments(ed, ed.s_node()), 1);
  EXPECT_EQ(attachments(ed, ed.t_node()), 1);
}

TEST(ExtendedDual, RejectsAdjacentOrEqualTerminals) {
  const auto g = testkit::cycle_c4().graph;
  EXPECT_THROW(ExtendedDual::build(g, 0, 1), PreconditionError);
  EXPECT_THROW(ExtendedDual::build(g, 2, 2), PreconditionError);
  EXPECT_THROW(ExtendedDual::build(g, 0, 9), PreconditionError);
}

TEST(ExtendedDual, AttachmentDegreeEqualsPrimalDegree) {
  for (std::uint64_t seed = 1; seed <= 30; ++seed) {
    const auto inst = testkit::gen_random_planar(12, 6, seed);
    const auto ed = inst.dual();
    EXPECT_EQ(attachments(ed, ed.s_node()), inst.graph.degree(inst.s)) << inst.name;
    EXPECT_EQ(attachments(ed, ed.t_node()), inst.graph.degree(inst.t)) << inst.name;
    // dropping the terminals leaves the plain dual
    const DualGraph d = build_dual(inst.graph);
    ASSERT_EQ(ed.crossing_edge_count(), static_cast<int>(d.edges.size()));
    for (DualEdgeId e = 0; e < ed.crossing_edge_count(); ++e) {
      EXPECT_FALSE(ed.edge(e).is_attachment());
      EXPECT_EQ(ed.edge(e).a, d.edges[e].a);
      EXPECT_EQ(ed.edge(e).b, d.edges[e].b);
    }
  }
}

TEST(ExtendedDual, CrossingsAreLengthMinusTwo) {
  const auto ed = testkit::wheel_i2().dual();
  const DualPath p = bfs_shortest(ed);
  EXPECT_EQ(p.length(), 3);
  EXPECT_EQ(crossings_of_path(ed, p).count, 1);
  const auto other = testkit::gen_random_planar(14, 5, 3).dual();
  for (const DualPath& q : enumerate_shortest(other, 20)) {
    EXPECT_EQ(crossings_of_path(other, q).count, q.length() - 2);
  }
}

TEST(ExtendedDual, ShortPathsHaveFewCrossings) {
  const auto ed = testkit::cycle_c4().dual();
  const DualPath p = bfs_shortest(ed);
  EXPECT_EQ(p.length(), 2);
  EXPECT_EQ(crossings_of_path(ed, p).count, 0);
}

TEST(ExtendedDual, WellFormedness) {
  const auto ed = testkit::wheel_i2().dual();
  DualPath p = bfs_shortest(ed);
  std::string why;
  EXPECT_TRUE(is_well_formed(ed, p, &why)) << why;
  DualPath cut = p;
  cut.nodes.pop_back();
  cut.edges.pop_back();
  EXPECT_FALSE(is_well_formed(ed, cut));
}
