#include <gtest/gtest.h>

#include "geoinsert/gsp_faces.hpp"
#include "geoinsert/partners.hpp"
#include "geoinsert/st_friendly.hpp"
#include "geoinsert/testkit.hpp"

using namespace geoinsert;

namespace {

int count_kind(const MixedGraph& g, MixedVertexKind kind) {
  int c = 0;
  for (int v = 0; v < g.vertex_slots(); ++v) c += g.vertex(v).alive && g.vertex(v).kind == kind;
  return c;
}

int count_gsp(const MixedGraph& g) {
  int c = 0;
  for (int e = 0; e < g.edge_slots(); ++e) c += g.edge(e).alive && g.edge(e).gsp;
  return c;
}

// triangle 0 -> 1 -> 2 -> 0 with counter-clockwise rotations
MixedGraph triangle() {
  MixedGraph g;
  for (int i = 0; i < 3; ++i) g.add_vertex(MixedVertexKind::Original, i);
  MixedEdge flags;
  flags.gsp = true;
  for (int i = 0; i < 3; ++i) g.add_edge(i, (i + 1) % 3, flags);
  // vertex i holds half-edges 2i (out to i+1) and 2((i+2)%3)+1 (in from i-1)
  for (int i = 0; i < 3; ++i) g.set_rotation(i, {2 * i, 2 * ((i + 2) % 3) + 1});
  return g;
}

bool sf_truth(const ExtendedDual& ed, int dist) {
  return testkit::oracle_shortest_consistent(ed, dist).optimum_length == dist;
}

}  // namespace

TEST(MixedGraph, TriangleFacesAndDegrees) {
  const MixedGraph g = triangle();
  EXPECT_EQ(g.vertex_count(), 3);
  EXPECT_EQ(g.edge_count(), 3);
  EXPECT_EQ(g.in_degree(0), 1);
  EXPECT_EQ(g.out_degree(0), 1);
  const auto faces = g.faces([](int) { return true; });
  ASSERT_EQ(faces.size(), 2u);
  EXPECT_EQ(faces[0].size(), 3u);
  EXPECT_EQ(faces[1].size(), 3u);
}

TEST(MixedGraph, ContractMergesEndpoints) {
  MixedGraph g = triangle();
  const int kept = g.contract(0);
  EXPECT_EQ(kept, 0);
  EXPECT_EQ(g.vertex_count(), 2);
  EXPECT_EQ(g.edge_count(), 2);
  EXPECT_EQ(g.degree(0), 2);
  EXPECT_EQ(g.faces([](int) { return true; }).size(), 2u);
}

TEST(MixedGraph, SplitEdgeAddsSourceVertex) {
  MixedGraph g = triangle();
  g.edge_mut(1).provenance = {7};
  const int c = g.split_edge(1, MixedVertexKind::Subdivision);
  EXPECT_EQ(g.vertex_count(), 4);
  EXPECT_EQ(g.edge_count(), 4);
  EXPECT_EQ(g.out_degree(c), 2);
  EXPECT_EQ(g.in_degree(c), 0);
  for (int h : g.rotation(c)) {
    EXPECT_FALSE(g.edge(MixedGraph::edge_of(h)).gsp);
    EXPECT_EQ(g.edge(MixedGraph::edge_of(h)).provenance, std::vector<DualEdgeId>{7});
  }
  EXPECT_EQ(g.faces([](int) { return true; }).size(), 2u);
}

TEST(MixedGraph, RemoveVertexDropsIncidentEdges) {
  MixedGraph g = triangle();
  g.remove_vertex(2);
  EXPECT_EQ(g.vertex_count(), 2);
  EXPECT_EQ(g.edge_count(), 1);
  EXPECT_EQ(g.degree(0), 1);
}

TEST(StFriendly, CycleSubdividesEveryCrossingEdge) {
  const auto ed = testkit::cycle_c4().dual();
  const auto dag = build_gsp(ed);
  const auto sf = build_st_friendly(ed, dag);
  // the four parallel crossing edges are never tight; the attachments are
  EXPECT_EQ(count_kind(sf.graph, MixedVertexKind::Subdivision), 4);
  EXPECT_EQ(count_gsp(sf.graph), static_cast<int>(dag.edges.size()));
  EXPECT_TRUE(locate_boundary(sf).found);
}

TEST(StFriendly, NonTightEdgesBecomeSubdivisions) {
  for (std::uint64_t seed = 1; seed <= 30; ++seed) {
    const auto ed = testkit::gen_random_planar(12, 5, seed).dual();
    const auto dag = build_gsp(ed);
    const auto sf = build_st_friendly(ed, dag);
    const int subdivided = count_kind(sf.graph, MixedVertexKind::Subdivision);
    EXPECT_EQ(subdivided + static_cast<int>(dag.edges.size()), ed.edge_count());
    EXPECT_EQ(count_gsp(sf.graph), static_cast<int>(dag.edges.size()));
  }
}

TEST(StFriendly, BoundaryMatchesCommonFace) {
  for (std::uint64_t seed = 1; seed <= 60; ++seed) {
    const auto ed = testkit::gen_random_planar(11, 5, seed).dual();
    const auto dag = build_gsp(ed);
    EXPECT_EQ(locate_boundary(build_st_friendly(ed, dag)).found, check_common_face(ed, dag).found);
  }
}

TEST(StFriendly, NormalizeRequiresCommonFace) {
  int checked = 0;
  for (std::uint64_t seed = 1; seed <= 400 && checked < 3; ++seed) {
    const auto ed = testkit::gen_random_planar(16, 6, seed).dual();
    const auto dag = build_gsp(ed);
    if (check_common_face(ed, dag).found) continue;
    EXPECT_THROW(normalize(build_st_friendly(ed, dag)), PreconditionError);
    ++checked;
  }
  EXPECT_GT(checked, 0);
}

TEST(StFriendly, NormalizedGraphIsAFixpoint) {
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    const auto ed = testkit::gen_random_planar(10, 5, seed).dual();
    const auto dag = build_gsp(ed);
    if (!check_common_face(ed, dag).found) continue;
    const Normalization once = normalize(build_st_friendly(ed, dag));
    const Normalization twice = normalize(once.graph);
    EXPECT_EQ(twice.rounds, 1);
    for (const PassRecord& r : twice.log) EXPECT_EQ(r.changes, 0) << to_string(r.pass);
    EXPECT_EQ(twice.graph.graph.vertex_count(), once.graph.graph.vertex_count());
    EXPECT_EQ(twice.graph.graph.edge_count(), once.graph.graph.edge_count());
  }
}

// every pass keeps the mixed-path question equivalent to the original one
TEST(StFriendly, EachPassPreservesTheAnswer) {
  int checked = 0;
  for (std::uint64_t seed = 1; seed <= 80; ++seed) {
    for (const Instance& inst : {testkit::gen_random_planar(9, 5, seed), testkit::gen_random_geometric(9, 5, seed)}) {
      const auto ed = inst.dual();
      const auto dag = build_gsp(ed);
      if (!check_common_face(ed, dag).found) continue;
      const bool truth = sf_truth(ed, dag.length);
      const auto sf = build_st_friendly(ed, dag);
      EXPECT_EQ(mixed_witness_exists(sf).value_or(truth), truth) << inst.name;
      normalize(sf, [&](const PassRecord& r, const StFriendlyGraph& g) {
        if (r.changes == 0) return;
        EXPECT_EQ(mixed_witness_exists(g).value_or(truth), truth) << inst.name << " after " << to_string(r.pass);
      });
      ++checked;
    }
  }
  EXPECT_GT(checked, 50);
}

TEST(StFriendly, InteriorPostconditionsHold) {
  int total = 0, caterpillar = 0;
  for (std::uint64_t seed = 1; seed <= 100; ++seed) {
    const auto ed = testkit::gen_random_planar(12, 6, seed).dual();
    const auto dag = build_gsp(ed);
    if (!check_common_face(ed, dag).found) continue;
    const auto pc = check_postconditions(normalize(build_st_friendly(ed, dag)).graph);
    EXPECT_TRUE(pc.boundary_simple) << seed << " " << pc.detail;
    EXPECT_TRUE(pc.outerplanar) << seed << " " << pc.detail;
    EXPECT_TRUE(pc.weak_dual_path) << seed << " " << pc.detail;
    ++total;
    caterpillar += pc.caterpillar;
  }
  // the exterior shape is checked with zero tolerance by the acceptance suite
  RecordProperty("caterpillar", std::to_string(caterpillar) + "/" + std::to_string(total));
}

TEST(Partners, CycleHasOneInteriorFace) {
  const auto pd = decide_via_partners(testkit::cycle_c4().dual());
  EXPECT_TRUE(pd.yes);
  EXPECT_EQ(pd.system.interior.size(), 1u);
  EXPECT_TRUE(pd.system.chords.empty());
  for (const PartnerPair& p : pd.system.interior) {
    EXPECT_EQ(p.kind, PartnerKind::Interior);
    EXPECT_FALSE(p.e_lambda.empty());
    EXPECT_FALSE(p.e_mu.empty());
  }
}

TEST(Partners, ChordsLinkDistinctInteriorFaces) {
  int with_chords = 0;
  for (std::uint64_t seed = 1; seed <= 150; ++seed) {
    const auto ed = testkit::gen_random_planar(12, 6, seed).dual();
    if (!check_common_face(ed, build_gsp(ed)).found) continue;
    const auto pd = decide_via_partners(ed);
    for (const ChordImplication& c : pd.system.chords) {
      EXPECT_NE(c.premise, c.conclusion);
      EXPECT_TRUE(pd.normalization.graph.graph.edge(c.chord).alive);
    }
    for (const PartnerPair& p : pd.system.exterior) EXPECT_EQ(p.kind, PartnerKind::Exterior);
    with_chords += !pd.system.chords.empty();
  }
  EXPECT_GT(with_chords, 0);
}
