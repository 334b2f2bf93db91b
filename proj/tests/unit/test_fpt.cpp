#include <gtest/gtest.h>

#include <algorithm>
#include <functional>

#include "geoinsert/consistency.hpp"
#include "geoinsert/fpt.hpp"
#include "geoinsert/shortest_paths.hpp"
#include "geoinsert/testkit.hpp"

using namespace geoinsert;

namespace {

// every st-walk of the directed subgraph, up to max_length, via DFS
void for_each_directed_path(const LabeledDirectedDual& g, const ExtendedDual& ed, int max_length,
                            const std::function<void(const DualPath&)>& visit) {
  DualPath p;
  p.nodes = {ed.s_node()};
  std::vector<char> on(ed.node_count(), 0);
  on[ed.s_node()] = 1;
  std::function<void()> rec = [&] {
    const NodeId v = p.nodes.back();
    if (v == ed.t_node()) {
      visit(p);
      return;
    }
    if (p.length() >= max_length) return;
    for (const Incidence& inc : g.out(v)) {
      if (on[inc.other]) continue;
      on[inc.other] = 1;
      p.nodes.push_back(inc.other);
      p.edges.push_back(inc.edge);
      rec();
      p.nodes.pop_back();
      p.edges.pop_back();
      on[inc.other] = 0;
    }
  };
  rec();
}

}  // namespace

TEST(Fpt, BatchArithmetic) {
  EXPECT_EQ(fpt_batch_count(0.5), 1);
  EXPECT_EQ(fpt_batch_count(0.25), 2);
  EXPECT_EQ(fpt_batch_count(0.05), 5);
  EXPECT_EQ(fpt_batch_count(0.01), 7);
  EXPECT_EQ(fpt_iterations_per_batch(2), 16);
  EXPECT_EQ(fpt_iterations_per_batch(5), 1024);
}

TEST(Fpt, Preconditions) {
  const auto ed = testkit::wheel_i2().dual();
  EXPECT_THROW(fpt_search(ed, {1, 0.05, 1, 1}), PreconditionError);
  EXPECT_THROW(fpt_search(ed, {3, 0.0, 1, 1}), PreconditionError);
  EXPECT_THROW(fpt_search(ed, {3, 1.0, 1, 1}), PreconditionError);
}

TEST(Fpt, AllLeftKeepsOnlyAttachments) {
  const auto ed = testkit::wheel_i2().dual();
  const auto g = directed_subgraph(ed, Labeling(ed.primal().vertex_count(), Side::L));
  EXPECT_EQ(g.surviving_crossing_edges(), 0);
  for (NodeId v = 0; v < ed.node_count(); ++v) {
    for (const Incidence& inc : g.out(v)) EXPECT_TRUE(ed.edge(inc.edge).is_attachment());
  }
}

TEST(Fpt, MixedEndpointsSurviveOneWay) {
  const auto ed = testkit::wheel_i2().dual();
  for (DualEdgeId e = 0; e < ed.crossing_edge_count(); ++e) {
    const auto& de = ed.edge(e);
    if (de.a == de.b) continue;
    Labeling l(ed.primal().vertex_count(), Side::L);
    l[ed.primal().head(de.dart)] = Side::R;
    const auto g = directed_subgraph(ed, l);
    EXPECT_NE(g.allows(e, de.a), g.allows(e, de.b));
  }
}

TEST(Fpt, CompletedLabelingKeepsThePath) {
  const auto ed = testkit::wheel_i2().dual();
  for (const DualPath& p : enumerate_shortest(ed, 10)) {
    const auto induced = induced_labeling(ed, p);
    if (!induced.consistent()) continue;
    const auto g = directed_subgraph(ed, complete_labeling(induced));
    for (int i = 0; i < p.length(); ++i) EXPECT_TRUE(g.allows(p.edges[i], p.nodes[i]));
  }
}

TEST(Fpt, EveryDirectedPathIsCompatible) {
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    const auto ed = testkit::gen_random_planar(9, 5, seed).dual();
    const int bound = build_gsp(ed).length + 2;
    for (long long it = 0; it < 8; ++it) {
      const Labeling l = fpt_labeling(ed.primal().vertex_count(), seed, 0, it);
      const auto g = directed_subgraph(ed, l);
      for_each_directed_path(g, ed, bound, [&](const DualPath& q) {
        EXPECT_TRUE(is_compatible(ed, l, q));
        EXPECT_TRUE(is_consistent(ed, q));
      });
    }
  }
}

TEST(Fpt, LabelingStreamsAreDeterministic) {
  EXPECT_EQ(fpt_labeling(20, 3, 1, 17), fpt_labeling(20, 3, 1, 17));
  EXPECT_NE(fpt_labeling(64, 3, 1, 17), fpt_labeling(64, 3, 1, 18));
  EXPECT_NE(fpt_labeling(64, 3, 1, 17), fpt_labeling(64, 4, 1, 17));
}

TEST(Fpt, WheelFindsItsOptimum) {
  const auto ed = testkit::wheel_i2().dual();
  const auto r = fpt_search(ed, {3, 0.01, 1, 1});
  ASSERT_TRUE(r.path.has_value());
  EXPECT_EQ(r.path->length(), 3);
  EXPECT_TRUE(is_consistent(ed, *r.path));
}

TEST(Fpt, AttachmentRouteInFirstIteration) {
  const auto ed = testkit::cycle_c4().dual();
  const auto r = fpt_search(ed, {2, 0.05, 9, 1});
  ASSERT_TRUE(r.path.has_value());
  EXPECT_EQ(r.path->length(), 2);
  EXPECT_EQ(r.iterations, 1);
}

TEST(Fpt, SameSeedSameResult) {
  const auto ed = testkit::gen_fig2(1).dual();
  const int k = testkit::oracle_shortest_consistent(ed).optimum_length.value();
  const auto a = fpt_search(ed, {k, 0.05, 42, 1});
  const auto b = fpt_search(ed, {k, 0.05, 42, 4});
  ASSERT_EQ(a.path.has_value(), b.path.has_value());
  if (a.path) {
    EXPECT_EQ(a.path->nodes, b.path->nodes);
  }
  EXPECT_EQ(a.iterations, b.iterations);
}

TEST(Fpt, SoundOnRandomInstances) {
  for (std::uint64_t seed = 1; seed <= 25; ++seed) {
    const auto ed = testkit::gen_random_planar(12, 6, seed).dual();
    const auto oracle = testkit::oracle_shortest_consistent(ed);
    if (!oracle.conclusive()) continue;
    const int k = std::min(*oracle.optimum_length, 6);
    const auto r = fpt_search(ed, {k, 0.2, seed, 1});
    if (!r.path) continue;
    EXPECT_TRUE(is_consistent(ed, *r.path));
    EXPECT_GE(r.path->length(), *oracle.optimum_length);
  }
}
