#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "geoinsert/extended_dual.hpp"

namespace geoinsert {

/// A primal graph with its two terminals.
struct Instance {
  EmbeddedGraph graph;
  VertexId s = 0;
  VertexId t = 0;
  std::string name;

  ExtendedDual dual() const { return ExtendedDual::build(graph, s, t); }
};

namespace testkit {

struct OracleResult {
  std::optional<int> optimum_length;  // empty: nothing consistent within the bound
  std::optional<DualPath> witness;
  int search_bound = 0;

  bool conclusive() const { return optimum_length.has_value(); }
};

/// 3 * dist(s, t) + 6.
int default_oracle_bound(const ExtendedDual& ed);

/// Iterative deepening over simple st-paths, pruning every prefix whose
/// induced labeling already contains LR. The first hit is optimal.
OracleResult oracle_shortest_consistent(const ExtendedDual& ed, int bound);
OracleResult oracle_shortest_consistent(const ExtendedDual& ed);

/// Calls `visit` for every simple st-path of length <= max_length (DFS order).
/// Returning false from `visit` stops the enumeration.
void for_each_simple_path(const ExtendedDual& ed, int max_length,
                          const std::function<bool(const DualPath&)>& visit);

/// Search for an st-walk that shares no crossing edge with p and does not
/// cross p. Attachment edges may be shared: the witness models the rest of
/// the line through s and t, which can leave a terminal through the same
/// corner as p. The walk may pass a face more than once (a line can), but
/// never twice on the same side of p.
std::optional<DualPath> oracle_lemma1_witness(const ExtendedDual& ed, const DualPath& p);

// ---- fixed instances ----
Instance cycle_c4();
Instance k4_planar();  // graph only; every pair is adjacent
Instance two_triangles();  // K4 minus st: triangles usv and utv sharing uv
Instance wheel_i2();       // triangle uvw, s inside joined to all, t outside joined to u
Instance path_p3();
Instance star(int leaves);
Instance hex_patch(int rows, int cols, std::uint64_t seed);

/// Straight-line embedding of integer points; rotations sorted by angle.
EmbeddedGraph embed_straight_line(const std::vector<std::pair<long long, long long>>& points,
                                  const std::vector<std::pair<VertexId, VertexId>>& edges);

/// Member m of the degree-6 family whose shortest st-paths are all
/// inconsistent. Throws std::invalid_argument for m < 1.
Instance gen_fig2(int m);

/// Connected simple plane graph with n vertices and maximum degree at most
/// delta_max, deterministic in seed: a random embedded tree whose faces are
/// then split by random chords. Throws std::invalid_argument when the
/// constraints cannot be met.
Instance gen_random_planar(int n, int delta_max, std::uint64_t seed);

/// Straight-line variant: greedy short non-crossing edges between random
/// points, then random edge removal that keeps the graph connected.
Instance gen_random_geometric(int n, int delta_max, std::uint64_t seed);

/// Small random blocks glued at shared vertices, each new block placed in
/// one corner of its joint. Terminals are chosen so that the canonical
/// shortest path is inconsistent whenever some pair allows it.
Instance gen_glued_blocks(int blocks, int delta_max, std::uint64_t seed);

/// Applies up to steps random local edits to base: edge subdivisions,
/// pendant vertices and chords inside faces, never raising a degree above
/// delta_max (subdivision vertices have degree 2). Terminals are kept.
Instance perturb(const Instance& base, int steps, int delta_max, std::uint64_t seed);

/// gen_fig2 members 1..4 plus random and geometric instances for
/// n in {8, 12, 16, 20}, degree bounds {3, 4, 5, 6, 8} and seeds 1..seeds.
std::vector<Instance> standard_corpus(int seeds);

}  // namespace testkit
}  // namespace geoinsert
