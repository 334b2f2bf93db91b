#include "geoinsert/reroute.hpp"

#include <algorithm>
#include <limits>
#include <string>

#include "geoinsert/consistency.hpp"
#include "geoinsert/shortest_paths.hpp"

namespace geoinsert {

namespace {

int wrap(int c, int deg) { return ((c % deg) + deg) % deg; }

// Corner c of v lies between rotation entries c and c + 1; it is the face left
// of dart (v, c). The primal edge (v, c) separates corners c - 1 and c.
FaceId corner_face(const EmbeddedGraph& g, VertexId v, int c) {
  return g.left_face(g.dart(v, wrap(c, g.degree(v))));
}

// Primal edge crossed when stepping from corner c to corner c + dir.
EdgeId step_edge(const EmbeddedGraph& g, VertexId v, int c, int dir) {
  const int deg = g.degree(v);
  return g.edge_of(g.dart(v, wrap(dir > 0 ? c + 1 : c, deg)));
}

struct CornerStep {
  int from;
  int to;
  int dir;  // +1 counterclockwise around v (v on the left), -1 clockwise
};

// How a crossing of dart d (left to right) moves around its endpoint v.
CornerStep corner_step(const EmbeddedGraph& g, DartId d, VertexId v) {
  if (g.head(d) == v) {
    const int c = g.position(g.twin(d));
    return {c - 1, c, +1};
  }
  const int c = g.position(d);
  return {c, c - 1, -1};
}

bool is_good(const InducedLabeling& lab, const ExtendedDual& ed, const DualPath& p, int i) {
  const auto [left, right] = side_of_edge(ed, p, i);
  return lab.labels[left] != InducedLabel::LR && lab.labels[right] != InducedLabel::LR;
}

bool simple_nodes(const std::vector<NodeId>& nodes, int node_count) {
  std::vector<char> seen(node_count, 0);
  for (NodeId v : nodes) {
    if (seen[v]) return false;
    seen[v] = 1;
  }
  return true;
}

// Cuts every closed sub-walk out of p. The crossings kept are a subset of the
// original ones, so a consistent prefix stays consistent.
DualPath erase_loops(const DualPath& p, int node_count) {
  DualPath out;
  std::vector<int> at(node_count, -1);
  for (size_t i = 0; i < p.nodes.size(); ++i) {
    const NodeId v = p.nodes[i];
    if (at[v] >= 0) {
      for (size_t k = at[v] + 1; k < out.nodes.size(); ++k) at[out.nodes[k]] = -1;
      out.nodes.resize(at[v] + 1);
      out.edges.resize(at[v]);
      continue;
    }
    if (i > 0) out.edges.push_back(p.edges[i - 1]);
    at[v] = static_cast<int>(out.nodes.size());
    out.nodes.push_back(v);
  }
  return out;
}

}  // namespace

Degree3Report check_degree3(const ExtendedDual& ed, int cap) {
  if (ed.primal().max_degree() > 3) throw PreconditionError("check_degree3 requires maximum degree <= 3");
  Degree3Report report;
  for (const DualPath& p : enumerate_shortest(ed, cap)) {
    ++report.paths_checked;
    if (!report.counterexample && !is_consistent(ed, p)) report.counterexample = p;
  }
  return report;
}

int good_suffix_length(const ExtendedDual& ed, const DualPath& p) {
  const InducedLabeling lab = induced_labeling(ed, p);
  int count = 0;
  for (int i = p.length() - 2; i >= 1 && is_good(lab, ed, p, i); --i) ++count;
  return count;
}

DualPath reroute_degree5(const ExtendedDual& ed, RerouteTrace* trace) {
  const EmbeddedGraph& g = ed.primal();
  if (g.max_degree() > 5) throw PreconditionError("reroute_degree5 requires maximum degree <= 5");
  DualPath p = bfs_shortest(ed);
  const int len = p.length();
  constexpr int kConsistent = std::numeric_limits<int>::max();

  for (int round = 0;; ++round) {
    const InducedLabeling lab = induced_labeling(ed, p);
    if (lab.consistent()) return p;
    if (round > len) throw InternalError("reroute_degree5 did not terminate");

    const int before = good_suffix_length(ed, p);
    int last_bad = len - 2;
    while (is_good(lab, ed, p, last_bad)) --last_bad;
    const auto [left, right] = side_of_edge(ed, p, last_bad);

    std::optional<DualPath> best;
    int best_score = before;
    for (const VertexId v : {left, right}) {
      if (lab.labels[v] != InducedLabel::LR) continue;
      const int deg = g.degree(v);
      if (deg <= 3) throw InternalError("LR vertex of degree <= 3 on a shortest path");
      // replace p[a, b] by the same number of steps around v
      for (int a = 1; a + 1 < len; ++a) {
        for (int ca = 0; ca < deg; ++ca) {
          if (corner_face(g, v, ca) != p.nodes[a]) continue;
          for (const int dir : {+1, -1}) {
            std::vector<NodeId> walk_nodes;
            std::vector<DualEdgeId> walk_edges;
            int cur = ca;
            for (int k = 1; k < deg && a + k < len; ++k) {
              walk_edges.push_back(step_edge(g, v, cur, dir));
              cur += dir;
              walk_nodes.push_back(corner_face(g, v, cur));
              const int b = a + k;
              if (walk_nodes.back() != p.nodes[b]) continue;
              DualPath cand;
              cand.nodes.assign(p.nodes.begin(), p.nodes.begin() + a + 1);
              cand.edges.assign(p.edges.begin(), p.edges.begin() + a);
              cand.nodes.insert(cand.nodes.end(), walk_nodes.begin(), walk_nodes.end());
              cand.edges.insert(cand.edges.end(), walk_edges.begin(), walk_edges.end());
              cand.nodes.insert(cand.nodes.end(), p.nodes.begin() + b + 1, p.nodes.end());
              cand.edges.insert(cand.edges.end(), p.edges.begin() + b, p.edges.end());
              if (cand == p || !is_well_formed(ed, cand)) continue;
              const int score = is_consistent(ed, cand) ? kConsistent : good_suffix_length(ed, cand);
              if (score > best_score) {
                best_score = score;
                best = std::move(cand);
              }
            }
          }
        }
      }
    }
    if (!best) {
      throw InternalError("reroute_degree5: no rerouting step extends the good suffix (round " +
                          std::to_string(round) + ")");
    }
    p = std::move(*best);
    if (trace) trace->progress.push_back(best_score);
  }
}

DualPath approx_delta(const ExtendedDual& ed, RerouteTrace* trace) {
  const EmbeddedGraph& g = ed.primal();
  DualPath p = bfs_shortest(ed);
  if (g.max_degree() <= 2) return p;
  const int guard = p.length() * std::max(1, g.max_degree()) + 8;

  for (int round = 0;; ++round) {
    // shortest inconsistent prefix p[s, f2] = p[s, f1] . f1f2
    int m = 0;
    InducedLabeling lab;
    for (int k = 2; k < p.length(); ++k) {
      lab = induced_labeling_prefix(ed, p, k);
      if (!lab.consistent()) {
        m = k;
        break;
      }
    }
    if (m == 0) return p;
    if (round > guard) throw InternalError("approx_delta did not terminate");

    const int f1_pos = m - 1;
    const int f2_pos = m;
    const DartId crossed = ed.crossed_dart(p.edges[f1_pos], p.nodes[f1_pos]);
    const VertexId v = lab.labels[g.head(crossed)] == InducedLabel::LR ? g.head(crossed) : g.tail(crossed);
    const CornerStep last = corner_step(g, crossed, v);

    // last earlier crossing at v; it passes v on the other side
    int e_pos = -1;
    for (int j = f1_pos - 1; j >= 1; --j) {
      const DartId d = ed.crossed_dart(p.edges[j], p.nodes[j]);
      if (g.head(d) == v || g.tail(d) == v) {
        e_pos = j;
        break;
      }
    }
    if (e_pos < 0) throw InternalError("approx_delta: LR vertex without an earlier crossing");
    const CornerStep earlier = corner_step(g, ed.crossed_dart(p.edges[e_pos], p.nodes[e_pos]), v);
    if (earlier.dir != -last.dir) throw InternalError("approx_delta: earlier crossing on the same side");

    // walk from f_i against the orientation of f1f2 until hitting p[f2, t]
    const int fi_pos = e_pos + 1;
    std::vector<int> position(ed.node_count(), -1);
    for (int k = f2_pos; k < static_cast<int>(p.nodes.size()); ++k) position[p.nodes[k]] = k;
    const int walk_dir = -last.dir;
    const int deg = g.degree(v);
    int cur = earlier.to;
    std::vector<NodeId> walk_nodes;
    std::vector<DualEdgeId> walk_edges;
    int fj_pos = -1;
    for (int step = 0; step < deg; ++step) {
      const EdgeId crossed_edge = step_edge(g, v, cur, walk_dir);
      const FaceId from_face = corner_face(g, v, cur);
      cur += walk_dir;
      const FaceId face = corner_face(g, v, cur);
      if (face != from_face) {
        walk_edges.push_back(crossed_edge);
        walk_nodes.push_back(face);
      }
      if (position[face] >= 0) {
        fj_pos = position[face];
        if (!walk_nodes.empty()) walk_nodes.pop_back();
        break;
      }
    }
    if (fj_pos < 0) throw InternalError("approx_delta: detour never meets the suffix");

    DualPath next;
    next.nodes.assign(p.nodes.begin(), p.nodes.begin() + fi_pos + 1);
    next.edges.assign(p.edges.begin(), p.edges.begin() + fi_pos);
    next.nodes.insert(next.nodes.end(), walk_nodes.begin(), walk_nodes.end());
    next.edges.insert(next.edges.end(), walk_edges.begin(), walk_edges.end());
    next.nodes.insert(next.nodes.end(), p.nodes.begin() + fj_pos, p.nodes.end());
    next.edges.insert(next.edges.end(), p.edges.begin() + fj_pos, p.edges.end());

    if (!simple_nodes(next.nodes, ed.node_count())) {
      next = erase_loops(next, ed.node_count());
      if (trace) ++trace->loops_erased;
    }
    // the suffix from f_j on is untouched by the erasure
    const int fj_new = static_cast<int>(next.nodes.size()) - (static_cast<int>(p.nodes.size()) - fj_pos);
    std::string why;
    if (!is_well_formed(ed, next, &why)) throw InternalError("approx_delta: malformed splice: " + why);
    if (!induced_labeling_prefix(ed, next, fj_new).consistent()) {
      throw InternalError("approx_delta: prefix up to the detour end is inconsistent");
    }
    const int old_suffix = p.length() - f1_pos;
    const int new_suffix = next.length() - fj_new;
    if (new_suffix >= old_suffix) throw InternalError("approx_delta: no progress");
    if (trace) trace->progress.push_back(new_suffix);
    p = std::move(next);
  }
}

}  // namespace geoinsert
