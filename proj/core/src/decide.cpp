#include "geoinsert/decide.hpp"

#include <algorithm>
#include <queue>

#include "geoinsert/consistency.hpp"

namespace geoinsert {

namespace {

// Literal for "DAG edge k lies on the path": constant true for bridges of o,
// a single variable for the other edges of o, nothing for interior edges.
struct EdgeLiteral {
  enum Kind { True, Var, None } kind = None;
  Lit lit;
};

EdgeLiteral on_path_literal(const GspFaces& faces, int o, const std::vector<int>& var, int k) {
  const int l = faces.left[k], r = faces.right[k];
  if (l == o && r == o) return {EdgeLiteral::True, {}};
  if (l == o) return {EdgeLiteral::Var, Lit::pos(var[r])};
  if (r == o) return {EdgeLiteral::Var, Lit::neg(var[l])};
  return {};
}

}  // namespace

int TwoSatInstance::count(ClauseKind kind) const {
  return static_cast<int>(std::count_if(clauses.begin(), clauses.end(), [&](const Clause& c) { return c.kind == kind; }));
}

TwoSatInstance build_two_sat(const ExtendedDual& ed, const ShortestPathDag& dag, const GspFaces& faces,
                             const CommonFace& o) {
  TwoSatInstance inst;
  std::vector<int> var(faces.face_count(), -1);
  for (int f = 0; f < faces.face_count(); ++f) {
    if (f == o.face) continue;
    var[f] = inst.variables++;
    inst.face_of_variable.push_back(f);
  }

  const int m = static_cast<int>(dag.edges.size());
  for (int k = 0; k < m; ++k) {
    const int l = faces.left[k], r = faces.right[k];
    if (l != o.face && r != o.face && l != r) inst.clauses.push_back({Lit::neg(var[l]), Lit::pos(var[r]), ClauseKind::Order});
  }

  // primal vertices lying in o, with the edges of o that would put them left or right
  const EmbeddedGraph& g = ed.primal();
  std::vector<std::vector<EdgeLiteral>> as_left(g.vertex_count()), as_right(g.vertex_count());
  for (int k = 0; k < m; ++k) {
    const DagEdge& de = dag.edges[k];
    if (ed.edge(de.edge).is_attachment()) continue;
    const EdgeLiteral lit = on_path_literal(faces, o.face, var, k);
    if (lit.kind == EdgeLiteral::None) continue;
    const DartId d = ed.crossed_dart(de.edge, de.from);
    if (faces.left[k] == o.face) as_left[g.head(d)].push_back(lit);
    if (faces.right[k] == o.face) as_right[g.tail(d)].push_back(lit);
  }
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    for (const EdgeLiteral& a : as_left[v]) {
      for (const EdgeLiteral& b : as_right[v]) {
        if (a.kind == EdgeLiteral::True && b.kind == EdgeLiteral::True) {
          inst.trivially_unsat = true;
        } else if (a.kind == EdgeLiteral::True) {
          inst.clauses.push_back({~b.lit, ~b.lit, ClauseKind::Exclusive});
        } else if (b.kind == EdgeLiteral::True) {
          inst.clauses.push_back({~a.lit, ~a.lit, ClauseKind::Exclusive});
        } else {
          inst.clauses.push_back({~a.lit, ~b.lit, ClauseKind::Exclusive});
        }
      }
    }
  }
  return inst;
}

namespace {

// Local non-crossing rule for a partner path q at the interior nodes of p:
// q's two edges at such a node must lie in the same arc between p's two
// edges, unless one of them is shared with p.
class PartnerRules {
 public:
  PartnerRules(const ExtendedDual& ed, const DualPath& p) : ed_(ed), p_(p), index_(ed.node_count(), -1), on_p_(ed.edge_count(), 0) {
    for (size_t i = 1; i + 1 < p.nodes.size(); ++i) index_[p.nodes[i]] = static_cast<int>(i);
    for (DualEdgeId e : p.edges) on_p_[e] = 1;
  }

  static constexpr int kFree = 2;  // entered through a shared edge

  bool touches_p(NodeId x) const { return index_[x] >= 0; }
  bool shared(DualEdgeId e) const { return on_p_[e] && ed_.edge(e).is_attachment(); }
  bool forbidden(DualEdgeId e) const { return on_p_[e] && !ed_.edge(e).is_attachment(); }

  // 0: strictly between p's out-edge and in-edge counterclockwise, 1: the other arc
  int arc(NodeId x, DualEdgeId e) const {
    if (shared(e)) return kFree;
    const int i = index_[x];
    const auto ring = ed_.cyclic_order(x);
    const int n = static_cast<int>(ring.size());
    auto slot = [&](DualEdgeId y) { return static_cast<int>(std::find(ring.begin(), ring.end(), y) - ring.begin()); };
    const int in = slot(p_.edges[i - 1]), out = slot(p_.edges[i]);
    const int pos = (slot(e) - out + n) % n;
    return pos < (in - out + n) % n ? 0 : 1;
  }

  bool may_leave(NodeId x, int entered, DualEdgeId e) const {
    if (!touches_p(x) || entered == kFree) return true;
    const int a = arc(x, e);
    return a == kFree || a == entered;
  }

 private:
  const ExtendedDual& ed_;
  const DualPath& p_;
  std::vector<int> index_;
  std::vector<char> on_p_;
};

bool simple(const DualPath& q, int node_count) {
  std::vector<char> seen(node_count, 0);
  for (NodeId v : q.nodes) {
    if (seen[v]) return false;
    seen[v] = 1;
  }
  return true;
}

// BFS over (node, arc entered); the walk it returns may revisit a node of p
std::optional<DualPath> partner_walk(const ExtendedDual& ed, const PartnerRules& rules) {
  const int states = 3 * ed.node_count();
  auto id = [](NodeId v, int a) { return 3 * v + a; };
  std::vector<int> parent(states, -1);
  std::vector<DualEdgeId> via(states, -1);
  std::vector<char> seen(states, 0);
  std::queue<int> queue;
  queue.push(id(ed.s_node(), 0));
  seen[id(ed.s_node(), 0)] = 1;
  int goal = -1;
  while (!queue.empty() && goal < 0) {
    const int state = queue.front();
    queue.pop();
    const NodeId u = state / 3;
    for (const Incidence& inc : ed.incident(u)) {
      const NodeId w = inc.other;
      if (w == u || w == ed.s_node() || rules.forbidden(inc.edge)) continue;
      if (!rules.may_leave(u, state % 3, inc.edge)) continue;
      const int next = id(w, rules.touches_p(w) ? rules.arc(w, inc.edge) : 0);
      if (seen[next]) continue;
      seen[next] = 1;
      parent[next] = state;
      via[next] = inc.edge;
      if (w == ed.t_node()) {
        goal = next;
        break;
      }
      queue.push(next);
    }
  }
  if (goal < 0) return std::nullopt;
  DualPath q;
  for (int state = goal; state != id(ed.s_node(), 0); state = parent[state]) {
    q.nodes.push_back(state / 3);
    q.edges.push_back(via[state]);
  }
  q.nodes.push_back(ed.s_node());
  std::reverse(q.nodes.begin(), q.nodes.end());
  std::reverse(q.edges.begin(), q.edges.end());
  return q;
}

// exhaustive search over simple paths, for the rare case the walk is not simple
class PartnerSearch {
 public:
  PartnerSearch(const ExtendedDual& ed, const PartnerRules& rules) : ed_(ed), rules_(rules), visited_(ed.node_count(), 0) {}

  std::optional<DualPath> run() {
    q_.nodes.assign(1, ed_.s_node());
    visited_[ed_.s_node()] = 1;
    if (dfs(ed_.s_node(), 0)) return q_;
    return std::nullopt;
  }

 private:
  bool dfs(NodeId u, int entered) {
    if (u == ed_.t_node()) return true;
    for (const Incidence& inc : ed_.incident(u)) {
      const NodeId w = inc.other;
      if (visited_[w] || rules_.forbidden(inc.edge) || !rules_.may_leave(u, entered, inc.edge)) continue;
      visited_[w] = 1;
      q_.nodes.push_back(w);
      q_.edges.push_back(inc.edge);
      if (dfs(w, rules_.touches_p(w) ? rules_.arc(w, inc.edge) : 0)) return true;
      q_.nodes.pop_back();
      q_.edges.pop_back();
      visited_[w] = 0;
    }
    return false;
  }

  const ExtendedDual& ed_;
  const PartnerRules& rules_;
  std::vector<char> visited_;
  DualPath q_;
};

}  // namespace

std::optional<DualPath> find_partner(const ExtendedDual& ed, const DualPath& p) {
  const PartnerRules rules(ed, p);
  auto walk = partner_walk(ed, rules);
  if (!walk) return std::nullopt;
  if (simple(*walk, ed.node_count())) return walk;
  return PartnerSearch(ed, rules).run();
}

Decision decide(const ExtendedDual& ed) {
  const ShortestPathDag dag = build_gsp(ed);
  const GspFaces faces = trace_gsp_faces(ed, dag);
  const CommonFace o = check_common_face(ed, dag, faces);
  if (!o.found) throw PreconditionError("special case precondition violated: s and t share no face of G_sp");

  Decision decision;
  decision.dist = dag.length;
  decision.instance = build_two_sat(ed, dag, faces, o);
  if (decision.instance.trivially_unsat) return decision;

  TwoSatSolver solver(decision.instance.variables);
  for (const Clause& c : decision.instance.clauses) solver.add_clause(c.a, c.b);
  const auto assignment = solver.solve();
  if (!assignment) return decision;

  // faces right of the path: the chosen variables plus o on its lower side
  std::vector<int> var(faces.face_count(), -1);
  for (int i = 0; i < decision.instance.variables; ++i) var[decision.instance.face_of_variable[i]] = i;
  auto on_path = [&](int k) {
    const int l = faces.left[k], r = faces.right[k];
    const bool right_below = r == o.face || (*assignment)[var[r]];
    const bool left_below = l != o.face && (*assignment)[var[l]];
    return right_below && !left_below;
  };

  DualPath p;
  p.nodes.push_back(ed.s_node());
  while (p.nodes.back() != ed.t_node()) {
    int next = -1;
    for (int k : dag.out[p.nodes.back()]) {
      if (!on_path(k)) continue;
      if (next >= 0) throw InternalError("face set leaves two ways out of a node");
      next = k;
    }
    if (next < 0) throw InternalError("face set does not describe an st-path");
    p.edges.push_back(dag.edges[next].edge);
    p.nodes.push_back(dag.edges[next].to);
  }

  std::string why;
  if (!is_well_formed(ed, p, &why)) throw InternalError("decided path is malformed: " + why);
  if (p.length() != dag.length) throw InternalError("decided path is not shortest");
  if (!is_consistent(ed, p)) throw InternalError("decided path is inconsistent");
  auto partner = find_partner(ed, p);
  if (!partner) throw InternalError("consistent path without an edge-disjoint partner");
  if (!non_crossing(ed, p, *partner)) throw InternalError("partner crosses the decided path");

  decision.yes = true;
  decision.path = std::move(p);
  decision.partner = std::move(partner);
  return decision;
}

}  // namespace geoinsert
