#include "geoinsert/extended_dual.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace geoinsert {

ExtendedDual ExtendedDual::build(EmbeddedGraph g, VertexId s, VertexId t) {
  const int n = g.vertex_count();
  if (s < 0 || s >= n || t < 0 || t >= n) throw PreconditionError("terminal out of range");
  if (s == t) throw PreconditionError("s and t must be distinct");
  if (g.adjacent(s, t)) throw PreconditionError("edge already present: st is an edge of G");

  ExtendedDual ed;
  ed.primal_ = std::move(g);
  ed.s_ = s;
  ed.t_ = t;
  ed.face_count_ = ed.primal_.face_count();
  const EmbeddedGraph& pg = ed.primal_;

  for (EdgeId e = 0; e < pg.edge_count(); ++e) {
    const DartId d = pg.edge_dart(e);
    ed.edges_.push_back({pg.left_face(d), pg.right_face(d), DualEdgeKind::Crossing, d});
  }
  ed.corner_attachment_.assign(pg.dart_count(), -1);
  auto attach = [&](VertexId terminal, NodeId node, DualEdgeKind kind) {
    for (int i = 0; i < pg.degree(terminal); ++i) {
      const DartId d = pg.dart(terminal, i);
      ed.corner_attachment_[d] = static_cast<DualEdgeId>(ed.edges_.size());
      ed.edges_.push_back({node, pg.left_face(d), kind, d});
    }
  };
  attach(s, ed.s_node(), DualEdgeKind::AttachS);
  attach(t, ed.t_node(), DualEdgeKind::AttachT);

  ed.incident_.assign(ed.node_count(), {});
  for (DualEdgeId e = 0; e < ed.edge_count(); ++e) {
    const DualEdge& de = ed.edges_[e];
    ed.incident_[de.a].push_back({e, de.b});
    if (de.a != de.b) ed.incident_[de.b].push_back({e, de.a});
  }
  for (auto& list : ed.incident_) {
    std::sort(list.begin(), list.end(), [](const Incidence& x, const Incidence& y) {
      return x.other != y.other ? x.other < y.other : x.edge < y.edge;
    });
  }

  // cyclic order at a face follows its boundary; a terminal corner sits
  // between the dart entering the terminal and the one leaving it
  ed.cyclic_.assign(ed.node_count(), {});
  for (const Face& f : pg.faces()) {
    auto& order = ed.cyclic_[f.id];
    for (size_t i = 0; i < f.boundary.size(); ++i) {
      const DartId d = f.boundary[i];
      order.push_back(pg.edge_of(d));
      const DartId next = f.boundary[(i + 1) % f.boundary.size()];
      if (ed.corner_attachment_[next] != -1) order.push_back(ed.corner_attachment_[next]);
    }
  }
  for (int i = 0; i < pg.degree(s); ++i) ed.cyclic_[ed.s_node()].push_back(ed.corner_attachment_[pg.dart(s, i)]);
  for (int i = 0; i < pg.degree(t); ++i) ed.cyclic_[ed.t_node()].push_back(ed.corner_attachment_[pg.dart(t, i)]);
  return ed;
}

bool is_well_formed(const ExtendedDual& ed, const DualPath& p, std::string* why) {
  auto fail = [&](const std::string& msg) {
    if (why) *why = msg;
    return false;
  };
  if (p.nodes.size() != p.edges.size() + 1) return fail("node/edge count mismatch");
  if (p.edges.size() < 2) return fail("path shorter than two edges");
  if (p.nodes.front() != ed.s_node() || p.nodes.back() != ed.t_node()) return fail("path is not an st-path");
  std::set<NodeId> seen;
  for (size_t i = 0; i < p.edges.size(); ++i) {
    const DualEdgeId e = p.edges[i];
    if (e < 0 || e >= ed.edge_count()) return fail("edge id out of range");
    const DualEdge& de = ed.edge(e);
    const NodeId u = p.nodes[i];
    const NodeId v = p.nodes[i + 1];
    if (!((de.a == u && de.b == v) || (de.a == v && de.b == u))) {
      return fail("edge " + std::to_string(e) + " does not join consecutive nodes");
    }
    const bool end = i == 0 || i + 1 == p.edges.size();
    if (end != de.is_attachment()) return fail("attachment edge in wrong position");
  }
  for (NodeId v : p.nodes) {
    if (!seen.insert(v).second) return fail("repeated node " + std::to_string(v));
  }
  return true;
}

CrossingSummary crossings_of_path(const ExtendedDual& ed, const DualPath& p) {
  CrossingSummary out;
  const EmbeddedGraph& g = ed.primal();
  for (size_t i = 1; i + 1 < p.edges.size(); ++i) {
    const DartId d = ed.crossed_dart(p.edges[i], p.nodes[i]);
    out.crossed.push_back({g.edge_of(d), g.head(d), g.tail(d)});
  }
  out.count = p.length() - 2;
  return out;
}

DualPath path_from_nodes(const ExtendedDual& ed, std::vector<NodeId> nodes) {
  DualPath p;
  p.nodes = std::move(nodes);
  for (size_t i = 0; i + 1 < p.nodes.size(); ++i) {
    const auto inc = ed.incident(p.nodes[i]);
    const auto it = std::find_if(inc.begin(), inc.end(),
                                 [&](const Incidence& x) { return x.other == p.nodes[i + 1]; });
    if (it == inc.end()) {
      throw std::invalid_argument("nodes " + std::to_string(p.nodes[i]) + " and " +
                                  std::to_string(p.nodes[i + 1]) + " are not adjacent");
    }
    p.edges.push_back(it->edge);
  }
  return p;
}

}  // namespace geoinsert
