#include "geoinsert/export.hpp"

#include <map>
#include <sstream>

namespace geoinsert {

namespace {

std::string node_name(const ExtendedDual& ed, NodeId v) {
  if (v == ed.s_node()) return "s";
  if (v == ed.t_node()) return "t";
  return "f" + std::to_string(v);
}

}  // namespace

std::string dual_to_dot(const ExtendedDual& ed) {
  std::ostringstream out;
  out << "graph dual {\n";
  out << "  s [shape=doublecircle];\n  t [shape=doublecircle];\n";
  for (NodeId f = 0; f < ed.face_count(); ++f) out << "  f" << f << " [shape=circle];\n";
  const EmbeddedGraph& g = ed.primal();
  for (DualEdgeId e = 0; e < ed.edge_count(); ++e) {
    const DualEdge& de = ed.edge(e);
    out << "  " << node_name(ed, de.a) << " -- " << node_name(ed, de.b);
    if (de.is_attachment()) {
      out << " [style=dashed, color=blue, label=\"corner " << g.position(de.dart) << "\"]";
    } else {
      out << " [label=\"" << g.tail(de.dart) << "-" << g.head(de.dart) << "\"]";
    }
    out << ";\n";
  }
  out << "}\n";
  return out.str();
}

std::string gsp_to_dot(const ExtendedDual& ed, const ShortestPathDag& dag) {
  std::ostringstream out;
  out << "digraph gsp {\n  rankdir=LR;\n";
  std::map<int, std::vector<NodeId>> layers;
  for (NodeId v = 0; v < ed.node_count(); ++v) {
    if (dag.on_path[v]) layers[dag.dist_from_s[v]].push_back(v);
  }
  for (const auto& [d, nodes] : layers) {
    out << "  { rank=same;";
    for (NodeId v : nodes) out << ' ' << node_name(ed, v) << ';';
    out << " }\n";
  }
  for (const DagEdge& de : dag.edges) {
    out << "  " << node_name(ed, de.from) << " -> " << node_name(ed, de.to);
    if (ed.edge(de.edge).is_attachment()) out << " [style=dashed, color=blue]";
    else out << " [label=\"e" << de.edge << "\"]";
    out << ";\n";
  }
  out << "}\n";
  return out.str();
}

std::string mixed_to_dot(const StFriendlyGraph& sf) {
  const MixedGraph& g = sf.graph;
  std::ostringstream out;
  out << "digraph mixed {\n";
  for (int v = 0; v < g.vertex_slots(); ++v) {
    if (!g.vertex(v).alive) continue;
    out << "  v" << v << " [label=\"" << v;
    if (v == sf.s) out << " (s)";
    if (v == sf.t) out << " (t)";
    out << "\\n" << to_string(g.vertex(v).kind) << "\"";
    if (v == sf.s || v == sf.t) out << ", shape=doublecircle";
    out << "];\n";
  }
  for (int e = 0; e < g.edge_slots(); ++e) {
    const MixedEdge& me = g.edge(e);
    if (!me.alive) continue;
    std::vector<std::string> attrs;
    if (!me.gsp) attrs.push_back("dir=none, color=grey");
    if (me.both_ways) attrs.push_back("dir=both");
    if (me.barrier) attrs.push_back("color=red");
    if (me.forbidden) attrs.push_back("style=dotted");
    if (me.shareable) attrs.push_back("penwidth=2");
    out << "  v" << me.tail << " -> v" << me.head;
    if (!attrs.empty()) {
      out << " [";
      for (size_t i = 0; i < attrs.size(); ++i) out << (i ? ", " : "") << attrs[i];
      out << ']';
    }
    out << ";\n";
  }
  out << "}\n";
  return out.str();
}

Snapshot snapshot(const StFriendlyGraph& sf, const std::string& name) {
  const MixedGraph& g = sf.graph;
  Snapshot snap;
  snap.id_of.assign(g.vertex_slots(), -1);
  int n = 0;
  for (int v = 0; v < g.vertex_slots(); ++v) {
    if (g.vertex(v).alive) snap.id_of[v] = n++;
  }
  std::vector<std::vector<VertexId>> rot(n);
  for (int v = 0; v < g.vertex_slots(); ++v) {
    if (!g.vertex(v).alive) continue;
    for (int h : g.rotation(v)) rot[snap.id_of[v]].push_back(snap.id_of[g.other(h)]);
  }
  snap.instance.graph = EmbeddedGraph::from_rotations(std::move(rot));
  snap.instance.s = snap.id_of[sf.s];
  snap.instance.t = snap.id_of[sf.t];
  snap.instance.name = name;
  return snap;
}

}  // namespace geoinsert
