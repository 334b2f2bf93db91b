#include "json_out.hpp"

namespace geoinsert::cli {

json path_json(const ExtendedDual& ed, const DualPath& p) {
  json faces = json::array();
  for (NodeId v : p.nodes) {
    if (!ed.is_terminal(v)) faces.push_back(v);
  }
  json crossed = json::array();
  for (const Crossing& c : crossings_of_path(ed, p).crossed) crossed.push_back({c.left, c.right});
  return {{"faces", faces}, {"crossed_edges", crossed}, {"nodes", p.nodes}, {"edges", p.edges}};
}

json labeling_json(const InducedLabeling& l) {
  json labels = json::object();
  for (size_t v = 0; v < l.labels.size(); ++v) {
    if (l.labels[v] != InducedLabel::None) labels[std::to_string(v)] = to_string(l.labels[v]);
  }
  json out = {{"labels", labels}, {"consistent", l.consistent()}};
  if (!l.consistent()) out["first_conflict"] = l.first_conflict();
  return out;
}

json postconditions_json(const Postconditions& pc) {
  return {{"boundary_simple", pc.boundary_simple}, {"outerplanar", pc.outerplanar},
          {"weak_dual_path", pc.weak_dual_path},   {"caterpillar", pc.caterpillar},
          {"ok", pc.ok()},                          {"detail", pc.detail}};
}

json partner_json(const PartnerSystem& sys) {
  auto pairs = [](const std::vector<PartnerPair>& v) {
    json a = json::array();
    for (const PartnerPair& pp : v) a.push_back({{"face", pp.face}, {"lambda", pp.e_lambda}, {"mu", pp.e_mu}});
    return a;
  };
  json chords = json::array();
  for (const ChordImplication& c : sys.chords) {
    chords.push_back({{"chord", c.chord}, {"premise", c.premise}, {"conclusion", c.conclusion}});
  }
  return {{"interior", pairs(sys.interior)}, {"exterior", pairs(sys.exterior)}, {"chords", chords}};
}

json mixed_sidecar(const StFriendlyGraph& sf, const std::vector<int>& id_of) {
  const MixedGraph& g = sf.graph;
  json vertices = json::array();
  for (int v = 0; v < g.vertex_slots(); ++v) {
    if (!g.vertex(v).alive) continue;
    vertices.push_back({{"id", id_of[v]}, {"kind", to_string(g.vertex(v).kind)}, {"origin", g.vertex(v).origin}});
  }
  json edges = json::array();
  for (int e = 0; e < g.edge_slots(); ++e) {
    const MixedEdge& me = g.edge(e);
    if (!me.alive) continue;
    edges.push_back({{"tail", id_of[me.tail]},
                     {"head", id_of[me.head]},
                     {"directed", me.gsp},
                     {"both_ways", me.both_ways},
                     {"forbidden", me.forbidden},
                     {"barrier", me.barrier},
                     {"shareable", me.shareable}});
  }
  return {{"s", id_of[sf.s]}, {"t", id_of[sf.t]}, {"vertices", vertices}, {"edges", edges}};
}

}  // namespace geoinsert::cli
