#include "geoinsert/gsp_faces.hpp"

#include <algorithm>

namespace geoinsert {

GspFaces trace_gsp_faces(const ExtendedDual& ed, const ShortestPathDag& dag) {
  const int m = static_cast<int>(dag.edges.size());
  std::vector<int> dag_index(ed.edge_count(), -1);
  for (int k = 0; k < m; ++k) dag_index[dag.edges[k].edge] = k;

  // cyclic order of G_sp edges at each node, and each edge's slot at both ends
  std::vector<std::vector<int>> order(ed.node_count());
  std::vector<int> slot_from(m, -1), slot_to(m, -1);
  for (NodeId v = 0; v < ed.node_count(); ++v) {
    for (DualEdgeId e : ed.cyclic_order(v)) {
      const int k = dag_index[e];
      if (k < 0) continue;
      (dag.edges[k].from == v ? slot_from : slot_to)[k] = static_cast<int>(order[v].size());
      order[v].push_back(k);
    }
  }
  for (int k = 0; k < m; ++k) {
    if (slot_from[k] < 0 || slot_to[k] < 0) throw InternalError("G_sp edge missing from the cyclic order");
  }

  auto head = [&](GspDart d) { return d.forward ? dag.edges[d.edge].to : dag.edges[d.edge].from; };
  auto successor = [&](GspDart d) {
    const NodeId w = head(d);
    const int i = d.forward ? slot_to[d.edge] : slot_from[d.edge];
    const auto& ring = order[w];
    const int k = ring[(i + static_cast<int>(ring.size()) - 1) % ring.size()];
    return GspDart{k, dag.edges[k].from == w};
  };

  GspFaces faces;
  faces.left.assign(m, -1);
  faces.right.assign(m, -1);
  for (int k = 0; k < m; ++k) {
    for (const bool fwd : {true, false}) {
      if ((fwd ? faces.left : faces.right)[k] >= 0) continue;
      const int id = faces.face_count();
      std::vector<GspDart> walk;
      GspDart d{k, fwd};
      do {
        (d.forward ? faces.left : faces.right)[d.edge] = id;
        walk.push_back(d);
        d = successor(d);
      } while (!(d == GspDart{k, fwd}));
      faces.boundary.push_back(std::move(walk));
    }
  }
  return faces;
}

CommonFace check_common_face(const ExtendedDual& ed, const ShortestPathDag& dag, const GspFaces& faces) {
  CommonFace result;
  auto tail = [&](GspDart d) { return d.forward ? dag.edges[d.edge].from : dag.edges[d.edge].to; };
  for (int f = 0; f < faces.face_count() && !result.found; ++f) {
    const auto& walk = faces.boundary[f];
    bool has_s = false, has_t = false;
    for (const GspDart& d : walk) {
      has_s |= tail(d) == ed.s_node();
      has_t |= tail(d) == ed.t_node();
    }
    if (!has_s || !has_t) continue;
    result.found = true;
    result.face = f;
    // rotate the walk to start at s; forward darts then run s -> t along the
    // upper path, backward darts run t -> s along the lower path
    const auto start = std::find_if(walk.begin(), walk.end(), [&](const GspDart& d) { return tail(d) == ed.s_node(); });
    std::vector<GspDart> rotated(start, walk.end());
    rotated.insert(rotated.end(), walk.begin(), start);
    for (const GspDart& d : rotated) {
      if (d.forward) result.upper.push_back(d.edge);
    }
    for (auto it = rotated.rbegin(); it != rotated.rend(); ++it) {
      if (!it->forward) result.lower.push_back(it->edge);
    }
    // both must be directed st-paths
    for (const auto* path : {&result.upper, &result.lower}) {
      NodeId at = ed.s_node();
      for (int k : *path) {
        if (dag.edges[k].from != at) throw InternalError("boundary of the common face is not two directed paths");
        at = dag.edges[k].to;
      }
      if (at != ed.t_node()) throw InternalError("boundary path of the common face does not reach t");
    }
  }
  return result;
}

CommonFace check_common_face(const ExtendedDual& ed, const ShortestPathDag& dag) {
  return check_common_face(ed, dag, trace_gsp_faces(ed, dag));
}

}  // namespace geoinsert
