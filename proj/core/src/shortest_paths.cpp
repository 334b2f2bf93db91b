#include "geoinsert/shortest_paths.hpp"

#include <algorithm>
#include <queue>

namespace geoinsert {

std::vector<int> bfs_distances(const ExtendedDual& ed, NodeId source, NodeId blocked) {
  std::vector<int> dist(ed.node_count(), kUnreachable);
  std::queue<NodeId> queue;
  dist[source] = 0;
  queue.push(source);
  while (!queue.empty()) {
    const NodeId u = queue.front();
    queue.pop();
    if (u == blocked) continue;
    for (const Incidence& inc : ed.incident(u)) {
      if (dist[inc.other] == kUnreachable) {
        dist[inc.other] = dist[u] + 1;
        queue.push(inc.other);
      }
    }
  }
  return dist;
}

bool ShortestPathDag::tight(NodeId u, NodeId v) const {
  return dist_from_s[u] != kUnreachable && dist_to_t[v] != kUnreachable &&
         dist_from_s[u] + 1 + dist_to_t[v] == length;
}

ShortestPathDag build_gsp(const ExtendedDual& ed) {
  ShortestPathDag dag;
  dag.dist_from_s = bfs_distances(ed, ed.s_node(), ed.t_node());
  dag.dist_to_t = bfs_distances(ed, ed.t_node(), ed.s_node());
  dag.length = dag.dist_from_s[ed.t_node()];
  if (dag.length == kUnreachable) throw InternalError("t unreachable from s in the extended dual");

  dag.on_path.assign(ed.node_count(), 0);
  for (NodeId v = 0; v < ed.node_count(); ++v) {
    dag.on_path[v] = dag.dist_from_s[v] != kUnreachable && dag.dist_to_t[v] != kUnreachable &&
                     dag.dist_from_s[v] + dag.dist_to_t[v] == dag.length;
  }
  dag.out.assign(ed.node_count(), {});
  for (NodeId u = 0; u < ed.node_count(); ++u) {
    if (!dag.on_path[u] || u == ed.t_node()) continue;
    for (const Incidence& inc : ed.incident(u)) {
      if (inc.other == u || !dag.tight(u, inc.other)) continue;
      dag.out[u].push_back(static_cast<int>(dag.edges.size()));
      dag.edges.push_back({inc.edge, u, inc.other});
    }
  }
  return dag;
}

DualPath bfs_shortest(const ExtendedDual& ed, const ShortestPathDag& dag) {
  DualPath p;
  NodeId u = ed.s_node();
  p.nodes.push_back(u);
  while (u != ed.t_node()) {
    if (dag.out[u].empty()) throw InternalError("dead end in shortest path DAG");
    const DagEdge& e = dag.edges[dag.out[u].front()];
    p.edges.push_back(e.edge);
    p.nodes.push_back(e.to);
    u = e.to;
  }
  return p;
}

DualPath bfs_shortest(const ExtendedDual& ed) { return bfs_shortest(ed, build_gsp(ed)); }

std::vector<DualPath> enumerate_shortest(const ExtendedDual& ed, int cap) {
  std::vector<DualPath> found;
  if (cap < 1) return found;
  const ShortestPathDag dag = build_gsp(ed);
  DualPath cur;
  cur.nodes.push_back(ed.s_node());
  // explicit stack of next-branch indices
  std::vector<size_t> branch{0};
  while (!branch.empty() && static_cast<int>(found.size()) < cap) {
    const NodeId u = cur.nodes.back();
    if (u == ed.t_node()) {
      found.push_back(cur);
      branch.pop_back();
      cur.nodes.pop_back();
      if (!cur.edges.empty()) cur.edges.pop_back();
      continue;
    }
    size_t& next = branch.back();
    if (next >= dag.out[u].size()) {
      branch.pop_back();
      cur.nodes.pop_back();
      if (!cur.edges.empty()) cur.edges.pop_back();
      continue;
    }
    const DagEdge& e = dag.edges[dag.out[u][next++]];
    cur.nodes.push_back(e.to);
    cur.edges.push_back(e.edge);
    branch.push_back(0);
  }
  return found;
}

}  // namespace geoinsert
