#pragma once

#include <vector>

#include "geoinsert/extended_dual.hpp"

namespace geoinsert {

inline constexpr int kUnreachable = -1;

struct DagEdge {
  DualEdgeId edge;
  NodeId from;
  NodeId to;
};

/// All shortest st-paths of the extended dual as a DAG (G_sp).
struct ShortestPathDag {
  std::vector<int> dist_from_s;  // terminals are never passed through
  std::vector<int> dist_to_t;
  int length = 0;                // dist(s, t)
  std::vector<char> on_path;     // node lies on some shortest st-path
  std::vector<DagEdge> edges;
  std::vector<std::vector<int>> out;  // indices into edges, by (to, edge id)

  bool tight(NodeId u, NodeId v) const;
};

ShortestPathDag build_gsp(const ExtendedDual& ed);

/// Canonical shortest path: lowest node id first, then lowest edge id.
DualPath bfs_shortest(const ExtendedDual& ed);
DualPath bfs_shortest(const ExtendedDual& ed, const ShortestPathDag& dag);

/// Up to `cap` shortest paths in lexicographic order of node ids. The count
/// can be exponential in the instance size.
std::vector<DualPath> enumerate_shortest(const ExtendedDual& ed, int cap);

/// Plain BFS distances from `source`, never expanding `blocked`.
std::vector<int> bfs_distances(const ExtendedDual& ed, NodeId source, NodeId blocked);

}  // namespace geoinsert
