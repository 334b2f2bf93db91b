#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

#include "geoinsert/extended_dual.hpp"

namespace geoinsert {

enum class MixedVertexKind : std::uint8_t { Original, Subdivision, SplitCopy, Barrier, Avoidable };

std::string_view to_string(MixedVertexKind k);

struct MixedVertex {
  MixedVertexKind kind = MixedVertexKind::Original;
  NodeId origin = -1;  // extended-dual node, -1 for inserted vertices
  bool alive = true;
};

/// Edges are stored directed tail -> head. `gsp` edges may be used by the
/// directed path (and `both_ways` ones against their direction too); every
/// edge except `forbidden` ones may be used by the undirected path.
struct MixedEdge {
  int tail = 0;
  int head = 0;
  bool gsp = false;
  bool both_ways = false;
  bool forbidden = false;
  bool barrier = false;
  bool shareable = false;  // attachment edge the undirected path may share with the directed one
  bool alive = true;
  std::vector<DualEdgeId> provenance;  // extended-dual edges this edge stands for
};

/// Plane multigraph with a rotation system over half-edges. Half-edge 2e sits
/// at the tail of edge e, 2e + 1 at its head.
class MixedGraph {
 public:
  MixedGraph() = default;

  int vertex_slots() const { return static_cast<int>(vertices_.size()); }
  int edge_slots() const { return static_cast<int>(edges_.size()); }
  int vertex_count() const;
  int edge_count() const;

  const MixedVertex& vertex(int v) const { return vertices_[v]; }
  const MixedEdge& edge(int e) const { return edges_[e]; }
  MixedEdge& edge_mut(int e) { return edges_[e]; }
  const std::vector<int>& rotation(int v) const { return rot_[v]; }

  static int edge_of(int h) { return h >> 1; }
  int at(int h) const { return h & 1 ? edges_[h >> 1].head : edges_[h >> 1].tail; }
  int other(int h) const { return at(h ^ 1); }
  int degree(int v) const { return static_cast<int>(rot_[v].size()); }
  int in_degree(int v) const;
  int out_degree(int v) const;

  int add_vertex(MixedVertexKind kind, NodeId origin = -1);
  /// Adds an edge without placing it in any rotation; use place() for both ends.
  int add_edge(int tail, int head, const MixedEdge& flags);
  /// Inserts half-edge h into the rotation of at(h) at index pos.
  void place(int h, int pos);
  int position(int h) const;
  /// Moves half-edge h to vertex v without touching any rotation.
  void reattach(int h, int v) { (h & 1 ? edges_[h >> 1].head : edges_[h >> 1].tail) = v; }
  void set_rotation(int v, std::vector<int> ring) { rot_[v] = std::move(ring); }

  void remove_edge(int e);
  void remove_vertex(int v);
  /// Merges the head of e into its tail (or the tail into the head when
  /// keep_head is set); the rotations are spliced at e.
  int contract(int e, bool keep_head = false);
  /// Replaces e = (a, b) by c -> a and c -> b with a new vertex c of the given
  /// kind; both new edges inherit e's provenance and are not gsp.
  int split_edge(int e, MixedVertexKind kind);

  /// Faces of the subgraph made of edges accepted by the filter; each face is
  /// the list of half-edges h with the face on the left of at(h) -> other(h).
  template <class Filter>
  std::vector<std::vector<int>> faces(Filter keep) const;

 private:
  std::vector<MixedVertex> vertices_;
  std::vector<MixedEdge> edges_;
  std::vector<std::vector<int>> rot_;
};

template <class Filter>
std::vector<std::vector<int>> MixedGraph::faces(Filter keep) const {
  std::vector<std::vector<int>> restricted(rot_.size());
  std::vector<int> slot(2 * edges_.size(), -1);
  for (size_t v = 0; v < rot_.size(); ++v) {
    for (int h : rot_[v]) {
      if (!keep(edge_of(h))) continue;
      slot[h] = static_cast<int>(restricted[v].size());
      restricted[v].push_back(h);
    }
  }
  std::vector<char> done(2 * edges_.size(), 0);
  std::vector<std::vector<int>> result;
  for (size_t e = 0; e < edges_.size(); ++e) {
    if (!edges_[e].alive || !keep(static_cast<int>(e))) continue;
    for (int h : {static_cast<int>(2 * e), static_cast<int>(2 * e + 1)}) {
      if (done[h]) continue;
      std::vector<int> walk;
      int d = h;
      do {
        done[d] = 1;
        walk.push_back(d);
        const int arrive = d ^ 1;
        const auto& ring = restricted[at(arrive)];
        d = ring[(slot[arrive] + ring.size() - 1) % ring.size()];
      } while (d != h);
      result.push_back(std::move(walk));
    }
  }
  return result;
}

}  // namespace geoinsert
