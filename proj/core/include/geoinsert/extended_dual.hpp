#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "geoinsert/embedding.hpp"

namespace geoinsert {

using NodeId = int;      // vertex of the extended dual
using DualEdgeId = int;  // edge of the extended dual

enum class DualEdgeKind : std::uint8_t { Crossing, AttachS, AttachT };

/// Crossing edges: `dart` is the canonical primal dart, a = left face of it,
/// b = right face. Attachment edges: `dart` is the outgoing primal dart at the
/// terminal whose left face is the attached corner, a = terminal node.
struct DualEdge {
  NodeId a = 0;
  NodeId b = 0;
  DualEdgeKind kind = DualEdgeKind::Crossing;
  DartId dart = 0;

  bool is_attachment() const { return kind != DualEdgeKind::Crossing; }
};

struct Incidence {
  DualEdgeId edge;
  NodeId other;
};

/// Dual of the embedding plus the two terminals, each attached once per
/// corner. Face f is node f; the terminals are nodes F and F + 1.
class ExtendedDual {
 public:
  /// Throws PreconditionError if s == t, if st is an edge, or if either
  /// terminal is out of range.
  static ExtendedDual build(EmbeddedGraph g, VertexId s, VertexId t);

  const EmbeddedGraph& primal() const { return primal_; }
  VertexId s() const { return s_; }
  VertexId t() const { return t_; }
  NodeId s_node() const { return face_count_; }
  NodeId t_node() const { return face_count_ + 1; }
  bool is_terminal(NodeId v) const { return v >= face_count_; }
  int face_count() const { return face_count_; }
  int node_count() const { return face_count_ + 2; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  /// Crossing edges come first; edge id e < primal().edge_count() is the dual
  /// of primal edge e.
  int crossing_edge_count() const { return primal_.edge_count(); }

  const DualEdge& edge(DualEdgeId e) const { return edges_[e]; }
  NodeId other_end(DualEdgeId e, NodeId v) const {
    return edges_[e].a == v ? edges_[e].b : edges_[e].a;
  }
  /// Incident edges sorted by (other endpoint, edge id). Loops are listed once.
  std::span<const Incidence> incident(NodeId v) const { return incident_[v]; }
  /// Edges around v in cyclic order; a loop occupies two slots.
  std::span<const DualEdgeId> cyclic_order(NodeId v) const { return cyclic_[v]; }
  /// Attachment edge of the terminal corner identified by an outgoing dart.
  DualEdgeId attachment_of_corner(DartId d) const { return corner_attachment_[d]; }

  /// Primal dart crossed from its left to its right when edge e is traversed
  /// starting at `from`. Only meaningful for crossing edges.
  DartId crossed_dart(DualEdgeId e, NodeId from) const {
    const DualEdge& de = edges_[e];
    return de.a == from ? de.dart : primal_.twin(de.dart);
  }

 private:
  EmbeddedGraph primal_;
  VertexId s_ = 0;
  VertexId t_ = 0;
  int face_count_ = 0;
  std::vector<DualEdge> edges_;
  std::vector<std::vector<Incidence>> incident_;
  std::vector<std::vector<DualEdgeId>> cyclic_;
  std::vector<DualEdgeId> corner_attachment_;
};

inline ExtendedDual build_extended_dual(EmbeddedGraph g, VertexId s, VertexId t) {
  return ExtendedDual::build(std::move(g), s, t);
}

/// Walk in the extended dual; nodes.size() == edges.size() + 1.
struct DualPath {
  std::vector<NodeId> nodes;
  std::vector<DualEdgeId> edges;

  int length() const { return static_cast<int>(edges.size()); }
  int crossings() const { return length() - 2; }
  bool operator==(const DualPath&) const = default;
};

/// One crossed primal edge, oriented by the traversal direction.
struct Crossing {
  EdgeId primal_edge;
  VertexId left;
  VertexId right;
};

struct CrossingSummary {
  int count = 0;
  std::vector<Crossing> crossed;  // in path order
};

/// Checks the DualPath invariants: s to t, attachment edges exactly at both
/// ends, consecutive nodes joined by the listed edges, no repeated node.
bool is_well_formed(const ExtendedDual& ed, const DualPath& p, std::string* why = nullptr);

CrossingSummary crossings_of_path(const ExtendedDual& ed, const DualPath& p);

/// Builds a DualPath from a node sequence, picking the lowest-id edge between
/// consecutive nodes; throws std::invalid_argument if two nodes are not adjacent.
DualPath path_from_nodes(const ExtendedDual& ed, std::vector<NodeId> nodes);

}  // namespace geoinsert
