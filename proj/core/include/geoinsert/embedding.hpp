#pragma once

#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace geoinsert {

using VertexId = int;
using EdgeId = int;
using DartId = int;
using FaceId = int;

/// Malformed input that cannot even be turned into a rotation system.
class StructuralError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Input parsed fine but violates an embedding invariant.
class InvalidEmbedding : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An algorithm was called outside of its documented domain.
class PreconditionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A proven invariant did not hold; always a bug.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

struct Face {
  FaceId id = 0;
  std::vector<DartId> boundary;  // face lies to the left of every dart
};

/// Connected plane graph given by a rotation system.
///
/// rotation(v) lists the neighbours of v in counterclockwise order. Darts
/// are numbered consecutively per vertex, so dart (v, i) is the i-th entry of
/// rotation(v). Faces are traced with the face on the left of each dart:
/// the successor of u->v is v->w where w precedes u in the rotation at v.
class EmbeddedGraph {
 public:
  EmbeddedGraph() = default;

  /// Builds the dart structure without checking planarity or connectivity.
  /// Throws StructuralError for out-of-range neighbours or for a neighbour
  /// relation that is not symmetric.
  static EmbeddedGraph from_rotations(std::vector<std::vector<VertexId>> rotations);

  /// from_rotations followed by validate_embedding; throws InvalidEmbedding
  /// when any invariant fails.
  static EmbeddedGraph checked(std::vector<std::vector<VertexId>> rotations);

  int vertex_count() const { return static_cast<int>(rotations_.size()); }
  int edge_count() const { return static_cast<int>(edge_dart_.size()); }
  int dart_count() const { return static_cast<int>(tail_.size()); }
  int face_count() const { return static_cast<int>(faces_.size()); }

  std::span<const VertexId> rotation(VertexId v) const { return rotations_[v]; }
  const std::vector<std::vector<VertexId>>& rotations() const { return rotations_; }
  int degree(VertexId v) const { return static_cast<int>(rotations_[v].size()); }
  int max_degree() const;

  DartId dart(VertexId v, int index) const { return offset_[v] + index; }
  /// Position of d in the rotation of its tail.
  int position(DartId d) const { return d - offset_[tail_[d]]; }
  VertexId tail(DartId d) const { return tail_[d]; }
  VertexId head(DartId d) const { return tail_[twin_[d]]; }
  DartId twin(DartId d) const { return twin_[d]; }
  EdgeId edge_of(DartId d) const { return edge_of_[d]; }
  /// Canonical dart of an edge, the one with the smaller tail id.
  DartId edge_dart(EdgeId e) const { return edge_dart_[e]; }

  DartId next_ccw(DartId d) const;
  DartId prev_ccw(DartId d) const;
  /// Next dart along the boundary of the face left of d.
  DartId face_successor(DartId d) const;
  FaceId left_face(DartId d) const { return left_face_[d]; }
  FaceId right_face(DartId d) const { return left_face_[twin_[d]]; }
  const std::vector<Face>& faces() const { return faces_; }

  std::optional<DartId> find_dart(VertexId u, VertexId v) const;
  bool adjacent(VertexId u, VertexId v) const { return find_dart(u, v).has_value(); }

 private:
  std::vector<std::vector<VertexId>> rotations_;
  std::vector<int> offset_;
  std::vector<VertexId> tail_;
  std::vector<DartId> twin_;
  std::vector<EdgeId> edge_of_;
  std::vector<DartId> edge_dart_;
  std::vector<FaceId> left_face_;
  std::vector<Face> faces_;
};

struct ValidationReport {
  bool connected = false;
  bool simple = false;
  bool euler = false;
  int vertices = 0;
  int edges = 0;
  int faces = 0;
  std::vector<std::string> messages;

  bool ok() const { return connected && simple && euler; }
};

ValidationReport validate_embedding(const EmbeddedGraph& g);

std::vector<Face> extract_faces(const EmbeddedGraph& g);

/// Plain dual: one vertex per face, edge i is the dual of primal edge i and
/// joins the faces left and right of the canonical dart. Bridges give loops.
struct DualGraph {
  int vertex_count = 0;
  struct Edge {
    FaceId a = 0;  // left of edge_dart
    FaceId b = 0;  // right of edge_dart
    EdgeId crossed_primal = 0;
  };
  std::vector<Edge> edges;
};

DualGraph build_dual(const EmbeddedGraph& g);

int max_degree(const EmbeddedGraph& g);

}  // namespace geoinsert
