#pragma once

#include <vector>

#include "geoinsert/extended_dual.hpp"
#include "geoinsert/shortest_paths.hpp"

namespace geoinsert {

/// A side of a G_sp edge: index into ShortestPathDag::edges plus direction
/// (forward = from -> to).
struct GspDart {
  int edge = 0;
  bool forward = true;

  bool operator==(const GspDart&) const = default;
};

/// Faces of G_sp, embedded as a subgraph of the extended dual.
struct GspFaces {
  std::vector<std::vector<GspDart>> boundary;  // face on the left of each dart
  std::vector<int> left;                       // per DAG edge: face left of from -> to
  std::vector<int> right;                      // per DAG edge: face right of from -> to

  int face_count() const { return static_cast<int>(boundary.size()); }
};

GspFaces trace_gsp_faces(const ExtendedDual& ed, const ShortestPathDag& dag);

/// Face o of G_sp containing both terminals, with the two boundary paths.
/// `upper` runs along o with o on its left, `lower` with o on its right; both
/// list DAG edge indices from s to t. A bridge of G_sp appears in both.
struct CommonFace {
  bool found = false;
  int face = -1;
  std::vector<int> upper;
  std::vector<int> lower;
};

/// Looks for a face of G_sp whose boundary contains s and t (lowest face id
/// wins). When found, the boundary walk splits into the two st-paths.
CommonFace check_common_face(const ExtendedDual& ed, const ShortestPathDag& dag, const GspFaces& faces);
CommonFace check_common_face(const ExtendedDual& ed, const ShortestPathDag& dag);

}  // namespace geoinsert
