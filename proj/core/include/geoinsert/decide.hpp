#pragma once

#include <optional>
#include <string>
#include <vector>

#include "geoinsert/extended_dual.hpp"
#include "geoinsert/gsp_faces.hpp"
#include "geoinsert/shortest_paths.hpp"
#include "geoinsert/two_sat_solver.hpp"

namespace geoinsert {

enum class ClauseKind { Order, Exclusive };

struct Clause {
  Lit a;
  Lit b;
  ClauseKind kind;
};

/// One variable per face of G_sp other than o: true when the face lies right
/// of (below) the chosen shortest path. Order clauses keep that set closed
/// under "left face implies right face" for every edge of G_sp; exclusive
/// clauses forbid using two edges of o that would put one primal vertex on
/// both sides of the path.
struct TwoSatInstance {
  int variables = 0;
  std::vector<int> face_of_variable;  // G_sp face id per variable
  std::vector<Clause> clauses;
  bool trivially_unsat = false;       // two always-used edges conflict

  int count(ClauseKind kind) const;
};

struct Decision {
  bool yes = false;
  int dist = 0;
  std::optional<DualPath> path;     // consistent shortest st-path
  std::optional<DualPath> partner;  // edge-disjoint, non-crossing st-path
  TwoSatInstance instance;
};

/// Builds the clause set for G_sp with common face `o`.
TwoSatInstance build_two_sat(const ExtendedDual& ed, const ShortestPathDag& dag, const GspFaces& faces,
                             const CommonFace& o);

/// Decides whether G*_st has a consistent shortest st-path when s and t share
/// a face of G_sp; throws PreconditionError otherwise. A yes answer carries a
/// validated witness path and its partner.
Decision decide(const ExtendedDual& ed);

/// Simple st-path that shares no crossing edge with p and does not cross it
/// (attachment edges may be shared). Tries a BFS over (node, arc entered) and
/// falls back to exhaustive search when that walk revisits a node.
std::optional<DualPath> find_partner(const ExtendedDual& ed, const DualPath& p);

}  // namespace geoinsert
