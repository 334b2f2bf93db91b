#pragma once

#include <vector>

#include "geoinsert/st_friendly.hpp"
#include "geoinsert/two_sat_solver.hpp"

namespace geoinsert {

enum class PartnerKind { Interior, Exterior };

/// Boundary edges of one face split by the boundary path they lie on.
/// Variable true means the lambda side is taken: by the directed path for an
/// interior face, by the undirected path for an exterior one.
struct PartnerPair {
  PartnerKind kind = PartnerKind::Interior;
  int face = -1;                 // face id in the traced directed part / exterior graph
  std::vector<int> e_lambda;     // mixed-graph edge ids on the lower path
  std::vector<int> e_mu;         // mixed-graph edge ids on the upper path
};

/// The face left of a chord must take its mu side when the face right of it
/// does not: "premise takes mu" implies "conclusion takes mu".
struct ChordImplication {
  int chord = -1;
  int premise = -1;     // index into PartnerSystem::interior
  int conclusion = -1;  // index into PartnerSystem::interior
};

struct PartnerSystem {
  std::vector<PartnerPair> interior;
  std::vector<PartnerPair> exterior;  // faces on the spine of the exterior caterpillar
  std::vector<ChordImplication> chords;
  std::vector<int> committed;  // exterior edges at s or t, fixed on the undirected path
};

/// Reads the partner pairs off a normalized graph. Throws InternalError when
/// a face misses one of its two sides or the exterior is not a caterpillar.
PartnerSystem extract_partners(const StFriendlyGraph& sf);

struct PartnerClauses {
  int variables = 0;  // interior pairs first, then exterior pairs
  std::vector<std::pair<Lit, Lit>> clauses;
};

PartnerClauses build_partner_clauses(const StFriendlyGraph& sf, const PartnerSystem& system);

/// Satisfiability of the partner clauses.
bool partner_satisfiable(const PartnerClauses& clauses);

struct PartnerDecision {
  bool yes = false;
  Normalization normalization;
  PartnerSystem system;
  PartnerClauses clauses;
};

/// Full pipeline: st-friendly graph, normalization, partner pairs, 2-SAT.
/// Throws PreconditionError when s and t share no face of G_sp.
PartnerDecision decide_via_partners(const ExtendedDual& ed);

}  // namespace geoinsert
