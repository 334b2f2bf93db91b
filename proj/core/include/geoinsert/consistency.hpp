#pragma once

#include <cstdint>
#include <string_view>
#include <utility>
#include <vector>

#include "geoinsert/extended_dual.hpp"

namespace geoinsert {

enum class Side : std::uint8_t { L, R };

/// Total labeling V(G) -> {L, R}.
using Labeling = std::vector<Side>;

enum class InducedLabel : std::uint8_t { None, L, R, LR };

std::string_view to_string(InducedLabel l);

struct InducedLabeling {
  std::vector<InducedLabel> labels;

  bool consistent() const;
  /// First vertex labeled LR, or -1.
  VertexId first_conflict() const;
};

/// (left endpoint, right endpoint) of the primal edge crossed by edge i of p.
/// Throws std::invalid_argument for attachment edges.
std::pair<VertexId, VertexId> side_of_edge(const ExtendedDual& ed, const DualPath& p, int i);

InducedLabeling induced_labeling(const ExtendedDual& ed, const DualPath& p);

/// Labeling induced by the first `edge_count` edges of p only.
InducedLabeling induced_labeling_prefix(const ExtendedDual& ed, const DualPath& p, int edge_count);

bool is_consistent(const ExtendedDual& ed, const DualPath& p);

bool is_compatible(const ExtendedDual& ed, const Labeling& l, const DualPath& p);

/// Completes an induced labeling to a total one (None -> L). Requires the
/// induced labeling to be consistent.
Labeling complete_labeling(const InducedLabeling& induced);

/// True iff at every shared node the edges of p and q do not alternate in the
/// cyclic order. An edge used by both paths is treated as two parallel copies
/// that can always be drawn side by side, so such a node never alternates.
bool non_crossing(const ExtendedDual& ed, const DualPath& p, const DualPath& q);

/// Alternation test for two pairs of slots in a cyclic sequence of length n.
bool alternates(int n, int p0, int p1, int q0, int q1);

}  // namespace geoinsert
