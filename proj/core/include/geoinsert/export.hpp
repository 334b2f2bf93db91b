#pragma once

#include <string>
#include <vector>

#include "geoinsert/shortest_paths.hpp"
#include "geoinsert/st_friendly.hpp"
#include "geoinsert/testkit.hpp"

namespace geoinsert {

/// Undirected DOT graph of G*_st. Face nodes are f<i>, terminals s and t;
/// crossing edges carry the primal edge, attachment edges are dashed.
std::string dual_to_dot(const ExtendedDual& ed);

/// Directed DOT graph of G_sp with BFS layers as ranks.
std::string gsp_to_dot(const ExtendedDual& ed, const ShortestPathDag& dag);

/// DOT graph of a mixed graph: directed-part edges solid with arrows,
/// exterior edges grey, barriers red, forbidden edges dotted.
std::string mixed_to_dot(const StFriendlyGraph& sf);

/// The mixed graph as a plain instance (directions and flags dropped, alive
/// vertices renumbered). id_of maps mixed-graph vertices to instance ids.
struct Snapshot {
  Instance instance;
  std::vector<int> id_of;
};

Snapshot snapshot(const StFriendlyGraph& sf, const std::string& name);

}  // namespace geoinsert
