#pragma once

#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "geoinsert/extended_dual.hpp"
#include "geoinsert/mixed_graph.hpp"
#include "geoinsert/shortest_paths.hpp"

namespace geoinsert {

/// Mixed graph whose directed st-paths are the shortest paths of the
/// extended dual. Edges off G_sp are subdivided by a vertex with two outgoing
/// edges, so only the undirected path can use them.
struct StFriendlyGraph {
  MixedGraph graph;
  int s = -1;
  int t = -1;
  std::vector<int> o_hint;  // half-edges of the last located face o
};

StFriendlyGraph build_st_friendly(const ExtendedDual& ed, const ShortestPathDag& dag);

/// The face o of the directed part that holds s and t, with its two boundary
/// paths. Positions index the vertices along each path (-1: not on it).
struct Boundary {
  bool found = false;
  int o = -1;
  std::vector<std::vector<int>> faces;  // half-edge walks of the directed part
  std::vector<int> dart_face;           // per half-edge of a directed edge
  std::vector<int> upper;               // edges s -> t with o on their left
  std::vector<int> lower;               // edges s -> t with o on their right
  std::vector<int> upper_pos;
  std::vector<int> lower_pos;

  bool on_o(int v) const { return upper_pos[v] >= 0 || lower_pos[v] >= 0; }
};

Boundary locate_boundary(const StFriendlyGraph& sf);

enum class Pass {
  ContractInterior,
  PurgeSeparating,
  Circumventable,
  Avoidable,
  SmoothTrim,
  SplitCut,
  Barriers,
  ExteriorContract,
  ExteriorChords,
};

inline constexpr Pass kAllPasses[] = {Pass::ContractInterior, Pass::PurgeSeparating, Pass::Circumventable,
                                      Pass::Avoidable,        Pass::SmoothTrim,      Pass::SplitCut,
                                      Pass::Barriers,         Pass::ExteriorContract, Pass::ExteriorChords};

std::string_view to_string(Pass p);

/// Applies one pass until it has nothing left to do; returns the number of
/// elementary changes made.
int apply_pass(StFriendlyGraph& sf, Pass pass);

struct PassRecord {
  int round = 0;
  Pass pass = Pass::ContractInterior;
  int changes = 0;
};

struct Normalization {
  StFriendlyGraph graph;
  std::vector<PassRecord> log;
  int rounds = 0;
};

using PassObserver = std::function<void(const PassRecord&, const StFriendlyGraph&)>;

/// Runs the passes in order and repeats the sequence until a full round
/// changes nothing. Requires s and t to share a face of the directed part.
Normalization normalize(StFriendlyGraph sf, const PassObserver& observer = {});

struct Postconditions {
  bool boundary_simple = false;    // o is bounded by a simple cycle
  bool outerplanar = false;        // every directed-part vertex lies on o
  bool weak_dual_path = false;     // inner faces of the directed part form a path
  bool caterpillar = false;        // exterior faces form a caterpillar
  std::string detail;

  bool ok() const { return boundary_simple && outerplanar && weak_dual_path && caterpillar; }
};

Postconditions check_postconditions(const StFriendlyGraph& sf);

/// Brute force: is there a directed st-path p and an undirected st-path that
/// avoids forbidden edges, shares only shareable edges with p and does not
/// cross it? Empty when more than `path_cap` directed paths would be needed.
std::optional<bool> mixed_witness_exists(const StFriendlyGraph& sf, long long path_cap = 20000);

}  // namespace geoinsert
