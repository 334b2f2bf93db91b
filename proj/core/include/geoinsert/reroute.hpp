#pragma once

#include <optional>
#include <vector>

#include "geoinsert/extended_dual.hpp"

namespace geoinsert {

struct Degree3Report {
  int paths_checked = 0;
  std::optional<DualPath> counterexample;

  bool all_consistent() const { return !counterexample.has_value(); }
};

/// Every shortest st-path is consistent when the maximum degree is at most
/// three; this checks up to `cap` of them. Throws PreconditionError if the
/// maximum degree exceeds three.
Degree3Report check_degree3(const ExtendedDual& ed, int cap = 50);

/// Per-iteration record kept by the rerouting loops.
struct RerouteTrace {
  std::vector<int> progress;  // measure after each iteration, strictly monotone
  int loops_erased = 0;       // detours that re-entered a face already on the path
  int iterations() const { return static_cast<int>(progress.size()); }
};

/// Number of trailing crossing edges whose endpoints are not labeled LR.
int good_suffix_length(const ExtendedDual& ed, const DualPath& p);

/// Consistent shortest st-path for maximum degree at most five. Starts from
/// bfs_shortest and repairs the last bad crossing by rerouting around its LR
/// vertex until the path is consistent. Throws PreconditionError when the
/// maximum degree exceeds five.
DualPath reroute_degree5(const ExtendedDual& ed, RerouteTrace* trace = nullptr);

/// Consistent st-path of length at most max(1, Delta - 2) * dist(s, t).
/// Repeatedly detours the shortest inconsistent prefix around its LR vertex.
/// A detour that re-enters a face (possible at cut vertices) has the loop
/// removed; this keeps a subset of the crossings and is counted in the trace.
DualPath approx_delta(const ExtendedDual& ed, RerouteTrace* trace = nullptr);

}  // namespace geoinsert
