#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "geoinsert/consistency.hpp"
#include "geoinsert/extended_dual.hpp"

namespace geoinsert {

/// Extended dual restricted to the edges a labeling allows: a crossing edge
/// survives only in the direction that has its L endpoint on the left and its
/// R endpoint on the right. Attachment edges survive in both directions.
class LabeledDirectedDual {
 public:
  LabeledDirectedDual(const ExtendedDual& ed, Labeling labeling);

  const Labeling& labeling() const { return labeling_; }
  /// Outgoing (edge, head) pairs of node v, sorted by head then edge.
  const std::vector<Incidence>& out(NodeId v) const { return out_[v]; }
  bool allows(DualEdgeId e, NodeId from) const;
  int surviving_crossing_edges() const { return surviving_; }

  /// Shortest st-path in the directed graph, lowest ids first.
  std::optional<DualPath> shortest_path() const;

 private:
  const ExtendedDual* ed_;
  Labeling labeling_;
  std::vector<std::vector<Incidence>> out_;
  int surviving_ = 0;
};

LabeledDirectedDual directed_subgraph(const ExtendedDual& ed, const Labeling& l);

struct FptOptions {
  int k = 2;               // target path length (crossings + 2)
  double delta = 0.05;     // failure probability bound
  std::uint64_t seed = 1;
  int threads = 1;         // iterations of one batch may run concurrently
};

struct FptBatch {
  long long iterations = 0;
  std::optional<int> best_length;
};

struct FptResult {
  std::optional<DualPath> path;
  long long iterations = 0;
  std::vector<FptBatch> batches;
};

/// Number of batches ceil(log2(1 / delta)) and iterations per batch 4^k.
int fpt_batch_count(double delta);
long long fpt_iterations_per_batch(int k);

/// Random labeling for (seed, batch, iteration); each triple gets its own
/// stream so results do not depend on scheduling.
Labeling fpt_labeling(int vertex_count, std::uint64_t seed, int batch, long long iteration);

/// Color-coding search. Throws PreconditionError unless k >= 2 and
/// 0 < delta < 1. Returns the shortest path found over all iterations (ties
/// go to the earliest iteration); stops early once a path of length dist(s,t)
/// is seen.
FptResult fpt_search(const ExtendedDual& ed, const FptOptions& options);

}  // namespace geoinsert
