#include "geoinsert/fpt.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <limits>
#include <mutex>
#include <queue>
#include <thread>

#include "geoinsert/shortest_paths.hpp"

namespace geoinsert {

namespace {

std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

bool crossing_allowed(const ExtendedDual& ed, const Labeling& l, DualEdgeId e, NodeId from) {
  const DartId d = ed.crossed_dart(e, from);
  const EmbeddedGraph& g = ed.primal();
  return l[g.head(d)] == Side::L && l[g.tail(d)] == Side::R;
}

// BFS over the labeled directed dual; reuses buffers across iterations.
class DirectedBfs {
 public:
  explicit DirectedBfs(const ExtendedDual& ed)
      : ed_(ed), parent_edge_(ed.node_count()), parent_(ed.node_count()), seen_(ed.node_count()) {}

  std::optional<DualPath> run(const Labeling& l) {
    std::fill(seen_.begin(), seen_.end(), 0);
    std::queue<NodeId> queue;
    queue.push(ed_.s_node());
    seen_[ed_.s_node()] = 1;
    while (!queue.empty()) {
      const NodeId u = queue.front();
      queue.pop();
      if (u == ed_.t_node()) break;
      for (const Incidence& inc : ed_.incident(u)) {
        if (seen_[inc.other]) continue;
        if (!ed_.edge(inc.edge).is_attachment() && !crossing_allowed(ed_, l, inc.edge, u)) continue;
        seen_[inc.other] = 1;
        parent_[inc.other] = u;
        parent_edge_[inc.other] = inc.edge;
        queue.push(inc.other);
      }
    }
    if (!seen_[ed_.t_node()]) return std::nullopt;
    DualPath p;
    for (NodeId v = ed_.t_node(); v != ed_.s_node(); v = parent_[v]) {
      p.nodes.push_back(v);
      p.edges.push_back(parent_edge_[v]);
    }
    p.nodes.push_back(ed_.s_node());
    std::reverse(p.nodes.begin(), p.nodes.end());
    std::reverse(p.edges.begin(), p.edges.end());
    return p;
  }

 private:
  const ExtendedDual& ed_;
  std::vector<DualEdgeId> parent_edge_;
  std::vector<NodeId> parent_;
  std::vector<char> seen_;
};

}  // namespace

LabeledDirectedDual::LabeledDirectedDual(const ExtendedDual& ed, Labeling labeling)
    : ed_(&ed), labeling_(std::move(labeling)), out_(ed.node_count()) {
  for (NodeId u = 0; u < ed.node_count(); ++u) {
    for (const Incidence& inc : ed.incident(u)) {
      if (allows(inc.edge, u)) out_[u].push_back(inc);
    }
  }
  for (DualEdgeId e = 0; e < ed.crossing_edge_count(); ++e) {
    const DualEdge& de = ed.edge(e);
    if (allows(e, de.a) || allows(e, de.b)) ++surviving_;
  }
}

bool LabeledDirectedDual::allows(DualEdgeId e, NodeId from) const {
  if (ed_->edge(e).is_attachment()) return true;
  return crossing_allowed(*ed_, labeling_, e, from);
}

std::optional<DualPath> LabeledDirectedDual::shortest_path() const {
  DirectedBfs bfs(*ed_);
  return bfs.run(labeling_);
}

LabeledDirectedDual directed_subgraph(const ExtendedDual& ed, const Labeling& l) {
  return LabeledDirectedDual(ed, l);
}

int fpt_batch_count(double delta) { return std::max(1, static_cast<int>(std::ceil(std::log2(1.0 / delta)))); }

long long fpt_iterations_per_batch(int k) {
  if (k >= 31) return std::numeric_limits<long long>::max();
  return 1LL << (2 * k);
}

Labeling fpt_labeling(int vertex_count, std::uint64_t seed, int batch, long long iteration) {
  std::uint64_t state = seed;
  state = splitmix64(state) ^ (static_cast<std::uint64_t>(batch) * 0xd1b54a32d192ed03ULL);
  state = splitmix64(state) ^ static_cast<std::uint64_t>(iteration);
  Labeling l(vertex_count);
  std::uint64_t bits = 0;
  for (int v = 0; v < vertex_count; ++v) {
    if (v % 64 == 0) bits = splitmix64(state);
    l[v] = (bits >> (v % 64)) & 1 ? Side::L : Side::R;
  }
  return l;
}

FptResult fpt_search(const ExtendedDual& ed, const FptOptions& options) {
  if (options.k < 2) throw PreconditionError("fpt_search requires k >= 2");
  if (!(options.delta > 0.0 && options.delta < 1.0)) throw PreconditionError("fpt_search requires 0 < delta < 1");

  const int floor_length = build_gsp(ed).length;
  const int batches = fpt_batch_count(options.delta);
  const long long per_batch = fpt_iterations_per_batch(options.k);
  const int threads = std::max(1, options.threads);
  const int n = ed.primal().vertex_count();

  FptResult result;
  for (int b = 0; b < batches; ++b) {
    // best (length, iteration) in this batch; iterations past an optimal hit are skipped
    std::atomic<long long> first_optimal{per_batch};
    std::mutex merge;
    std::optional<DualPath> batch_best;
    long long batch_best_iter = per_batch;

    auto worker = [&](int id) {
      DirectedBfs bfs(ed);
      std::optional<DualPath> local;
      long long local_iter = per_batch;
      for (long long it = id; it < per_batch; it += threads) {
        if (it > first_optimal.load(std::memory_order_relaxed)) break;
        auto p = bfs.run(fpt_labeling(n, options.seed, b, it));
        if (!p) continue;
        if (!local || p->length() < local->length()) {
          local = std::move(p);
          local_iter = it;
          if (local->length() == floor_length) {
            long long cur = first_optimal.load();
            while (it < cur && !first_optimal.compare_exchange_weak(cur, it)) {
            }
            break;
          }
        }
      }
      std::lock_guard lock(merge);
      if (local && (!batch_best || local->length() < batch_best->length() ||
                    (local->length() == batch_best->length() && local_iter < batch_best_iter))) {
        batch_best = std::move(local);
        batch_best_iter = local_iter;
      }
    };

    if (threads == 1) {
      worker(0);
    } else {
      std::vector<std::jthread> pool;
      for (int id = 0; id < threads; ++id) pool.emplace_back(worker, id);
    }

    FptBatch record;
    const bool hit = batch_best && batch_best->length() == floor_length;
    record.iterations = hit ? batch_best_iter + 1 : per_batch;
    if (batch_best) record.best_length = batch_best->length();
    result.iterations += record.iterations;
    result.batches.push_back(record);
    if (batch_best && (!result.path || batch_best->length() < result.path->length())) {
      result.path = std::move(batch_best);
    }
    if (hit) break;
  }
  return result;
}

}  // namespace geoinsert
