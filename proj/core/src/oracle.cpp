#include <algorithm>

#include "geoinsert/consistency.hpp"
#include "geoinsert/shortest_paths.hpp"
#include "geoinsert/testkit.hpp"

namespace geoinsert::testkit {

namespace {

// Depth-first search over simple st-paths with a length budget. Subclasses
// decide whether an extension is admissible.
class PathSearch {
 public:
  PathSearch(const ExtendedDual& ed, int budget)
      : ed_(ed),
        budget_(budget),
        dist_to_t_(bfs_distances(ed, ed.t_node(), ed.s_node())),
        visited_(ed.node_count(), 0) {}
  virtual ~PathSearch() = default;

  bool run() {
    path_.nodes.assign(1, ed_.s_node());
    path_.edges.clear();
    visited_[ed_.s_node()] = 1;
    const bool found = dfs(ed_.s_node());
    visited_[ed_.s_node()] = 0;
    return found;
  }

 protected:
  virtual bool enter(DualEdgeId e, NodeId from, NodeId to) = 0;
  virtual void leave(DualEdgeId e, NodeId from, NodeId to) = 0;
  // Called on reaching t; returning true stops the search.
  virtual bool complete(const DualPath& p) = 0;

  const ExtendedDual& ed_;
  DualPath path_;

 private:
  bool dfs(NodeId u) {
    if (u == ed_.t_node()) return complete(path_);
    const int used = path_.length();
    for (const Incidence& inc : ed_.incident(u)) {
      const NodeId w = inc.other;
      if (visited_[w] || dist_to_t_[w] == kUnreachable) continue;
      if (used + 1 + dist_to_t_[w] > budget_) continue;
      if (!enter(inc.edge, u, w)) continue;
      visited_[w] = 1;
      path_.nodes.push_back(w);
      path_.edges.push_back(inc.edge);
      const bool stop = dfs(w);
      path_.nodes.pop_back();
      path_.edges.pop_back();
      visited_[w] = 0;
      leave(inc.edge, u, w);
      if (stop) return true;
    }
    return false;
  }

  int budget_;
  std::vector<int> dist_to_t_;
  std::vector<char> visited_;
};

class ConsistentSearch final : public PathSearch {
 public:
  ConsistentSearch(const ExtendedDual& ed, int budget)
      : PathSearch(ed, budget), left_(ed.primal().vertex_count(), 0), right_(ed.primal().vertex_count(), 0) {}

  std::optional<DualPath> found;

 protected:
  bool enter(DualEdgeId e, NodeId from, NodeId) override {
    if (ed_.edge(e).is_attachment()) return true;
    const DartId d = ed_.crossed_dart(e, from);
    const VertexId l = ed_.primal().head(d), r = ed_.primal().tail(d);
    if (right_[l] > 0 || left_[r] > 0) return false;  // would create LR
    ++left_[l];
    ++right_[r];
    return true;
  }
  void leave(DualEdgeId e, NodeId from, NodeId) override {
    if (ed_.edge(e).is_attachment()) return;
    const DartId d = ed_.crossed_dart(e, from);
    --left_[ed_.primal().head(d)];
    --right_[ed_.primal().tail(d)];
  }
  bool complete(const DualPath& p) override {
    found = p;
    return true;
  }

 private:
  std::vector<int> left_, right_;
};

class EnumerateSearch final : public PathSearch {
 public:
  EnumerateSearch(const ExtendedDual& ed, int budget, const std::function<bool(const DualPath&)>& visit)
      : PathSearch(ed, budget), visit_(visit) {}

 protected:
  bool enter(DualEdgeId, NodeId, NodeId) override { return true; }
  void leave(DualEdgeId, NodeId, NodeId) override {}
  bool complete(const DualPath& p) override { return !visit_(p); }

 private:
  const std::function<bool(const DualPath&)>& visit_;
};

}  // namespace

int default_oracle_bound(const ExtendedDual& ed) { return 3 * build_gsp(ed).length + 6; }

OracleResult oracle_shortest_consistent(const ExtendedDual& ed, int bound) {
  OracleResult result;
  result.search_bound = bound;
  const int dist = build_gsp(ed).length;
  for (int budget = std::max(2, dist); budget <= bound; ++budget) {
    ConsistentSearch search(ed, budget);
    if (search.run()) {
      result.optimum_length = search.found->length();
      result.witness = std::move(search.found);
      return result;
    }
  }
  return result;
}

OracleResult oracle_shortest_consistent(const ExtendedDual& ed) {
  return oracle_shortest_consistent(ed, default_oracle_bound(ed));
}

void for_each_simple_path(const ExtendedDual& ed, int max_length,
                          const std::function<bool(const DualPath&)>& visit) {
  EnumerateSearch search(ed, max_length, visit);
  search.run();
}

std::optional<DualPath> oracle_lemma1_witness(const ExtendedDual& ed, const DualPath& p) {
  // At a face p passes through, p's two edges split the cyclic order into two
  // arcs; q must enter and leave inside one arc. A state is (node, arc), with
  // arc 2 ("free") right after q entered along an attachment p also uses.
  constexpr int kFree = 2;
  const int nodes = ed.node_count();
  std::vector<int> p_index(nodes, -1);
  for (size_t i = 1; i + 1 < p.nodes.size(); ++i) p_index[p.nodes[i]] = static_cast<int>(i);
  std::vector<char> p_edge(ed.edge_count(), 0);
  for (DualEdgeId e : p.edges) p_edge[e] = 1;

  auto slot = [&](NodeId v, DualEdgeId e) {
    const auto order = ed.cyclic_order(v);
    return static_cast<int>(std::find(order.begin(), order.end(), e) - order.begin());
  };
  // arc of cyclic slot k at a node of p
  auto arc_of_slot = [&](NodeId v, int k) {
    const int i = p_index[v];
    const int n = static_cast<int>(ed.cyclic_order(v).size());
    const int a = slot(v, p.edges[i - 1]), b = slot(v, p.edges[i]);
    return (k - a + n) % n < (b - a + n) % n ? 0 : 1;
  };
  // arc of edge e at node v, kFree for p's own edges and nodes off p
  auto arc = [&](NodeId v, DualEdgeId e) {
    if (p_index[v] < 0 || p_edge[e]) return kFree;
    return arc_of_slot(v, slot(v, e));
  };

  const int start = 3 * ed.s_node() + kFree;
  std::vector<int> parent(3 * nodes, -2), via(3 * nodes, -1);
  std::vector<int> queue{start};
  parent[start] = -1;
  for (size_t head = 0; head < queue.size(); ++head) {
    const int state = queue[head];
    const NodeId u = state / 3;
    const int side = state % 3;
    if (u == ed.t_node()) {
      DualPath q;
      for (int x = state; x != -1; x = parent[x]) {
        q.nodes.push_back(x / 3);
        if (via[x] >= 0) q.edges.push_back(via[x]);
      }
      std::reverse(q.nodes.begin(), q.nodes.end());
      std::reverse(q.edges.begin(), q.edges.end());
      return q;
    }
    for (const Incidence& inc : ed.incident(u)) {
      const DualEdgeId e = inc.edge;
      const NodeId w = inc.other;
      if (w == ed.s_node()) continue;
      if (w == u) {
        // crossing a bridge: leave through one side of the loop, come back
        // through the other, possibly on the other side of p
        if (p_index[u] < 0) continue;
        const auto order = ed.cyclic_order(u);
        std::vector<int> slots;
        for (int k = 0; k < static_cast<int>(order.size()); ++k) {
          if (order[k] == e) slots.push_back(k);
        }
        for (int j = 0; j < 2; ++j) {
          const int from = arc_of_slot(u, slots[j]), to = arc_of_slot(u, slots[1 - j]);
          if (side != kFree && from != side) continue;
          const int next = 3 * u + to;
          if (parent[next] != -2) continue;
          parent[next] = state;
          via[next] = e;
          queue.push_back(next);
        }
        continue;
      }
      if (p_edge[e] && !ed.edge(e).is_attachment()) continue;
      const int out = arc(u, e);
      if (side != kFree && out != kFree && out != side) continue;
      const int next = 3 * w + (w == ed.t_node() ? kFree : arc(w, e));
      if (parent[next] != -2) continue;
      parent[next] = state;
      via[next] = e;
      queue.push_back(next);
    }
  }
  return std::nullopt;
}

}  // namespace geoinsert::testkit
