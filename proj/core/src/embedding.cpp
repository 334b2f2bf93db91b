#include "geoinsert/embedding.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <queue>
#include <set>
#include <utility>

namespace geoinsert {

EmbeddedGraph EmbeddedGraph::from_rotations(std::vector<std::vector<VertexId>> rotations) {
  EmbeddedGraph g;
  g.rotations_ = std::move(rotations);
  const int n = g.vertex_count();
  g.offset_.assign(n + 1, 0);
  for (int v = 0; v < n; ++v) g.offset_[v + 1] = g.offset_[v] + static_cast<int>(g.rotations_[v].size());
  const int darts = g.offset_[n];
  g.tail_.resize(darts);
  g.twin_.assign(darts, -1);

  // occurrences[(u, v)] = darts u->v in rotation order
  std::map<std::pair<VertexId, VertexId>, std::vector<DartId>> occurrences;
  for (int v = 0; v < n; ++v) {
    for (int i = 0; i < static_cast<int>(g.rotations_[v].size()); ++i) {
      const VertexId w = g.rotations_[v][i];
      const DartId d = g.offset_[v] + i;
      if (w < 0 || w >= n) {
        throw StructuralError("dangling dart " + std::to_string(v) + "->" + std::to_string(w) +
                              ": neighbour out of range");
      }
      g.tail_[d] = v;
      occurrences[{v, w}].push_back(d);
    }
  }
  for (const auto& [key, out] : occurrences) {
    const auto [u, v] = key;
    if (u == v) {
      // loops: pair nested occurrences from the outside in
      if (out.size() % 2 != 0) {
        throw StructuralError("dangling dart " + std::to_string(u) + "->" + std::to_string(v) +
                              ": unpaired loop end");
      }
      for (size_t k = 0; k < out.size() / 2; ++k) {
        g.twin_[out[k]] = out[out.size() - 1 - k];
        g.twin_[out[out.size() - 1 - k]] = out[k];
      }
      continue;
    }
    const auto back = occurrences.find({v, u});
    if (back == occurrences.end() || back->second.size() != out.size()) {
      throw StructuralError("dangling dart " + std::to_string(u) + "->" + std::to_string(v) +
                            ": no matching entry in the rotation of " + std::to_string(v));
    }
    // parallel copies appear in opposite cyclic order at the two ends
    for (size_t k = 0; k < out.size(); ++k) g.twin_[out[k]] = back->second[out.size() - 1 - k];
  }

  g.edge_of_.assign(darts, -1);
  for (DartId d = 0; d < darts; ++d) {
    if (d < g.twin_[d]) {
      g.edge_of_[d] = g.edge_of_[g.twin_[d]] = static_cast<EdgeId>(g.edge_dart_.size());
      g.edge_dart_.push_back(d);
    }
  }

  g.left_face_.assign(darts, -1);
  for (DartId d = 0; d < darts; ++d) {
    if (g.left_face_[d] != -1) continue;
    Face f;
    f.id = static_cast<FaceId>(g.faces_.size());
    DartId cur = d;
    do {
      g.left_face_[cur] = f.id;
      f.boundary.push_back(cur);
      cur = g.face_successor(cur);
    } while (cur != d);
    g.faces_.push_back(std::move(f));
  }
  return g;
}

EmbeddedGraph EmbeddedGraph::checked(std::vector<std::vector<VertexId>> rotations) {
  EmbeddedGraph g = from_rotations(std::move(rotations));
  const ValidationReport report = validate_embedding(g);
  if (!report.ok()) {
    std::string msg = "invalid embedding";
    for (const auto& m : report.messages) msg += "; " + m;
    throw InvalidEmbedding(msg);
  }
  return g;
}

int EmbeddedGraph::max_degree() const {
  int best = 0;
  for (const auto& r : rotations_) best = std::max(best, static_cast<int>(r.size()));
  return best;
}

DartId EmbeddedGraph::next_ccw(DartId d) const {
  const VertexId v = tail_[d];
  const int deg = degree(v);
  return offset_[v] + (position(d) + 1) % deg;
}

DartId EmbeddedGraph::prev_ccw(DartId d) const {
  const VertexId v = tail_[d];
  const int deg = degree(v);
  return offset_[v] + (position(d) + deg - 1) % deg;
}

DartId EmbeddedGraph::face_successor(DartId d) const { return prev_ccw(twin_[d]); }

std::optional<DartId> EmbeddedGraph::find_dart(VertexId u, VertexId v) const {
  const auto& rot = rotations_[u];
  const auto it = std::find(rot.begin(), rot.end(), v);
  if (it == rot.end()) return std::nullopt;
  return offset_[u] + static_cast<int>(it - rot.begin());
}

ValidationReport validate_embedding(const EmbeddedGraph& g) {
  ValidationReport r;
  r.vertices = g.vertex_count();
  r.edges = g.edge_count();
  r.faces = g.face_count();

  r.simple = true;
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    std::set<VertexId> seen;
    for (VertexId w : g.rotation(v)) {
      if (w == v) {
        r.simple = false;
        r.messages.push_back("loop at vertex " + std::to_string(v));
      } else if (!seen.insert(w).second) {
        r.simple = false;
        r.messages.push_back("multi-edge " + std::to_string(v) + "-" + std::to_string(w));
      }
    }
  }

  if (g.vertex_count() == 0) {
    r.messages.push_back("empty graph");
    return r;
  }
  std::vector<char> seen(g.vertex_count(), 0);
  std::queue<VertexId> queue;
  queue.push(0);
  seen[0] = 1;
  int reached = 1;
  while (!queue.empty()) {
    const VertexId v = queue.front();
    queue.pop();
    for (VertexId w : g.rotation(v)) {
      if (!seen[w]) {
        seen[w] = 1;
        ++reached;
        queue.push(w);
      }
    }
  }
  r.connected = reached == g.vertex_count();
  if (!r.connected) {
    r.messages.push_back("disconnected: reached " + std::to_string(reached) + " of " +
                         std::to_string(g.vertex_count()) + " vertices");
  }

  r.euler = r.vertices - r.edges + r.faces == 2;
  if (!r.euler) {
    r.messages.push_back("Euler check failed: V - E + F = " +
                         std::to_string(r.vertices - r.edges + r.faces));
  }
  return r;
}

std::vector<Face> extract_faces(const EmbeddedGraph& g) { return g.faces(); }

DualGraph build_dual(const EmbeddedGraph& g) {
  DualGraph dual;
  dual.vertex_count = g.face_count();
  dual.edges.reserve(g.edge_count());
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    const DartId d = g.edge_dart(e);
    dual.edges.push_back({g.left_face(d), g.right_face(d), e});
  }
  return dual;
}

int max_degree(const EmbeddedGraph& g) { return g.max_degree(); }

}  // namespace geoinsert
