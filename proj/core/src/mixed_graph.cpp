#include "geoinsert/mixed_graph.hpp"

#include <algorithm>
#include <stdexcept>

namespace geoinsert {

std::string_view to_string(MixedVertexKind k) {
  switch (k) {
    case MixedVertexKind::Original: return "original";
    case MixedVertexKind::Subdivision: return "subdivision";
    case MixedVertexKind::SplitCopy: return "split_copy";
    case MixedVertexKind::Barrier: return "barrier";
    case MixedVertexKind::Avoidable: return "avoidable";
  }
  return "unknown";
}

int MixedGraph::vertex_count() const {
  return static_cast<int>(std::count_if(vertices_.begin(), vertices_.end(), [](const MixedVertex& v) { return v.alive; }));
}

int MixedGraph::edge_count() const {
  return static_cast<int>(std::count_if(edges_.begin(), edges_.end(), [](const MixedEdge& e) { return e.alive; }));
}

int MixedGraph::in_degree(int v) const {
  return static_cast<int>(std::count_if(rot_[v].begin(), rot_[v].end(), [](int h) { return (h & 1) == 1; }));
}

int MixedGraph::out_degree(int v) const {
  return static_cast<int>(std::count_if(rot_[v].begin(), rot_[v].end(), [](int h) { return (h & 1) == 0; }));
}

int MixedGraph::add_vertex(MixedVertexKind kind, NodeId origin) {
  vertices_.push_back({kind, origin, true});
  rot_.emplace_back();
  return static_cast<int>(vertices_.size()) - 1;
}

int MixedGraph::add_edge(int tail, int head, const MixedEdge& flags) {
  MixedEdge e = flags;
  e.tail = tail;
  e.head = head;
  e.alive = true;
  edges_.push_back(std::move(e));
  return static_cast<int>(edges_.size()) - 1;
}

void MixedGraph::place(int h, int pos) {
  auto& ring = rot_[at(h)];
  if (pos < 0 || pos > static_cast<int>(ring.size())) throw std::out_of_range("rotation position");
  ring.insert(ring.begin() + pos, h);
}

int MixedGraph::position(int h) const {
  const auto& ring = rot_[at(h)];
  const auto it = std::find(ring.begin(), ring.end(), h);
  return it == ring.end() ? -1 : static_cast<int>(it - ring.begin());
}

void MixedGraph::remove_edge(int e) {
  if (!edges_[e].alive) return;
  for (int h : {2 * e, 2 * e + 1}) {
    auto& ring = rot_[at(h)];
    ring.erase(std::remove(ring.begin(), ring.end(), h), ring.end());
  }
  edges_[e].alive = false;
}

void MixedGraph::remove_vertex(int v) {
  while (!rot_[v].empty()) remove_edge(edge_of(rot_[v].front()));
  vertices_[v].alive = false;
}

int MixedGraph::contract(int e, bool keep_head) {
  const int hk = keep_head ? 2 * e + 1 : 2 * e;
  const int hg = hk ^ 1;
  const int keep = at(hk), gone = at(hg);
  if (keep == gone) throw std::invalid_argument("cannot contract a loop");

  const auto& gring = rot_[gone];
  const int j = position(hg);
  std::vector<int> moved;
  for (size_t k = 1; k < gring.size(); ++k) moved.push_back(gring[(j + k) % gring.size()]);
  for (int h : moved) (h & 1 ? edges_[h >> 1].head : edges_[h >> 1].tail) = keep;

  auto& kring = rot_[keep];
  const int i = position(hk);
  kring.erase(kring.begin() + i);
  kring.insert(kring.begin() + i, moved.begin(), moved.end());
  rot_[gone].clear();
  vertices_[gone].alive = false;
  edges_[e].alive = false;
  return keep;
}

int MixedGraph::split_edge(int e, MixedVertexKind kind) {
  const int a = edges_[e].tail, b = edges_[e].head;
  const auto provenance = edges_[e].provenance;
  const int c = add_vertex(kind);
  MixedEdge flags;
  flags.provenance = provenance;
  const int fa = add_edge(c, a, flags);
  const int fb = add_edge(c, b, flags);
  // take over e's slots at a and b
  auto& ra = rot_[a];
  *std::find(ra.begin(), ra.end(), 2 * e) = 2 * fa + 1;
  auto& rb = rot_[b];
  *std::find(rb.begin(), rb.end(), 2 * e + 1) = 2 * fb + 1;
  rot_[c] = {2 * fa, 2 * fb};
  edges_[e].alive = false;
  return c;
}

}  // namespace geoinsert
