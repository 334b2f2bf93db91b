#include "geoinsert/consistency.hpp"

#include <algorithm>
#include <stdexcept>

namespace geoinsert {

std::string_view to_string(InducedLabel l) {
  switch (l) {
    case InducedLabel::None: return "none";
    case InducedLabel::L: return "L";
    case InducedLabel::R: return "R";
    case InducedLabel::LR: return "LR";
  }
  return "?";
}

bool InducedLabeling::consistent() const { return first_conflict() == -1; }

VertexId InducedLabeling::first_conflict() const {
  const auto it = std::find(labels.begin(), labels.end(), InducedLabel::LR);
  return it == labels.end() ? -1 : static_cast<VertexId>(it - labels.begin());
}

std::pair<VertexId, VertexId> side_of_edge(const ExtendedDual& ed, const DualPath& p, int i) {
  if (i < 0 || i >= p.length()) throw std::invalid_argument("edge index out of range");
  const DualEdgeId e = p.edges[i];
  if (ed.edge(e).is_attachment()) throw std::invalid_argument("attachment edge has no sides");
  const DartId d = ed.crossed_dart(e, p.nodes[i]);
  return {ed.primal().head(d), ed.primal().tail(d)};
}

namespace {

void mark(InducedLabel& label, InducedLabel side) {
  if (label == InducedLabel::None) {
    label = side;
  } else if (label != side) {
    label = InducedLabel::LR;
  }
}

}  // namespace

InducedLabeling induced_labeling_prefix(const ExtendedDual& ed, const DualPath& p, int edge_count) {
  InducedLabeling out;
  out.labels.assign(ed.primal().vertex_count(), InducedLabel::None);
  const int limit = std::min(edge_count, p.length());
  for (int i = 0; i < limit; ++i) {
    if (ed.edge(p.edges[i]).is_attachment()) continue;
    const auto [left, right] = side_of_edge(ed, p, i);
    mark(out.labels[left], InducedLabel::L);
    mark(out.labels[right], InducedLabel::R);
  }
  return out;
}

InducedLabeling induced_labeling(const ExtendedDual& ed, const DualPath& p) {
  return induced_labeling_prefix(ed, p, p.length());
}

bool is_consistent(const ExtendedDual& ed, const DualPath& p) { return induced_labeling(ed, p).consistent(); }

bool is_compatible(const ExtendedDual& ed, const Labeling& l, const DualPath& p) {
  for (int i = 0; i < p.length(); ++i) {
    if (ed.edge(p.edges[i]).is_attachment()) continue;
    const auto [left, right] = side_of_edge(ed, p, i);
    if (l[left] != Side::L || l[right] != Side::R) return false;
  }
  return true;
}

Labeling complete_labeling(const InducedLabeling& induced) {
  Labeling l(induced.labels.size(), Side::L);
  for (size_t v = 0; v < induced.labels.size(); ++v) {
    if (induced.labels[v] == InducedLabel::LR) throw std::invalid_argument("labeling has a conflict");
    if (induced.labels[v] == InducedLabel::R) l[v] = Side::R;
  }
  return l;
}

bool alternates(int n, int p0, int p1, int q0, int q1) {
  auto strictly_between = [n](int from, int to, int x) {
    const int span = (to - from + n) % n;
    const int off = (x - from + n) % n;
    return off > 0 && off < span;
  };
  return strictly_between(p0, p1, q0) != strictly_between(p0, p1, q1);
}

namespace {

int slot_of(const ExtendedDual& ed, NodeId v, DualEdgeId e) {
  const auto order = ed.cyclic_order(v);
  const auto it = std::find(order.begin(), order.end(), e);
  return static_cast<int>(it - order.begin());
}

}  // namespace

bool non_crossing(const ExtendedDual& ed, const DualPath& p, const DualPath& q) {
  std::vector<int> q_index(ed.node_count(), -1);
  for (size_t j = 0; j < q.nodes.size(); ++j) q_index[q.nodes[j]] = static_cast<int>(j);
  for (size_t i = 1; i + 1 < p.nodes.size(); ++i) {
    const NodeId v = p.nodes[i];
    const int j = q_index[v];
    if (j <= 0 || j + 1 >= static_cast<int>(q.nodes.size())) continue;
    const DualEdgeId a = p.edges[i - 1], b = p.edges[i];
    const DualEdgeId c = q.edges[j - 1], d = q.edges[j];
    if (a == c || a == d || b == c || b == d) continue;
    const int n = static_cast<int>(ed.cyclic_order(v).size());
    if (alternates(n, slot_of(ed, v, a), slot_of(ed, v, b), slot_of(ed, v, c), slot_of(ed, v, d))) {
      return false;
    }
  }
  return true;
}

}  // namespace geoinsert
