#include "geoinsert/st_friendly.hpp"

#include <algorithm>
#include <climits>
#include <numeric>
#include <queue>

namespace geoinsert {

StFriendlyGraph build_st_friendly(const ExtendedDual& ed, const ShortestPathDag& dag) {
  StFriendlyGraph sf;
  MixedGraph& g = sf.graph;
  for (NodeId v = 0; v < ed.node_count(); ++v) g.add_vertex(MixedVertexKind::Original, v);
  sf.s = ed.s_node();
  sf.t = ed.t_node();

  std::vector<int> dag_index(ed.edge_count(), -1);
  for (size_t k = 0; k < dag.edges.size(); ++k) dag_index[dag.edges[k].edge] = static_cast<int>(k);

  // half-edges standing for each dual edge at its a end and at its b end
  std::vector<int> half_a(ed.edge_count()), half_b(ed.edge_count());
  for (DualEdgeId e = 0; e < ed.edge_count(); ++e) {
    const DualEdge& de = ed.edge(e);
    MixedEdge flags;
    flags.provenance = {e};
    if (dag_index[e] >= 0) {
      const DagEdge& k = dag.edges[dag_index[e]];
      flags.gsp = true;
      flags.shareable = de.is_attachment();
      const int id = g.add_edge(k.from, k.to, flags);
      half_a[e] = de.a == k.from ? 2 * id : 2 * id + 1;
      half_b[e] = half_a[e] ^ 1;
    } else {
      const int x = g.add_vertex(MixedVertexKind::Subdivision);
      const int ea = g.add_edge(x, de.a, flags);
      const int eb = g.add_edge(x, de.b, flags);
      g.set_rotation(x, {2 * ea, 2 * eb});
      half_a[e] = 2 * ea + 1;
      half_b[e] = 2 * eb + 1;
    }
  }

  for (NodeId v = 0; v < ed.node_count(); ++v) {
    std::vector<int> ring;
    std::vector<char> seen_loop(ed.edge_count(), 0);
    for (DualEdgeId e : ed.cyclic_order(v)) {
      const DualEdge& de = ed.edge(e);
      if (de.a == de.b) {
        ring.push_back(seen_loop[e] ? half_b[e] : half_a[e]);
        seen_loop[e] = 1;
      } else {
        ring.push_back(de.a == v ? half_a[e] : half_b[e]);
      }
    }
    g.set_rotation(v, std::move(ring));
  }
  return sf;
}

namespace {

Boundary locate(StFriendlyGraph& sf) {
  Boundary b = locate_boundary(sf);
  if (!b.found) throw InternalError("common face lost during normalization");
  sf.o_hint = b.faces[b.o];
  return b;
}

bool is_gsp_vertex(const MixedGraph& g, int v) {
  const auto& ring = g.rotation(v);
  return std::any_of(ring.begin(), ring.end(), [&](int h) { return g.edge(MixedGraph::edge_of(h)).gsp; });
}

bool gsp_half(const MixedGraph& g, int h) { return g.edge(MixedGraph::edge_of(h)).gsp; }

// half-edges strictly after h at at(h), up to the next directed-part half-edge
std::vector<int> gap_after(const MixedGraph& g, int h) {
  const auto& ring = g.rotation(g.at(h));
  const int n = static_cast<int>(ring.size());
  const int i = g.position(h);
  std::vector<int> out;
  for (int k = 1; k < n; ++k) {
    const int x = ring[(i + k) % n];
    if (gsp_half(g, x)) break;
    out.push_back(x);
  }
  return out;
}

// directed-part half-edge whose gap contains the non-directed half-edge h
int gap_owner(const MixedGraph& g, int h) {
  const auto& ring = g.rotation(g.at(h));
  const int n = static_cast<int>(ring.size());
  const int i = g.position(h);
  for (int k = 1; k < n; ++k) {
    const int x = ring[(i - k + n) % n];
    if (gsp_half(g, x)) return x;
  }
  return -1;
}

// elements of ring strictly after a and strictly before b (empty when a == b)
std::vector<int> strictly_between(const std::vector<int>& ring, int a, int b) {
  std::vector<int> out;
  if (a == b) return out;
  const int n = static_cast<int>(ring.size());
  const int i = static_cast<int>(std::find(ring.begin(), ring.end(), a) - ring.begin());
  for (int k = 1; k < n; ++k) {
    const int x = ring[(i + k) % n];
    if (x == b) break;
    out.push_back(x);
  }
  return out;
}

// vertices strictly on one side of a closed walk of darts
std::vector<char> side_of(const MixedGraph& g, const std::vector<int>& darts, bool left) {
  const int k = static_cast<int>(darts.size());
  std::vector<char> on_cycle(g.vertex_slots(), 0), inside(g.vertex_slots(), 0);
  for (int d : darts) on_cycle[g.at(d)] = 1;
  std::queue<int> queue;
  auto seed = [&](int h) {
    const int w = g.other(h);
    if (on_cycle[w] || inside[w]) return;
    inside[w] = 1;
    queue.push(w);
  };
  for (int i = 0; i < k; ++i) {
    const int leave = darts[i];
    const int arrive = darts[(i + k - 1) % k] ^ 1;
    const auto& ring = g.rotation(g.at(leave));
    for (int h : left ? strictly_between(ring, leave, arrive) : strictly_between(ring, arrive, leave)) seed(h);
  }
  while (!queue.empty()) {
    const int u = queue.front();
    queue.pop();
    for (int h : g.rotation(u)) seed(h);
  }
  return inside;
}

int purge(MixedGraph& g, const std::vector<char>& region) {
  int removed = 0;
  for (int v = 0; v < g.vertex_slots(); ++v) {
    if (region[v] && g.vertex(v).alive) {
      g.remove_vertex(v);
      ++removed;
    }
  }
  return removed;
}

bool any_of_region(const std::vector<char>& region, auto pred) {
  for (size_t v = 0; v < region.size(); ++v) {
    if (region[v] && pred(static_cast<int>(v))) return true;
  }
  return false;
}

// removes loops at v together with whatever they enclose away from s (or t)
int drop_loops(StFriendlyGraph& sf, int v) {
  MixedGraph& g = sf.graph;
  int changes = 0;
  for (;;) {
    const auto& ring = g.rotation(v);
    const auto it = std::find_if(ring.begin(), ring.end(), [&](int h) { return g.other(h) == v; });
    if (it == ring.end()) return changes;
    const int e = MixedGraph::edge_of(*it);
    const int anchor = v == sf.s ? sf.t : sf.s;
    const auto left = side_of(g, {2 * e}, true);
    purge(g, left[anchor] ? side_of(g, {2 * e}, false) : left);
    g.remove_edge(e);
    ++changes;
  }
}

int contract_interior(StFriendlyGraph& sf) {
  MixedGraph& g = sf.graph;
  int changes = 0;
  for (;;) {
    const Boundary b = locate(sf);
    int pick = -1;
    for (int e = 0; e < g.edge_slots() && pick < 0; ++e) {
      const MixedEdge& me = g.edge(e);
      if (me.alive && me.gsp && me.tail != me.head && !b.on_o(me.tail) && !b.on_o(me.head)) pick = e;
    }
    if (pick < 0) return changes;
    const int keep = g.contract(pick);
    drop_loops(sf, keep);
    ++changes;
  }
}

// exterior pieces inside inner faces of the directed part cannot help the
// undirected path, which may be assumed to stay out of those faces
int purge_inner_exterior(StFriendlyGraph& sf, const Boundary& b) {
  MixedGraph& g = sf.graph;
  const int n = g.vertex_slots();
  std::vector<int> comp(n, -1);
  int comps = 0;
  std::vector<char> gsp_vertex(n, 0);
  for (int v = 0; v < n; ++v) gsp_vertex[v] = g.vertex(v).alive && is_gsp_vertex(g, v);
  for (int v = 0; v < n; ++v) {
    if (!g.vertex(v).alive || gsp_vertex[v] || comp[v] >= 0) continue;
    std::vector<int> stack{v};
    comp[v] = comps;
    while (!stack.empty()) {
      const int u = stack.back();
      stack.pop_back();
      for (int h : g.rotation(u)) {
        const int w = g.other(h);
        if (gsp_vertex[w] || comp[w] >= 0) continue;
        comp[w] = comps;
        stack.push_back(w);
      }
    }
    ++comps;
  }
  std::vector<char> keep(comps, 0), drop(comps, 0);
  std::vector<int> stray_edges;
  for (int v = 0; v < n; ++v) {
    if (!gsp_vertex[v]) continue;
    for (int h : g.rotation(v)) {
      if (gsp_half(g, h)) continue;
      const int owner = gap_owner(g, h);
      const bool in_o = owner >= 0 && b.dart_face[owner] == b.o;
      const int w = g.other(h);
      if (gsp_vertex[w]) {
        if (!in_o) stray_edges.push_back(MixedGraph::edge_of(h));
      } else {
        (in_o ? keep : drop)[comp[w]] = 1;
      }
    }
  }
  int changes = 0;
  for (int e : stray_edges) {
    if (g.edge(e).alive) {
      g.remove_edge(e);
      ++changes;
    }
  }
  for (int v = 0; v < n; ++v) {
    if (comp[v] >= 0 && g.vertex(v).alive && (drop[comp[v]] || !keep[comp[v]])) {
      g.remove_vertex(v);
      ++changes;
    }
  }
  return changes;
}

// short cycles of the directed part: loops, digons and triangles
std::vector<std::vector<int>> short_gsp_cycles(const MixedGraph& g) {
  std::vector<std::vector<int>> cycles;
  std::vector<int> halves;
  for (int e = 0; e < g.edge_slots(); ++e) {
    const MixedEdge& me = g.edge(e);
    if (!me.alive || !me.gsp) continue;
    if (me.tail == me.head) {
      cycles.push_back({2 * e});
      continue;
    }
    halves.push_back(2 * e);
    halves.push_back(2 * e + 1);
  }
  for (int d1 : halves) {
    const int u = g.at(d1), v = g.other(d1);
    for (int d2 : g.rotation(v)) {
      if (!gsp_half(g, d2) || MixedGraph::edge_of(d2) == MixedGraph::edge_of(d1)) continue;
      const int w = g.other(d2);
      if (w == u) {
        if (d1 < d2) cycles.push_back({d1, d2});
        continue;
      }
      if (w == v) continue;
      for (int d3 : g.rotation(w)) {
        if (!gsp_half(g, d3) || g.other(d3) != u) continue;
        const int e1 = MixedGraph::edge_of(d1), e2 = MixedGraph::edge_of(d2), e3 = MixedGraph::edge_of(d3);
        if (e3 == e1 || e3 == e2) continue;
        if (e1 < e2 && e1 < e3) cycles.push_back({d1, d2, d3});
      }
    }
  }
  return cycles;
}

int purge_separating(StFriendlyGraph& sf) {
  MixedGraph& g = sf.graph;
  int changes = 0;
  for (int v = 0; v < g.vertex_slots(); ++v) {
    if (g.vertex(v).alive) changes += drop_loops(sf, v);
  }
  changes += purge_inner_exterior(sf, locate(sf));
  for (bool again = true; again;) {
    again = false;
    const Boundary b = locate(sf);
    auto outer_marker = [&](int v) { return b.on_o(v) || !is_gsp_vertex(g, v); };
    for (const auto& cycle : short_gsp_cycles(g)) {
      const auto left = side_of(g, cycle, true);
      const auto right = side_of(g, cycle, false);
      const bool left_clean = !any_of_region(left, outer_marker);
      const bool right_clean = !any_of_region(right, outer_marker);
      const bool left_some = any_of_region(left, [](int) { return true; });
      const bool right_some = any_of_region(right, [](int) { return true; });
      const std::vector<char>* inside = nullptr;
      if (left_clean && left_some && !right_clean) inside = &left;
      else if (right_clean && right_some && !left_clean) inside = &right;
      else if (left_clean && right_clean) {
        if (b.dart_face[cycle[0]] == b.o) inside = right_some ? &right : nullptr;
        else if (b.dart_face[cycle[0] ^ 1] == b.o) inside = left_some ? &left : nullptr;
      }
      if (inside == nullptr) continue;
      changes += purge(g, *inside);
      if (cycle.size() == 1) g.remove_edge(MixedGraph::edge_of(cycle[0]));
      again = true;
      break;
    }
  }
  return changes;
}

struct Interval {
  int lo = INT_MAX;
  int hi = -1;
};

// for every interior vertex, the span between its first in-neighbour and its
// last out-neighbour on a boundary path
std::vector<Interval> spans_on(const MixedGraph& g, const Boundary& b, const std::vector<int>& pos) {
  std::vector<Interval> spans(g.vertex_slots());
  for (int v = 0; v < g.vertex_slots(); ++v) {
    if (!g.vertex(v).alive || b.on_o(v) || !is_gsp_vertex(g, v)) continue;
    for (int h : g.rotation(v)) {
      if (!gsp_half(g, h)) continue;
      const int w = g.other(h);
      if (pos[w] < 0) continue;
      if (h & 1) spans[v].lo = std::min(spans[v].lo, pos[w]);
      else spans[v].hi = std::max(spans[v].hi, pos[w]);
    }
  }
  return spans;
}

int remove_circumventable(StFriendlyGraph& sf) {
  MixedGraph& g = sf.graph;
  int changes = 0;
  for (;;) {
    const Boundary b = locate(sf);
    std::vector<int> doomed;
    for (const auto* pos : {&b.upper_pos, &b.lower_pos}) {
      const auto spans = spans_on(g, b, *pos);
      // covered[i]: position i lies strictly inside some span
      std::vector<char> covered(g.vertex_slots() + 1, 0);
      for (const Interval& iv : spans) {
        if (iv.lo >= iv.hi) continue;
        for (int i = iv.lo + 1; i < iv.hi; ++i) covered[i] = 1;
      }
      for (int e = 0; e < g.edge_slots(); ++e) {
        const MixedEdge& me = g.edge(e);
        if (!me.alive || !me.gsp) continue;
        for (const auto& [y, v] : {std::pair{me.tail, me.head}, std::pair{me.head, me.tail}}) {
          if ((*pos)[y] >= 0 && covered[(*pos)[y]] && !b.on_o(v)) doomed.push_back(e);
        }
      }
    }
    std::sort(doomed.begin(), doomed.end());
    doomed.erase(std::unique(doomed.begin(), doomed.end()), doomed.end());
    if (doomed.empty()) return changes;
    for (int e : doomed) g.remove_edge(e);
    changes += static_cast<int>(doomed.size());
  }
}

int subdivide_dead(StFriendlyGraph& sf);

int split_avoidable(StFriendlyGraph& sf) {
  MixedGraph& g = sf.graph;
  int changes = 0;
  for (bool again = true; again;) {
    again = false;
    const Boundary b = locate(sf);
    for (const auto* path : {&b.upper, &b.lower}) {
      const auto& pos = path == &b.upper ? b.upper_pos : b.lower_pos;
      const auto& other = path == &b.upper ? b.lower : b.upper;
      for (const Interval& iv : spans_on(g, b, pos)) {
        if (iv.lo >= iv.hi) continue;
        for (int i = iv.lo; i < iv.hi; ++i) {
          const int e = (*path)[i];
          if (std::find(other.begin(), other.end(), e) != other.end()) continue;  // bridge
          g.split_edge(e, MixedVertexKind::Avoidable);
          ++changes;
        }
        changes += subdivide_dead(sf);
        again = true;
        break;
      }
      if (again) break;
    }
  }
  return changes;
}

std::vector<char> reach(const MixedGraph& g, int from, bool forward) {
  std::vector<char> seen(g.vertex_slots(), 0);
  std::vector<int> stack{from};
  seen[from] = 1;
  while (!stack.empty()) {
    const int u = stack.back();
    stack.pop_back();
    for (int h : g.rotation(u)) {
      const MixedEdge& me = g.edge(MixedGraph::edge_of(h));
      if (!me.gsp) continue;
      const bool along = (h & 1) == (forward ? 0 : 1);
      if (!along && !me.both_ways) continue;
      const int w = g.other(h);
      if (!seen[w]) {
        seen[w] = 1;
        stack.push_back(w);
      }
    }
  }
  return seen;
}

// directed edges on no st-path are only useful to the undirected path, so
// they get subdivided like the edges that never were shortest
int subdivide_dead(StFriendlyGraph& sf) {
  MixedGraph& g = sf.graph;
  const auto from_s = reach(g, sf.s, true);
  const auto to_t = reach(g, sf.t, false);
  int changes = 0;
  for (int e = 0; e < g.edge_slots(); ++e) {
    const MixedEdge& me = g.edge(e);
    if (!me.alive || !me.gsp) continue;
    const bool live = (from_s[me.tail] && to_t[me.head]) || (me.both_ways && from_s[me.head] && to_t[me.tail]);
    if (live) continue;
    g.split_edge(e, MixedVertexKind::Subdivision);
    ++changes;
  }
  return changes;
}

int smooth_and_trim(StFriendlyGraph& sf) {
  MixedGraph& g = sf.graph;
  int changes = 0;
  for (bool again = true; again;) {
    again = false;
    if (const int dead = subdivide_dead(sf); dead > 0) {
      changes += dead;
      again = true;
    }
    for (int w = 0; w < g.vertex_slots(); ++w) {
      if (!g.vertex(w).alive || w == sf.s || w == sf.t) continue;
      if (g.degree(w) <= 1) {
        g.remove_vertex(w);
        ++changes;
        again = true;
        continue;
      }
      // one in-neighbour and one out-neighbour, parallel copies allowed
      int hin = -1, u = -1, z = -1;
      bool uniform = true;
      std::vector<int> outs;
      for (int h : g.rotation(w)) {
        const MixedEdge& me = g.edge(MixedGraph::edge_of(h));
        const int x = g.other(h);
        if (me.both_ways || me.gsp != g.edge(MixedGraph::edge_of(g.rotation(w)[0])).gsp) uniform = false;
        if (h & 1) {
          if (u >= 0 && u != x) uniform = false;
          u = x;
          if (hin < 0) hin = h;
        } else {
          if (z >= 0 && z != x) uniform = false;
          z = x;
          outs.push_back(MixedGraph::edge_of(h));
        }
      }
      if (!uniform || hin < 0 || outs.empty() || u == z || u == w || z == w) continue;
      const int ein = MixedGraph::edge_of(hin);
      const MixedEdge a = g.edge(ein);
      for (int eout : outs) {
        MixedEdge& merged = g.edge_mut(eout);
        merged.provenance.insert(merged.provenance.begin(), a.provenance.begin(), a.provenance.end());
        merged.shareable = merged.shareable && a.shareable;
        merged.forbidden = merged.forbidden || a.forbidden;
      }
      drop_loops(sf, g.contract(ein));
      ++changes;
      again = true;
    }
  }
  return changes;
}

int split_cut_vertices(StFriendlyGraph& sf) {
  MixedGraph& g = sf.graph;
  int changes = 0;
  for (;;) {
    const Boundary b = locate(sf);
    int x = -1;
    for (int v = 0; v < g.vertex_slots() && x < 0; ++v) {
      if (v != sf.s && v != sf.t && b.upper_pos[v] >= 0 && b.lower_pos[v] >= 0) x = v;
    }
    if (x < 0) return changes;

    const int a_mu = b.upper[b.upper_pos[x] - 1], b_mu = b.upper[b.upper_pos[x]];
    const int a_la = b.lower[b.lower_pos[x] - 1], b_la = b.lower[b.lower_pos[x]];
    const std::vector<int> ring = g.rotation(x);
    const int ham = 2 * a_mu + 1, hbm = 2 * b_mu, hal = 2 * a_la + 1, hbl = 2 * b_la;
    const auto upper_ext = strictly_between(ring, hbm, ham);
    const auto block_in = strictly_between(ring, ham, hal);
    const auto lower_ext = strictly_between(ring, hal, hbl);
    const auto block_out = strictly_between(ring, hbl, hbm);
    for (const auto* ext : {&upper_ext, &lower_ext}) {
      for (int h : *ext) {
        if (gsp_half(g, h)) throw InternalError("directed edge inside an o-corner of a cut vertex");
      }
    }

    const int xl = g.add_vertex(MixedVertexKind::SplitCopy, g.vertex(x).origin);
    int in_lower = hal, out_lower = hbl;
    if (a_mu == a_la) {  // bridge entering x: one copy per side
      MixedEdge& orig = g.edge_mut(a_mu);
      orig.forbidden = !orig.shareable;
      const MixedEdge copy = orig;
      const int dup = g.add_edge(copy.tail, xl, copy);
      g.place(2 * dup, g.position(2 * a_mu));
      in_lower = 2 * dup + 1;
    } else {
      g.reattach(hal, xl);
    }
    if (b_mu == b_la) {
      MixedEdge& orig = g.edge_mut(b_mu);
      orig.forbidden = !orig.shareable;
      const MixedEdge copy = orig;
      const int dup = g.add_edge(xl, copy.head, copy);
      g.place(2 * dup + 1, g.position(2 * b_mu + 1) + 1);
      out_lower = 2 * dup;
    } else {
      g.reattach(hbl, xl);
    }
    for (int h : lower_ext) g.reattach(h, xl);

    MixedEdge link;
    link.gsp = true;
    link.both_ways = true;
    link.forbidden = true;
    const int c = g.add_edge(x, xl, link);

    std::vector<int> upper_ring{hbm};
    upper_ring.insert(upper_ring.end(), upper_ext.begin(), upper_ext.end());
    upper_ring.push_back(ham);
    upper_ring.insert(upper_ring.end(), block_in.begin(), block_in.end());
    upper_ring.push_back(2 * c);
    upper_ring.insert(upper_ring.end(), block_out.begin(), block_out.end());
    std::vector<int> lower_ring{in_lower};
    lower_ring.insert(lower_ring.end(), lower_ext.begin(), lower_ext.end());
    lower_ring.push_back(out_lower);
    lower_ring.push_back(2 * c + 1);
    g.set_rotation(x, std::move(upper_ring));
    g.set_rotation(xl, std::move(lower_ring));
    ++changes;
  }
}

int insert_barriers(StFriendlyGraph& sf) {
  MixedGraph& g = sf.graph;
  const Boundary b = locate(sf);
  int changes = 0;
  for (int h : b.faces[b.o]) {
    const auto ext = gap_after(g, h);
    if (ext.empty() || (ext.size() == 1 && g.edge(MixedGraph::edge_of(ext[0])).barrier)) continue;
    const int x = g.at(h);
    const int y = g.add_vertex(MixedVertexKind::Barrier);
    MixedEdge flags;
    flags.barrier = true;
    const int bar = g.add_edge(y, x, flags);
    std::vector<int> yring{2 * bar};
    for (int k : ext) {
      g.edge_mut(MixedGraph::edge_of(k)).barrier = false;
      g.reattach(k, y);
      yring.push_back(k);
    }
    const auto& ring = g.rotation(x);
    const int n = static_cast<int>(ring.size());
    const int i = static_cast<int>(std::find(ring.begin(), ring.end(), h) - ring.begin());
    std::vector<int> xring{h, 2 * bar + 1};
    for (int k = static_cast<int>(ext.size()) + 1; k < n; ++k) xring.push_back(ring[(i + k) % n]);
    g.set_rotation(x, std::move(xring));
    g.set_rotation(y, std::move(yring));
    ++changes;
  }
  return changes;
}

int contract_exterior(StFriendlyGraph& sf) {
  MixedGraph& g = sf.graph;
  int changes = 0;
  for (bool again = true; again;) {
    again = false;
    for (int e = 0; e < g.edge_slots(); ++e) {
      const MixedEdge& me = g.edge(e);
      if (!me.alive || me.gsp || me.barrier || me.tail == me.head) continue;
      if (is_gsp_vertex(g, me.tail) || is_gsp_vertex(g, me.head)) continue;
      const int keep = g.contract(e);
      drop_loops(sf, keep);
      ++changes;
      again = true;
      break;
    }
    if (again) continue;
    // separating cycles through one exterior vertex and at most one directed edge
    auto inner = [&](int v) { return is_gsp_vertex(g, v); };
    for (int v = 0; v < g.vertex_slots() && !again; ++v) {
      if (!g.vertex(v).alive || is_gsp_vertex(g, v)) continue;
      const std::vector<int> ring = g.rotation(v);
      for (size_t i = 0; i < ring.size() && !again; ++i) {
        for (size_t j = 0; j < ring.size() && !again; ++j) {
          if (i == j) continue;
          const int x1 = g.other(ring[i]), x2 = g.other(ring[j]);
          if (!is_gsp_vertex(g, x1) || !is_gsp_vertex(g, x2)) continue;
          std::vector<std::vector<int>> cycles;
          if (x1 == x2) {
            if (i < j) cycles.push_back({ring[i], ring[j] ^ 1});
          } else {
            for (int d : g.rotation(x1)) {
              if (gsp_half(g, d) && g.other(d) == x2) cycles.push_back({ring[i], d, ring[j] ^ 1});
            }
          }
          for (const auto& cycle : cycles) {
            const auto left = side_of(g, cycle, true);
            const auto right = side_of(g, cycle, false);
            const bool lc = !any_of_region(left, inner), rc = !any_of_region(right, inner);
            const bool ls = any_of_region(left, [](int) { return true; });
            const bool rs = any_of_region(right, [](int) { return true; });
            const std::vector<char>* inside = nullptr;
            if (lc && ls && !rc) inside = &left;
            else if (rc && rs && !lc) inside = &right;
            if (inside == nullptr) continue;
            changes += purge(g, *inside);
            again = true;
            break;
          }
        }
      }
    }
  }
  return changes;
}

bool has_cut_vertex(const StFriendlyGraph& sf, const Boundary& b) {
  for (int v = 0; v < sf.graph.vertex_slots(); ++v) {
    if (v != sf.s && v != sf.t && b.upper_pos[v] >= 0 && b.lower_pos[v] >= 0) return true;
  }
  return false;
}

int remove_exterior_chords(StFriendlyGraph& sf) {
  MixedGraph& g = sf.graph;
  int changes = 0;
  for (;;) {
    const Boundary b = locate(sf);
    if (has_cut_vertex(sf, b)) return changes;
    std::vector<int> doomed;
    for (int v = 0; v < g.vertex_slots(); ++v) {
      if (!g.vertex(v).alive || is_gsp_vertex(g, v)) continue;
      for (const auto* path : {&b.upper, &b.lower}) {
        const auto& pos = path == &b.upper ? b.upper_pos : b.lower_pos;
        int lo = INT_MAX, hi = -1;
        for (int h : g.rotation(v)) {
          const int p = pos[g.other(h)];
          if (p < 0) continue;
          lo = std::min(lo, p);
          hi = std::max(hi, p);
        }
        if (lo >= hi) continue;
        for (int i = lo + 1; i < hi; ++i) {
          const int z = g.edge((*path)[i]).tail;
          for (int h : g.rotation(z)) {
            if (!gsp_half(g, h)) doomed.push_back(MixedGraph::edge_of(h));
          }
        }
      }
    }
    std::sort(doomed.begin(), doomed.end());
    doomed.erase(std::unique(doomed.begin(), doomed.end()), doomed.end());
    if (doomed.empty()) return changes;
    for (int e : doomed) g.remove_edge(e);
    changes += static_cast<int>(doomed.size());
  }
}

}  // namespace

Boundary locate_boundary(const StFriendlyGraph& sf) {
  const MixedGraph& g = sf.graph;
  Boundary b;
  b.faces = g.faces([&](int e) { return g.edge(e).gsp; });
  b.dart_face.assign(2 * g.edge_slots(), -1);
  for (size_t f = 0; f < b.faces.size(); ++f) {
    for (int h : b.faces[f]) b.dart_face[h] = static_cast<int>(f);
  }
  b.upper_pos.assign(g.vertex_slots(), -1);
  b.lower_pos.assign(g.vertex_slots(), -1);

  // among faces holding both terminals prefer the one sharing most darts with
  // the previous choice, then the one with most exterior material around it
  std::vector<char> hinted(2 * g.edge_slots(), 0);
  for (int h : sf.o_hint) {
    if (h < static_cast<int>(hinted.size())) hinted[h] = 1;
  }
  std::vector<std::pair<std::pair<int, int>, int>> candidates;
  for (size_t f = 0; f < b.faces.size(); ++f) {
    bool has_s = false, has_t = false;
    int material = 0, overlap = 0;
    for (int h : b.faces[f]) {
      has_s |= g.at(h) == sf.s;
      has_t |= g.at(h) == sf.t;
      overlap += hinted[h];
      material += static_cast<int>(gap_after(g, h).size());
    }
    if (has_s && has_t) candidates.emplace_back(std::pair{-overlap, -material}, static_cast<int>(f));
  }
  std::stable_sort(candidates.begin(), candidates.end());

  for (const auto& [score, f] : candidates) {
    const auto& walk = b.faces[f];
    const int k = static_cast<int>(walk.size());
    for (int start = 0; start < k; ++start) {
      if (g.at(walk[start]) != sf.s || (walk[start] & 1)) continue;
      std::vector<int> upper, lower;
      int at = sf.s, j = 0;
      while (j < k && (walk[(start + j) % k] & 1) == 0) {
        const int h = walk[(start + j) % k];
        if (g.at(h) != at) break;
        upper.push_back(MixedGraph::edge_of(h));
        at = g.other(h);
        ++j;
      }
      if (at != sf.t) continue;
      bool ok = true;
      for (; j < k; ++j) {
        const int h = walk[(start + j) % k];
        if ((h & 1) == 0 || g.at(h) != at) {
          ok = false;
          break;
        }
        lower.push_back(MixedGraph::edge_of(h));
        at = g.other(h);
      }
      if (!ok || at != sf.s) continue;
      std::reverse(lower.begin(), lower.end());
      b.found = true;
      b.o = f;
      b.upper = std::move(upper);
      b.lower = std::move(lower);
      b.upper_pos[sf.s] = b.lower_pos[sf.s] = 0;
      for (size_t i = 0; i < b.upper.size(); ++i) b.upper_pos[g.edge(b.upper[i]).head] = static_cast<int>(i) + 1;
      for (size_t i = 0; i < b.lower.size(); ++i) b.lower_pos[g.edge(b.lower[i]).head] = static_cast<int>(i) + 1;
      return b;
    }
  }
  return b;
}

std::string_view to_string(Pass p) {
  switch (p) {
    case Pass::ContractInterior: return "a_contract_interior";
    case Pass::PurgeSeparating: return "b_purge_separating";
    case Pass::Circumventable: return "c_circumventable";
    case Pass::Avoidable: return "d_avoidable";
    case Pass::SmoothTrim: return "e_smooth_trim";
    case Pass::SplitCut: return "f_split_cut";
    case Pass::Barriers: return "g_barriers";
    case Pass::ExteriorContract: return "h_exterior_contract";
    case Pass::ExteriorChords: return "i_exterior_chords";
  }
  return "unknown";
}

int apply_pass(StFriendlyGraph& sf, Pass pass) {
  switch (pass) {
    case Pass::ContractInterior: return contract_interior(sf);
    case Pass::PurgeSeparating: return purge_separating(sf);
    case Pass::Circumventable: return remove_circumventable(sf);
    case Pass::Avoidable: return split_avoidable(sf);
    case Pass::SmoothTrim: return smooth_and_trim(sf);
    case Pass::SplitCut: return split_cut_vertices(sf);
    case Pass::Barriers: return insert_barriers(sf);
    case Pass::ExteriorContract: return contract_exterior(sf);
    case Pass::ExteriorChords: return remove_exterior_chords(sf);
  }
  return 0;
}

Normalization normalize(StFriendlyGraph sf, const PassObserver& observer) {
  const Boundary start = locate_boundary(sf);
  if (!start.found) {
    throw PreconditionError("special case precondition violated: s and t share no face of G_sp");
  }
  sf.o_hint = start.faces[start.o];
  Normalization result;
  constexpr int kMaxRounds = 64;
  for (int round = 1;; ++round) {
    if (round > kMaxRounds) throw InternalError("normalization did not reach a fixpoint");
    int total = 0;
    for (Pass pass : kAllPasses) {
      const PassRecord record{round, pass, apply_pass(sf, pass)};
      total += record.changes;
      result.log.push_back(record);
      if (observer) observer(record, sf);
    }
    result.rounds = round;
    if (total == 0) break;
  }
  result.graph = std::move(sf);
  return result;
}

namespace {

bool is_tree(int nodes, const std::vector<std::pair<int, int>>& edges, std::vector<int>* degree) {
  degree->assign(nodes, 0);
  if (nodes == 0) return true;
  if (static_cast<int>(edges.size()) != nodes - 1) return false;
  std::vector<int> parent(nodes);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& [a, c] : edges) {
    ++(*degree)[a];
    ++(*degree)[c];
    const int ra = find(a), rc = find(c);
    if (ra == rc) return false;
    parent[ra] = rc;
  }
  return true;
}

// simple graph on faces: pairs deduplicated, self pairs dropped
std::vector<std::pair<int, int>> simple_pairs(std::vector<std::pair<int, int>> pairs) {
  for (auto& [a, c] : pairs) {
    if (a > c) std::swap(a, c);
  }
  std::sort(pairs.begin(), pairs.end());
  pairs.erase(std::unique(pairs.begin(), pairs.end()), pairs.end());
  pairs.erase(std::remove_if(pairs.begin(), pairs.end(), [](const auto& p) { return p.first == p.second; }), pairs.end());
  return pairs;
}

}  // namespace

Postconditions check_postconditions(const StFriendlyGraph& sf) {
  const MixedGraph& g = sf.graph;
  Postconditions pc;
  const Boundary b = locate_boundary(sf);
  if (!b.found) {
    pc.detail = "no common face";
    return pc;
  }
  pc.boundary_simple = !has_cut_vertex(sf, b);
  if (!pc.boundary_simple) pc.detail += "o is not bounded by a simple cycle; ";

  pc.outerplanar = true;
  for (int v = 0; v < g.vertex_slots(); ++v) {
    if (g.vertex(v).alive && is_gsp_vertex(g, v) && !b.on_o(v)) pc.outerplanar = false;
  }
  if (!pc.outerplanar) pc.detail += "interior vertex left; ";

  // weak dual of the directed part; digon faces between parallel copies of
  // one edge are see-through, so their neighbours become adjacent directly
  const int nf = static_cast<int>(b.faces.size());
  auto digon = [&](int f) { return f != b.o && b.faces[f].size() == 2; };
  std::vector<int> index(nf, -1);
  int inner = 0;
  for (int f = 0; f < nf; ++f) {
    if (f != b.o && !digon(f)) index[f] = inner++;
  }
  // union digon chains, then join the plain faces around each chain
  std::vector<int> chain(nf);
  std::iota(chain.begin(), chain.end(), 0);
  auto root = [&](int x) {
    while (chain[x] != x) x = chain[x] = chain[chain[x]];
    return x;
  };
  std::vector<std::pair<int, int>> adj, touching;  // (chain root, plain face index)
  for (int e = 0; e < g.edge_slots(); ++e) {
    if (!g.edge(e).alive || !g.edge(e).gsp) continue;
    const int f1 = b.dart_face[2 * e], f2 = b.dart_face[2 * e + 1];
    if (f1 == b.o || f2 == b.o) continue;
    if (digon(f1) && digon(f2)) chain[root(f1)] = root(f2);
    else if (!digon(f1) && !digon(f2)) adj.emplace_back(index[f1], index[f2]);
  }
  for (int e = 0; e < g.edge_slots(); ++e) {
    if (!g.edge(e).alive || !g.edge(e).gsp) continue;
    const int f1 = b.dart_face[2 * e], f2 = b.dart_face[2 * e + 1];
    if (f1 == b.o || f2 == b.o) continue;
    if (digon(f1) && !digon(f2)) touching.emplace_back(root(f1), index[f2]);
    if (digon(f2) && !digon(f1)) touching.emplace_back(root(f2), index[f1]);
  }
  for (const auto& [c1, x] : touching) {
    for (const auto& [c2, y] : touching) {
      if (c1 == c2 && x < y) adj.emplace_back(x, y);
    }
  }
  std::vector<int> degree;
  const auto weak = simple_pairs(adj);
  pc.weak_dual_path = is_tree(inner, weak, &degree) && std::all_of(degree.begin(), degree.end(), [](int d) { return d <= 2; });
  if (!pc.weak_dual_path) pc.detail += "weak dual is not a path; ";

  // faces of the boundary cycle plus exterior edges away from the terminals
  std::vector<char> cycle_edge(g.edge_slots(), 0);
  for (int e : b.upper) cycle_edge[e] = 1;
  for (int e : b.lower) cycle_edge[e] = 1;
  auto in_x = [&](int e) {
    const MixedEdge& me = g.edge(e);
    if (me.gsp) return cycle_edge[e] != 0;
    return me.tail != sf.s && me.tail != sf.t && me.head != sf.s && me.head != sf.t;
  };
  const auto xfaces = g.faces(in_x);
  std::vector<int> xface(2 * g.edge_slots(), -1);
  for (size_t f = 0; f < xfaces.size(); ++f) {
    for (int h : xfaces[f]) xface[h] = static_cast<int>(f);
  }
  if (b.upper.empty()) {
    pc.caterpillar = false;
    pc.detail += "empty boundary path; ";
    return pc;
  }
  const int gsp_side = xface[2 * b.upper[0] + 1];
  const int nx = static_cast<int>(xfaces.size());
  std::vector<int> xindex(nx, -1);
  int outer = 0;
  for (int f = 0; f < nx; ++f) {
    if (f != gsp_side) xindex[f] = outer++;
  }
  std::vector<std::pair<int, int>> xadj;
  for (int e = 0; e < g.edge_slots(); ++e) {
    if (!g.edge(e).alive || g.edge(e).gsp || !in_x(e)) continue;
    const int f1 = xface[2 * e], f2 = xface[2 * e + 1];
    if (f1 != gsp_side && f2 != gsp_side) xadj.emplace_back(xindex[f1], xindex[f2]);
  }
  const auto cat = simple_pairs(xadj);
  bool caterpillar = is_tree(outer, cat, &degree);
  if (caterpillar) {
    // removing the leaves must leave a path
    std::vector<int> spine_degree(outer, 0);
    for (const auto& [a, c] : cat) {
      if (degree[a] > 1 && degree[c] > 1) {
        ++spine_degree[a];
        ++spine_degree[c];
      }
    }
    caterpillar = std::all_of(spine_degree.begin(), spine_degree.end(), [](int d) { return d <= 2; });
  }
  pc.caterpillar = caterpillar;
  if (!caterpillar) pc.detail += "exterior dual is not a caterpillar; ";
  return pc;
}

namespace {

// undirected partner search against a fixed directed path in the mixed graph
class MixedPartner {
 public:
  MixedPartner(const StFriendlyGraph& sf, const std::vector<int>& path_halves)
      : sf_(sf), g_(sf.graph), on_p_(g_.edge_slots(), 0), in_(g_.vertex_slots(), -1), out_(g_.vertex_slots(), -1) {
    for (int h : path_halves) {
      on_p_[MixedGraph::edge_of(h)] = 1;
      out_[g_.at(h)] = h;
      in_[g_.other(h)] = h ^ 1;
    }
  }

  static constexpr int kFree = 2;

  bool usable(int e) const {
    const MixedEdge& me = g_.edge(e);
    return me.alive && !me.forbidden && (!on_p_[e] || me.shareable);
  }
  bool touches(int v) const { return in_[v] >= 0 && out_[v] >= 0; }
  int arc(int v, int h) const {
    if (on_p_[MixedGraph::edge_of(h)]) return kFree;
    const auto& ring = g_.rotation(v);
    const int n = static_cast<int>(ring.size());
    auto slot = [&](int x) { return static_cast<int>(std::find(ring.begin(), ring.end(), x) - ring.begin()); };
    const int out = slot(out_[v]), in = slot(in_[v]);
    return (slot(h) - out + n) % n < (in - out + n) % n ? 0 : 1;
  }
  bool may_leave(int v, int entered, int h) const {
    if (!touches(v) || entered == kFree) return true;
    const int a = arc(v, h);
    return a == kFree || a == entered;
  }

  bool exists() {
    // state search first; a walk that repeats a vertex falls back to DFS
    const int states = 3 * g_.vertex_slots();
    std::vector<int> parent(states, -1);
    std::vector<char> seen(states, 0);
    std::queue<int> queue;
    const int start = 3 * sf_.s;
    queue.push(start);
    seen[start] = 1;
    int goal = -1;
    while (!queue.empty() && goal < 0) {
      const int state = queue.front();
      queue.pop();
      const int u = state / 3;
      for (int h : g_.rotation(u)) {
        const int w = g_.other(h);
        if (w == u || w == sf_.s || !usable(MixedGraph::edge_of(h)) || !may_leave(u, state % 3, h)) continue;
        const int next = 3 * w + (touches(w) ? arc(w, h ^ 1) : 0);
        if (seen[next]) continue;
        seen[next] = 1;
        parent[next] = state;
        if (w == sf_.t) {
          goal = next;
          break;
        }
        queue.push(next);
      }
    }
    if (goal < 0) return false;
    std::vector<char> visited(g_.vertex_slots(), 0);
    bool simple = true;
    for (int state = goal; state >= 0; state = parent[state]) {
      if (visited[state / 3]) simple = false;
      visited[state / 3] = 1;
    }
    if (simple) return true;
    visited.assign(g_.vertex_slots(), 0);
    visited[sf_.s] = 1;
    return dfs(sf_.s, 0, visited);
  }

 private:
  bool dfs(int u, int entered, std::vector<char>& visited) {
    if (u == sf_.t) return true;
    for (int h : g_.rotation(u)) {
      const int w = g_.other(h);
      if (visited[w] || !usable(MixedGraph::edge_of(h)) || !may_leave(u, entered, h)) continue;
      visited[w] = 1;
      if (dfs(w, touches(w) ? arc(w, h ^ 1) : 0, visited)) return true;
      visited[w] = 0;
    }
    return false;
  }

  const StFriendlyGraph& sf_;
  const MixedGraph& g_;
  std::vector<char> on_p_;
  std::vector<int> in_, out_;
};

class DirectedPaths {
 public:
  DirectedPaths(const StFriendlyGraph& sf, long long cap) : sf_(sf), cap_(cap), visited_(sf.graph.vertex_slots(), 0) {}

  std::optional<bool> run() {
    visited_[sf_.s] = 1;
    dfs(sf_.s);
    if (found_) return true;
    if (count_ > cap_) return std::nullopt;
    return false;
  }

 private:
  void dfs(int u) {
    if (found_ || count_ > cap_) return;
    if (u == sf_.t) {
      ++count_;
      if (MixedPartner(sf_, halves_).exists()) found_ = true;
      return;
    }
    const MixedGraph& g = sf_.graph;
    for (int h : g.rotation(u)) {
      const MixedEdge& me = g.edge(MixedGraph::edge_of(h));
      if (!me.gsp || ((h & 1) && !me.both_ways)) continue;
      const int w = g.other(h);
      if (visited_[w]) continue;
      visited_[w] = 1;
      halves_.push_back(h);
      dfs(w);
      halves_.pop_back();
      visited_[w] = 0;
    }
  }

  const StFriendlyGraph& sf_;
  long long cap_;
  std::vector<char> visited_;
  std::vector<int> halves_;
  long long count_ = 0;
  bool found_ = false;
};

}  // namespace

std::optional<bool> mixed_witness_exists(const StFriendlyGraph& sf, long long path_cap) {
  return DirectedPaths(sf, path_cap).run();
}

}  // namespace geoinsert
