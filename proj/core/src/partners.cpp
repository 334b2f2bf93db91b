#include "geoinsert/partners.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace geoinsert {

namespace {

bool is_exterior(const MixedEdge& e) { return !e.gsp; }

// unique path between two nodes of a forest given as adjacency lists
std::vector<int> tree_path(const std::vector<std::vector<int>>& adj, int from, int to) {
  std::vector<int> parent(adj.size(), -2);
  std::vector<int> stack{from};
  parent[from] = -1;
  while (!stack.empty()) {
    const int x = stack.back();
    stack.pop_back();
    for (int y : adj[x]) {
      if (parent[y] != -2) continue;
      parent[y] = x;
      stack.push_back(y);
    }
  }
  std::vector<int> path;
  if (parent[to] == -2) return path;
  for (int x = to; x != -1; x = parent[x]) path.push_back(x);
  std::reverse(path.begin(), path.end());
  return path;
}

}  // namespace

PartnerSystem extract_partners(const StFriendlyGraph& sf) {
  const MixedGraph& g = sf.graph;
  const Boundary b = locate_boundary(sf);
  if (!b.found || b.upper.empty()) throw InternalError("partner extraction needs a common face");

  std::vector<char> on_upper(g.edge_slots(), 0), on_lower(g.edge_slots(), 0);
  for (int e : b.upper) on_upper[e] = 1;
  for (int e : b.lower) on_lower[e] = 1;

  PartnerSystem sys;

  // interior faces: the inner side of an upper edge is on its right, of a
  // lower edge on its left; faces between parallel copies may have one side
  // or none and still carry the choice between the copies
  const int nf = static_cast<int>(b.faces.size());
  std::vector<int> pair_of(nf, -1);
  for (int f = 0; f < nf; ++f) {
    if (f == b.o) continue;
    PartnerPair pp;
    pp.kind = PartnerKind::Interior;
    pp.face = f;
    for (int h : b.faces[f]) {
      const int e = MixedGraph::edge_of(h);
      if (on_upper[e] && (h & 1)) pp.e_mu.push_back(e);
      if (on_lower[e] && !(h & 1)) pp.e_lambda.push_back(e);
    }
    pair_of[f] = static_cast<int>(sys.interior.size());
    sys.interior.push_back(std::move(pp));
  }

  // the face left of a one-way chord lies below p only if the right one does
  for (int e = 0; e < g.edge_slots(); ++e) {
    const MixedEdge& me = g.edge(e);
    if (!me.alive || !me.gsp || me.both_ways || on_upper[e] || on_lower[e]) continue;
    const int l = b.dart_face[2 * e], r = b.dart_face[2 * e + 1];
    if (l == b.o || r == b.o || l == r) continue;
    sys.chords.push_back({e, pair_of[l], pair_of[r]});
  }

  // exterior faces: the boundary cycle plus exterior edges away from s and t
  for (int e = 0; e < g.edge_slots(); ++e) {
    const MixedEdge& me = g.edge(e);
    if (!me.alive || !is_exterior(me)) continue;
    if (me.tail == sf.s || me.tail == sf.t || me.head == sf.s || me.head == sf.t) sys.committed.push_back(e);
  }
  auto in_x = [&](int e) {
    const MixedEdge& me = g.edge(e);
    if (me.gsp) return on_upper[e] || on_lower[e];
    return me.tail != sf.s && me.tail != sf.t && me.head != sf.s && me.head != sf.t;
  };
  const auto xfaces = g.faces(in_x);
  std::vector<int> xface(2 * g.edge_slots(), -1);
  for (size_t f = 0; f < xfaces.size(); ++f) {
    for (int h : xfaces[f]) xface[h] = static_cast<int>(f);
  }
  const int inside = xface[2 * b.upper[0] + 1];
  const int nx = static_cast<int>(xfaces.size());

  // a pocket is bounded by one stretch of a single boundary path and two
  // exterior edges at one vertex v; the undirected path can always shortcut
  // through v instead of walking the stretch, so pockets take no part
  std::vector<char> skip(nx, 0);
  skip[inside] = 1;
  int pockets = 0;
  for (int f = 0; f < nx; ++f) {
    if (f == inside) continue;
    std::vector<int> ext;
    bool up = false, low = false;
    for (int h : xfaces[f]) {
      const int e = MixedGraph::edge_of(h);
      if (!g.edge(e).gsp) ext.push_back(h);
      up |= on_upper[e] != 0;
      low |= on_lower[e] != 0;
    }
    if (ext.size() != 2 || up == low) continue;
    const int v = g.at(ext[0]) == g.other(ext[1]) ? g.at(ext[0]) : g.other(ext[0]) == g.at(ext[1]) ? g.other(ext[0]) : -1;
    if (v < 0 || b.on_o(v)) continue;
    skip[f] = 1;
    ++pockets;
  }

  std::vector<std::vector<int>> adj(nx);
  std::set<std::pair<int, int>> links;
  auto link = [&](int f1, int f2) {
    if (skip[f1] || skip[f2] || f1 == f2) return;
    if (f1 > f2) std::swap(f1, f2);
    if (!links.emplace(f1, f2).second) return;
    adj[f1].push_back(f2);
    adj[f2].push_back(f1);
  };
  for (int e = 0; e < g.edge_slots(); ++e) {
    if (g.edge(e).alive && !g.edge(e).gsp && in_x(e)) link(xface[2 * e], xface[2 * e + 1]);
  }
  // faces met in turn around an exterior vertex once its pockets are gone
  for (int v = 0; v < g.vertex_slots(); ++v) {
    if (!g.vertex(v).alive || b.on_o(v)) continue;
    std::vector<int> around;
    for (int h : g.rotation(v)) {
      if (in_x(MixedGraph::edge_of(h)) && !skip[xface[h]]) around.push_back(xface[h]);
    }
    for (size_t i = 0; i + 1 < around.size(); ++i) link(around[i], around[i + 1]);
    if (around.size() > 2) link(around.back(), around.front());
  }
  if (static_cast<int>(links.size()) != nx - 2 - pockets) {
    throw InternalError("exterior faces do not form a tree");
  }
  const int a = xface[2 * b.upper.front()], z = xface[2 * b.upper.back()];
  const auto spine = tree_path(adj, a, z);
  if (spine.empty()) throw InternalError("exterior faces do not form a tree");
  for (int f : spine) {
    PartnerPair pp;
    pp.kind = PartnerKind::Exterior;
    pp.face = f;
    for (int h : xfaces[f]) {
      const int e = MixedGraph::edge_of(h);
      if (on_upper[e] && !(h & 1)) pp.e_mu.push_back(e);
      if (on_lower[e] && (h & 1)) pp.e_lambda.push_back(e);
    }
    if (pp.e_mu.empty() || pp.e_lambda.empty()) {
      throw InternalError("exterior face " + std::to_string(f) + " lacks a partner side");
    }
    sys.exterior.push_back(std::move(pp));
  }
  return sys;
}

PartnerClauses build_partner_clauses(const StFriendlyGraph& sf, const PartnerSystem& sys) {
  const MixedGraph& g = sf.graph;
  PartnerClauses pc;
  const int ni = static_cast<int>(sys.interior.size());
  pc.variables = ni + static_cast<int>(sys.exterior.size());

  for (const ChordImplication& ci : sys.chords) {
    // premise takes mu (false) implies conclusion takes mu
    pc.clauses.emplace_back(Lit::pos(ci.premise), Lit::neg(ci.conclusion));
  }

  // edge -> interior variables using it on each side
  std::map<int, std::vector<int>> lambda_users, mu_users;
  for (int i = 0; i < ni; ++i) {
    for (int e : sys.interior[i].e_lambda) lambda_users[e].push_back(i);
    for (int e : sys.interior[i].e_mu) mu_users[e].push_back(i);
  }

  auto terminal_free = [&](int v) {
    for (int e : sys.committed) {
      const MixedEdge& me = g.edge(e);
      if (!me.forbidden && (me.tail == v || me.head == v)) return true;
    }
    return false;
  };
  const bool free_first = terminal_free(sf.s), free_last = terminal_free(sf.t);

  for (size_t k = 0; k < sys.exterior.size(); ++k) {
    // the undirected path may leave a terminal through its own exterior edge
    if ((k == 0 && free_first) || (k + 1 == sys.exterior.size() && free_last)) continue;
    const int y = ni + static_cast<int>(k);
    const PartnerPair& pp = sys.exterior[k];
    for (int e : pp.e_lambda) {
      const MixedEdge& me = g.edge(e);
      if (me.forbidden) pc.clauses.emplace_back(Lit::neg(y), Lit::neg(y));
      if (me.shareable) continue;
      for (int x : lambda_users[e]) pc.clauses.emplace_back(Lit::neg(y), Lit::neg(x));
    }
    for (int e : pp.e_mu) {
      const MixedEdge& me = g.edge(e);
      if (me.forbidden) pc.clauses.emplace_back(Lit::pos(y), Lit::pos(y));
      if (me.shareable) continue;
      for (int x : mu_users[e]) pc.clauses.emplace_back(Lit::pos(y), Lit::pos(x));
    }
  }
  return pc;
}

bool partner_satisfiable(const PartnerClauses& pc) {
  TwoSatSolver solver(pc.variables);
  for (const auto& [a, c] : pc.clauses) solver.add_clause(a, c);
  return solver.solve().has_value();
}

PartnerDecision decide_via_partners(const ExtendedDual& ed) {
  const ShortestPathDag dag = build_gsp(ed);
  PartnerDecision d;
  d.normalization = normalize(build_st_friendly(ed, dag));
  d.system = extract_partners(d.normalization.graph);
  d.clauses = build_partner_clauses(d.normalization.graph, d.system);
  d.yes = partner_satisfiable(d.clauses);
  return d;
}

}  // namespace geoinsert
