#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <set>
#include <stdexcept>

#include "geoinsert/consistency.hpp"
#include "geoinsert/shortest_paths.hpp"
#include "geoinsert/testkit.hpp"

namespace geoinsert::testkit {

namespace {

using Point = std::pair<long long, long long>;

long long cross(const Point& o, const Point& a, const Point& b) {
  return (a.first - o.first) * (b.second - o.second) - (a.second - o.second) * (b.first - o.first);
}

int sign(long long x) { return (x > 0) - (x < 0); }

// Segments are assumed to have endpoints in general position (no three
// points collinear); sharing an endpoint is not a crossing.
bool segments_cross(const Point& a, const Point& b, const Point& c, const Point& d) {
  if (a == c || a == d || b == c || b == d) return false;
  return sign(cross(a, b, c)) * sign(cross(a, b, d)) < 0 && sign(cross(c, d, a)) * sign(cross(c, d, b)) < 0;
}

bool connected(int n, const std::vector<std::pair<int, int>>& edges) {
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  int components = n;
  for (const auto& [u, v] : edges) {
    const int a = find(u), b = find(v);
    if (a != b) {
      parent[a] = b;
      --components;
    }
  }
  return components == 1;
}

Instance make(std::string name, EmbeddedGraph g, VertexId s, VertexId t) {
  Instance inst;
  inst.graph = std::move(g);
  inst.s = s;
  inst.t = t;
  inst.name = std::move(name);
  return inst;
}

std::pair<VertexId, VertexId> pick_terminals(const EmbeddedGraph& g, std::mt19937_64& rng) {
  std::vector<std::pair<VertexId, VertexId>> candidates;
  for (VertexId u = 0; u < g.vertex_count(); ++u) {
    for (VertexId v = u + 1; v < g.vertex_count(); ++v) {
      if (!g.adjacent(u, v)) candidates.emplace_back(u, v);
    }
  }
  if (candidates.empty()) throw std::invalid_argument("no non-adjacent vertex pair");
  std::uniform_int_distribution<size_t> pick(0, candidates.size() - 1);
  auto st = candidates[pick(rng)];
  if (rng() & 1) std::swap(st.first, st.second);
  return st;
}

}  // namespace

EmbeddedGraph embed_straight_line(const std::vector<Point>& points,
                                  const std::vector<std::pair<VertexId, VertexId>>& edges) {
  const int n = static_cast<int>(points.size());
  std::vector<std::vector<VertexId>> rot(n);
  for (const auto& [u, v] : edges) {
    rot[u].push_back(v);
    rot[v].push_back(u);
  }
  for (int v = 0; v < n; ++v) {
    const auto [x, y] = points[v];
    std::sort(rot[v].begin(), rot[v].end(), [&](VertexId a, VertexId b) {
      const double ta = std::atan2(static_cast<double>(points[a].second - y), static_cast<double>(points[a].first - x));
      const double tb = std::atan2(static_cast<double>(points[b].second - y), static_cast<double>(points[b].first - x));
      return ta < tb;
    });
  }
  return EmbeddedGraph::checked(std::move(rot));
}

Instance cycle_c4() {
  return make("c4", embed_straight_line({{0, 0}, {2, 0}, {2, 2}, {0, 2}}, {{0, 1}, {1, 2}, {2, 3}, {3, 0}}), 0, 2);
}

Instance k4_planar() {
  return make("k4", embed_straight_line({{0, 0}, {6, 0}, {3, 6}, {3, 2}}, {{0, 1}, {1, 2}, {2, 0}, {0, 3}, {1, 3}, {2, 3}}),
              0, 0);
}

Instance two_triangles() {
  // u = 0, v = 1, s = 2, t = 3
  return make("two_triangles", embed_straight_line({{0, 0}, {0, 4}, {-2, 2}, {2, 2}}, {{0, 1}, {0, 2}, {1, 2}, {0, 3}, {1, 3}}),
              2, 3);
}

Instance wheel_i2() {
  // u = 0, v = 1, w = 2, s = 3, t = 4
  return make("wheel_i2",
              embed_straight_line({{0, 0}, {8, 0}, {4, 6}, {4, 2}, {-3, -2}}, {{0, 1}, {1, 2}, {2, 0}, {3, 0}, {3, 1}, {3, 2}, {4, 0}}),
              3, 4);
}

Instance path_p3() { return make("p3", embed_straight_line({{0, 0}, {1, 0}, {2, 1}}, {{0, 1}, {1, 2}}), 0, 2); }

Instance star(int leaves) {
  std::vector<Point> pts{{0, 0}};
  std::vector<std::pair<VertexId, VertexId>> edges;
  const Point dirs[] = {{10, 0}, {7, 7}, {0, 10}, {-7, 7}, {-10, 0}, {-7, -7}, {0, -10}, {7, -7},
                        {10, 3}, {3, 10}, {-3, 10}, {-10, 3}};
  if (leaves < 2 || leaves > 12) throw std::invalid_argument("star supports 2..12 leaves");
  for (int i = 0; i < leaves; ++i) {
    pts.push_back(dirs[i]);
    edges.emplace_back(0, i + 1);
  }
  return make("star" + std::to_string(leaves), embed_straight_line(pts, edges), 1, 2);
}

Instance hex_patch(int rows, int cols, std::uint64_t seed) {
  if (rows < 2 || cols < 3) throw std::invalid_argument("hex patch needs rows >= 2 and cols >= 3");
  // brick-wall drawing of the honeycomb: maximum degree three
  std::vector<Point> pts;
  std::vector<std::pair<VertexId, VertexId>> edges;
  auto id = [cols](int i, int j) { return i * cols + j; };
  for (int i = 0; i < rows; ++i) {
    for (int j = 0; j < cols; ++j) {
      pts.emplace_back(2 * j, 2 * i + (j % 2));
      if (j + 1 < cols) edges.emplace_back(id(i, j), id(i, j + 1));
      if (i + 1 < rows && (i + j) % 2 == 0) edges.emplace_back(id(i, j), id(i + 1, j));
    }
  }
  EmbeddedGraph g = embed_straight_line(pts, edges);
  std::mt19937_64 rng(seed);
  const auto [s, t] = pick_terminals(g, rng);
  return make("hex" + std::to_string(rows) + "x" + std::to_string(cols) + "_" + std::to_string(seed), std::move(g), s, t);
}

Instance gen_random_geometric(int n, int delta_max, std::uint64_t seed) {
  if (n < 4) throw std::invalid_argument("gen_random_geometric requires n >= 4");
  if (delta_max < 2) throw std::invalid_argument("gen_random_geometric requires delta_max >= 2");
  std::mt19937_64 rng(seed * 0x9e3779b97f4a7c15ULL + 0x632be59bd9b4e019ULL);
  const long long extent = 40LL * n;
  std::uniform_int_distribution<long long> coord(0, extent);

  for (int attempt = 0; attempt < 200; ++attempt) {
    std::vector<Point> pts;
    std::set<Point> used;
    while (static_cast<int>(pts.size()) < n) {
      const Point p{coord(rng), coord(rng)};
      if (used.count(p)) continue;
      bool collinear = false;
      for (size_t a = 0; a < pts.size() && !collinear; ++a) {
        for (size_t b = a + 1; b < pts.size() && !collinear; ++b) collinear = cross(pts[a], pts[b], p) == 0;
      }
      if (collinear) continue;
      used.insert(p);
      pts.push_back(p);
    }

    std::vector<std::pair<int, int>> pairs;
    for (int u = 0; u < n; ++u) {
      for (int v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
    }
    auto len2 = [&](const std::pair<int, int>& e) {
      const long long dx = pts[e.first].first - pts[e.second].first;
      const long long dy = pts[e.first].second - pts[e.second].second;
      return dx * dx + dy * dy;
    };
    std::sort(pairs.begin(), pairs.end(), [&](const auto& a, const auto& b) { return len2(a) < len2(b); });

    std::vector<int> deg(n, 0);
    std::vector<std::pair<int, int>> edges;
    for (const auto& e : pairs) {
      if (deg[e.first] >= delta_max || deg[e.second] >= delta_max) continue;
      bool ok = true;
      for (const auto& f : edges) {
        if (segments_cross(pts[e.first], pts[e.second], pts[f.first], pts[f.second])) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;
      edges.push_back(e);
      ++deg[e.first];
      ++deg[e.second];
    }
    if (!connected(n, edges)) continue;

    // drop a random share of the non-bridge edges
    std::shuffle(edges.begin(), edges.end(), rng);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    const double drop = unit(rng) * 0.6;
    const int extra = static_cast<int>(edges.size()) - (n - 1);
    int to_drop = static_cast<int>(drop * extra);
    for (size_t i = 0; i < edges.size() && to_drop > 0;) {
      auto trial = edges;
      trial.erase(trial.begin() + static_cast<long>(i));
      if (connected(n, trial)) {
        edges = std::move(trial);
        --to_drop;
      } else {
        ++i;
      }
    }

    EmbeddedGraph g = embed_straight_line(pts, edges);
    bool has_pair = false;
    for (VertexId u = 0; u < n && !has_pair; ++u) has_pair = g.degree(u) < n - 1;
    if (!has_pair) continue;
    const auto [s, t] = pick_terminals(g, rng);
    return make("geometric_n" + std::to_string(n) + "_d" + std::to_string(delta_max) + "_s" + std::to_string(seed),
                std::move(g), s, t);
  }
  throw std::invalid_argument("gen_random_geometric: could not satisfy constraints");
}

Instance gen_random_planar(int n, int delta_max, std::uint64_t seed) {
  if (n < 4) throw std::invalid_argument("gen_random_planar requires n >= 4");
  if (delta_max < 2) throw std::invalid_argument("gen_random_planar requires delta_max >= 2");
  std::mt19937_64 rng(seed * 0xbf58476d1ce4e5b9ULL + 0x94d049bb133111ebULL);

  for (int attempt = 0; attempt < 200; ++attempt) {
    // random tree with a random rotation system
    std::vector<std::vector<VertexId>> rot(n);
    bool ok = true;
    for (int v = 1; v < n && ok; ++v) {
      std::vector<int> open;
      for (int u = 0; u < v; ++u) {
        if (static_cast<int>(rot[u].size()) < delta_max) open.push_back(u);
      }
      if (open.empty()) {
        ok = false;
        break;
      }
      const int u = open[std::uniform_int_distribution<size_t>(0, open.size() - 1)(rng)];
      const size_t at = std::uniform_int_distribution<size_t>(0, rot[u].size())(rng);
      rot[u].insert(rot[u].begin() + static_cast<long>(at), v);
      rot[v].push_back(u);
    }
    if (!ok) continue;

    // split random faces by chords between corners of the same face
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    const int target = static_cast<int>(unit(rng) * 1.6 * n);
    int failures = 0;
    for (int added = 0; added < target && failures < 40 * n;) {
      const EmbeddedGraph g = EmbeddedGraph::from_rotations(rot);
      const Face& f = g.faces()[std::uniform_int_distribution<size_t>(0, g.faces().size() - 1)(rng)];
      const size_t len = f.boundary.size();
      const size_t i = std::uniform_int_distribution<size_t>(0, len - 1)(rng);
      const size_t j = std::uniform_int_distribution<size_t>(0, len - 1)(rng);
      const DartId du = f.boundary[i], dv = f.boundary[j];
      const VertexId u = g.tail(du), v = g.tail(dv);
      if (u == v || g.adjacent(u, v) || g.degree(u) >= delta_max || g.degree(v) >= delta_max) {
        ++failures;
        continue;
      }
      // the face left of du is the corner right after rotation entry du
      const int pu = g.position(du) + 1, pv = g.position(dv) + 1;
      rot[u].insert(rot[u].begin() + pu, v);
      rot[v].insert(rot[v].begin() + pv, u);
      ++added;
    }

    EmbeddedGraph g = EmbeddedGraph::checked(rot);
    bool has_pair = false;
    for (VertexId u = 0; u < n && !has_pair; ++u) has_pair = g.degree(u) < n - 1;
    if (!has_pair) continue;
    const auto [s, t] = pick_terminals(g, rng);
    return make("random_n" + std::to_string(n) + "_d" + std::to_string(delta_max) + "_s" + std::to_string(seed),
                std::move(g), s, t);
  }
  throw std::invalid_argument("gen_random_planar: could not satisfy constraints");
}

Instance gen_glued_blocks(int blocks, int delta_max, std::uint64_t seed) {
  if (blocks < 2) throw std::invalid_argument("gen_glued_blocks requires at least two blocks");
  if (delta_max < 4) throw std::invalid_argument("gen_glued_blocks requires delta_max >= 4");
  std::mt19937_64 rng(seed * 0x9e3779b97f4a7c15ULL + 0x632be59bd9b4e019ULL);
  auto uniform = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };
  auto block = [&] {
    return gen_random_planar(uniform(4, 7), uniform(2, std::min(3, delta_max - 1)), rng()).graph.rotations();
  };

  std::vector<std::vector<VertexId>> rot = block();
  for (int b = 1; b < blocks; ++b) {
    const auto h = block();
    std::vector<std::pair<VertexId, VertexId>> joints;
    for (VertexId a = 0; a < static_cast<VertexId>(rot.size()); ++a) {
      for (VertexId x = 0; x < static_cast<VertexId>(h.size()); ++x) {
        if (rot[a].size() + h[x].size() <= static_cast<size_t>(delta_max)) joints.emplace_back(a, x);
      }
    }
    if (joints.empty()) break;
    const auto [a, x] = joints[uniform(0, static_cast<int>(joints.size()) - 1)];
    // vertices of the new block other than x get fresh ids; x becomes a
    const VertexId offset = static_cast<VertexId>(rot.size());
    auto id = [&](VertexId y) { return y == x ? a : (y < x ? offset + y : offset + y - 1); };
    for (VertexId y = 0; y < static_cast<VertexId>(h.size()); ++y) {
      if (y == x) continue;
      std::vector<VertexId> r;
      for (VertexId z : h[y]) r.push_back(id(z));
      rot.push_back(std::move(r));
    }
    // the block sits inside one corner of a
    std::vector<VertexId> fan;
    for (VertexId z : h[x]) fan.push_back(id(z));
    const int corner = uniform(0, static_cast<int>(rot[a].size()) - 1);
    rot[a].insert(rot[a].begin() + corner + 1, fan.begin(), fan.end());
  }

  EmbeddedGraph g = EmbeddedGraph::checked(std::move(rot));
  // prefer terminals whose canonical shortest path is inconsistent
  std::vector<std::pair<VertexId, VertexId>> pairs;
  for (VertexId u = 0; u < g.vertex_count(); ++u) {
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
      if (u != v && !g.adjacent(u, v)) pairs.emplace_back(u, v);
    }
  }
  if (pairs.empty()) throw std::invalid_argument("gen_glued_blocks: no non-adjacent vertex pair");
  std::shuffle(pairs.begin(), pairs.end(), rng);
  std::pair<VertexId, VertexId> st = pairs.front();
  for (const auto& [u, v] : pairs) {
    const ExtendedDual ed = ExtendedDual::build(g, u, v);
    if (!is_consistent(ed, bfs_shortest(ed))) {
      st = {u, v};
      break;
    }
  }
  return make("glued_b" + std::to_string(blocks) + "_d" + std::to_string(delta_max) + "_s" + std::to_string(seed),
              std::move(g), st.first, st.second);
}

Instance perturb(const Instance& base, int steps, int delta_max, std::uint64_t seed) {
  std::mt19937_64 rng(seed * 0xbf58476d1ce4e5b9ULL + 0x94d049bb133111ebULL);
  auto uniform = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };
  auto rot = base.graph.rotations();
  auto replace = [&](VertexId v, VertexId from, VertexId to) { *std::find(rot[v].begin(), rot[v].end(), from) = to; };
  auto insert_before = [&](VertexId v, VertexId anchor, VertexId x) {
    rot[v].insert(std::find(rot[v].begin(), rot[v].end(), anchor), x);
  };
  int done = 0;
  for (int attempt = 0; done < steps && attempt < 50 * steps; ++attempt) {
    const EmbeddedGraph g = EmbeddedGraph::from_rotations(rot);
    const int kind = uniform(0, 2);
    if (kind == 0) {  // subdivide an edge
      const DartId d = g.edge_dart(uniform(0, g.edge_count() - 1));
      const VertexId u = g.tail(d), v = g.head(d), w = static_cast<VertexId>(rot.size());
      replace(u, v, w);
      replace(v, u, w);
      rot.push_back({u, v});
    } else if (kind == 1) {  // pendant vertex in some corner
      const VertexId u = uniform(0, g.vertex_count() - 1);
      if (g.degree(u) >= delta_max) continue;
      const VertexId w = static_cast<VertexId>(rot.size());
      rot[u].insert(rot[u].begin() + uniform(0, g.degree(u) - 1), w);
      rot.push_back({u});
    } else {  // chord inside a face
      const Face& f = g.faces()[uniform(0, g.face_count() - 1)];
      const int len = static_cast<int>(f.boundary.size());
      // corner i sits at head(boundary[i]), between tail(boundary[i]) and the next dart
      const int i = uniform(0, len - 1), j = uniform(0, len - 1);
      const VertexId a = g.head(f.boundary[i]), b = g.head(f.boundary[j]);
      if (a == b || g.adjacent(a, b) || (a == base.s && b == base.t) || (a == base.t && b == base.s) || g.degree(a) >= delta_max || g.degree(b) >= delta_max) continue;
      insert_before(a, g.tail(f.boundary[i]), b);
      insert_before(b, g.tail(f.boundary[j]), a);
    }
    ++done;
  }
  return make(base.name + "_p" + std::to_string(steps) + "_s" + std::to_string(seed),
              EmbeddedGraph::checked(std::move(rot)), base.s, base.t);
}

std::vector<Instance> standard_corpus(int seeds) {
  std::vector<Instance> corpus;
  for (int m = 1; m <= 4; ++m) corpus.push_back(gen_fig2(m));
  for (int n : {8, 12, 16, 20}) {
    for (int d : {3, 4, 5, 6, 8}) {
      for (int s = 1; s <= seeds; ++s) {
        try {
          corpus.push_back(gen_random_planar(n, d, s));
          corpus.push_back(gen_random_geometric(n, d, s));
        } catch (const std::invalid_argument&) {
          // degree bound unreachable at this size
        }
      }
    }
  }
  return corpus;
}

}  // namespace geoinsert::testkit
