#include <stdexcept>
#include <string>

#include "geoinsert/testkit.hpp"

namespace geoinsert::testkit {

// Hub v of degree 6 joins two blocks that are point reflections of each other.
// The face around both blocks touches v twice, so the short route leaves the
// s-corner rotating one way around v and enters the t-corner rotating the
// other way. Each block is wrapped in m cap layers, which pushes every route
// that avoids v further out.
Instance gen_fig2(int m) {
  if (m < 1) throw std::invalid_argument("gen_fig2 requires m >= 1");

  std::vector<std::pair<long long, long long>> pts;
  std::vector<std::pair<VertexId, VertexId>> edges;
  auto add = [&](long long x, long long y) {
    pts.emplace_back(x, y);
    return static_cast<VertexId>(pts.size() - 1);
  };

  const VertexId v = add(0, 0);
  VertexId terminal[2] = {0, 0};
  for (int side = 0; side < 2; ++side) {
    const long long sg = side == 0 ? 1 : -1;  // side 1 is side 0 rotated by 180 degrees
    const VertexId a1 = add(sg * -6, sg * 6);
    const VertexId a2 = add(sg * -9, 0);
    const VertexId a3 = add(sg * -6, sg * -6);
    const VertexId x = add(sg * -5, sg * -2);
    terminal[side] = x;
    edges.insert(edges.end(), {{v, a1}, {v, a2}, {v, a3}, {a1, a2}, {a2, a3}, {x, a2}, {x, a3}});
    VertexId top = a1, mid = a2, bottom = a3;
    for (int k = 1; k <= m; ++k) {
      const VertexId nt = add(sg * (-6 - 6 * k), sg * (6 + 3 * k));
      const VertexId nm = add(sg * (-9 - 6 * k), 0);
      const VertexId nb = add(sg * (-6 - 6 * k), sg * (-6 - 3 * k));
      edges.insert(edges.end(), {{top, nt}, {mid, nm}, {bottom, nb}, {nt, nm}, {nm, nb}});
      top = nt;
      mid = nm;
      bottom = nb;
    }
  }

  Instance inst;
  inst.graph = embed_straight_line(pts, edges);
  inst.s = terminal[0];
  inst.t = terminal[1];
  inst.name = "fig2_m" + std::to_string(m);
  return inst;
}

}  // namespace geoinsert::testkit
