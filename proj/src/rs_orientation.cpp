#include <deque>

#include "odiam/constructor.hpp"
#include "odiam/error.hpp"

namespace odiam {

RSResult rs_orientation(const Multigraph& g, PartialOrientation& p, const VertexSet& r,
                        const VertexSet& s, bool reverse) {
  const int n = g.vertex_count();
  if (r.intersects(s)) throw Error(ErrorCode::kOverlappingSets, "R and S overlap");
  for (VertexId w : s.members()) {
    if (isolated_in(g, w, s)) {
      throw Error(ErrorCode::kIsolatedVertexInS, "vertex " + std::to_string(w) + " is isolated in G[S]");
    }
    if (isolated_in(g, w, r)) {
      throw Error(ErrorCode::kNoNeighborInR, "vertex " + std::to_string(w) + " has no neighbour in R");
    }
  }

  RSResult out{VertexSet(n), VertexSet(n), {}};
  std::vector<int> layer(static_cast<std::size_t>(n), -1);
  for (VertexId root : s.members()) {
    if (layer[static_cast<std::size_t>(root)] >= 0) continue;
    layer[static_cast<std::size_t>(root)] = 0;
    std::deque<VertexId> queue{root};
    while (!queue.empty()) {
      VertexId x = queue.front();
      queue.pop_front();
      for (VertexId y : g.neighbors(x)) {
        if (s.contains(y) && layer[static_cast<std::size_t>(y)] < 0) {
          layer[static_cast<std::size_t>(y)] = layer[static_cast<std::size_t>(x)] + 1;
          queue.push_back(y);
        }
      }
    }
  }
  for (VertexId w : s.members()) {
    (layer[static_cast<std::size_t>(w)] % 2 == 0 ? out.v1 : out.v2).insert(w);
  }

  auto put = [&](EdgeId e, VertexId tail, VertexId head) {
    Arc a = reverse ? Arc{head, tail} : Arc{tail, head};
    p.assign(e, a);
    out.arcs.emplace_back(e, a);
  };
  for (VertexId w : s.members()) {
    const bool in_v1 = out.v1.contains(w);
    for (EdgeId e : g.incident(w)) {
      VertexId x = g.ends(e).other(w);
      if (r.contains(x)) {
        in_v1 ? put(e, x, w) : put(e, w, x);
      } else if (in_v1 && out.v2.contains(x)) {
        put(e, w, x);
      }
    }
  }
  return out;
}

}  // namespace odiam
