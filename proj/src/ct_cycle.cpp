#include <algorithm>
#include <deque>

#include "odiam/constructor.hpp"
#include "odiam/error.hpp"

namespace odiam {

namespace {

// Shortest walk from `from` to `to` that avoids edge `skip`, follows assigned
// edges only forwards and unassigned edges either way. Returns the edge ids
// in order, or nothing when `to` is unreachable.
std::optional<std::vector<EdgeId>> mixed_path(const Multigraph& g, const PartialOrientation& p,
                                              VertexId from, VertexId to, EdgeId skip) {
  const auto n = static_cast<std::size_t>(g.vertex_count());
  std::vector<EdgeId> via(n, -1);
  std::vector<char> seen(n, 0);
  std::deque<VertexId> queue{from};
  seen[static_cast<std::size_t>(from)] = 1;
  while (!queue.empty()) {
    VertexId x = queue.front();
    queue.pop_front();
    if (x == to) break;
    for (EdgeId f : g.incident(x)) {
      if (f == skip) continue;
      VertexId y = g.ends(f).other(x);
      if (auto a = p.arc(f); a && a->tail != x) continue;
      if (seen[static_cast<std::size_t>(y)]) continue;
      seen[static_cast<std::size_t>(y)] = 1;
      via[static_cast<std::size_t>(y)] = f;
      queue.push_back(y);
    }
  }
  if (!seen[static_cast<std::size_t>(to)]) return std::nullopt;
  std::vector<EdgeId> path;
  for (VertexId x = to; x != from;) {
    EdgeId f = via[static_cast<std::size_t>(x)];
    path.push_back(f);
    x = g.ends(f).other(x);
  }
  std::reverse(path.begin(), path.end());
  return path;
}

}  // namespace

long long ct_bound(int k) {
  return static_cast<long long>(k - 2) * (1LL << ((k - 1) / 2)) + 2;
}

int shortest_cycle_through(const Digraph& d, EdgeId e) {
  const Arc& a = d.arc(e);
  const auto back = directed_distances_from(d, a.head);
  const int len = back[static_cast<std::size_t>(a.tail)];
  return len == kUnreachable ? kUnreachable : len + 1;
}

Digraph ct_cycle_orientation(const Multigraph& g) {
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    if (g.has_parallel_twin(e)) throw Error(ErrorCode::kInvalidSpec, "graph has parallel edges");
  }
  const auto bridges = find_bridges(g);
  std::vector<std::pair<int, EdgeId>> order;
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    const bool bridge = std::binary_search(bridges.begin(), bridges.end(), e);
    order.emplace_back(bridge ? kUnreachable : edge_girth(g, e), e);
  }
  std::sort(order.begin(), order.end());

  PartialOrientation p(g);
  for (const auto& [len, e] : order) {
    if (len == kUnreachable || p.assigned(e)) continue;
    const EdgeEnds ends = g.ends(e);
    auto back = mixed_path(g, p, ends.b, ends.a, e);
    auto fwd = mixed_path(g, p, ends.a, ends.b, e);
    const bool use_back = back && (!fwd || back->size() <= fwd->size());
    if (!use_back && !fwd) continue;
    VertexId x = use_back ? ends.b : ends.a;
    p.assign(e, use_back ? Arc{ends.a, ends.b} : Arc{ends.b, ends.a});
    for (EdgeId f : use_back ? *back : *fwd) {
      VertexId y = g.ends(f).other(x);
      p.assign(f, {x, y});
      x = y;
    }
  }
  return complete_arbitrarily(p);
}

}  // namespace odiam
