#include "odiam/graph.hpp"

#include <algorithm>
#include <deque>
#include <string>

#include "odiam/error.hpp"

namespace odiam {

Multigraph build_graph(int n, std::span<const std::pair<VertexId, VertexId>> edges) {
  if (n < 0) throw Error(ErrorCode::kVertexOutOfRange, "negative vertex count");
  Multigraph g;
  g.incidence_.resize(static_cast<std::size_t>(n));
  g.neighbors_.resize(static_cast<std::size_t>(n));
  g.ends_.reserve(edges.size());
  for (std::size_t i = 0; i < edges.size(); ++i) {
    auto [a, b] = edges[i];
    if (a < 0 || b < 0 || a >= n || b >= n) {
      throw Error(ErrorCode::kVertexOutOfRange,
                  "edge " + std::to_string(i) + " (" + std::to_string(a) + "," +
                      std::to_string(b) + ") outside 0.." + std::to_string(n - 1));
    }
    if (a == b) {
      throw Error(ErrorCode::kLoopEdge, "edge " + std::to_string(i) + " is a loop at " +
                                            std::to_string(a));
    }
    const auto id = static_cast<EdgeId>(g.ends_.size());
    g.ends_.push_back({a, b});
    g.incidence_[static_cast<std::size_t>(a)].push_back(id);
    g.incidence_[static_cast<std::size_t>(b)].push_back(id);
  }
  for (VertexId v = 0; v < n; ++v) {
    auto& nb = g.neighbors_[static_cast<std::size_t>(v)];
    for (EdgeId e : g.incidence_[static_cast<std::size_t>(v)]) nb.push_back(g.ends_[e].other(v));
    std::sort(nb.begin(), nb.end());
    nb.erase(std::unique(nb.begin(), nb.end()), nb.end());
  }
  return g;
}

bool Multigraph::adjacent(VertexId x, VertexId y) const {
  const auto& nb = neighbors(x);
  return std::binary_search(nb.begin(), nb.end(), y);
}

int Multigraph::multiplicity(VertexId x, VertexId y) const {
  int count = 0;
  for (EdgeId e : incident(x)) {
    if (ends(e).other(x) == y) ++count;
  }
  return count;
}

std::vector<EdgeId> Multigraph::edges_between(VertexId x, VertexId y) const {
  std::vector<EdgeId> out;
  for (EdgeId e : incident(x)) {
    if (ends(e).other(x) == y) out.push_back(e);
  }
  return out;
}

bool Multigraph::has_parallel_twin(EdgeId e) const {
  return multiplicity(ends(e).a, ends(e).b) > 1;
}

VertexSet Multigraph::all_vertices() const {
  VertexSet s(vertex_count());
  for (VertexId v = 0; v < vertex_count(); ++v) s.insert(v);
  return s;
}

VertexSet Multigraph::neighborhood_of(const VertexSet& s) const {
  VertexSet out(vertex_count());
  for (VertexId x : s.members()) {
    for (VertexId y : neighbors(x)) out.insert(y);
  }
  return out;
}

int Multigraph::edges_to(VertexId v, const VertexSet& s) const {
  int count = 0;
  for (EdgeId e : incident(v)) {
    if (s.contains(ends(e).other(v))) ++count;
  }
  return count;
}

namespace {

// BFS that ignores one edge instance (or none when skip < 0).
std::vector<int> bfs_skipping(const Multigraph& g, VertexId source, EdgeId skip) {
  std::vector<int> dist(static_cast<std::size_t>(g.vertex_count()), kUnreachable);
  std::deque<VertexId> queue;
  dist[static_cast<std::size_t>(source)] = 0;
  queue.push_back(source);
  while (!queue.empty()) {
    VertexId x = queue.front();
    queue.pop_front();
    for (EdgeId e : g.incident(x)) {
      if (e == skip) continue;
      VertexId y = g.ends(e).other(x);
      if (dist[static_cast<std::size_t>(y)] == kUnreachable) {
        dist[static_cast<std::size_t>(y)] = dist[static_cast<std::size_t>(x)] + 1;
        queue.push_back(y);
      }
    }
  }
  return dist;
}

}  // namespace

DistanceMap bfs_distances(const Multigraph& g, VertexId source) {
  if (source < 0 || source >= g.vertex_count()) {
    throw Error(ErrorCode::kVertexOutOfRange, "bfs source " + std::to_string(source));
  }
  return {source, bfs_skipping(g, source, -1)};
}

std::vector<int> distances_to_set(const Multigraph& g, const VertexSet& targets) {
  std::vector<int> dist(static_cast<std::size_t>(g.vertex_count()), kUnreachable);
  std::deque<VertexId> queue;
  for (VertexId t : targets.members()) {
    dist[static_cast<std::size_t>(t)] = 0;
    queue.push_back(t);
  }
  while (!queue.empty()) {
    VertexId x = queue.front();
    queue.pop_front();
    for (VertexId y : g.neighbors(x)) {
      if (dist[static_cast<std::size_t>(y)] == kUnreachable) {
        dist[static_cast<std::size_t>(y)] = dist[static_cast<std::size_t>(x)] + 1;
        queue.push_back(y);
      }
    }
  }
  return dist;
}

std::vector<std::vector<int>> all_pairs_distances(const Multigraph& g) {
  std::vector<std::vector<int>> rows;
  rows.reserve(static_cast<std::size_t>(g.vertex_count()));
  for (VertexId s = 0; s < g.vertex_count(); ++s) rows.push_back(bfs_skipping(g, s, -1));
  return rows;
}

bool is_connected(const Multigraph& g) {
  if (g.vertex_count() == 0) return true;
  auto dist = bfs_skipping(g, 0, -1);
  return std::none_of(dist.begin(), dist.end(), [](int d) { return d == kUnreachable; });
}

int diameter(const Multigraph& g) {
  int best = 0;
  for (VertexId s = 0; s < g.vertex_count(); ++s) {
    for (int d : bfs_skipping(g, s, -1)) {
      if (d == kUnreachable) throw Error(ErrorCode::kDisconnected, "graph is disconnected");
      best = std::max(best, d);
    }
  }
  return best;
}

std::vector<EdgeId> find_bridges(const Multigraph& g) {
  const auto n = static_cast<std::size_t>(g.vertex_count());
  std::vector<int> order(n, -1), low(n, 0);
  std::vector<EdgeId> bridges;
  struct Frame {
    VertexId v;
    EdgeId via;  // edge instance used to enter v; only this instance is skipped
    std::size_t next;
  };
  int clock = 0;
  for (VertexId root = 0; root < g.vertex_count(); ++root) {
    if (order[static_cast<std::size_t>(root)] != -1) continue;
    std::vector<Frame> stack{{root, -1, 0}};
    order[static_cast<std::size_t>(root)] = low[static_cast<std::size_t>(root)] = clock++;
    while (!stack.empty()) {
      Frame& f = stack.back();
      auto inc = g.incident(f.v);
      if (f.next < inc.size()) {
        EdgeId e = inc[f.next++];
        if (e == f.via) continue;
        VertexId w = g.ends(e).other(f.v);
        auto wi = static_cast<std::size_t>(w);
        if (order[wi] == -1) {
          order[wi] = low[wi] = clock++;
          stack.push_back({w, e, 0});
        } else {
          auto vi = static_cast<std::size_t>(f.v);
          low[vi] = std::min(low[vi], order[wi]);
        }
        continue;
      }
      Frame done = f;
      stack.pop_back();
      if (!stack.empty()) {
        auto pi = static_cast<std::size_t>(stack.back().v);
        auto ci = static_cast<std::size_t>(done.v);
        low[pi] = std::min(low[pi], low[ci]);
        if (low[ci] > order[pi]) bridges.push_back(done.via);
      }
    }
  }
  std::sort(bridges.begin(), bridges.end());
  return bridges;
}

bool is_bridgeless(const Multigraph& g) { return is_connected(g) && find_bridges(g).empty(); }

int edge_girth(const Multigraph& g, EdgeId e) {
  if (g.has_parallel_twin(e)) return 2;
  const auto& ends = g.ends(e);
  auto dist = bfs_skipping(g, ends.a, e);
  int d = dist[static_cast<std::size_t>(ends.b)];
  if (d == kUnreachable) {
    throw Error(ErrorCode::kBridgeEdge, "edge " + std::to_string(e) + " lies on no cycle");
  }
  return d + 1;
}

namespace {

std::vector<int> all_edge_girths(const Multigraph& g) {
  if (!is_bridgeless(g)) throw Error(ErrorCode::kNotBridgeless, "graph has a bridge or is disconnected");
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(g.edge_count()));
  for (EdgeId e = 0; e < g.edge_count(); ++e) out.push_back(edge_girth(g, e));
  return out;
}

}  // namespace

int max_edge_girth(const Multigraph& g) {
  auto all = all_edge_girths(g);
  if (all.empty()) throw Error(ErrorCode::kNotBridgeless, "graph has no edges");
  return *std::max_element(all.begin(), all.end());
}

int girth(const Multigraph& g) {
  auto all = all_edge_girths(g);
  if (all.empty()) throw Error(ErrorCode::kNotBridgeless, "graph has no edges");
  return *std::min_element(all.begin(), all.end());
}

bool isolated_in(const Multigraph& g, VertexId w, const VertexSet& s) {
  for (VertexId y : g.neighbors(w)) {
    if (s.contains(y)) return false;
  }
  return true;
}

}  // namespace odiam
