#pragma once

#include <limits>
#include <span>
#include <utility>
#include <vector>

#include "odiam/vertex_set.hpp"

namespace odiam {

inline constexpr int kUnreachable = std::numeric_limits<int>::max();

struct EdgeEnds {
  VertexId a;
  VertexId b;
  VertexId other(VertexId x) const { return x == a ? b : a; }
  friend bool operator==(const EdgeEnds&, const EdgeEnds&) = default;
};

// Loopless undirected multigraph. Vertices and edges are dense ids assigned in
// insertion order; parallel edges get distinct EdgeIds. Immutable once built.
class Multigraph {
 public:
  Multigraph() = default;

  int vertex_count() const { return static_cast<int>(incidence_.size()); }
  int edge_count() const { return static_cast<int>(ends_.size()); }

  const EdgeEnds& ends(EdgeId e) const { return ends_[static_cast<std::size_t>(e)]; }
  std::span<const EdgeId> incident(VertexId v) const {
    return incidence_[static_cast<std::size_t>(v)];
  }
  // Distinct neighbours in ascending order.
  const std::vector<VertexId>& neighbors(VertexId v) const {
    return neighbors_[static_cast<std::size_t>(v)];
  }
  bool adjacent(VertexId x, VertexId y) const;
  // Number of parallel edges joining x and y.
  int multiplicity(VertexId x, VertexId y) const;
  // EdgeIds joining x and y, ascending.
  std::vector<EdgeId> edges_between(VertexId x, VertexId y) const;
  bool has_parallel_twin(EdgeId e) const;

  VertexSet all_vertices() const;
  // Union of N(x) over x in s; members of s appear only if adjacent to s.
  VertexSet neighborhood_of(const VertexSet& s) const;
  // |[v, S]| counting edge multiplicity.
  int edges_to(VertexId v, const VertexSet& s) const;

  friend Multigraph build_graph(int n, std::span<const std::pair<VertexId, VertexId>> edges);

 private:
  std::vector<EdgeEnds> ends_;
  std::vector<std::vector<EdgeId>> incidence_;
  std::vector<std::vector<VertexId>> neighbors_;
};

// Throws kLoopEdge / kVertexOutOfRange.
Multigraph build_graph(int n, std::span<const std::pair<VertexId, VertexId>> edges);
inline Multigraph build_graph(int n, std::initializer_list<std::pair<VertexId, VertexId>> edges) {
  return build_graph(n, std::span<const std::pair<VertexId, VertexId>>(edges.begin(), edges.size()));
}
inline Multigraph build_graph(int n, const std::vector<std::pair<VertexId, VertexId>>& edges) {
  return build_graph(n, std::span<const std::pair<VertexId, VertexId>>(edges));
}

// Unweighted BFS distances; unreachable vertices hold kUnreachable.
struct DistanceMap {
  VertexId source = 0;
  std::vector<int> dist;
  int operator[](VertexId v) const { return dist[static_cast<std::size_t>(v)]; }
};

DistanceMap bfs_distances(const Multigraph& g, VertexId source);
// Multi-source BFS: distance from each vertex to the nearest member of `targets`.
std::vector<int> distances_to_set(const Multigraph& g, const VertexSet& targets);
// All-pairs distance matrix (row = source).
std::vector<std::vector<int>> all_pairs_distances(const Multigraph& g);

bool is_connected(const Multigraph& g);
// Throws kDisconnected.
int diameter(const Multigraph& g);

std::vector<EdgeId> find_bridges(const Multigraph& g);
bool is_bridgeless(const Multigraph& g);

// Length of the shortest cycle through e (2 when e has a parallel twin).
// Throws kBridgeEdge when no cycle contains e.
int edge_girth(const Multigraph& g, EdgeId e);
// Both throw kNotBridgeless.
int max_edge_girth(const Multigraph& g);
int girth(const Multigraph& g);

// True when w has no neighbour inside s (w itself need not be in s).
bool isolated_in(const Multigraph& g, VertexId w, const VertexSet& s);

}  // namespace odiam
