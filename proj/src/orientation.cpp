#include "odiam/orientation.hpp"

#include <algorithm>
#include <deque>
#include <random>
#include <string>

#include "odiam/error.hpp"

namespace odiam {

PartialOrientation::PartialOrientation(const Multigraph& g)
    : graph_(&g), state_(static_cast<std::size_t>(g.edge_count()), kUnset), unassigned_(g.edge_count()) {}

std::optional<Arc> PartialOrientation::arc(EdgeId e) const {
  const auto s = state_[static_cast<std::size_t>(e)];
  if (s == kUnset) return std::nullopt;
  const auto& ends = graph_->ends(e);
  return s == kForward ? Arc{ends.a, ends.b} : Arc{ends.b, ends.a};
}

void PartialOrientation::assign(EdgeId e, Arc direction) {
  const auto& ends = graph_->ends(e);
  std::int8_t want;
  if (direction.tail == ends.a && direction.head == ends.b) {
    want = kForward;
  } else if (direction.tail == ends.b && direction.head == ends.a) {
    want = kBackward;
  } else {
    throw Error(ErrorCode::kEndpointMismatch,
                "edge " + std::to_string(e) + " does not join " + std::to_string(direction.tail) +
                    " and " + std::to_string(direction.head));
  }
  auto& slot = state_[static_cast<std::size_t>(e)];
  if (slot == want) return;
  if (slot != kUnset) {
    throw Error(ErrorCode::kConflictingDirection,
                "edge " + std::to_string(e) + " already oriented " + std::to_string(direction.head) +
                    "->" + std::to_string(direction.tail) +
                    (trace_.empty() ? std::string() : " (step " + trace_.back().label + ")"));
  }
  slot = want;
  --unassigned_;
  if (!trace_.empty()) trace_.back().arcs.emplace_back(e, direction);
}

void PartialOrientation::orient_between(const VertexSet& from, const VertexSet& to) {
  if (from.intersects(to)) throw Error(ErrorCode::kOverlappingSets, "orient_between on overlapping sets");
  for (VertexId x : from.members()) {
    for (EdgeId e : graph_->incident(x)) {
      VertexId y = graph_->ends(e).other(x);
      if (to.contains(y)) assign(e, {x, y});
    }
  }
}

void PartialOrientation::orient_unassigned_between(const VertexSet& from, const VertexSet& to) {
  if (from.intersects(to)) throw Error(ErrorCode::kOverlappingSets, "orient_unassigned_between on overlapping sets");
  for (VertexId x : from.members()) {
    for (EdgeId e : graph_->incident(x)) {
      VertexId y = graph_->ends(e).other(x);
      if (to.contains(y) && !assigned(e)) assign(e, {x, y});
    }
  }
}

void PartialOrientation::begin_step(std::string label) {
  trace_.push_back({std::move(label), {}});
}

Digraph::Digraph(int vertex_count, std::vector<Arc> arcs)
    : arcs_(std::move(arcs)),
      out_(static_cast<std::size_t>(vertex_count)),
      in_(static_cast<std::size_t>(vertex_count)) {
  for (const Arc& a : arcs_) {
    out_[static_cast<std::size_t>(a.tail)].push_back(a.head);
    in_[static_cast<std::size_t>(a.head)].push_back(a.tail);
  }
}

Digraph Digraph::reversed() const {
  std::vector<Arc> flipped;
  flipped.reserve(arcs_.size());
  for (const Arc& a : arcs_) flipped.push_back({a.head, a.tail});
  return Digraph(vertex_count(), std::move(flipped));
}

namespace {

template <typename Chooser>
Digraph complete_with(const PartialOrientation& p, Chooser choose) {
  const Multigraph& g = p.graph();
  std::vector<Arc> arcs;
  arcs.reserve(static_cast<std::size_t>(g.edge_count()));
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    if (auto a = p.arc(e)) {
      arcs.push_back(*a);
    } else {
      arcs.push_back(choose(e, g.ends(e)));
    }
  }
  return Digraph(g.vertex_count(), std::move(arcs));
}

std::vector<int> directed_bfs(const Digraph& d, VertexId source, bool backward) {
  std::vector<int> dist(static_cast<std::size_t>(d.vertex_count()), kUnreachable);
  std::deque<VertexId> queue{source};
  dist[static_cast<std::size_t>(source)] = 0;
  while (!queue.empty()) {
    VertexId x = queue.front();
    queue.pop_front();
    const auto& next = backward ? d.in_neighbors(x) : d.out_neighbors(x);
    for (VertexId y : next) {
      if (dist[static_cast<std::size_t>(y)] == kUnreachable) {
        dist[static_cast<std::size_t>(y)] = dist[static_cast<std::size_t>(x)] + 1;
        queue.push_back(y);
      }
    }
  }
  return dist;
}

}  // namespace

Digraph complete_arbitrarily(const PartialOrientation& p) {
  return complete_with(p, [](EdgeId, const EdgeEnds& ends) {
    return ends.a < ends.b ? Arc{ends.a, ends.b} : Arc{ends.b, ends.a};
  });
}

Digraph complete_randomly(const PartialOrientation& p, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  return complete_with(p, [&rng](EdgeId, const EdgeEnds& ends) {
    return (rng() & 1U) ? Arc{ends.a, ends.b} : Arc{ends.b, ends.a};
  });
}

Digraph to_digraph(const PartialOrientation& p) {
  if (p.unassigned_count() != 0) {
    throw Error(ErrorCode::kIncompleteOrientation,
                std::to_string(p.unassigned_count()) + " edges left unassigned");
  }
  return complete_arbitrarily(p);
}

DirectedDistanceMap directed_distances(const Digraph& d, VertexId source) {
  return {source, directed_bfs(d, source, false), directed_bfs(d, source, true)};
}

std::vector<int> directed_distances_from(const Digraph& d, VertexId source) {
  return directed_bfs(d, source, false);
}

std::vector<int> directed_distances_to(const Digraph& d, VertexId target) {
  return directed_bfs(d, target, true);
}

std::vector<std::vector<int>> all_pairs_directed(const Digraph& d) {
  std::vector<std::vector<int>> rows;
  rows.reserve(static_cast<std::size_t>(d.vertex_count()));
  for (VertexId s = 0; s < d.vertex_count(); ++s) rows.push_back(directed_bfs(d, s, false));
  return rows;
}

bool is_strong(const Digraph& d) {
  if (d.vertex_count() == 0) return true;
  auto fwd = directed_bfs(d, 0, false);
  auto bwd = directed_bfs(d, 0, true);
  auto reached = [](int x) { return x != kUnreachable; };
  return std::all_of(fwd.begin(), fwd.end(), reached) && std::all_of(bwd.begin(), bwd.end(), reached);
}

int directed_diameter(const Digraph& d) {
  int best = 0;
  for (VertexId s = 0; s < d.vertex_count(); ++s) {
    for (int x : directed_bfs(d, s, false)) {
      if (x == kUnreachable) throw Error(ErrorCode::kNotStrong, "orientation is not strongly connected");
      best = std::max(best, x);
    }
  }
  return best;
}

int theta(const Digraph& d, VertexId x, VertexId y) {
  auto from_x = directed_bfs(d, x, false);
  auto to_x = directed_bfs(d, x, true);
  return std::max(from_x[static_cast<std::size_t>(y)], to_x[static_cast<std::size_t>(y)]);
}

}  // namespace odiam
