#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "odiam/graph.hpp"

namespace odiam {

struct Arc {
  VertexId tail;
  VertexId head;
  friend bool operator==(const Arc&, const Arc&) = default;
};

// One record per labelled construction step: the fresh arcs it assigned.
struct TraceRecord {
  std::string label;
  std::vector<std::pair<EdgeId, Arc>> arcs;
};
using ConstructionTrace = std::vector<TraceRecord>;

// Edge -> direction mapping that is filled in incrementally. Re-assigning the
// same direction is a no-op; assigning the opposite direction throws
// kConflictingDirection. The graph must outlive the orientation.
class PartialOrientation {
 public:
  explicit PartialOrientation(const Multigraph& g);

  const Multigraph& graph() const { return *graph_; }
  bool assigned(EdgeId e) const { return state_[static_cast<std::size_t>(e)] != kUnset; }
  std::optional<Arc> arc(EdgeId e) const;
  int unassigned_count() const { return unassigned_; }

  void assign(EdgeId e, Arc direction);
  // Directs every edge of [from, to] from the `from` side. Sets must be disjoint.
  void orient_between(const VertexSet& from, const VertexSet& to);
  // Same, but edges of [from, to] that are already assigned (either way) are left alone.
  void orient_unassigned_between(const VertexSet& from, const VertexSet& to);

  // Subsequent fresh assignments are logged under this label.
  void begin_step(std::string label);
  const ConstructionTrace& trace() const { return trace_; }

 private:
  static constexpr std::int8_t kUnset = -1;
  static constexpr std::int8_t kForward = 0;   // ends.a -> ends.b
  static constexpr std::int8_t kBackward = 1;  // ends.b -> ends.a

  const Multigraph* graph_;
  std::vector<std::int8_t> state_;
  int unassigned_;
  ConstructionTrace trace_;
};

// A total orientation. Immutable; holds its own copy of the arcs.
class Digraph {
 public:
  Digraph() = default;
  Digraph(int vertex_count, std::vector<Arc> arcs);

  int vertex_count() const { return static_cast<int>(out_.size()); }
  int arc_count() const { return static_cast<int>(arcs_.size()); }
  const Arc& arc(EdgeId e) const { return arcs_[static_cast<std::size_t>(e)]; }
  const std::vector<Arc>& arcs() const { return arcs_; }
  const std::vector<VertexId>& out_neighbors(VertexId v) const { return out_[static_cast<std::size_t>(v)]; }
  const std::vector<VertexId>& in_neighbors(VertexId v) const { return in_[static_cast<std::size_t>(v)]; }

  Digraph reversed() const;
  friend bool operator==(const Digraph& a, const Digraph& b) { return a.arcs_ == b.arcs_ && a.out_.size() == b.out_.size(); }

 private:
  std::vector<Arc> arcs_;
  std::vector<std::vector<VertexId>> out_;
  std::vector<std::vector<VertexId>> in_;
};

// Unassigned edges become lower id -> higher id.
Digraph complete_arbitrarily(const PartialOrientation& p);
// Unassigned edges get a direction drawn from a seeded generator.
Digraph complete_randomly(const PartialOrientation& p, std::uint64_t seed);
// Throws kIncompleteOrientation if any edge is unassigned.
Digraph to_digraph(const PartialOrientation& p);

struct DirectedDistanceMap {
  VertexId source = 0;
  std::vector<int> forward;   // ∂(source, w)
  std::vector<int> backward;  // ∂(w, source)
};

DirectedDistanceMap directed_distances(const Digraph& d, VertexId source);
std::vector<int> directed_distances_from(const Digraph& d, VertexId source);
std::vector<int> directed_distances_to(const Digraph& d, VertexId target);
std::vector<std::vector<int>> all_pairs_directed(const Digraph& d);
bool is_strong(const Digraph& d);
// Throws kNotStrong.
int directed_diameter(const Digraph& d);
int theta(const Digraph& d, VertexId x, VertexId y);

}  // namespace odiam
