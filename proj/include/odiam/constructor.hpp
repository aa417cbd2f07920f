#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>

#include "odiam/orientation.hpp"
#include "odiam/partition.hpp"

namespace odiam {

struct RSResult {
  VertexSet v1;
  VertexSet v2;
  std::vector<std::pair<EdgeId, Arc>> arcs;
};

// R -> V1 -> V2 -> R over a BFS spanning forest of G[S] (roots are the
// lowest-id vertex of each component, V1 = even layers). With `reverse` set
// every arc is flipped, which is the mirrored form used by the symmetric
// constructions. Edges inside V1 or inside V2 are left alone. Throws
// kIsolatedVertexInS, kNoNeighborInR, kOverlappingSets.
RSResult rs_orientation(const Multigraph& g, PartialOrientation& p, const VertexSet& r,
                        const VertexSet& s, bool reverse = false);

// (k - 2) * 2^floor((k - 1) / 2) + 2.
long long ct_bound(int k);

// Simple graphs only (throws kInvalidSpec on parallel edges).
Digraph ct_cycle_orientation(const Multigraph& g_simple);

// Length of the shortest directed cycle through arc e, or kUnreachable.
int shortest_cycle_through(const Digraph& d, EdgeId e);

struct PipelineOptions {
  // Seed for the final completion of edges no construction touched; when
  // absent those edges run from the lower to the higher vertex id.
  std::optional<std::uint64_t> completion_seed;
};

struct PipelineResult {
  Digraph digraph;
  ConstructionTrace trace;
};

// One edge per parallel class, numbered by first occurrence; `representative`
// maps every edge of g to its skeleton edge.
Multigraph simple_skeleton(const Multigraph& g, std::vector<EdgeId>* representative = nullptr);

// Both throw kPreconditionGstar when g* does not match.
PipelineResult orient_g2(const Multigraph& g);
PipelineResult orient_g3(const Multigraph& g);

PipelineResult orient_g9(const Multigraph& g, const FinePartition& fine,
                         const PipelineOptions& options = {});
PipelineResult orient_g678(const Multigraph& g, const FinePartition& fine,
                           const PipelineOptions& options = {});

// Side-relative view of the fine partition used to write every construction
// once. Side 0 is the literal statement; side 1 swaps A/B, I/J, K/L, u/v and
// reverses every arc it places.
class Orienter {
 public:
  Orienter(const Multigraph& g, PartialOrientation& p, const FinePartition& fine, int side);

  bool mirrored() const { return side_ == 1; }
  const Multigraph& graph() const { return g_; }
  PartialOrientation& partial() { return p_; }
  const FineSide& fine_side() const { return fine_.side[static_cast<std::size_t>(side_)]; }

  VertexSet none() const { return VertexSet(g_.vertex_count()); }
  VertexSet one(VertexId w) const { return VertexSet::single(g_.vertex_count(), w); }

  // Home side.
  VertexSet u() const;
  VertexSet A() const;
  VertexSet A(int j) const;
  VertexSet A(int first, int last) const;
  VertexSet A10(int k) const;
  VertexSet Ap() const;
  VertexSet I() const;
  VertexSet I(int j) const;
  VertexSet I(int first, int last) const;
  VertexSet I8(int k) const;
  // code 1..8, 11..14, 61..63, 71..74, 81..84
  VertexSet Ip(int code) const;
  VertexSet Ip() const;
  VertexSet K() const;
  VertexSet K(int j) const;
  // code 1..5, 31..32, 41..43, 51..54
  VertexSet Kp(int code) const;
  VertexSet Kp() const;

  // Opposite side.
  VertexSet v() const;
  VertexSet B() const;
  VertexSet J() const;
  VertexSet L() const;

  // Shared.
  VertexSet S33() const;
  VertexSet M() const;
  VertexSet Mp(int j) const;

  int dist_to_J(VertexId w) const;
  const std::vector<VertexId>& witness(VertexId w) const;

  // Strict: every edge of [x, y] becomes x -> y (y -> x when mirrored).
  void arc(const VertexSet& x, const VertexSet& y);
  // As arc(), but already assigned edges are skipped.
  void fill(const VertexSet& x, const VertexSet& y);
  void edge(EdgeId e, VertexId tail, VertexId head);
  RSResult rs(const VertexSet& r, const VertexSet& s);

 private:
  const Multigraph& g_;
  PartialOrientation& p_;
  const FinePartition& fine_;
  int side_;
};

using ConstructionStep = std::function<void(Orienter&)>;

// Runs `step` on the mirrored side.
void apply_symmetric(const ConstructionStep& step, const Multigraph& g, const FinePartition& fine,
                     PartialOrientation& p);

// `label edgeId tail head` per assigned arc, in assignment order.
std::string trace_to_text(const ConstructionTrace& trace);

}  // namespace odiam
