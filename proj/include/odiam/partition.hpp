#pragma once

#include <array>
#include <map>
#include <string>
#include <vector>

#include "odiam/graph.hpp"

namespace odiam {

struct WitnessEdge {
  EdgeId edge = -1;
  VertexId u = -1;
  VertexId v = -1;
  int gstar = 0;
};

// Lowest EdgeId attaining the maximum edge girth; u is its lower endpoint.
// Throws kNotBridgeless.
WitnessEdge select_witness_edge(const Multigraph& g);

// Distance classes S_{i,j} = {w : d(w,u) = i, d(w,v) = j} around the edge uv.
struct SijPartition {
  VertexId u = -1;
  VertexId v = -1;
  VertexSet s12, s21, s23, s32, s33, s34, s43, s44;
  std::vector<int> du, dv;
};

// Requires d(u,v) = 1, diameter 4 and edge girth of uv at least 6; a vertex
// outside the eight legal classes raises kEmptyClassViolation.
SijPartition compute_sij(const Multigraph& g, VertexId u, VertexId v);

// Side 0 is anchored at u and holds (A, A', I, I', K, K'); side 1 is anchored
// at v and holds the mirror images (B, B', J, J', L, L'). Every routine that
// works on "the A side" therefore also serves the B side with the roles of the
// two sides swapped.
struct CoarseSide {
  VertexId anchor = -1;
  VertexSet a, a_prime;  // S12 (side 0) / S21 (side 1)
  VertexSet i, i_prime;  // S23 / S32
  VertexSet k, k_prime;  // S34 / S43
};

struct CoarsePartition {
  SijPartition sij;
  std::array<CoarseSide, 2> side;
  VertexSet s33, m, m_prime;
};

CoarsePartition coarse_partition(const Multigraph& g, const SijPartition& sij);

enum class PartitionMode { kGirth9, kGirth678 };

// Arrays are 0-based: i[0] is I_1, ip1[3] is I'_14, kp5[0] is K'_51, ...
struct FineSide {
  std::array<VertexSet, 2> k;     // K_1, K_2
  std::array<VertexSet, 8> i;     // I_1..I_8
  std::array<VertexSet, 10> a;    // A_1..A_10
  std::array<VertexSet, 2> a10;   // A_10^(1), A_10^(2)
  std::array<VertexSet, 2> i8;    // I_8^(1), I_8^(2)
  std::array<VertexSet, 8> ip;    // I'_1..I'_8
  std::array<VertexSet, 4> ip1;   // I'_11..I'_14
  std::array<VertexSet, 3> ip6;   // I'_61..I'_63
  std::array<VertexSet, 4> ip7;   // I'_71..I'_74
  std::array<VertexSet, 4> ip8;   // I'_81..I'_84
  std::array<VertexSet, 5> kp;    // K'_1..K'_5
  std::array<VertexSet, 2> kp3;   // K'_31, K'_32
  std::array<VertexSet, 3> kp4;   // K'_41..K'_43
  std::array<VertexSet, 4> kp5;   // K'_51..K'_54
  // Lexicographically smallest shortest path from each I' member to the
  // opposite I-class (J) and from each K' member to the opposite A-class (B).
  std::map<VertexId, std::vector<VertexId>> witness_path;
  std::vector<int> dist_to_opposite_i;  // d(., J)
  std::vector<int> dist_to_opposite_a;  // d(., B)
};

struct FinePartition {
  PartitionMode mode = PartitionMode::kGirth678;
  CoarsePartition coarse;
  std::array<FineSide, 2> side;
  std::array<VertexSet, 3> m_prime;  // M'_1..M'_3
  std::vector<std::string> leaf;     // leaf class name per vertex
  // Reading choices that affected a non-empty class on this input.
  std::vector<std::string> notes;

  VertexId u() const { return coarse.sij.u; }
  VertexId v() const { return coarse.sij.v; }
  int vertex_count() const { return static_cast<int>(leaf.size()); }
};

// Throws kPreconditionGstar when the witness edge girth does not match the
// mode, and kDefinitionUnsatisfiable when a vertex fits no class.
FinePartition fine_partition(const Multigraph& g, const CoarsePartition& coarse, PartitionMode mode);

// Every shortest path from w to the set whose distance field is `dist`
// (dist == 0 on the set), in lexicographic order of vertex sequence. Empty
// when w cannot reach the set.
std::vector<std::vector<VertexId>> shortest_paths_to_set(const Multigraph& g,
                                                         const std::vector<int>& dist,
                                                         VertexId w);

// Convenience: witness edge -> S_{i,j} -> coarse -> fine.
FinePartition partition_graph(const Multigraph& g, PartitionMode mode);

struct PartitionViolation {
  VertexId vertex = -1;  // -1 for set-level facts
  std::string rule;
  std::string detail;
};

struct PartitionReport {
  std::vector<PartitionViolation> violations;
  bool ok() const { return violations.empty(); }
};

// Re-evaluates every defining predicate against the raw graph, checks that
// each family partitions its parent, and asserts the structural
// propositions that hold for valid inputs.
PartitionReport verify_partition(const Multigraph& g, const FinePartition& fine);

// `vertexId className` per line, ascending vertex id.
std::string partition_dump(const FinePartition& fine);

// Stable class-family key of a leaf name ("A", "A'", "I'", "S33", ...).
std::string class_family(const std::string& leaf);

}  // namespace odiam
