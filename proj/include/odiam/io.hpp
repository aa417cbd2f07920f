#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "odiam/families.hpp"
#include "odiam/orientation.hpp"
#include "odiam/partition.hpp"

namespace odiam {

// `n m` then m lines `u v`. Throws kParseError / kLoopEdge /
// kVertexOutOfRange, each naming the offending line.
Multigraph parse_edge_list(std::string_view text);
// Edges sorted by (min, max, occurrence), written as `min max`.
std::string write_edge_list(const Multigraph& g);

// Simple graphs only; an optional `>>graph6<<` header is accepted.
Multigraph parse_graph6(std::string_view text);
// No header, trailing LF. Throws kUnsupported on parallel edges.
std::string write_graph6(const Multigraph& g);

// `orientation n m` then `edgeId tail head` per edge.
std::string write_orientation(const Digraph& d);
// Throws kParseError, kEndpointMismatch, kIncompleteOrientation.
Digraph parse_orientation(std::string_view text, const Multigraph& g);

// One arc per EdgeId. With a partition, every vertex gets a fillcolor taken
// from a fixed per-family palette.
std::string write_dot(const Multigraph& g, const FinePartition* fine = nullptr);
std::string write_dot(const Digraph& d, const FinePartition* fine = nullptr);

struct ManifestEntry {
  FamilySpec spec;
  int expected_d = 0;
  int expected_gstar = 0;
};

// `tag params seed expected_d expected_gstar` per line; params are comma
// separated or `-`; `#` starts a comment line.
std::vector<ManifestEntry> parse_manifest(std::string_view text);
std::string write_manifest(const std::vector<ManifestEntry>& entries);

}  // namespace odiam
