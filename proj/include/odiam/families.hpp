#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "odiam/graph.hpp"
#include "odiam/oracle.hpp"

namespace odiam {

// Text form: `tag` or `tag:p1,p2,...`, plus a seed used only by `random`.
//   cycle:n            C_n
//   doubled_path:n     path on n vertices, every edge doubled
//   doubled_cycle:n    C_n with every edge doubled
//   theta:a,b,c        two poles joined by paths of lengths a, b, c
//   subdivided_k4:c1..c6  K_4 with c_i new vertices inserted on edge i
//   complete:n         K_n
//   wheel:n            hub joined to every vertex of C_n
//   random:n,t1,t2,..  diameter 4, g* in {t1, t2, ...}, about n vertices
struct FamilySpec {
  std::string tag;
  std::vector<int> params;
  std::uint64_t seed = 0;

  friend bool operator==(const FamilySpec&, const FamilySpec&) = default;
};

// Throws kInvalidSpec.
FamilySpec parse_family_spec(std::string_view text, std::uint64_t seed = 0);
std::string family_spec_to_string(const FamilySpec& spec);

Multigraph cycle_graph(int n);
Multigraph doubled_path(int n);
Multigraph doubled_cycle(int n);
Multigraph theta_graph(int a, int b, int c);
// K_4 edges in the order 01, 02, 03, 12, 13, 23.
Multigraph subdivided_k4(const std::array<int, 6>& counts);
Multigraph complete_graph(int n);
Multigraph wheel_graph(int n);

// Seeded ear growth from a cycle whose length is a target value; an instance
// is kept only when its measured diameter and g* hit the targets. Labels are
// shuffled before returning. std::nullopt after the attempt cap.
std::optional<Multigraph> gen_random_with_targets(int n, std::uint64_t seed, int target_d,
                                                  const std::vector<int>& target_gstar);

// Throws kInvalidSpec (also when a random spec finds nothing).
Multigraph generate(const FamilySpec& spec);

// Random bridgeless graphs in which every edge has a twin or lies in a
// triangle (so g* <= 3), built from triangles glued along vertices and edges.
Multigraph gen_random_triangle_graph(int n, std::uint64_t seed);

struct HWitness {
  std::array<int, 6> counts{};
  Multigraph graph;
  bool certified = false;  // certify_lower_bound(graph, 12)
};

struct HSearchResult {
  int candidates = 0;        // subdivision vectors examined
  int filtered = 0;          // of those with d = 4 and g* = 9
  int budget_failures = 0;   // certification ran out of nodes
  std::vector<HWitness> witnesses;  // certified ones, in enumeration order
};

// Enumerates c_i in 0..3 up to the symmetries of K_4, keeps d = 4 and g* = 9
// and certifies the lower bound 12. With `all` unset it stops at the first.
HSearchResult search_h_witness(const SearchBudget& budget, bool all = false);

}  // namespace odiam
