#include <gtest/gtest.h>

#include <random>

#include "odiam/error.hpp"
#include "odiam/families.hpp"
#include "odiam/orientation.hpp"
#include "oracles.hpp"

namespace odiam {
namespace {

Digraph random_orientation(const Multigraph& g, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<Arc> arcs;
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    auto [a, b] = g.ends(e);
    if (rng() & 1) std::swap(a, b);
    arcs.push_back({a, b});
  }
  return Digraph(g.vertex_count(), arcs);
}

TEST(PartialOrientation, SameDirectionIsIdempotent) {
  Multigraph g = cycle_graph(3);
  PartialOrientation p(g);
  p.assign(0, {0, 1});
  p.assign(0, {0, 1});
  EXPECT_EQ(p.unassigned_count(), 2);
  EXPECT_EQ(*p.arc(0), (Arc{0, 1}));
}

TEST(PartialOrientation, OppositeDirectionConflicts) {
  Multigraph g = cycle_graph(3);
  PartialOrientation p(g);
  p.assign(0, {0, 1});
  try {
    p.assign(0, {1, 0});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kConflictingDirection);
  }
}

TEST(PartialOrientation, WrongEndpointsRejected) {
  Multigraph g = cycle_graph(4);
  PartialOrientation p(g);
  EXPECT_THROW(p.assign(0, {0, 2}), Error);
}

TEST(PartialOrientation, CompletionAndTrace) {
  Multigraph g = cycle_graph(4);
  PartialOrientation p(g);
  p.begin_step("first");
  p.assign(1, {2, 1});
  EXPECT_THROW(to_digraph(p), Error);
  Digraph d = complete_arbitrarily(p);
  EXPECT_EQ(d.arc(1), (Arc{2, 1}));
  for (EdgeId e : {0, 2, 3}) EXPECT_LT(d.arc(e).tail, d.arc(e).head);
  ASSERT_EQ(p.trace().size(), 1u);
  EXPECT_EQ(p.trace()[0].label, "first");
  EXPECT_EQ(p.trace()[0].arcs.size(), 1u);
}

TEST(PartialOrientation, RandomCompletionIsSeeded) {
  Multigraph g = complete_graph(6);
  PartialOrientation p(g);
  p.assign(0, {1, 0});
  Digraph a = complete_randomly(p, 7);
  EXPECT_EQ(a, complete_randomly(p, 7));
  EXPECT_EQ(a.arc(0), (Arc{1, 0}));
}

TEST(DirectedDistances, MatchFloydWarshall) {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    int n = 2 + static_cast<int>(seed % 8);
    Multigraph g = testing::random_connected(n, n + static_cast<int>(seed % 6), seed);
    Digraph d = random_orientation(g, seed * 31 + 1);
    auto ref = testing::floyd(n, testing::arcs_of(d));
    auto all = all_pairs_directed(d);
    bool strong = true;
    for (int x = 0; x < n; ++x) {
      auto from = directed_distances_from(d, x);
      auto to = directed_distances_to(d, x);
      for (int y = 0; y < n; ++y) {
        int expected = ref[x][y] >= testing::kInf ? kUnreachable : ref[x][y];
        EXPECT_EQ(from[y], expected);
        EXPECT_EQ(all[x][y], expected);
        EXPECT_EQ(to[y], ref[y][x] >= testing::kInf ? kUnreachable : ref[y][x]);
        if (ref[x][y] >= testing::kInf) strong = false;
      }
    }
    EXPECT_EQ(is_strong(d), strong) << "seed " << seed;
    if (strong) {
      EXPECT_EQ(directed_diameter(d), testing::naive_directed_diameter(d));
    } else {
      try {
        directed_diameter(d);
        ADD_FAILURE();
      } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::kNotStrong);
      }
    }
  }
}

TEST(DirectedDistances, ThetaIsTheLargerDirection) {
  Digraph d(3, {{0, 1}, {1, 2}, {2, 0}});
  EXPECT_EQ(theta(d, 0, 1), 2);
  EXPECT_EQ(theta(d, 1, 0), 2);
  EXPECT_EQ(theta(d, 0, 0), 0);
}

TEST(Digraph, ReversedFlipsEveryArc) {
  Digraph d(3, {{0, 1}, {1, 2}, {2, 0}});
  Digraph r = d.reversed();
  for (EdgeId e = 0; e < 3; ++e) {
    EXPECT_EQ(r.arc(e).tail, d.arc(e).head);
    EXPECT_EQ(r.arc(e).head, d.arc(e).tail);
  }
  EXPECT_EQ(r.reversed(), d);
}

}  // namespace
}  // namespace odiam
