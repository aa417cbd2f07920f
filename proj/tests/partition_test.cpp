#include <gtest/gtest.h>

#include "odiam/error.hpp"
#include "odiam/families.hpp"
#include "odiam/partition.hpp"
#include "oracles.hpp"

namespace odiam {
namespace {

std::vector<Multigraph> sample(const std::vector<int>& targets, int count) {
  std::vector<Multigraph> out;
  for (std::uint64_t seed = 0; static_cast<int>(out.size()) < count; ++seed) {
    int n = 12 + static_cast<int>(seed % 9);
    if (auto g = gen_random_with_targets(n, seed, 4, targets)) out.push_back(std::move(*g));
  }
  return out;
}

// Same graph with the labels of x and y exchanged; edge ids are kept.
Multigraph swap_labels(const Multigraph& g, VertexId x, VertexId y) {
  auto map = [&](VertexId z) { return z == x ? y : z == y ? x : z; };
  std::vector<std::pair<VertexId, VertexId>> edges;
  for (EdgeId e = 0; e < g.edge_count(); ++e) edges.emplace_back(map(g.ends(e).a), map(g.ends(e).b));
  return build_graph(g.vertex_count(), edges);
}

// On C_9 with witness edge 01 the distance pairs (d(.,0), d(.,1)) are
// 8:(1,2) 7:(2,3) 6:(3,4) 5:(4,4) 4:(4,3) 3:(3,2) 2:(2,1).
TEST(Partition, NineCycleByHand) {
  Multigraph g = cycle_graph(9);
  FinePartition fine = partition_graph(g, PartitionMode::kGirth9);
  EXPECT_EQ(fine.u(), 0);
  EXPECT_EQ(fine.v(), 1);
  std::vector<std::string> expected{"u", "v", "B", "J", "L", "M", "K", "I", "A"};
  EXPECT_EQ(fine.leaf, expected);
  EXPECT_EQ(partition_dump(fine), "0 u\n1 v\n2 B\n3 J\n4 L\n5 M\n6 K\n7 I\n8 A\n");
  EXPECT_TRUE(verify_partition(g, fine).ok());
}

TEST(Partition, SijMatchesFloydDistances) {
  for (const Multigraph& g : sample({6, 7, 8, 9}, 40)) {
    WitnessEdge w = select_witness_edge(g);
    SijPartition s = compute_sij(g, w.u, w.v);
    auto d = testing::floyd(g.vertex_count(), testing::both_ways(g));
    std::map<std::pair<int, int>, const VertexSet*> cls{{{1, 2}, &s.s12}, {{2, 1}, &s.s21}, {{2, 3}, &s.s23},
                                                        {{3, 2}, &s.s32}, {{3, 3}, &s.s33}, {{3, 4}, &s.s34},
                                                        {{4, 3}, &s.s43}, {{4, 4}, &s.s44}};
    for (VertexId x = 0; x < g.vertex_count(); ++x) {
      if (x == w.u || x == w.v) continue;
      auto it = cls.find({d[x][w.u], d[x][w.v]});
      ASSERT_NE(it, cls.end()) << "vertex " << x;
      EXPECT_TRUE(it->second->contains(x));
    }
  }
}

TEST(Partition, WitnessEdgeAttainsMaxEdgeGirth) {
  for (const Multigraph& g : sample({6, 7, 8, 9}, 30)) {
    WitnessEdge w = select_witness_edge(g);
    EXPECT_EQ(testing::brute_edge_girth(g, w.edge), w.gstar);
    for (EdgeId e = 0; e < w.edge; ++e) EXPECT_LT(testing::brute_edge_girth(g, e), w.gstar);
    EXPECT_LT(w.u, w.v);
  }
}

TEST(Partition, VerifiesOnRandomInstances) {
  for (const Multigraph& g : sample({9}, 30)) EXPECT_TRUE(verify_partition(g, partition_graph(g, PartitionMode::kGirth9)).ok());
  for (const Multigraph& g : sample({6, 7, 8}, 60)) {
    FinePartition fine = partition_graph(g, PartitionMode::kGirth678);
    PartitionReport r = verify_partition(g, fine);
    EXPECT_TRUE(r.ok()) << (r.ok() ? "" : r.violations.front().rule);
  }
}

TEST(Partition, EveryVertexHasOneLeaf) {
  for (const Multigraph& g : sample({6, 7, 8}, 30)) {
    FinePartition fine = partition_graph(g, PartitionMode::kGirth678);
    ASSERT_EQ(fine.vertex_count(), g.vertex_count());
    for (const std::string& leaf : fine.leaf) EXPECT_FALSE(leaf.empty());
  }
}

TEST(Partition, MovedVertexIsReported) {
  int corrupted = 0;
  for (const Multigraph& g : sample({6, 7, 8}, 30)) {
    FinePartition fine = partition_graph(g, PartitionMode::kGirth678);
    FineSide& s = fine.side[0];
    for (std::size_t k = 0; k + 1 < s.i.size(); ++k) {
      auto members = s.i[k].members();
      if (members.empty()) continue;
      VertexId x = members.front();
      s.i[k].erase(x);
      s.i[(k + 1) % s.i.size()].insert(x);
      EXPECT_FALSE(verify_partition(g, fine).ok());
      ++corrupted;
      break;
    }
  }
  EXPECT_GT(corrupted, 10);
}

TEST(Partition, CoarseSetMovedToM) {
  Multigraph g = cycle_graph(9);
  FinePartition fine = partition_graph(g, PartitionMode::kGirth9);
  fine.coarse.side[0].k.erase(6);
  fine.coarse.m.insert(6);
  EXPECT_FALSE(verify_partition(g, fine).ok());
}

// Exchanging the labels of u and v swaps the two sides.
TEST(Partition, SwappingEndpointsMirrorsSides) {
  for (const Multigraph& g : sample({6, 7, 8}, 40)) {
    FinePartition a = partition_graph(g, PartitionMode::kGirth678);
    Multigraph h = swap_labels(g, a.u(), a.v());
    FinePartition b = partition_graph(h, PartitionMode::kGirth678);
    ASSERT_EQ(b.u(), a.u());
    auto relabel = [&](const VertexSet& s) {
      VertexSet out(s.universe());
      for (VertexId x : s.members()) out.insert(x == a.u() ? a.v() : x == a.v() ? a.u() : x);
      return out;
    };
    for (int side = 0; side < 2; ++side) {
      const FineSide& x = a.side[side];
      const FineSide& y = b.side[1 - side];
      EXPECT_EQ(relabel(a.coarse.side[side].a), b.coarse.side[1 - side].a);
      EXPECT_EQ(relabel(a.coarse.side[side].k_prime), b.coarse.side[1 - side].k_prime);
      for (std::size_t k = 0; k < x.i.size(); ++k) EXPECT_EQ(relabel(x.i[k]), y.i[k]);
      for (std::size_t k = 0; k < x.a.size(); ++k) EXPECT_EQ(relabel(x.a[k]), y.a[k]);
      for (std::size_t k = 0; k < x.kp.size(); ++k) EXPECT_EQ(relabel(x.kp[k]), y.kp[k]);
      for (std::size_t k = 0; k < x.ip.size(); ++k) EXPECT_EQ(relabel(x.ip[k]), y.ip[k]);
    }
    EXPECT_EQ(relabel(a.coarse.s33), b.coarse.s33);
    EXPECT_EQ(relabel(a.m_prime[2]), b.m_prime[2]);
    EXPECT_EQ(relabel(a.m_prime[0]), b.m_prime[1]);
  }
}

TEST(Partition, WrongModeRejected) {
  try {
    partition_graph(cycle_graph(9), PartitionMode::kGirth678);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kPreconditionGstar);
  }
  EXPECT_THROW(partition_graph(cycle_graph(7), PartitionMode::kGirth9), Error);
}

TEST(Partition, ClassFamily) {
  EXPECT_EQ(class_family("K'41"), "K'");
  EXPECT_EQ(class_family("I8(1)"), "I");
  EXPECT_EQ(class_family("S33"), "S33");
  EXPECT_EQ(class_family("u"), "u");
}

}  // namespace
}  // namespace odiam
