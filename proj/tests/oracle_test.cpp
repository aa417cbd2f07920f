#include <gtest/gtest.h>

#include "odiam/error.hpp"
#include "odiam/families.hpp"
#include "odiam/oracle.hpp"
#include "oracles.hpp"

namespace odiam {
namespace {

std::vector<Multigraph> small_bridgeless(int count, int max_edges) {
  std::vector<Multigraph> out;
  for (std::uint64_t seed = 0; static_cast<int>(out.size()) < count; ++seed) {
    int n = 3 + static_cast<int>(seed % 5);
    int m = std::min(max_edges, n + 1 + static_cast<int>(seed % 5));
    Multigraph g = testing::random_connected(n, m, seed);
    if (is_bridgeless(g)) out.push_back(std::move(g));
  }
  return out;
}

TEST(Robbins, StrongOnBridgelessGraphs) {
  for (const Multigraph& g : small_bridgeless(80, 14)) EXPECT_TRUE(is_strong(robbins_orientation(g)));
  EXPECT_TRUE(is_strong(robbins_orientation(cycle_graph(9))));
}

TEST(Robbins, RejectsBridges) {
  try {
    robbins_orientation(build_graph(3, {{0, 1}, {1, 2}, {2, 0}, {2, 0}, {0, 1}, {1, 2}, {0, 1}}));
  } catch (...) {
    ADD_FAILURE() << "bridgeless input rejected";
  }
  EXPECT_THROW(robbins_orientation(build_graph(3, {{0, 1}, {1, 2}})), Error);
}

TEST(Exact, SmallKnownGraphs) {
  // C_n has two strong orientations, both directed cycles.
  EXPECT_EQ(exact_oriented_diameter(cycle_graph(3)).optimal, 2);
  EXPECT_EQ(exact_oriented_diameter(cycle_graph(9)).optimal, 8);
  EXPECT_EQ(testing::brute_oriented_diameter(complete_graph(4)), 3);
  EXPECT_EQ(exact_oriented_diameter(complete_graph(4)).optimal, 3);
  EXPECT_EQ(exact_oriented_diameter(doubled_path(4)).optimal, 3);
}

TEST(Exact, AgreesWithBruteForce) {
  for (const Multigraph& g : small_bridgeless(120, 12)) {
    int expected = testing::brute_oriented_diameter(g);
    SearchReport r = exact_oriented_diameter(g);
    EXPECT_FALSE(r.budget_exceeded);
    EXPECT_EQ(r.optimal, expected);
    EXPECT_EQ(exhaustive_oriented_diameter(g), expected);
    EXPECT_EQ(testing::naive_directed_diameter(r.witness), expected);
  }
}

TEST(Exact, ParallelWorkersSameAnswer) {
  for (const Multigraph& g : small_bridgeless(30, 14)) {
    SearchReport one = exact_oriented_diameter(g, {200'000'000, 1});
    SearchReport four = exact_oriented_diameter(g, {200'000'000, 4});
    EXPECT_EQ(one.optimal, four.optimal);
    EXPECT_EQ(one.witness, four.witness);
    EXPECT_EQ(one.nodes, four.nodes);
  }
}

TEST(Exact, BudgetExhaustion) {
  Multigraph g = generate(parse_family_spec("random:24,6", 1));
  SearchReport r = exact_oriented_diameter(g, {1000, 1});
  EXPECT_TRUE(r.budget_exceeded);
  EXPECT_TRUE(is_strong(r.witness));
  try {
    // One node per prefix cannot settle the question.
    certify_lower_bound(g, 7, {8, 1});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kBudgetExceeded);
  }
}

TEST(Certify, NineCycle) {
  EXPECT_TRUE(certify_lower_bound(cycle_graph(9), 8));
  EXPECT_FALSE(certify_lower_bound(cycle_graph(9), 9));
}

// Every directed distance is at least the undirected one.
TEST(Certify, DiameterIsAlwaysALowerBound) {
  for (const Multigraph& g : small_bridgeless(40, 14)) EXPECT_TRUE(certify_lower_bound(g, diameter(g)));
}

TEST(Exact, ReportText) {
  std::string text = search_report_to_text(exact_oriented_diameter(cycle_graph(3)));
  EXPECT_EQ(text.rfind("optimal 2\nproven yes\n", 0), 0u);
}

TEST(Exhaustive, RefusesLargeInputs) {
  try {
    exhaustive_oriented_diameter(complete_graph(8));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kUnsupported);
  }
}

// Petersen graph: 15 edges, small enough for the unpruned reference.
TEST(Certify, PetersenAgainstBruteForce) {
  Multigraph g = build_graph(10, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}, {0, 5}, {1, 6}, {2, 7}, {3, 8}, {4, 9},
                                  {5, 7}, {7, 9}, {9, 6}, {6, 8}, {8, 5}});
  int expected = testing::brute_oriented_diameter(g);
  EXPECT_EQ(exact_oriented_diameter(g).optimal, expected);
  EXPECT_TRUE(certify_lower_bound(g, expected));
  EXPECT_FALSE(certify_lower_bound(g, expected + 1));
}

TEST(HWitness, SearchFindsCertifiedSubdivision) {
  HSearchResult h = search_h_witness(SearchBudget{});
  ASSERT_FALSE(h.witnesses.empty());
  const HWitness& w = h.witnesses.front();
  EXPECT_TRUE(w.certified);
  EXPECT_EQ(diameter(w.graph), 4);
  EXPECT_EQ(max_edge_girth(w.graph), 9);
  EXPECT_LE(w.graph.edge_count(), 22);
  EXPECT_EQ(testing::brute_oriented_diameter(w.graph), 12);
  EXPECT_TRUE(certify_lower_bound(w.graph, 12));
  EXPECT_FALSE(certify_lower_bound(w.graph, 13));
}

TEST(HWitness, AllModeListsEveryCertifiedVector) {
  HSearchResult all = search_h_witness(SearchBudget{}, true);
  EXPECT_GE(all.witnesses.size(), 1u);
  EXPECT_LE(static_cast<int>(all.witnesses.size()), all.filtered);
  EXPECT_EQ(all.budget_failures, 0);
}

TEST(ClassBounds, Rows) {
  ClassBoundTable nine = girth9_class_bounds();
  EXPECT_EQ(nine.at("A"), std::make_pair(1, 7));
  EXPECT_EQ(nine.at("J"), std::make_pair(6, 2));
  EXPECT_EQ(nine.at("M"), std::make_pair(4, 4));
  EXPECT_EQ(nine.size(), 7u);
  ClassBoundTable low = girth678_class_bounds();
  EXPECT_EQ(low.at("A'"), std::make_pair(2, 10));
  EXPECT_EQ(low.at("I'"), std::make_pair(4, 7));
  EXPECT_EQ(low.at("L'"), std::make_pair(7, 4));
  EXPECT_EQ(low.at("S33"), std::make_pair(3, 3));
  EXPECT_EQ(low.at("M'"), std::make_pair(5, 5));
  EXPECT_EQ(low.size(), 15u);
}

TEST(Audit, ReversedArcIsNamed) {
  Multigraph g = cycle_graph(9);
  FinePartition fine = partition_graph(g, PartitionMode::kGirth9);
  // The directed cycle 0->8->7->...->1->0 puts u one step after v.
  std::vector<Arc> arcs;
  for (EdgeId e = 0; e < 9; ++e) arcs.push_back({g.ends(e).b, g.ends(e).a});
  Digraph d(9, arcs);
  AuditReport r = audit_class_bounds(d, fine, girth9_class_bounds());
  ASSERT_FALSE(r.ok());
  EXPECT_FALSE(audit_report_to_text(r).empty());
}

}  // namespace
}  // namespace odiam
