#include <gtest/gtest.h>

#include "odiam/error.hpp"
#include "odiam/families.hpp"
#include "odiam/io.hpp"
#include "oracles.hpp"

namespace odiam {
namespace {

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error";
  return ErrorCode::kUnsupported;
}

std::string message_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.what();
  }
  return "";
}

// Edge sets as sorted (min, max) pairs.
std::vector<std::pair<int, int>> edge_pairs(const Multigraph& g) {
  std::vector<std::pair<int, int>> out;
  for (EdgeId e = 0; e < g.edge_count(); ++e)
    out.emplace_back(std::min(g.ends(e).a, g.ends(e).b), std::max(g.ends(e).a, g.ends(e).b));
  std::sort(out.begin(), out.end());
  return out;
}

TEST(EdgeList, RoundTrip) {
  Multigraph g = build_graph(4, {{2, 1}, {0, 1}, {1, 0}, {3, 2}, {0, 3}});
  std::string text = write_edge_list(g);
  EXPECT_EQ(text, "4 5\n0 1\n0 1\n0 3\n1 2\n2 3\n");
  Multigraph h = parse_edge_list(text);
  EXPECT_EQ(write_edge_list(h), text);
  EXPECT_EQ(h.multiplicity(0, 1), 2);
}

TEST(EdgeList, ToleratesCrlfAndBlankLines) {
  Multigraph g = parse_edge_list("3 3\r\n0 1\r\n\n1 2\r\n2 0\r\n");
  EXPECT_EQ(g.edge_count(), 3);
}

TEST(EdgeList, ErrorsNameTheLine) {
  EXPECT_EQ(code_of([] { parse_edge_list("3 2\n0 1\n1 x\n"); }), ErrorCode::kParseError);
  EXPECT_NE(message_of([] { parse_edge_list("3 2\n0 1\n1 x\n"); }).find("line 3"), std::string::npos);
  EXPECT_EQ(code_of([] { parse_edge_list("3 2\n0 1\n1 1\n"); }), ErrorCode::kLoopEdge);
  EXPECT_NE(message_of([] { parse_edge_list("3 2\n0 1\n1 1\n"); }).find("line 3"), std::string::npos);
  EXPECT_EQ(code_of([] { parse_edge_list("3 1\n0 5\n"); }), ErrorCode::kVertexOutOfRange);
  EXPECT_EQ(code_of([] { parse_edge_list("3 3\n0 1\n"); }), ErrorCode::kParseError);
  EXPECT_EQ(code_of([] { parse_edge_list(""); }), ErrorCode::kParseError);
  EXPECT_EQ(code_of([] { parse_edge_list("3 1\n0 1 2\n"); }), ErrorCode::kParseError);
}

// Reference strings produced by networkx.to_graph6_bytes.
struct Graph6Case {
  const char* text;
  Multigraph graph;
};

TEST(Graph6, MatchesReferenceEncoder) {
  std::vector<Graph6Case> cases{
      {"Dhc", cycle_graph(5)},
      {"C~", complete_graph(4)},
      {"FhCGG", build_graph(7, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}})},
      {"IheA@GUAo", build_graph(10, {{0, 1}, {0, 4}, {0, 5}, {1, 2}, {1, 6}, {2, 3}, {2, 7}, {3, 4}, {3, 8}, {4, 9},
                                     {5, 7}, {5, 8}, {6, 8}, {6, 9}, {7, 9}})},
      {"~?@?hCGGC@?G?_@?@??_?G?@??C??G??G??C??@???G???_??@???@????_???G???@????C????G????G????C????@?????G?????_????@?????@??????_?????G?????@??????C??????G??????G??????C??????@???????G???????_??????@???????@????????_???????G???????@????????C????????G????????G????????C????????@?????????G?????????_????????@?????????@??????????_?????????K?????????@", cycle_graph(64)},
  };
  for (const auto& c : cases) {
    EXPECT_EQ(write_graph6(c.graph), std::string(c.text) + "\n");
    Multigraph parsed = parse_graph6(c.text);
    EXPECT_EQ(parsed.vertex_count(), c.graph.vertex_count());
    EXPECT_EQ(edge_pairs(parsed), edge_pairs(c.graph)) << c.text;
  }
}

TEST(Graph6, HeaderAndNewlineAccepted) {
  EXPECT_EQ(parse_graph6(">>graph6<<Dhc\n").edge_count(), 5);
}

TEST(Graph6, MalformedInputRejected) {
  EXPECT_EQ(code_of([] { parse_graph6(""); }), ErrorCode::kParseError);
  EXPECT_EQ(code_of([] { parse_graph6("Dh"); }), ErrorCode::kParseError);
  EXPECT_EQ(code_of([] { parse_graph6("Dhcc"); }), ErrorCode::kParseError);
  EXPECT_EQ(code_of([] { parse_graph6("Dh "); }), ErrorCode::kParseError);
  // C5 with a set padding bit.
  EXPECT_EQ(code_of([] { parse_graph6("Dhd"); }), ErrorCode::kParseError);
}

TEST(Graph6, ParallelEdgesUnsupported) {
  EXPECT_EQ(code_of([] { write_graph6(doubled_path(3)); }), ErrorCode::kUnsupported);
}

TEST(Orientation, RoundTrip) {
  Multigraph g = doubled_cycle(4);
  Digraph d = complete_arbitrarily(PartialOrientation(g));
  std::string text = write_orientation(d);
  EXPECT_EQ(text.substr(0, text.find('\n')), "orientation 4 8");
  EXPECT_EQ(parse_orientation(text, g), d);
}

TEST(Orientation, Errors) {
  Multigraph g = cycle_graph(3);
  EXPECT_EQ(code_of([&] { parse_orientation("orientation 3 3\n0 0 1\n1 1 2\n", g); }),
            ErrorCode::kIncompleteOrientation);
  EXPECT_EQ(code_of([&] { parse_orientation("orientation 3 3\n0 0 1\n1 1 2\n2 0 1\n", g); }),
            ErrorCode::kEndpointMismatch);
  EXPECT_EQ(code_of([&] { parse_orientation("orientation 3 3\n0 0 1\n0 1 0\n1 1 2\n2 2 0\n", g); }),
            ErrorCode::kConflictingDirection);
  EXPECT_EQ(code_of([&] { parse_orientation("orientation 4 3\n", g); }), ErrorCode::kEndpointMismatch);
  EXPECT_EQ(code_of([&] { parse_orientation("3 3\n", g); }), ErrorCode::kParseError);
  EXPECT_EQ(code_of([&] { parse_orientation("orientation 3 3\n7 0 1\n", g); }), ErrorCode::kParseError);
}

TEST(Dot, EdgeIdsAndKeywords) {
  Multigraph g = cycle_graph(3);
  std::string u = write_dot(g);
  EXPECT_EQ(u.rfind("graph G {", 0), 0u);
  EXPECT_NE(u.find("0 -- 1 [id=\"e0\"]"), std::string::npos);
  std::string d = write_dot(Digraph(3, {{0, 1}, {1, 2}, {2, 0}}));
  EXPECT_EQ(d.rfind("digraph G {", 0), 0u);
  EXPECT_NE(d.find("2 -> 0 [id=\"e2\"]"), std::string::npos);
}

TEST(Dot, PartitionColoursEveryVertex) {
  Multigraph g = cycle_graph(9);
  FinePartition fine = partition_graph(g, PartitionMode::kGirth9);
  std::string text = write_dot(g, &fine);
  int filled = 0;
  for (std::size_t p = 0; (p = text.find("style=filled", p)) != std::string::npos; ++p) ++filled;
  EXPECT_EQ(filled, 9);
}

TEST(Manifest, RoundTripAndComments) {
  std::vector<ManifestEntry> m{{{"cycle", {9}, 0}, 4, 9}, {{"random", {20, 7}, 5}, 4, 7}};
  std::string text = write_manifest(m);
  auto back = parse_manifest("# corpus\n" + text);
  ASSERT_EQ(back.size(), 2u);
  EXPECT_EQ(back[1].spec, m[1].spec);
  EXPECT_EQ(back[1].expected_gstar, 7);
  EXPECT_EQ(write_manifest(back), text);
  EXPECT_EQ(code_of([] { parse_manifest("cycle 9 0 4\n"); }), ErrorCode::kParseError);
}

}  // namespace
}  // namespace odiam
