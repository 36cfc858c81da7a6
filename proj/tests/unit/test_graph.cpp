#include <gtest/gtest.h>

#include "dchroma/error.hpp"
#include "dchroma/families.hpp"
#include "dchroma/graph.hpp"

using namespace dchroma;

TEST(Graph, BasicConstruction) {
  const std::vector<Edge> edges{{0, 1}, {1, 2}, {2, 1}};
  const Graph g(3, edges);
  EXPECT_EQ(g.edge_count(), 2u);
  EXPECT_TRUE(g.adjacent(1, 0));
  EXPECT_FALSE(g.adjacent(0, 2));
  EXPECT_EQ(g.degree(1), 2u);
  const std::vector<Edge> loop{{1, 1}};
  EXPECT_THROW(Graph(3, loop), Error);
  const std::vector<Edge> out_of_range{{0, 3}};
  EXPECT_THROW(Graph(3, out_of_range), Error);
}

TEST(Graph, SidesMustBeCrossed) {
  Graph g = complete_graph(3);
  EXPECT_THROW(g.set_sides({0, 0, 1}), Error);
  Graph h = complete_bipartite(2, 2);
  ASSERT_TRUE(h.sides());
}

TEST(Graph, Predicates) {
  EXPECT_TRUE(is_connected(complete_graph(3)));
  EXPECT_FALSE(is_bipartite(complete_graph(3)));
  const auto lg5 = levi_graph(5);
  EXPECT_TRUE(is_connected(lg5));
  EXPECT_TRUE(is_bipartite(lg5));
  const std::vector<Edge> two{{0, 1}, {2, 3}};
  const Graph g(4, two);
  EXPECT_FALSE(is_connected(g));
  EXPECT_TRUE(is_bipartite(g));
  EXPECT_TRUE(is_r_thin(complete_graph(3)));
  EXPECT_FALSE(is_r_thin(complete_bipartite(2, 2)));
  EXPECT_TRUE(is_r_thin(weak_power(complete_graph(3), 4)));
}

TEST(Graph, TextRoundTripKeepsSidesAndLabels) {
  const auto g = levi_graph(3);
  const auto text = graph_to_text(g);
  const auto h = graph_from_text(text);
  EXPECT_EQ(h.edges(), g.edges());
  EXPECT_EQ(h.sides(), g.sides());
  EXPECT_EQ(h.labels(), g.labels());
  EXPECT_EQ(graph_to_text(h), text);
}

TEST(Graph, JsonRoundTrip) {
  const auto g = levi_order1(2, 6);
  const auto h = graph_from_json(graph_to_json(g));
  EXPECT_EQ(h.edges(), g.edges());
  EXPECT_EQ(h.sides(), g.sides());
  EXPECT_EQ(h.labels(), g.labels());
}

TEST(Graph, MalformedTextIsParseError) {
  for (const char* bad : {"", "3", "3 1\n0", "3 1\n0 x\n", "2 1\n0 5\n", "2 1\n0 1\n#side\n0 0\n"}) {
    try {
      graph_from_text(bad);
      ADD_FAILURE() << bad;
    } catch (const Error& e) {
      EXPECT_TRUE(e.code() == ErrorCode::ParseError || e.code() == ErrorCode::InvalidInput) << bad;
    }
  }
}

TEST(Graph, AutomorphismCheckAndRelabel) {
  const auto c6 = cycle_graph(6);
  EXPECT_TRUE(c6.is_automorphism(Permutation::from_cycles(6, {{0, 1, 2, 3, 4, 5}})));
  EXPECT_FALSE(c6.is_automorphism(Permutation::from_cycles(6, {{0, 1}})));
  const auto p = Permutation::from_cycles(6, {{0, 3}, {1, 4}});
  const auto r = c6.relabeled(p);
  for (Vertex u = 0; u < 6; ++u)
    for (Vertex v = 0; v < 6; ++v) EXPECT_EQ(r.adjacent(p(u), p(v)), c6.adjacent(u, v));
}
