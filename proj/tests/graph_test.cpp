#include <algorithm>
#include <random>
#include <sstream>

#include <gtest/gtest.h>

#include "diamclust/error.hpp"
#include "diamclust/graph.hpp"
#include "test_support.hpp"

using namespace diamclust;
using namespace diamclust::testing;

TEST(Complement, Examples) {
  EXPECT_EQ(complement(graphs::complete(4)), graphs::empty(4));
  EXPECT_EQ(complement(graphs::empty(5)), graphs::complete(5));

  // P4 is self-complementary under 0->2, 1->0, 2->3, 3->1.
  const Graph p4 = graphs::path(4);
  const Graph c = complement(p4);
  const Index phi[] = {2, 0, 3, 1};
  ASSERT_EQ(c.num_edges(), p4.num_edges());
  for (const auto& [u, v] : p4.edges()) EXPECT_TRUE(c.adjacent(phi[u], phi[v]));
}

TEST(Complement, IsInvolution) {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const Graph g = random_gnp(9, 0.4, seed);
    EXPECT_EQ(complement(complement(g)), g);
    EXPECT_EQ(g.num_edges() + complement(g).num_edges(), 9u * 8u / 2u);
  }
}

TEST(Graph, RejectsLoopsDuplicatesAndRange) {
  EXPECT_THROW(Graph(3, {{1, 1}}), InvalidInput);
  EXPECT_THROW(Graph(3, {{0, 1}, {1, 0}}), InvalidInput);
  EXPECT_THROW(Graph(3, {{0, 3}}), InvalidInput);
}

TEST(Graph, NamedGraphs) {
  EXPECT_TRUE(graphs::petersen().is_regular(3));
  EXPECT_EQ(graphs::petersen().num_edges(), 15u);
  EXPECT_TRUE(graphs::complete_bipartite(3, 3).is_regular(3));
  const Graph lk5 = graphs::line_graph(graphs::complete(5));
  EXPECT_EQ(lk5.num_vertices(), 10u);
  EXPECT_TRUE(lk5.is_regular(6));
  EXPECT_EQ(graphs::cycle(5).num_edges(), 5u);
}

TEST(GraphFile, ParsesAndWrites) {
  std::istringstream in("4 3\n0 1\n1 2\n2 3\n");
  const Graph g = read_graph(in);
  EXPECT_EQ(g, graphs::path(4));
  std::ostringstream out;
  write_graph(out, g);
  EXPECT_EQ(out.str(), "4 3\n0 1\n1 2\n2 3\n");
}

TEST(GraphFile, RejectsMalformedLines) {
  for (const char* text : {"3 1\n1 0\n", "3 1\n0 3\n", "3 2\n0 1\n0 1\n", "3 2\n0 1\n",
                           "3 1\n0 1 2\n", "x\n", "3 1\n-1 2\n"}) {
    std::istringstream in(text);
    EXPECT_THROW(read_graph(in), InvalidInput) << text;
  }
}

TEST(Random3Regular, Examples) {
  EXPECT_EQ(random_3regular(4, 1), graphs::complete(4));
  EXPECT_THROW(random_3regular(5, 1), InvalidInput);
  EXPECT_THROW(random_3regular(2, 1), InvalidInput);
  const Graph g = random_3regular(10, 7);
  EXPECT_TRUE(g.is_regular(3));
  EXPECT_EQ(g, random_3regular(10, 7));
}

TEST(Random3Regular, AlwaysSimpleAndCubic) {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const Index n = 4 + 2 * (seed % 24);
    const Graph g = random_3regular(n, seed);
    EXPECT_EQ(g.num_vertices(), n);
    EXPECT_EQ(g.num_edges(), 3 * n / 2);
    EXPECT_TRUE(g.is_regular(3));
  }
}

TEST(MaxClique, MatchesSubsetEnumeration) {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    const Index n = 1 + seed % 12;
    const Graph g = random_gnp(n, 0.2 + 0.1 * static_cast<double>(seed % 7), seed);
    const IndexSet clique = max_clique(g);
    EXPECT_TRUE(g.is_clique(clique));
    EXPECT_EQ(clique.size(), exhaustive_clique_number(g));
  }
}

TEST(MaxClique, LexicographicallySmallestAmongMaximum) {
  // Triangles {1,2,3} and {0,4,5}: the one starting at 0 wins.
  const Graph g(6, {{1, 2}, {1, 3}, {2, 3}, {0, 4}, {0, 5}, {4, 5}});
  EXPECT_EQ(max_clique(g), (IndexSet{0, 4, 5}));
  EXPECT_EQ(max_clique(graphs::empty(3)), (IndexSet{0}));
  EXPECT_TRUE(max_clique(Graph(0)).empty());
}
