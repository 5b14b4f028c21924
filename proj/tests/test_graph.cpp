#include <gtest/gtest.h>

#include <random>

#include "canonical.hpp"
#include "errors.hpp"
#include "graph.hpp"
#include "oracles.hpp"

using namespace chromagraph;

TEST(Graph6, DecodesKnownStrings) {
  EXPECT_EQ(parse_graph6("Bw"), Graph(3, {{0, 1}, {0, 2}, {1, 2}}));
  EXPECT_EQ(parse_graph6("B?"), Graph(3, {}));
  // The first bit of the upper triangle is the pair (0,1).
  EXPECT_EQ(parse_graph6("B_"), Graph(3, {{0, 1}}));
  EXPECT_EQ(parse_graph6(">>graph6<<Bw"), parse_graph6("Bw"));
  EXPECT_EQ(parse_graph6("@"), Graph(1, {}));
}

TEST(Graph6, EncodesKnownGraphs) {
  EXPECT_EQ(to_graph6(Graph(3, {{0, 1}, {0, 2}, {1, 2}})), "Bw");
  EXPECT_EQ(to_graph6(Graph(3, {})), "B?");
}

TEST(Graph6, RoundTripsRandomGraphs) {
  std::mt19937_64 rng(7);
  for (int n : {1, 2, 5, 17, 62, 63, 64, 100}) {
    for (int rep = 0; rep < 5; ++rep) {
      std::vector<Edge> edges;
      std::bernoulli_distribution coin(0.3);
      for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
          if (coin(rng)) edges.push_back({u, v});
      Graph g(n, edges);
      EXPECT_EQ(parse_graph6(to_graph6(g)), g) << n;
    }
  }
}

TEST(Graph6, LongHeader) {
  Graph g(70, {{0, 69}, {3, 4}});
  const std::string s = to_graph6(g);
  EXPECT_EQ(s.front(), '~');
  EXPECT_EQ(parse_graph6(s), g);
}

TEST(Graph6, ErrorsCarryOffsets) {
  EXPECT_THROW(parse_graph6(""), ParseError);
  try {
    parse_graph6("D?");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.code(), ErrorCode::kParse);
  }
  try {
    parse_graph6("B\x7f");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.position(), 1U);
  }
  EXPECT_THROW(parse_graph6("Bww"), ParseError);
}

TEST(EdgeList, Parses) {
  EXPECT_EQ(parse_edge_list("3\n0 1\n1 2\n0 2"), Graph(3, {{0, 1}, {1, 2}, {0, 2}}));
  EXPECT_EQ(parse_edge_list("2\n0 1\n0 1"), Graph(2, {{0, 1}}));
  EXPECT_EQ(parse_edge_list("# c\n\n3\n# e\n0 1\n"), Graph(3, {{0, 1}}));
}

TEST(EdgeList, ErrorsCarryLineNumbers) {
  try {
    parse_edge_list("2\n0 2");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.position(), 2U);
  }
  try {
    parse_edge_list("3\n0 1\n\n1 1\n");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.position(), 4U);
  }
  EXPECT_THROW(parse_edge_list("3\n0 x\n"), ParseError);
  EXPECT_THROW(parse_edge_list(""), ParseError);
}

TEST(GraphCtor, RejectsLoopsAndRange) {
  EXPECT_THROW(Graph(2, {{1, 1}}), Error);
  EXPECT_THROW(Graph(2, {{0, 2}}), Error);
}

TEST(Family, Sizes) {
  auto k4 = stats(generate_family(Family::kComplete, 4));
  EXPECT_EQ(k4.m, 6U);
  EXPECT_EQ(k4.max_degree, 3);
  auto p5 = stats(generate_family(Family::kPath, 5));
  EXPECT_EQ(p5.m, 4U);
  EXPECT_EQ(p5.max_degree, 2);
  const Graph t = generate_family(Family::kRandomTree, 8, 1);
  EXPECT_EQ(t.size(), 7U);
  EXPECT_TRUE(is_connected(t));
  EXPECT_EQ(generate_family(Family::kStar, 6).size(), 5U);
  EXPECT_EQ(generate_family(Family::kCycle, 6).size(), 6U);
  EXPECT_THROW(generate_family(Family::kCycle, 2), Error);
  EXPECT_THROW(generate_family(Family::kRandomTree, 5), Error);
}

TEST(Family, RandomKindsAreSeededAndConnected) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const Graph a = generate_family(Family::kRandomConnected, 9, seed);
    EXPECT_TRUE(is_connected(a));
    EXPECT_EQ(a, generate_family(Family::kRandomConnected, 9, seed));
  }
}

TEST(Family, SpecParsing) {
  EXPECT_EQ(parse_family_spec("cycle:5"), std::make_pair(Family::kCycle, 5));
  EXPECT_EQ(parse_family_spec("random_tree:8").first, Family::kRandomTree);
  EXPECT_THROW(parse_family_spec("wheel:5"), Error);
  EXPECT_THROW(parse_family_spec("cycle"), Error);
  EXPECT_THROW(parse_family_spec("cycle:x"), Error);
}

TEST(Stats, Examples) {
  auto k4 = stats(generate_family(Family::kComplete, 4));
  EXPECT_EQ(k4.triangles, 4U);
  EXPECT_TRUE(k4.connected);
  auto c5 = stats(generate_family(Family::kCycle, 5));
  EXPECT_EQ(c5.n, 5);
  EXPECT_EQ(c5.m, 5U);
  EXPECT_EQ(c5.max_degree, 2);
  EXPECT_EQ(c5.triangles, 0U);
  EXPECT_FALSE(stats(Graph(4, {{0, 1}, {2, 3}})).connected);
}

TEST(Stats, TrianglesMatchTripleEnumeration) {
  std::mt19937_64 rng(3);
  for (int rep = 0; rep < 50; ++rep) {
    const Graph g = oracle::random_connected(rng, 9, 0.5);
    EXPECT_EQ(stats(g).triangles, oracle::triangles(g));
  }
}

TEST(Enumeration, CountsMatchSubsetFilter) {
  const std::size_t known[] = {0, 1, 1, 4, 38, 728, 26704};
  for (int n = 1; n <= 5; ++n) {
    EXPECT_EQ(enumerate_labeled_connected(n).size(), oracle::count_connected_by_subsets(n)) << n;
    EXPECT_EQ(enumerate_labeled_connected(n).size(), known[n]);
  }
  std::size_t six = 0;
  for_each_labeled_connected(6, [&](const Graph& g) {
    EXPECT_TRUE(is_connected(g));
    ++six;
  });
  EXPECT_EQ(six, known[6]);
}

TEST(Enumeration, TreesFollowCayley) {
  for (int n = 1; n <= 6; ++n) {
    std::size_t expected = 1;
    for (int i = 0; i < n - 2; ++i) expected *= static_cast<std::size_t>(n);
    const auto trees = enumerate_labeled_trees(n);
    EXPECT_EQ(trees.size(), expected) << n;
    for (const auto& t : trees) EXPECT_EQ(t.size(), static_cast<std::size_t>(n - 1));
  }
}

TEST(Components, SplitAndUnion) {
  const Graph g(6, {{0, 1}, {2, 3}, {3, 4}});
  const auto parts = components(g);
  ASSERT_EQ(parts.size(), 3U);
  EXPECT_EQ(parts[1], (std::vector<int>{2, 3, 4}));
  const Graph u = disjoint_union(generate_family(Family::kPath, 2), generate_family(Family::kComplete, 3));
  EXPECT_EQ(u.order(), 5);
  EXPECT_EQ(u.size(), 4U);
  EXPECT_EQ(induced_subgraph(g, {2, 3, 4}), Graph(3, {{0, 1}, {1, 2}}));
}

TEST(EdgeOrdering, ValidatesPermutations) {
  EXPECT_NO_THROW(EdgeOrdering({2, 1, 3}));
  EXPECT_THROW(EdgeOrdering({1, 1, 3}), Error);
  EXPECT_THROW(EdgeOrdering({0, 1, 2}), Error);
  const Graph k4 = generate_family(Family::kComplete, 4);
  const auto a = EdgeOrdering::shuffled(k4, 5);
  EXPECT_EQ(a.ranks(), EdgeOrdering::shuffled(k4, 5).ranks());
  EXPECT_EQ(a.size(), 6U);
}

// Property: the canonical key is invariant under vertex relabelling.
TEST(Canonical, KeyIgnoresLabels) {
  std::mt19937_64 rng(11);
  for (int rep = 0; rep < 200; ++rep) {
    const int n = 2 + static_cast<int>(rng() % 10);
    const Graph g = oracle::random_connected(rng, n, 0.35);
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    std::vector<Edge> moved;
    for (const auto& e : g.edges()) moved.push_back({perm[e.u], perm[e.v]});
    const Graph h(n, moved);
    EXPECT_EQ(canonical_key(g.adjacency_masks()), canonical_key(h.adjacency_masks()));
  }
}

TEST(Canonical, KeySeparatesNonIsomorphic) {
  const Graph p4 = generate_family(Family::kPath, 4);
  const Graph s4 = generate_family(Family::kStar, 4);
  EXPECT_NE(canonical_key(p4.adjacency_masks()), canonical_key(s4.adjacency_masks()));
  const Graph c6 = generate_family(Family::kCycle, 6);
  const Graph two_triangles(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}});
  EXPECT_NE(canonical_key(c6.adjacency_masks()), canonical_key(two_triangles.adjacency_masks()));
}
