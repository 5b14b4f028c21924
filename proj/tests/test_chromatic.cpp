#include <gtest/gtest.h>

#include <random>

#include "chromatic.hpp"
#include "errors.hpp"
#include "oracles.hpp"

using namespace chromagraph;

namespace {

IntPoly poly(std::initializer_list<long> c) {
  std::vector<mpz_class> v;
  for (long x : c) v.emplace_back(x);
  return IntPoly(v);
}

std::vector<mpz_class> ints(std::initializer_list<long> c) {
  std::vector<mpz_class> v{0};
  for (long x : c) v.emplace_back(x);
  return v;
}

// (x-1)^n + (-1)^n (x-1)
IntPoly cycle_poly(int n) {
  IntPoly p = pow(poly({-1, 1}), static_cast<unsigned>(n));
  return p + poly({-1, 1}) * mpz_class(n % 2 == 0 ? 1 : -1);
}

}  // namespace

TEST(ChromPoly, RejectsNonMonic) {
  EXPECT_THROW(ChromPoly(poly({0, 2})), Error);
  EXPECT_THROW(ChromPoly(poly({1})), Error);
  EXPECT_NO_THROW(ChromPoly(poly({0, 1})));
}

TEST(Chromatic, SmallExamples) {
  EXPECT_EQ(chromatic_polynomial(generate_family(Family::kComplete, 3)).poly(), poly({0, 2, -3, 1}));
  EXPECT_EQ(chromatic_polynomial(generate_family(Family::kPath, 3)).poly(), poly({0, 1, -2, 1}));
  EXPECT_EQ(chromatic_polynomial(generate_family(Family::kCycle, 4)).poly(), poly({0, -3, 6, -4, 1}));
  EXPECT_EQ(chromatic_polynomial(Graph(1, {})).poly(), poly({0, 1}));
  EXPECT_EQ(chromatic_polynomial(Graph(3, {})).poly(), poly({0, 0, 0, 1}));
}

TEST(Chromatic, ClosedFormFamilies) {
  for (int n = 3; n <= 14; ++n)
    EXPECT_EQ(chromatic_polynomial(generate_family(Family::kCycle, n)).poly(), cycle_poly(n)) << n;
  for (int n = 1; n <= 12; ++n) {
    EXPECT_EQ(chromatic_polynomial(generate_family(Family::kComplete, n)).poly(), falling_factorial(n));
    const IntPoly tree = poly({0, 1}) * pow(poly({-1, 1}), static_cast<unsigned>(n - 1));
    EXPECT_EQ(chromatic_polynomial(generate_family(Family::kStar, n)).poly(), tree);
    EXPECT_EQ(chromatic_polynomial(generate_family(Family::kRandomTree, n, 9)).poly(), tree);
  }
}

TEST(Chromatic, PetersenColourings) {
  const Graph petersen(10, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}, {0, 5}, {1, 6}, {2, 7}, {3, 8}, {4, 9},
                            {5, 7}, {7, 9}, {9, 6}, {6, 8}, {8, 5}});
  const ChromPoly p = chromatic_polynomial(petersen);
  EXPECT_EQ(p(3), 120);
  EXPECT_EQ(p(3), count_colorings(petersen, 3));
  EXPECT_EQ(p(2), 0);
  EXPECT_EQ(chromatic_number(p), 3);
}

TEST(Chromatic, DisconnectedIsProductOfComponents) {
  const Graph a = generate_family(Family::kCycle, 5);
  const Graph b = generate_family(Family::kComplete, 4);
  EXPECT_EQ(chromatic_polynomial(disjoint_union(a, b)).poly(),
            chromatic_polynomial(a).poly() * chromatic_polynomial(b).poly());
}

TEST(Subset, Examples) {
  EXPECT_EQ(subset_expansion(Graph(2, {{0, 1}})).poly(), poly({0, -1, 1}));
  EXPECT_EQ(subset_expansion(generate_family(Family::kComplete, 3)).poly(), poly({0, 2, -3, 1}));
  EXPECT_EQ(subset_expansion(Graph(3, {})).poly(), poly({0, 0, 0, 1}));
  EXPECT_THROW(subset_expansion(generate_family(Family::kComplete, 8)), Error);
}

TEST(Colourings, Examples) {
  const Graph k3 = generate_family(Family::kComplete, 3);
  EXPECT_EQ(count_colorings(k3, 3), 6);
  EXPECT_EQ(count_colorings(k3, 2), 0);
  EXPECT_EQ(count_colorings(generate_family(Family::kCycle, 4), 2), 2);
  EXPECT_EQ(count_colorings(k3, 0), 0);
  EXPECT_THROW(count_colorings(generate_family(Family::kPath, 30), 3), Error);
}

// Property: three independent routes agree on random graphs.
TEST(Chromatic, EngineSubsetAndCountsAgree) {
  std::mt19937_64 rng(21);
  ChromaticEngine engine;
  for (int rep = 0; rep < 150; ++rep) {
    const int n = 2 + static_cast<int>(rng() % 7);
    Graph g = oracle::random_connected(rng, n, 0.3);
    if (g.size() > kMaxSubsetEdges) continue;
    const ChromPoly p = engine.compute(g);
    EXPECT_EQ(p, subset_expansion(g));
    EXPECT_EQ(p, chromatic_polynomial(g));
    for (unsigned x = 0; x <= static_cast<unsigned>(std::min(n, 5)); ++x) EXPECT_EQ(p(x), count_colorings(g, x));
  }
  EXPECT_GT(engine.cache_hits(), 0U);
}

// Property: dense and sparse pivots agree on the same graph.
TEST(Chromatic, DenseGraphsMatchBruteForceCounts) {
  std::mt19937_64 rng(5);
  for (int rep = 0; rep < 30; ++rep) {
    const int n = 6 + static_cast<int>(rng() % 4);
    const Graph g = oracle::random_connected(rng, n, 0.85);
    const ChromPoly p = chromatic_polynomial(g);
    for (unsigned x = 4; x <= 6; ++x) EXPECT_EQ(p(static_cast<long>(x)), count_colorings(g, x));
  }
}

TEST(Whitney, BrokenCycleExamples) {
  const Graph k3 = generate_family(Family::kComplete, 3);
  for (std::uint64_t seed = 0; seed < 6; ++seed)
    EXPECT_EQ(broken_cycle_coeffs(k3, EdgeOrdering::shuffled(k3, seed)).a, ints({2, 3, 1}));
  const Graph c4 = generate_family(Family::kCycle, 4);
  EXPECT_EQ(broken_cycle_coeffs(c4, EdgeOrdering::canonical(c4)).a, ints({3, 6, 4, 1}));
  const Graph p3 = generate_family(Family::kPath, 3);
  EXPECT_EQ(broken_cycle_coeffs(p3, EdgeOrdering::canonical(p3)).a, ints({1, 2, 1}));
}

TEST(Whitney, FromPolyExamples) {
  EXPECT_EQ(whitney_from_poly(ChromPoly(poly({0, 2, -3, 1}))).a, ints({2, 3, 1}));
  EXPECT_EQ(whitney_from_poly(ChromPoly(poly({0, -1, 1}))).a, ints({1, 1}));
  EXPECT_EQ(whitney_from_poly(ChromPoly(poly({0, -3, 6, -4, 1}))).a, ints({3, 6, 4, 1}));
  EXPECT_THROW(whitney_from_poly(ChromPoly(poly({0, 1, 1}))), Error);
}

// Oracle: broken cycles from explicit cycle enumeration, for every n <= 5 graph.
TEST(Whitney, MatchesCycleEnumeration) {
  std::uint64_t seed = 0;
  for (int n = 1; n <= 5; ++n) {
    for (const Graph& g : enumerate_labeled_connected(n)) {
      const auto ordering = EdgeOrdering::shuffled(g, seed++);
      const auto expected = oracle::broken_cycle_free_counts(g, ordering.ranks());
      ASSERT_EQ(broken_cycle_coeffs(g, ordering).a, expected) << to_graph6(g);
      ASSERT_EQ(whitney_from_poly(chromatic_polynomial(g)).a, expected) << to_graph6(g);
    }
  }
}

TEST(ChromaticNumber, Examples) {
  EXPECT_EQ(chromatic_number(generate_family(Family::kComplete, 4)), 4);
  EXPECT_EQ(chromatic_number(generate_family(Family::kCycle, 5)), 3);
  EXPECT_EQ(chromatic_number(generate_family(Family::kPath, 6)), 2);
  EXPECT_EQ(chromatic_number(Graph(3, {})), 1);
}

TEST(PolyJson, RoundTrip) {
  const IntPoly p = chromatic_polynomial(generate_family(Family::kComplete, 3)).poly();
  EXPECT_EQ(poly_to_json(p), R"(["0","2","-3","1"])");
  EXPECT_EQ(poly_from_json(poly_to_json(p)), p);
  const IntPoly big = chromatic_polynomial(generate_family(Family::kComplete, 25)).poly();
  EXPECT_EQ(poly_from_json(poly_to_json(big)), big);
  EXPECT_THROW(poly_from_json("[1,2]"), ParseError);
  EXPECT_THROW(poly_from_json("{"), ParseError);
}
