#include <gtest/gtest.h>

#include "support/oracles.hpp"
#include "treehunt/coloring.hpp"
#include "treehunt/generators.hpp"

using namespace treehunt;

TEST(XorShift, KnownSequence) {
  // Reference values from an independent 64-bit evaluation of the recurrence.
  XorShift64Star rng(1);
  std::uint64_t x = 1;
  for (int i = 0; i < 5; ++i) {
    x ^= x >> 12;
    x ^= x << 25;
    x ^= x >> 27;
    EXPECT_EQ(rng.next(), x * 0x2545F4914F6CDD1DULL);
  }
}

TEST(XorShift, ZeroSeedIsUsable) {
  XorShift64Star a(0);
  XorShift64Star b(0x9E3779B97F4A7C15ULL);
  for (int i = 0; i < 8; ++i) EXPECT_EQ(a.next(), b.next());
}

TEST(SeededShuffle, IsAPermutationAndDeterministic) {
  std::vector<int> a(20);
  std::iota(a.begin(), a.end(), 0);
  auto b = a;
  XorShift64Star r1(99);
  XorShift64Star r2(99);
  seeded_shuffle(a, r1);
  seeded_shuffle(b, r2);
  EXPECT_EQ(a, b);
  auto sorted = a;
  std::sort(sorted.begin(), sorted.end());
  for (int i = 0; i < 20; ++i) EXPECT_EQ(sorted[static_cast<std::size_t>(i)], i);
}

TEST(Cycle, Shapes) {
  EXPECT_EQ(cycle(5).size(), 5u);
  const Graph k3 = cycle(3);
  EXPECT_TRUE(k3.adjacent(0, 1) && k3.adjacent(1, 2) && k3.adjacent(0, 2));
  const Graph c7 = cycle(7);
  EXPECT_EQ(c7.order(), 7);
  for (Vertex v = 0; v < 7; ++v) EXPECT_EQ(c7.degree(v), 2u);
  EXPECT_THROW(cycle(2), GraphError);
}

TEST(Mycielskian, OfSingleVertex) {
  const Graph g = mycielskian(build_graph(1, {}));
  EXPECT_EQ(g.order(), 3);
  EXPECT_EQ(g.edges(), (std::vector<Edge>{{1, 2}}));
  EXPECT_EQ(g.degree(0), 0u);
}

TEST(Mycielskian, OfEdgeIsFiveCycle) {
  const Graph g = mycielskian(build_graph(2, {{0, 1}}));
  EXPECT_TRUE(oracle::isomorphic_by_permutation(g, cycle(5)));
}

TEST(Mycielskian, OfFiveCycleIsGrotzsch) {
  const Graph g = mycielskian(cycle(5));
  EXPECT_EQ(g.order(), 11);
  EXPECT_EQ(g.size(), 20u);
  EXPECT_FALSE(oracle::has_triangle_by_triples(g));
  EXPECT_EQ(oracle::chromatic_by_exhaustion(g), 4);
}

TEST(Mycielskian, PreservesTriangleFreenessOnRandomInputs) {
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    const Graph g = random_triangle_free(7, 100, seed);
    const Graph m = mycielskian(g);
    EXPECT_EQ(m.order(), 15);
    EXPECT_EQ(m.size(), 3 * g.size() + 7);
    EXPECT_FALSE(oracle::has_triangle_by_triples(m));
  }
}

TEST(IteratedMycielski, SmallIterates) {
  const Graph m0 = iterated_mycielski(0);
  EXPECT_EQ(m0, cycle(5));
  EXPECT_EQ(oracle::chromatic_by_exhaustion(m0), 3);
  const Graph m1 = iterated_mycielski(1);
  EXPECT_EQ(m1.order(), 11);
  EXPECT_EQ(oracle::chromatic_by_exhaustion(m1), 4);
  const Graph m2 = iterated_mycielski(2);
  EXPECT_EQ(m2.order(), 23);
  EXPECT_FALSE(oracle::has_triangle_by_triples(m2));
  EXPECT_EQ(oracle::radius_by_all_pairs(m2), 2);
  EXPECT_EQ(oracle::chromatic_by_exhaustion(m2), 5);
  EXPECT_THROW(iterated_mycielski(-1), GraphError);
}

TEST(Kneser, Petersen) {
  const Graph g = kneser(5, 2);
  EXPECT_EQ(g.order(), 10);
  EXPECT_EQ(g.size(), 15u);
  EXPECT_FALSE(oracle::has_triangle_by_triples(g));
  for (Vertex v = 0; v < 10; ++v) EXPECT_EQ(g.degree(v), 3u);
}

TEST(Kneser, DegenerateCases) {
  const Graph k2 = kneser(2, 1);
  EXPECT_EQ(k2.order(), 2);
  EXPECT_EQ(k2.size(), 1u);
  const Graph m = kneser(4, 2);
  EXPECT_EQ(m.order(), 6);
  EXPECT_EQ(m.size(), 3u);
  for (Vertex v = 0; v < 6; ++v) EXPECT_EQ(m.degree(v), 1u);
  EXPECT_THROW(kneser(3, 2), GraphError);
  EXPECT_THROW(kneser(3, 0), GraphError);
}

TEST(KSubsets, LexicographicOrder) {
  EXPECT_EQ(k_subsets(4, 2), (std::vector<std::vector<int>>{{1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}}));
}

TEST(RandomTriangleFree, ZeroTarget) {
  const Graph g = random_triangle_free(9, 0, 5);
  EXPECT_EQ(g.order(), 9);
  EXPECT_EQ(g.size(), 0u);
}

TEST(RandomTriangleFree, SaturatedIsMaximal) {
  for (std::uint64_t seed = 1; seed <= 40; ++seed) {
    const int n = 4 + static_cast<int>(seed % 9);
    const Graph g = random_triangle_free(n, 100000, seed);
    EXPECT_FALSE(oracle::has_triangle_by_triples(g));
    for (Vertex u = 0; u < n; ++u)
      for (Vertex v = u + 1; v < n; ++v) {
        if (g.adjacent(u, v)) continue;
        bool closes = false;
        for (Vertex w = 0; w < n; ++w) closes = closes || (g.adjacent(u, w) && g.adjacent(v, w));
        EXPECT_TRUE(closes) << "non-edge " << u << "," << v << " could be added; seed=" << seed;
      }
  }
}

TEST(RandomTriangleFree, RespectsTargetAndSeed) {
  const Graph a = random_triangle_free(15, 12, 77);
  const Graph b = random_triangle_free(15, 12, 77);
  EXPECT_EQ(a.edges(), b.edges());
  EXPECT_EQ(a.size(), 12u);
  EXPECT_NE(random_triangle_free(15, 40, 1).edges(), random_triangle_free(15, 40, 2).edges());
}
