#include <gtest/gtest.h>

#include "support/oracles.hpp"
#include "treehunt/generators.hpp"
#include "treehunt/tree_patterns.hpp"

using namespace treehunt;

TEST(TreeSpec, VertexCounts) {
  EXPECT_EQ(build_tree(TreeSpec::radius_two(4, 2)).graph.order(), 13);
  EXPECT_EQ(build_tree(TreeSpec::spider(5)).graph.order(), 26);
  EXPECT_EQ(build_tree(TreeSpec::radius_two(2, 1)).graph.order(), 5);
  EXPECT_EQ(TreeSpec::spider(3).vertex_count(), 16u);
  EXPECT_EQ(TreeSpec::spider(2).name(), "T(2,2,1)");
}

TEST(TreeSpec, Validation) {
  EXPECT_FALSE(TreeSpec{}.valid());
  EXPECT_FALSE((TreeSpec{{2, 0}}).valid());
  EXPECT_THROW(build_tree(TreeSpec{{1, -1}}), GraphError);
  EXPECT_THROW(find_induced_copy(cycle(5), TreeSpec{}), GraphError);
}

TEST(BuildTree, BreadthFirstLayout) {
  const TreeGraph t = build_tree(TreeSpec::radius_two(2, 1));
  EXPECT_EQ(t.graph.edges(), (std::vector<Edge>{{0, 1}, {0, 2}, {1, 3}, {2, 4}}));
  EXPECT_EQ(t.depth_of, (std::vector<int>{0, 1, 1, 2, 2}));
  EXPECT_EQ(t.parent_of, (std::vector<Vertex>{-1, 0, 0, 1, 2}));
}

TEST(BuildTree, IsATreeWithTheRightLevels) {
  for (const auto& spec : {TreeSpec{{3, 2, 1}}, TreeSpec{{2, 3}}, TreeSpec{{1, 1, 1, 1}}}) {
    const TreeGraph t = build_tree(spec);
    EXPECT_EQ(t.graph.size() + 1, static_cast<std::size_t>(t.graph.order()));
    std::vector<Vertex> all(static_cast<std::size_t>(t.graph.order()));
    std::iota(all.begin(), all.end(), 0);
    EXPECT_TRUE(oracle::subset_realizes(t.graph, all, 0, spec)) << spec.name();
  }
}

TEST(FindInducedCopy, PathInCycle) {
  const auto e = find_induced_copy(cycle(5), TreeSpec::radius_two(1, 1));
  ASSERT_TRUE(e);
  EXPECT_EQ(e->map, (std::vector<Vertex>{0, 1, 2}));
}

TEST(FindInducedCopy, ClawAbsentFromCycle) {
  EXPECT_FALSE(find_induced_copy(cycle(5), TreeSpec::radius_two(1, 2)));
}

TEST(FindInducedCopy, SpiderInGrotzschMatchesSubsetEnumeration) {
  const Graph g = iterated_mycielski(1);
  const TreeSpec spec = TreeSpec::spider(1);
  const auto e = find_induced_copy(g, spec);
  EXPECT_EQ(e.has_value(), oracle::contains_by_subset_enumeration(g, spec));
  ASSERT_TRUE(e);
  EXPECT_TRUE(verify_embedding(g, spec, *e));
  EXPECT_EQ(e->map, *oracle::least_embedding_by_permutation(g, spec));
}

TEST(FindInducedCopy, RootCandidatesRestrictTheRoot) {
  const Graph g = iterated_mycielski(1);
  const TreeSpec spec = TreeSpec::radius_two(2, 2);
  const auto roots = oracle::roots_by_subset_enumeration(g, spec);
  for (Vertex r = 0; r < g.order(); ++r) {
    const auto e = find_induced_copy(g, spec, VertexSet{r});
    EXPECT_EQ(e.has_value(), std::find(roots.begin(), roots.end(), r) != roots.end()) << "r=" << r;
    if (e) {
      EXPECT_EQ(e->map[0], r);
    }
  }
  EXPECT_FALSE(find_induced_copy(g, spec, VertexSet{}));
}

TEST(FindInducedCopy, HostTooSmall) {
  EXPECT_FALSE(find_induced_copy(cycle(5), TreeSpec::spider(1)));
}

TEST(FindInducedCopy, RandomGraphsAgreeWithOracles) {
  const std::vector<TreeSpec> specs{{{1, 1}}, {{1, 2}}, {{2, 1}}, {{2, 2}}, {{3, 1}}, {{1, 2, 1}}};
  for (std::uint64_t seed = 1; seed <= 30; ++seed) {
    const int n = 5 + static_cast<int>(seed % 5);
    const Graph g = seed % 2 ? random_triangle_free(n, static_cast<std::size_t>(n + seed % 7), seed)
                             : oracle::random_graph(n, seed, 35);
    for (const auto& spec : specs) {
      const auto e = find_induced_copy(g, spec);
      const auto want = oracle::least_embedding_by_permutation(g, spec);
      ASSERT_EQ(e.has_value(), want.has_value()) << spec.name() << " seed=" << seed;
      if (e) {
        EXPECT_EQ(e->map, *want) << spec.name() << " seed=" << seed;
        EXPECT_TRUE(verify_embedding(g, spec, *e));
      }
    }
  }
}

TEST(VerifyEmbedding, RejectsBadMaps) {
  const TreeSpec p3 = TreeSpec::radius_two(1, 1);
  EXPECT_TRUE(verify_embedding(cycle(5), p3, {{0, 1, 2}}));
  EXPECT_FALSE(verify_embedding(cycle(5), p3, {{0, 1, 1}}));
  EXPECT_FALSE(verify_embedding(cycle(5), p3, {{0, 1}}));
  EXPECT_FALSE(verify_embedding(cycle(5), p3, {{0, 1, 7}}));
  // P3 onto a triangle: the chord 0-2 breaks inducedness.
  const Graph k3 = cycle(3);
  EXPECT_FALSE(verify_embedding(k3, p3, {{0, 1, 2}}));
  // A non-edge where the tree needs one.
  EXPECT_FALSE(verify_embedding(cycle(5), p3, {{0, 2, 4}}));
}
