#include <gtest/gtest.h>

#include <fstream>
#include <random>
#include <sstream>

#include "support.hpp"

namespace {

using namespace thompson;
using support::word;

TaitEdge up(int a, int b) { return {a, b, Half::Upper, EdgeSign::Positive}; }
TaitEdge down(int a, int b) { return {a, b, Half::Lower, EdgeSign::Negative}; }

bool is_proper(const TaitGraph& g, const std::vector<int>& colors) {
  return std::ranges::all_of(g.edges(), [&](const TaitEdge& e) {
    return colors[static_cast<std::size_t>(e.left)] != colors[static_cast<std::size_t>(e.right)];
  });
}

bool is_odd_cycle(const TaitGraph& g, const std::vector<int>& cycle) {
  if (cycle.size() < 3 || cycle.front() != cycle.back() || (cycle.size() - 1) % 2 == 0) return false;
  for (std::size_t i = 0; i + 1 < cycle.size(); ++i) {
    const int a = std::min(cycle[i], cycle[i + 1]);
    const int b = std::max(cycle[i], cycle[i + 1]);
    if (std::ranges::none_of(g.edges(), [&](const TaitEdge& e) { return e.left == a && e.right == b; })) return false;
  }
  return true;
}

TEST(TaitBinary, GoldenProductOfFirstTwoGenerators) {
  const TaitGraph expected(4, {up(0, 1), up(1, 2), up(0, 3), down(0, 1), down(1, 2), down(2, 3)});
  EXPECT_EQ(tait_graph_binary(word("x0 x1")), expected);
}

TEST(TaitBinary, Examples) {
  EXPECT_EQ(tait_graph_binary(TreeDiagram::identity(kBinary)), TaitGraph(1, {}));
  EXPECT_EQ(tait_graph_binary(word("x0")), TaitGraph(3, {up(0, 1), up(0, 2), down(0, 1), down(1, 2)}));
  EXPECT_EQ(tait_graph_binary(expand_at_leaf(word("x0"), 2)), tait_graph_binary(word("x0")));
  EXPECT_THROW(tait_graph_binary(word("y0", kTernary)), ArityError);
}

TEST(TaitBinary, TreeGraphProperties) {
  std::mt19937 rng(41);
  for (int trial = 0; trial < 300; ++trial) {
    const auto g = tait_graph_binary(word_to_diagram(support::random_word(rng, kBinary)));
    EXPECT_TRUE(satisfies_tree_graph_properties(g));
    EXPECT_TRUE(is_connected(g));
  }
}

TEST(TaitTernary, GoldenSecondGenerator) {
  const TaitGraph expected(3, {{0, 2, Half::Upper, EdgeSign::Positive},
                               {1, 2, Half::Upper, EdgeSign::Negative},
                               {0, 1, Half::Lower, EdgeSign::Negative},
                               {1, 2, Half::Lower, EdgeSign::Negative}});
  const TaitGraph g = tait_graph_ternary(word("y1", kTernary));
  EXPECT_EQ(g, expected);
  EXPECT_EQ(tait_graph_ternary(TreeDiagram::identity(kTernary)), TaitGraph(1, {}));
}

TEST(TaitTernary, IotaReproducesTheBinaryGraph) {
  EXPECT_EQ(tait_graph_ternary(iota(word("x0 x1"))), tait_graph_binary(word("x0 x1")));
  std::mt19937 rng(42);
  for (int trial = 0; trial < 1000; ++trial) {
    const auto d = word_to_diagram(support::random_word(rng, kBinary));
    ASSERT_EQ(tait_graph_ternary(iota(d)), tait_graph_binary(d)) << to_string(d);
  }
}

TEST(TaitTernary, MatchesRegionOracle) {
  std::mt19937 rng(43);
  for (int trial = 0; trial < 500; ++trial) {
    const auto d = word_to_diagram(support::random_word(rng, kTernary));
    ASSERT_EQ(tait_graph_ternary(d), support::tait_graph_from_regions(d)) << to_string(d);
  }
}

TEST(TwoColor, Examples) {
  const auto product = two_color(tait_graph_ternary(iota(word("x0 x1"))));
  ASSERT_TRUE(product.bipartite());
  EXPECT_EQ(*product.colors, (std::vector<int>{1, -1, 1, -1}));
  EXPECT_EQ(*two_color(TaitGraph(1, {})).colors, std::vector<int>{1});

  const auto g = tait_graph_binary(word("x0"));
  const auto x0 = two_color(g);
  EXPECT_FALSE(x0.bipartite());
  EXPECT_TRUE(is_odd_cycle(g, x0.odd_cycle));
}

TEST(TwoColor, AgreesWithParityUnionFind) {
  std::mt19937 rng(44);
  for (int trial = 0; trial < 500; ++trial) {
    const auto g = membership_tait_graph(word_to_diagram(support::random_word(rng, trial % 2 ? kBinary : kTernary)));
    const auto result = two_color(g);
    ASSERT_EQ(result.bipartite(), support::bipartite_by_parity(g));
    if (result.bipartite()) {
      EXPECT_TRUE(is_proper(g, *result.colors));
      EXPECT_EQ(result.colors->front(), 1);
    } else {
      EXPECT_TRUE(is_odd_cycle(g, result.odd_cycle));
    }
  }
}

TEST(OrientedMembership, Generators) {
  for (const auto& g : support::oriented_generators()) EXPECT_TRUE(is_oriented_member(g));
  for (const auto& g : support::oriented_f3_generators()) EXPECT_TRUE(is_oriented_member(g));
  EXPECT_FALSE(is_oriented_member(word("x0")));
  EXPECT_FALSE(is_oriented_member(word("y1", kTernary)));
  EXPECT_THROW(is_oriented_member(word("y1", kQuaternary)), ArityError);
}

TEST(OrientedMembership, ClosureAndRepresentativeIndependence) {
  std::mt19937 rng(45);
  for (const auto& gens : {support::oriented_generators(), support::oriented_f3_generators()}) {
    for (int trial = 0; trial < 200; ++trial) {
      const auto d = support::random_product(rng, gens);
      EXPECT_TRUE(is_oriented_member(d)) << to_string(d);
    }
  }
  for (int trial = 0; trial < 200; ++trial) {
    const auto d = word_to_diagram(support::random_word(rng, kBinary));
    const int leaf = std::uniform_int_distribution<int>(0, d.leaf_count() - 1)(rng);
    EXPECT_EQ(is_oriented_member(d), is_oriented_member(expand_at_leaf(d, leaf)));
  }
}

TEST(StripColoring, Examples) {
  const auto w0 = strip_three_color(word("w0"));
  ASSERT_TRUE(w0.colorable());
  const int root_middle = reduce(word("w0")).top().child(0).leaf_count();
  EXPECT_EQ((*w0.colors)[0], 0);
  EXPECT_EQ((*w0.colors)[static_cast<std::size_t>(root_middle)], 2);
  EXPECT_EQ(w0.colors->back(), 1);

  const auto identity = strip_three_color(TreeDiagram::identity(kBinary));
  ASSERT_TRUE(identity.colorable());
  EXPECT_EQ(*identity.colors, (std::vector<int>{0, 1}));

  const auto x1 = strip_three_color(word("x1"));
  EXPECT_FALSE(x1.colorable());
  EXPECT_NE(x1.conflict_colors[0], x1.conflict_colors[1]);
  EXPECT_FALSE(is_threecolorable_member(word("x0")));
}

TEST(StripColoring, AgreesWithSearch) {
  std::mt19937 rng(46);
  for (int trial = 0; trial < 300; ++trial) {
    const auto d = word_to_diagram(support::random_word(rng, kBinary, 8, 4));
    ASSERT_EQ(is_threecolorable_member(d), support::strip_colorable_by_search(d)) << to_string(d);
  }
  for (const auto& g : support::colorable_generators()) EXPECT_TRUE(support::strip_colorable_by_search(g));
}

TEST(StripColoring, ClosureAndRepresentativeIndependence) {
  std::mt19937 rng(47);
  for (int trial = 0; trial < 300; ++trial) {
    const auto d = support::random_product(rng, support::colorable_generators());
    EXPECT_TRUE(is_threecolorable_member(d)) << to_string(d);
    const int leaf = std::uniform_int_distribution<int>(0, d.leaf_count() - 1)(rng);
    EXPECT_TRUE(is_threecolorable_member(expand_at_leaf(d, leaf)));
  }
}

TEST(Dot, GoldenFile) {
  const auto g = tait_graph_binary(word("x0 x1"));
  const auto colouring = two_color(g);
  std::ifstream in(std::string(FIXTURE_DIR) + "/x0x1_tait.dot");
  ASSERT_TRUE(in.good());
  std::stringstream expected;
  expected << in.rdbuf();
  EXPECT_EQ(to_dot(g, &*colouring.colors), expected.str());
}

}  // namespace
