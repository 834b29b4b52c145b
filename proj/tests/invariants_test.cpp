#include <gtest/gtest.h>

#include <random>

#include "support.hpp"

namespace {

using namespace thompson;
using support::word;

const LinkDiagram& figure_eight_link() {
  static const LinkDiagram l = build_link(word("x0 x2^2 x5 x6 x7^-1 x6^-1 x4^-1"));
  return l;
}

TEST(Laurent, Arithmetic) {
  const auto p = parse_laurent("A^2 - 1 + 3*A^-1");
  EXPECT_EQ(to_string(p), "A^2 - 1 + 3*A^-1");
  EXPECT_EQ(to_string(p - p), "0");
  EXPECT_EQ(to_string(parse_laurent("-2*A^3")), "-2*A^3");
  EXPECT_EQ(parse_laurent("A + A^-1") * parse_laurent("A - A^-1"), parse_laurent("A^2 - A^-2"));
  EXPECT_EQ(LaurentPoly::monomial(3, -1).pow(-2), LaurentPoly::monomial(-6));
  EXPECT_THROW(parse_laurent("A + A^-1").pow(-1), RangeError);
  EXPECT_EQ(parse_laurent("A^3 - 2*A^-5").mirrored(), parse_laurent("A^-3 - 2*A^5"));
  EXPECT_THROW(parse_laurent("A^"), ParseError);
}

TEST(Bracket, Unknot) {
  const auto unknot = build_link(TreeDiagram::identity(kTernary));
  EXPECT_EQ(kauffman_bracket(unknot), LaurentPoly::monomial(0));
  EXPECT_EQ(kauffman_bracket_skein(unknot), LaurentPoly::monomial(0));
  EXPECT_EQ(jones_polynomial(orient_link(unknot, {1})), LaurentPoly::monomial(0));
  EXPECT_THROW(kauffman_bracket(LinkDiagram()), RangeError);
}

TEST(Bracket, ReidemeisterOneFactor) {
  const auto positive_kink = from_pd(parse_pd("X(1,1,2,2)"));
  EXPECT_EQ(kauffman_bracket(positive_kink), parse_laurent("-A^3"));
  EXPECT_EQ(writhe(orient_by_tracing(positive_kink)), 1);
  const auto negative_kink = from_pd(parse_pd("X(2,1,1,2)"));
  EXPECT_EQ(kauffman_bracket(negative_kink), parse_laurent("-A^-3"));
  EXPECT_EQ(writhe(orient_by_tracing(negative_kink)), -1);
  EXPECT_EQ(jones_polynomial(positive_kink), LaurentPoly::monomial(0));
}

TEST(Bracket, DisjointUnknotFactor) {
  for (const auto& l : {support::left_trefoil_pd(), support::figure_eight_pd(), build_link(word("x0 x1"))}) {
    EXPECT_EQ(kauffman_bracket(with_free_loops(l, 1)), loop_value() * kauffman_bracket(l));
    EXPECT_EQ(kauffman_bracket_skein(with_free_loops(l, 1)), loop_value() * kauffman_bracket(l));
  }
}

TEST(Bracket, StandardKnotTables) {
  EXPECT_EQ(kauffman_bracket(support::figure_eight_pd()), support::bracket_by_tracing(support::figure_eight_pd()));
  EXPECT_EQ(jones_polynomial(support::figure_eight_pd()), support::figure_eight_jones());
  EXPECT_EQ(jones_polynomial(support::left_trefoil_pd()), support::left_trefoil_jones());
  EXPECT_EQ(jones_polynomial(mirror(orient_by_tracing(support::left_trefoil_pd()))),
            support::left_trefoil_jones().mirrored());
}

TEST(Bracket, AlgorithmsAgreeOnPipelineDiagrams) {
  std::mt19937 rng(71);
  for (int trial = 0; trial < 200; ++trial) {
    const auto l = support::random_pipeline_link(rng, 14);
    const auto states = kauffman_bracket_states(l);
    ASSERT_EQ(states, kauffman_bracket_skein(l));
    if (l.crossing_count() <= 10) {
      ASSERT_EQ(states, support::bracket_by_tracing(l));
    }
  }
}

TEST(Bracket, ThreadCountDoesNotMatter) {
  const auto single = kauffman_bracket_states(figure_eight_link(), 1);
  EXPECT_EQ(kauffman_bracket_states(figure_eight_link(), 4), single);
  EXPECT_EQ(kauffman_bracket_states(figure_eight_link(), 7), single);
}

TEST(Bracket, Budget) {
  std::vector<Crossing> crossings;
  const int n = kBracketCrossingBudget + 1;
  for (int c = 0; c < n; ++c) crossings.push_back({{2 * c, 2 * c, 2 * c + 1, 2 * c + 1}, Half::Upper});
  EXPECT_THROW(kauffman_bracket_states(LinkDiagram(crossings, 0)), BudgetError);
}

TEST(Jones, FigureEightElement) {
  const auto& l = figure_eight_link();
  const auto bracket = kauffman_bracket(l);
  EXPECT_EQ(bracket, kauffman_bracket_skein(l));
  EXPECT_EQ(bracket, parse_laurent("A^2 - A^-2 + A^-6 - A^-10 + A^-14"));
  const auto v = jones_polynomial(l);
  EXPECT_EQ(v, support::figure_eight_jones());
  EXPECT_EQ(v, v.mirrored());
}

// Chirality regression: a knot of this element is a trefoil, which is not amphichiral.
TEST(Jones, TrefoilElement) {
  const auto l = build_link(word("x0^2 x2 x1^-1"));
  EXPECT_EQ(l.crossing_count(), 8);
  EXPECT_EQ(components(l), 1);
  EXPECT_EQ(kauffman_bracket(l), support::bracket_by_tracing(l));
  EXPECT_EQ(jones_polynomial(l), support::left_trefoil_jones());
  EXPECT_EQ(jones_polynomial(mirror(l)), support::left_trefoil_jones().mirrored());
}

TEST(Jones, OrientedProductOfFirstTwoGenerators) {
  const auto d = word("x0 x1");
  const auto l = orient_link(build_link(d), *oriented_membership(d).colors);
  EXPECT_EQ(kauffman_bracket(l), kauffman_bracket_skein(l));
  EXPECT_EQ(jones_polynomial(l), parse_laurent("-A^2 - A^-2"));
  EXPECT_THROW(jones_polynomial(build_link(d)), RangeError);
}

TEST(Jones, MirrorInvertsTheVariable) {
  std::mt19937 rng(72);
  for (int trial = 0; trial < 30; ++trial) {
    const auto d = support::random_product(rng, support::oriented_generators(), 3);
    const auto l = orient_link(build_link(d), *oriented_membership(d).colors);
    if (l.crossing_count() > 14) continue;
    EXPECT_EQ(jones_polynomial(mirror(l)), jones_polynomial(l).mirrored());
    EXPECT_EQ(writhe(mirror(l)), -writhe(l));
  }
}

TEST(Components, Values) {
  EXPECT_EQ(components(support::figure_eight_pd()), 1);
  EXPECT_EQ(components(with_free_loops(support::figure_eight_pd(), 2)), 3);
  EXPECT_EQ(components(figure_eight_link()), 1);
}

}  // namespace
