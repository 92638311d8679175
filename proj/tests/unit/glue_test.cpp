#include <gtest/gtest.h>

#include "coarse/glue.hpp"
#include "coarse/random.hpp"
#include "helpers.hpp"

using namespace coarse;
using testing_helpers::segment;
using testing_helpers::to_matrix;

TEST(CoarseGlue, TwoSegmentsJoinedAtTheirLeftEnds) {
  // Values frozen by the independent Python oracle.
  auto X = segment(11, "x"), Y = segment(11, "y"), A = segment(1, "a");
  GlueResult g = coarse_glue(MappedPair(A, X, {0}), MappedPair(A, Y, {0}));
  const MetricSpace& s = *g.space;
  EXPECT_EQ(s(g.left(10), g.right(10)), 21.0);
  EXPECT_EQ(s(g.left(5), g.right(5)), 11.0);
  EXPECT_EQ(s(g.left(0), g.right(10)), 11.0);
  EXPECT_EQ(g.graph.count(EdgeKind::kGlued), 1u);
}

TEST(CoarseGlue, InclusionsAreOneLipschitz) {
  Rng rng(4);
  for (int t = 0; t < 20; ++t) {
    SpacePtr X = random_integer_metric(rng, 8, 6, t % 3 == 0, "x");
    SpacePtr Y = random_integer_metric(rng, 6, 6, false, "y");
    SpacePtr A = random_integer_metric(rng, 3, 6, false, "a");
    MappedPair f(A, X, {0, 1, 7}), g(A, Y, {5, 0, 0});
    GlueResult r = coarse_glue(f, g);
    EXPECT_LE(lipschitz_constant(r.left).constant, 1.0);
    EXPECT_LE(lipschitz_constant(r.right).constant, 1.0);
  }
}

TEST(CoarseGlue, EmptyGluingKeepsComponentsApart) {
  auto X = segment(2, "x"), Y = segment(2, "y");
  auto A = make_space({}, {});
  GlueResult r = coarse_glue(MappedPair(A, X, {}), MappedPair(A, Y, {}));
  EXPECT_EQ((*r.space)(r.left(0), r.right(0)), kInf);
}

TEST(CoarseGlue, MismatchedSourcesRejected) {
  auto X = segment(2);
  EXPECT_THROW(coarse_glue(MappedPair(segment(1), X, {0}), MappedPair(segment(2), X, {0, 1})),
               std::domain_error);
}

TEST(Coequaliser, MatchesOracleClosure) {
  Rng rng(9);
  for (int t = 0; t < 25; ++t) {
    CoeqInstance inst = random_coeq_instance(rng, 12, 6, 20);
    CoequaliserResult r = coeq_space(inst.f, inst.g);
    std::vector<std::pair<std::size_t, std::size_t>> unit;
    for (PointIndex a = 0; a < inst.f.source().size(); ++a) unit.emplace_back(inst.f(a), inst.g(a));
    EXPECT_EQ(to_matrix(*r.space), oracle::glue_closure(to_matrix(inst.f.target()), unit));
  }
}

TEST(Coequaliser, EqualMapsGiveTheSameSpace) {
  auto X = segment(5);
  MappedPair f(segment(2), X, {1, 3});
  CoequaliserResult r = coeq_space(f, f);
  EXPECT_EQ(*r.space, *X);
}

TEST(DoubleGlue, ComparisonMapsOnRandomInstances) {
  Rng rng(20240917);
  for (int t = 0; t < 40; ++t) {
    CoeqInstance inst = random_coeq_instance(rng, 20, 10, 20);
    ComparisonReport c = double_glue_comparison(inst.f, inst.g);
    EXPECT_TRUE(c.all_ok()) << "trial " << t << " r=" << c.r_lipschitz << " s=" << c.s_lipschitz
                            << " sr=" << c.sr_closeness;
    EXPECT_EQ(c.double_glued->size(), 2 * inst.f.target().size());
  }
}

TEST(DoubleGlue, SPairStretchesGluedEdgesByTwo) {
  // One glued pair 0 -- 4 on a segment: in Coeq it is one step, in the
  // double gluing (0,0) -> (4,1) -> (4,0) takes two.
  auto X = segment(5);
  MappedPair f(segment(1), X, {0}), g(segment(1), X, {4});
  ComparisonReport c = double_glue_comparison(f, g);
  EXPECT_EQ(c.s_lipschitz, 2.0);
  EXPECT_EQ(c.sr_closeness, 1.0);
  EXPECT_TRUE(c.all_ok());
}
