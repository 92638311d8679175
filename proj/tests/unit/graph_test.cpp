#include <gtest/gtest.h>

#include <random>

#include "coarse/graph.hpp"
#include "helpers.hpp"

using namespace coarse;
using testing_helpers::numbered;
using testing_helpers::to_matrix;

namespace {

WeightedGraph random_graph(std::mt19937_64& rng, std::size_t n, double density, bool fractional) {
  GraphBuilder b(numbered(n));
  std::uniform_real_distribution<double> coin(0, 1);
  std::uniform_int_distribution<int> w(1, 9);
  for (PointIndex u = 0; u < n; ++u)
    for (PointIndex v = u + 1; v < n; ++v)
      if (coin(rng) < density) b.add(u, v, fractional ? w(rng) / 4.0 : w(rng), EdgeKind::kInternal);
  return std::move(b).build();
}

std::vector<oracle::WEdge> oracle_edges(const WeightedGraph& g) {
  std::vector<oracle::WEdge> out;
  for (const Edge& e : g.edges()) out.push_back({e.u, e.v, e.weight});
  return out;
}

}  // namespace

TEST(WeightedGraph, RejectsBadEdges) {
  GraphBuilder loop(numbered(2));
  loop.add(0, 0, 1, EdgeKind::kInternal);
  EXPECT_THROW(std::move(loop).build(), std::invalid_argument);
  GraphBuilder zero(numbered(2));
  zero.add(0, 1, 0, EdgeKind::kInternal);
  EXPECT_THROW(std::move(zero).build(), std::invalid_argument);
  GraphBuilder range(numbered(2));
  range.add(0, 5, 1, EdgeKind::kInternal);
  EXPECT_THROW(std::move(range).build(), std::invalid_argument);
}

TEST(WeightedGraph, ParallelEdgesCollapseToLightest) {
  GraphBuilder b(numbered(2));
  b.add(1, 0, 3, EdgeKind::kInternal);
  b.add(0, 1, 2, EdgeKind::kAugmented);
  b.add(0, 1, 2, EdgeKind::kGlued);
  WeightedGraph g = std::move(b).build();
  ASSERT_EQ(g.edges().size(), 1u);
  EXPECT_EQ(g.edges()[0].weight, 2.0);
  EXPECT_EQ(g.edges()[0].kind, EdgeKind::kAugmented);
  EXPECT_EQ(g.count(EdgeKind::kAugmented), 1u);
}

TEST(PathMetric, SingleEdgeAndDisconnected) {
  GraphBuilder b(numbered(3));
  b.add(0, 1, 4, EdgeKind::kInternal);
  MetricSpace m = path_metric(std::move(b).build());
  EXPECT_EQ(m(0, 1), 4.0);
  EXPECT_EQ(m(0, 2), kInf);
}

TEST(PathMetric, MatchesFloydWarshall) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t n = 2 + trial % 40;
    WeightedGraph g = random_graph(rng, n, 0.15, trial % 3 == 0);
    MetricSpace m = path_metric(g);
    auto want = oracle::floyd_warshall(n, oracle_edges(g));
    ASSERT_EQ(to_matrix(m), want) << "trial " << trial;
  }
}

TEST(PathMetric, LargeGraphAgainstOracle) {
  std::mt19937_64 rng(11);
  WeightedGraph g = random_graph(rng, 300, 0.02, false);
  EXPECT_EQ(to_matrix(path_metric(g)), oracle::floyd_warshall(300, oracle_edges(g)));
}

TEST(PathMetric, EdgeWeightIsUpperBound) {
  std::mt19937_64 rng(3);
  WeightedGraph g = random_graph(rng, 25, 0.3, false);
  MetricSpace m = path_metric(g);
  for (const Edge& e : g.edges()) EXPECT_LE(m(e.u, e.v), e.weight);
}

TEST(CompleteGraph, ThreePoints) {
  auto s = make_space({"a", "b", "c"}, {0, 1, 2, 1, 0, 3, 2, 3, 0});
  WeightedGraph g = metric_to_complete_graph(*s);
  ASSERT_EQ(g.edges().size(), 3u);
  EXPECT_EQ(g.edges()[1].weight, 2.0);
}

TEST(Skeleton, PreservesPathMetric) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 10; ++trial) {
    WeightedGraph g = random_graph(rng, 30, 0.2, trial % 2 == 1);
    MetricSpace m = path_metric(g);
    std::vector<Edge> skel = metric_skeleton(m);
    EXPECT_LE(skel.size(), metric_to_complete_graph(m).edges().size());
    MetricSpace back = path_metric(WeightedGraph(m.ids(), skel));
    EXPECT_EQ(to_matrix(back), to_matrix(m));
  }
}

TEST(EdgeKind, RoundTripsThroughStrings) {
  for (EdgeKind k : {EdgeKind::kInternal, EdgeKind::kGlued, EdgeKind::kAugmented}) {
    EXPECT_EQ(edge_kind_from_string(to_string(k)), k);
  }
  EXPECT_THROW(edge_kind_from_string("bridge"), std::invalid_argument);
}
