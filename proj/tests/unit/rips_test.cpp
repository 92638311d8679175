#include <gtest/gtest.h>

#include "coarse/errors.hpp"
#include "coarse/gallery.hpp"
#include "coarse/random.hpp"
#include "coarse/rips.hpp"
#include "helpers.hpp"

using namespace coarse;
using testing_helpers::segment;
using testing_helpers::to_matrix;

namespace {

SpacePtr scaled(const MetricSpace& s, double k) {
  std::vector<Dist> d(s.matrix().begin(), s.matrix().end());
  for (auto& v : d) v *= k;
  return make_space(s.ids(), std::move(d));
}

SpacePtr discrete(std::size_t n) {
  std::vector<Dist> d(n * n, 1.0);
  for (std::size_t i = 0; i < n; ++i) d[i * n + i] = 0;
  return make_space(testing_helpers::numbered(n), std::move(d));
}

void expect_pointwise_leq(const MetricSpace& a, const MetricSpace& b) {
  for (PointIndex i = 0; i < a.size(); ++i)
    for (PointIndex j = 0; j < a.size(); ++j) EXPECT_TRUE(leq(a(i, j), b(i, j), 0)) << i << "," << j;
}

}  // namespace

TEST(Rips, UnitWeightMatchesStandardRips) {
  Rng rng(41);
  for (int t = 0; t < 10; ++t) {
    SpacePtr Y = random_integer_metric(rng, 15, 4, t % 3 == 0);
    for (Dist sigma : {1.0, 2.0, 3.0}) {
      RipsGraph r = internal_rips(Y, WeightFunction::one(), sigma);
      EXPECT_EQ(*r.space, path_metric(rips_graph(*Y, sigma)));
      EXPECT_TRUE(r.omitted.empty());
    }
  }
}

TEST(Rips, BijectionWithUnitWeightCollapsesToDiscrete) {
  auto Y = segment(6);
  RipsGraph r = augmented_rips(MappedPair::identity(Y), WeightFunction::one(), kInf);
  EXPECT_EQ(*r.space, *discrete(6));
}

TEST(Rips, AugmentedEdgeUsesClosestPreimages) {
  // X: four points over Y = {0, 1} with fibres {a, b} and {c, d}.
  auto X = make_space({"a", "b", "c", "d"}, {0, 4, 9, 5,  //
                                             4, 0, 7, 3,  //
                                             9, 7, 0, 4,  //
                                             5, 3, 4, 0});
  auto Y = make_space({"y0", "y1"}, {0, 10, 10, 0});
  MappedPair f(X, Y, {0, 0, 1, 1});
  RipsGraph r = augmented_rips(f, WeightFunction::linear_plus(), 0);
  ASSERT_EQ(r.graph.edges().size(), 1u);
  EXPECT_EQ(r.graph.edges()[0].kind, EdgeKind::kAugmented);
  EXPECT_EQ(r.graph.edges()[0].weight, 4.0);  // d_X(b, d) + 1
  // Once σ reaches d_Y, the internal edge Θ(10) = 11 is heavier and loses.
  EXPECT_EQ((*augmented_rips(f, WeightFunction::linear_plus(), 10).space)(0, 1), 4.0);
}

TEST(Rips, NoAugmentedEdgeAcrossInfinitePreimages) {
  auto X = make_space({"a", "b"}, {0, kInf, kInf, 0});
  auto Y = segment(2);
  RipsGraph r = augmented_rips(MappedPair(X, Y, {0, 1}), WeightFunction::one(), 0);
  EXPECT_EQ(r.graph.edges().size(), 0u);
  EXPECT_EQ((*r.space)(0, 1), kInf);
}

TEST(Rips, MetricDecreasesAlongSigma) {
  Rng rng(43);
  for (int t = 0; t < 20; ++t) {
    RipsInstance inst = random_rips_instance(rng, 12, 40, 3, 2);
    for (auto theta : {WeightFunction::exp2(), WeightFunction::one()}) {
      std::vector<SpacePtr> chain;
      for (Dist sigma : {0.0, 1.0, 2.0, 4.0, kInf})
        chain.push_back(augmented_rips(inst.f, theta, sigma).space);
      for (std::size_t k = 1; k < chain.size(); ++k) expect_pointwise_leq(*chain[k], *chain[k - 1]);
    }
  }
}

TEST(Rips, CapOmissionBridgedByShortEdges) {
  auto Y = segment(10);
  RipsGraph capped = internal_rips(Y, WeightFunction::exp2(), kInf, 4);
  RipsGraph full = internal_rips(Y, WeightFunction::exp2(), kInf);
  EXPECT_FALSE(capped.omitted.empty());
  EXPECT_TRUE(capped.omission_exact);
  EXPECT_EQ(*capped.space, *full.space);
}

TEST(Rips, CapOmissionFlaggedWhenNotBridged) {
  auto Y = make_space({"a", "b"}, {0, 5, 5, 0});
  RipsGraph r = internal_rips(Y, WeightFunction::exp2(), kInf, 4);
  ASSERT_EQ(r.omitted.size(), 1u);
  EXPECT_EQ(r.omitted[0].weight, 32.0);
  EXPECT_FALSE(r.omission_exact);
}

TEST(Rips, RejectsNegativeSigma) {
  EXPECT_THROW(internal_rips(segment(3), WeightFunction::one(), -1), std::invalid_argument);
}

TEST(ImageSubspace, SurjectiveMapKeepsEveryPoint) {
  auto Y = segment(5);
  ImageRips u = image_subspace(MappedPair::identity(Y), WeightFunction::exp2(), 2);
  EXPECT_EQ(u.points.size(), 5u);
  EXPECT_EQ(*u.space, *augmented_rips(MappedPair::identity(Y), WeightFunction::exp2(), 2).space);
  EXPECT_TRUE(u.omission_exact);
}

TEST(ExtQi, IdentityMap) {
  auto Y = segment(6);
  for (Dist sigma : {0.0, 1.0, 3.0}) {
    ExtQiReport rep = check_ext_qi(MappedPair::identity(Y), WeightFunction::exp2(), sigma);
    EXPECT_TRUE(rep.ok()) << sigma;
    EXPECT_EQ(rep.upper_claimed, std::exp2(sigma) + 1);
  }
}

TEST(ExtQi, RandomInstances) {
  Rng rng(47);
  for (int t = 0; t < 25; ++t) {
    RipsInstance inst = random_rips_instance(rng, 12, 40, 3, 2);
    for (auto theta : {WeightFunction::exp2(), WeightFunction::one(), WeightFunction::linear_plus()})
      for (Dist sigma : {0.0, 1.0, 2.0}) {
        ExtQiReport rep = check_ext_qi(inst.f, theta, sigma);
        EXPECT_TRUE(rep.ok()) << "trial " << t << " " << theta.name() << " sigma " << sigma;
        EXPECT_LE(rep.upper_observed, rep.upper_claimed);
        EXPECT_LE(rep.lower_worst_excess, 0);
      }
  }
}

TEST(ImageQi, RetractionBreaksTiesBySmallestIndex) {
  auto Y = segment(5);
  MappedPair f(make_space({"a", "b"}, {0, 1, 1, 0}), Y, {0, 4});
  EXPECT_EQ(nearest_image_retraction(f), (std::vector<PointIndex>{0, 0, 0, 4, 4}));
}

TEST(ImageQi, Preconditions) {
  auto Y = segment(4);
  MappedPair f(make_space({"a", "b"}, {0, 3, 3, 0}), Y, {0, 3});
  EXPECT_THROW(check_image_qi(f, WeightFunction::one(), 0, {1, 1}), PreconditionError);
  MappedPair sparse(make_space({"a"}, {0}), Y, {0});
  EXPECT_THROW(check_image_qi(sparse, WeightFunction::one(), 3, {1, 1}), PreconditionError);
}

// At σ = r the retraction can send a Rips edge to a pair that U never joins.
TEST(ImageQi, FailsAtSigmaEqualToDensityRadius) {
  auto Y = segment(4);
  auto X = make_space({"a", "b"}, {0, kInf, kInf, 0});
  MappedPair f(X, Y, {0, 3});
  ImageRips u = image_subspace(f, WeightFunction::one(), 1);
  EXPECT_EQ((*u.space)(0, 1), kInf);
  EXPECT_EQ((*augmented_rips(f, WeightFunction::one(), 1).space)(0, 3), 3.0);

  ImageQiReport rep = check_image_qi(f, WeightFunction::one(), 1, {1, 1});
  EXPECT_TRUE(rep.retraction_ok);
  EXPECT_TRUE(rep.iota_ok);
  EXPECT_FALSE(rep.phi_ok);
  EXPECT_EQ(rep.phi_observed, kInf);
  EXPECT_GE(rep.phi_edges_out_of_scale, 1u);

  // Once σ covers d_Y(0, 3) the internal edge appears and the bound holds.
  EXPECT_TRUE(check_image_qi(f, WeightFunction::one(), 3, {1, 1}).ok());
}

TEST(ImageQi, HoldsAtLargeSigmaOnRandomInstances) {
  Rng rng(53);
  for (int t = 0; t < 25; ++t) {
    RipsInstance inst = random_rips_instance(rng, 12, 40, 3, 2);
    const Dist big = inst.f.target().finite_diameter();
    if (big < inst.r) continue;
    for (auto theta : {WeightFunction::exp2(), WeightFunction::one()}) {
      auto grid = inst.f.target().realized_distances();
      DoublingCertificate cert = doubling_certificate(theta, inst.r, grid);
      ImageQiReport rep = check_image_qi(inst.f, theta, big, cert);
      EXPECT_TRUE(rep.ok()) << "trial " << t << " " << theta.name();
      EXPECT_EQ(rep.phi_edges_out_of_scale, 0u);
    }
  }
}

TEST(Lower, Preconditions) {
  auto Y = segment(4);
  MappedPair id = MappedPair::identity(Y);
  EXPECT_THROW(check_lower(id, WeightFunction::one(), {1, 0}), PreconditionError);
  EXPECT_THROW(check_lower(id, WeightFunction::exp2(), {0.5, 0}), PreconditionError);
  EXPECT_NO_THROW(check_lower(id, WeightFunction::exp2(), {1, 0}));
}

TEST(Lower, RandomInstancesWithExp2) {
  Rng rng(59);
  for (int t = 0; t < 20; ++t) {
    RipsInstance inst = random_rips_instance(rng, 12, 40, 3, 2);
    LowerReport rep = check_lower(inst.f, WeightFunction::exp2(), {1, 0});
    EXPECT_TRUE(rep.ok()) << "trial " << t;
    EXPECT_LE(rep.worst_excess, 0);
    // (Y, ∂_∞) is the σ = INF augmented metric.
    EXPECT_EQ(*rep.relaxed, *augmented_rips(inst.f, WeightFunction::exp2(), kInf).space);
  }
}

TEST(Precedes, ScaledMetricIsConsistent) {
  std::vector<MetricPair> fam;
  for (long n : {4L, 8L, 16L}) fam.push_back({segment(n), scaled(*segment(n), 2), n});
  const std::vector<double> slopes{1, 2};
  PrecedesVerdict v = precedes_on_family(fam, slopes);
  EXPECT_TRUE(v.consistent);
  ASSERT_TRUE(v.stable_slope);
  EXPECT_EQ(*v.stable_slope, 1.0);
  EXPECT_EQ(*v.stable_offset, 0.0);
}

TEST(Precedes, LineAgainstDiscreteDiverges) {
  std::vector<MetricPair> fam;
  for (long n : {8L, 16L, 32L}) fam.push_back({segment(n), discrete(n), n});
  const std::vector<double> slopes{1, 4};
  PrecedesVerdict v = precedes_on_family(fam, slopes);
  EXPECT_FALSE(v.consistent);
  // minimal offset is n - 1 - 4
  EXPECT_NEAR(v.divergence_slope, 1.0, 1e-12);
  EXPECT_EQ(*v.offsets[0][1], 3.0);
  EXPECT_EQ(*v.offsets[2][1], 27.0);
}

TEST(Precedes, RejectsMismatchedPoints) {
  std::vector<MetricPair> fam{{segment(3), segment(4), 3}};
  const std::vector<double> slopes{1};
  EXPECT_THROW(precedes_on_family(fam, slopes), std::invalid_argument);
}

TEST(MaximalMetric, CombIdentityArrowsHold) {
  Comb c = comb(4);
  const std::vector<double> slopes{1, 2, 4};
  auto grid = c.path->realized_distances();
  for (Dist sigma : {2.0, 3.0}) {
    MaximalMetricReport rep = synthesize_maximal_metric(
        c.identity, WeightFunction::exp2(), sigma,
        doubling_certificate(WeightFunction::exp2(), 0, grid), slopes);
    EXPECT_TRUE(rep.ok()) << sigma;
    EXPECT_EQ(rep.arrows.size(), 5u);
    for (const auto& a : rep.arrows) EXPECT_TRUE(a.ok) << a.name;
    // The augmented edge bounds ∂ by d_X + 1.
    for (PointIndex i = 0; i < c.path->size(); i += 7)
      for (PointIndex j = 0; j < c.path->size(); ++j)
        if (i != j) EXPECT_LE((*rep.metric)(i, j), (*c.path)(i, j) + 1);
  }
}
