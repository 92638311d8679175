#include <gtest/gtest.h>

#include <cmath>

#include "coarse/stats.hpp"
#include "coarse/weight.hpp"

using namespace coarse;

TEST(Weight, BuiltinValues) {
  EXPECT_EQ(WeightFunction::exp2()(0), 1.0);
  EXPECT_EQ(WeightFunction::exp2()(10), 1024.0);
  EXPECT_EQ(WeightFunction::one()(1e6), 1.0);
  EXPECT_EQ(WeightFunction::linear_plus()(4), 5.0);
  EXPECT_EQ(WeightFunction::from_name("exp2").kind(), WeightKind::kExp2);
  EXPECT_EQ(WeightFunction::from_name("linear").name(), "linear");
  EXPECT_THROW(WeightFunction::from_name("EXP2"), std::invalid_argument);
}

TEST(Weight, TableIsRightContinuousStep) {
  auto t = WeightFunction::table({{0, 1}, {2, 3}, {5, 10}});
  EXPECT_EQ(t(0), 1.0);
  EXPECT_EQ(t(1.999), 1.0);
  EXPECT_EQ(t(2), 3.0);
  EXPECT_EQ(t(4), 3.0);
  EXPECT_EQ(t(100), 10.0);
  EXPECT_FALSE(t.doubling_constant(1));
}

TEST(Weight, TableValidation) {
  EXPECT_THROW(WeightFunction::table({}), std::invalid_argument);
  EXPECT_THROW(WeightFunction::table({{1, 1}}), std::invalid_argument);
  EXPECT_THROW(WeightFunction::table({{0, 0.5}}), std::invalid_argument);
  EXPECT_THROW(WeightFunction::table({{0, 2}, {1, 1}}), std::invalid_argument);
  EXPECT_THROW(WeightFunction::table({{0, 1}, {1, 2}, {1, 3}}), std::invalid_argument);
}

TEST(Weight, ClosedFormDoublingHoldsOnGrid) {
  std::vector<Dist> grid;
  for (int t = 0; t <= 30; ++t) grid.push_back(t);
  for (auto theta : {WeightFunction::exp2(), WeightFunction::one(), WeightFunction::linear_plus()}) {
    for (Dist r : {0.0, 1.0, 3.0}) {
      auto c = theta.doubling_constant(r);
      ASSERT_TRUE(c);
      EXPECT_LE(theta.observed_doubling(r, grid), *c) << theta.name() << " r=" << r;
    }
  }
  EXPECT_EQ(*WeightFunction::exp2().doubling_constant(2), 16.0);
  EXPECT_EQ(*WeightFunction::linear_plus().doubling_constant(2), 5.0);
  // linear_plus is tight at t = 0
  EXPECT_EQ(WeightFunction::linear_plus().observed_doubling(2, grid), 5.0);
}

TEST(Weight, CertificateFromTableIsObserved) {
  auto t = WeightFunction::table({{0, 1}, {2, 4}});
  std::vector<Dist> grid{0, 1, 2, 3};
  DoublingCertificate c = doubling_certificate(t, 1, grid);
  EXPECT_EQ(c.r, 1.0);
  EXPECT_EQ(c.C, 4.0);
  EXPECT_EQ(doubling_certificate(WeightFunction::exp2(), 1, grid).C, 4.0);
}

TEST(Weight, DominatesIdentity) {
  std::vector<Dist> grid{0, 1, 2, 5, kInf};
  EXPECT_TRUE(WeightFunction::exp2().dominates_identity(grid));
  EXPECT_TRUE(WeightFunction::linear_plus().dominates_identity(grid));
  EXPECT_FALSE(WeightFunction::one().dominates_identity(grid));
  std::vector<Dist> small{0, 1};
  EXPECT_TRUE(WeightFunction::one().dominates_identity(small));
}

TEST(Stats, LeastSquaresAndLogLog) {
  std::vector<double> x{1, 2, 3, 4}, y{3, 5, 7, 9};
  EXPECT_NEAR(least_squares_slope(x, y), 2.0, 1e-12);
  std::vector<double> cube;
  for (double v : x) cube.push_back(v * v * v);
  EXPECT_NEAR(log_log_slope(x, cube), 3.0, 1e-12);
  std::vector<double> one{1}, flat{2, 2};
  EXPECT_THROW(least_squares_slope(one, one), std::invalid_argument);
  EXPECT_THROW(least_squares_slope(flat, x), std::invalid_argument);
  std::vector<double> zero{0, 1};
  EXPECT_THROW(log_log_slope(zero, flat), std::invalid_argument);
}
