#include <gtest/gtest.h>

#include <sstream>

#include "coarse/filtration.hpp"
#include "coarse/gallery.hpp"
#include "coarse/random.hpp"
#include "helpers.hpp"

using namespace coarse;
using testing_helpers::segment;
using testing_helpers::to_matrix;

namespace {

// Random map from a random integer metric onto a smaller one.
MappedPair random_map(Rng& rng, std::size_t nx, std::size_t ny, bool split) {
  SpacePtr X = random_integer_metric(rng, nx, 5, split, "x");
  SpacePtr Y = random_integer_metric(rng, ny, 4, false, "y");
  std::vector<PointIndex> assign(nx);
  for (auto& a : assign) a = std::uniform_int_distribution<PointIndex>(0, ny - 1)(rng);
  return MappedPair(X, Y, assign);
}

std::vector<PointIndex> members(const Window& w) { return w.members(); }

}  // namespace

TEST(EqSublevel, PointsWhereMapsAgreeUpToKappa) {
  auto X = segment(5), Y = segment(5);
  MappedPair id = MappedPair::identity(X);
  MappedPair shift(X, Y, {0, 1, 3, 4, 4});
  Subspace e0 = eq_sublevel(id, shift, 0);
  EXPECT_EQ(e0.space->size(), 3u);  // 0, 1, 4
  Subspace e1 = eq_sublevel(id, shift, 1);
  EXPECT_EQ(e1.space->size(), 5u);
  EXPECT_THROW(eq_sublevel(id, shift, -1), std::invalid_argument);
}

TEST(KernelSublevel, EqualsEqualiserThroughExplicitProduct) {
  Rng rng(21);
  for (int t = 0; t < 10; ++t) {
    MappedPair f = random_map(rng, 7, 4, t % 2 == 0);
    for (Dist sigma : {0.0, 1.0, 3.0}) {
      KernelSublevel k = kernel_sublevel(f, sigma);
      KernelSublevel::Explicit ex = k.materialize();
      Subspace eq = eq_sublevel(compose(f, ex.first), compose(f, ex.second), sigma);
      // Same members in the product ...
      EXPECT_EQ(*eq.space, *ex.sub.space);
      // ... and the implicit distance agrees with the explicit subspace.
      for (std::size_t i = 0; i < k.pairs.size(); i += 3)
        for (std::size_t j = 0; j < k.pairs.size(); j += 5)
          EXPECT_EQ(k.distance(i, j), (*ex.sub.space)(i, j));
    }
  }
}

TEST(KernelSublevel, ContainsDiagonal) {
  MappedPair f = cubes_squares(4);
  KernelSublevel k = kernel_sublevel(f, 0);
  EXPECT_EQ(k.pairs.size(), 4u);
  EXPECT_TRUE(k.contains(2, 2));
  EXPECT_FALSE(k.contains(1, 2));
}

TEST(KernelPairDistance, MatchesBruteForce) {
  Rng rng(17);
  for (int t = 0; t < 15; ++t) {
    MappedPair f = random_map(rng, 9, 5, t % 4 == 0);
    auto dx = to_matrix(f.source()), dy = to_matrix(f.target());
    for (Dist sigma : {0.0, 2.0}) {
      for (PointIndex x = 0; x < 9; x += 2)
        for (PointIndex xp = 0; xp < 9; ++xp)
          EXPECT_EQ(kernel_pair_distance(f, sigma, x, xp),
                    oracle::kernel_distance(dx, dy, f.assignment(), sigma, x, xp));
    }
  }
}

TEST(KernelProfile, MatchesBruteForceOnRandomWindows) {
  Rng rng(23);
  for (int t = 0; t < 12; ++t) {
    MappedPair f = random_map(rng, 10, 5, t % 3 == 0);
    Window w = Window::all(10);
    for (PointIndex x = 0; x < 10; ++x) w.inside[x] = (x + t) % 3 != 0;
    const std::vector<Dist> grid{0, 1, 2, 4};
    FiltrationProfile p = kernel_stability_profile(f, grid, w);
    auto dx = to_matrix(f.source()), dy = to_matrix(f.target());
    for (const ProfileRecord& r : p.records) {
      EXPECT_EQ(r.value, oracle::inclusion_density(dx, dy, f.assignment(), r.sigma, r.tau, members(w)))
          << "sigma " << r.sigma << " tau " << r.tau;
    }
    EXPECT_FALSE(p.monotonicity_violation());
  }
}

TEST(QuotientSpace, MatchesOracleClosure) {
  Rng rng(29);
  for (int t = 0; t < 12; ++t) {
    MappedPair f = random_map(rng, 12, 5, t % 2 == 1);
    for (Dist sigma : {0.0, 1.0, 3.0}) {
      QuotientResult q = quotient_space(f, sigma);
      std::vector<std::pair<std::size_t, std::size_t>> unit;
      for (PointIndex x = 0; x < 12; ++x)
        for (PointIndex xp = 0; xp < 12; ++xp)
          if (f.target()(f(x), f(xp)) <= sigma) unit.emplace_back(x, xp);
      EXPECT_EQ(to_matrix(*q.space), oracle::glue_closure(to_matrix(f.source()), unit));
      EXPECT_EQ(q.induced.assignment(), f.assignment());
    }
  }
}

TEST(QuotientProfile, MatchesOracleDistortion) {
  Rng rng(31);
  for (int t = 0; t < 8; ++t) {
    MappedPair f = random_map(rng, 11, 4, false);
    const std::vector<Dist> grid{0, 1, 2};
    Window w = Window::all(11);
    FiltrationProfile p = quotient_stability_profile(f, grid, w);
    std::vector<oracle::Matrix> q;
    for (Dist s : grid) {
      std::vector<std::pair<std::size_t, std::size_t>> unit;
      for (PointIndex x = 0; x < 11; ++x)
        for (PointIndex xp = 0; xp < 11; ++xp)
          if (f.target()(f(x), f(xp)) <= s) unit.emplace_back(x, xp);
      q.push_back(oracle::glue_closure(to_matrix(f.source()), unit));
    }
    for (std::size_t s = 0; s < grid.size(); ++s)
      for (std::size_t u = s; u < grid.size(); ++u) {
        double want = 0;
        for (PointIndex x = 0; x < 11; ++x)
          for (PointIndex xp = 0; xp < 11; ++xp)
            if (q[u][x][xp] <= 1) want = std::max(want, q[s][x][xp]);
        EXPECT_EQ(p.value(grid[s], grid[u]), want);
      }
  }
}

TEST(Profiles, RejectBadGrids) {
  MappedPair f = cubes_squares(3);
  Window w = Window::all(3);
  EXPECT_THROW(kernel_stability_profile(f, std::vector<Dist>{}, w), std::invalid_argument);
  EXPECT_THROW(kernel_stability_profile(f, std::vector<Dist>{2, 1}, w), std::invalid_argument);
  EXPECT_THROW(quotient_stability_profile(f, std::vector<Dist>{-1}, w), std::invalid_argument);
  EXPECT_THROW(quotient_stability_profile(f, std::vector<Dist>{0}, Window::all(2)),
               std::invalid_argument);
}

TEST(Profiles, CsvLayout) {
  MappedPair f = cubes_squares(3);
  FiltrationProfile p = quotient_stability_profile(f, std::vector<Dist>{0, 5}, Window::all(3));
  p.truncation_param = 3;
  std::ostringstream os;
  FiltrationProfile::write_csv_header(os);
  p.write_csv(os);
  std::istringstream in(os.str());
  std::string line;
  std::getline(in, line);
  EXPECT_EQ(line, "sigma,tau,record_kind,value,window_size,truncation_param");
  std::getline(in, line);
  EXPECT_EQ(line.rfind("0,0,bonding_distortion,", 0), 0u);
  EXPECT_EQ(line.substr(line.size() - 4), ",3,3");
  int rows = 0;
  while (std::getline(in, line)) ++rows;
  EXPECT_EQ(rows, 2);  // (0,5) and (5,5)
}

TEST(Profiles, MonotonicityViolationDetected) {
  FiltrationProfile p;
  p.records = {{0, 1, 5, {}}, {1, 1, 7, {}}};
  EXPECT_TRUE(p.monotonicity_violation());
  p.records = {{0, 0, 3, {}}, {0, 1, 2, {}}};
  EXPECT_TRUE(p.monotonicity_violation());
  p.records = {{0, 0, 0, {}}, {0, 1, 2, {}}, {1, 1, 0, {}}};
  EXPECT_FALSE(p.monotonicity_violation());
  EXPECT_THROW(p.at(3, 3), std::out_of_range);
}

TEST(DefaultGrid, RealizedDistancesUpToCap) {
  EXPECT_EQ(default_sigma_grid(*segment(6), 3), (std::vector<Dist>{0, 1, 2, 3}));
}

TEST(Zhang, ProjectionDeltaEqualsEpsilon) {
  MappedPair f = lattice_quotient(2, 1, 3);
  const PointIndex origin = f.source().index_of("(0,0)");
  Window w = Window::all(f.source().size());
  w.inside.assign(w.inside.size(), false);
  w.inside[origin] = true;
  for (Dist eps : {0.0, 1.0, 2.0, 3.0}) {
    ZhangResult z = zhang_delta(f, 0, eps, w);
    ASSERT_TRUE(z.delta);
    EXPECT_EQ(*z.delta, eps);
  }
}

TEST(Zhang, InfeasibleWhenFibreUnreachable) {
  // Two source points in different components over a connected target.
  auto X = make_space({"a", "b"}, {0, kInf, kInf, 0});
  auto Y = segment(2);
  ZhangResult z = zhang_delta(MappedPair(X, Y, {0, 1}), 0, 1, Window::all(2));
  EXPECT_FALSE(z.delta);
  ASSERT_TRUE(z.witness);
}

TEST(CombFiltrations, FrozenValues) {
  // Frozen by the Python oracle: n_max = 6, pair (23,5) -- (26,5).
  Comb c = comb(6);
  auto [v, vp] = c.locate(2, 5);
  EXPECT_EQ(c.path->id(v), "23,5");
  EXPECT_EQ(c.path->id(vp), "26,5");
  EXPECT_EQ((*c.path)(v, vp), 13.0);
  EXPECT_GE((*quotient_space(c.identity, 2).space)(v, vp), 5.0);
  EXPECT_EQ((*quotient_space(c.identity, 3).space)(v, vp), 1.0);

  CombRetraction r = comb_retraction(6);
  EXPECT_EQ(kernel_pair_distance(r.retraction, 2, v, vp), 6.0);
}

TEST(CombFiltrations, RetractionDensityGrowth) {
  const std::vector<Dist> grid{2, 3};
  for (long n : {4L, 6L, 8L}) {
    CombRetraction r = comb_retraction(n);
    FiltrationProfile p = kernel_stability_profile(r.retraction, grid, r.comb.interior);
    EXPECT_EQ(p.value(2, 3), double(n)) << "n_max " << n;
    if (n <= 6) {
      auto dx = to_matrix(r.retraction.source()), dy = to_matrix(r.retraction.target());
      EXPECT_EQ(p.value(2, 3), oracle::inclusion_density(dx, dy, r.retraction.assignment(), 2, 3,
                                                         r.comb.interior.members()));
    }
  }
}
