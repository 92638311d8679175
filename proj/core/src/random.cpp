#include "coarse/random.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <stdexcept>

#include "coarse/graph.hpp"

namespace coarse {

namespace {

std::size_t uniform(Rng& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

}  // namespace

SpacePtr random_integer_metric(Rng& rng, std::size_t n, int max_weight, bool split,
                               const std::string& prefix) {
  if (n == 0 || max_weight < 1) throw std::invalid_argument("random metric: need n >= 1, max_weight >= 1");
  std::vector<int> component(n, 0);
  if (split && n >= 2) {
    for (auto& c : component) c = static_cast<int>(uniform(rng, 0, 1));
    component[0] = 0;
    component[1] = 1;
  }
  std::vector<std::string> ids;
  for (std::size_t i = 0; i < n; ++i) ids.push_back(prefix + std::to_string(i));
  GraphBuilder builder(ids);
  std::uniform_int_distribution<int> weight(1, max_weight);
  for (PointIndex u = 0; u < n; ++u) {
    for (PointIndex v = u + 1; v < n; ++v) {
      const int w = weight(rng);
      if (component[u] == component[v]) builder.add(u, v, w, EdgeKind::kInternal);
    }
  }
  return std::make_shared<const MetricSpace>(path_metric(std::move(builder).build()));
}

CoeqInstance random_coeq_instance(Rng& rng, std::size_t max_x, std::size_t max_a, int max_weight) {
  const std::size_t nx = uniform(rng, 1, max_x);
  const std::size_t na = uniform(rng, 1, max_a);
  const bool split_x = uniform(rng, 0, 3) == 0;
  const bool split_a = uniform(rng, 0, 3) == 0;
  SpacePtr X = random_integer_metric(rng, nx, max_weight, split_x, "x");
  SpacePtr A = random_integer_metric(rng, na, max_weight, split_a, "a");
  std::vector<PointIndex> f(na), g(na);
  for (std::size_t a = 0; a < na; ++a) {
    f[a] = uniform(rng, 0, nx - 1);
    g[a] = uniform(rng, 0, nx - 1);
  }
  return {MappedPair(A, X, std::move(f)), MappedPair(A, X, std::move(g))};
}

RipsInstance random_rips_instance(Rng& rng, std::size_t max_y, std::size_t max_x, int max_weight,
                                  long max_r) {
  const std::size_t ny = uniform(rng, 2, max_y);
  const long r = static_cast<long>(uniform(rng, 1, static_cast<std::size_t>(max_r)));
  SpacePtr Y = random_integer_metric(rng, ny, max_weight, uniform(rng, 0, 4) == 0, "y");

  // Greedy r-net in a random order.
  std::vector<PointIndex> order(ny);
  std::iota(order.begin(), order.end(), PointIndex{0});
  std::shuffle(order.begin(), order.end(), rng);
  std::vector<PointIndex> net;
  for (PointIndex y : order) {
    const bool covered = std::any_of(net.begin(), net.end(),
                                     [&](PointIndex s) { return (*Y)(y, s) <= static_cast<Dist>(r); });
    if (!covered) net.push_back(y);
  }
  std::sort(net.begin(), net.end());

  // Stack up to max_x points over the net, at least one per net point.
  std::vector<std::pair<PointIndex, long>> points;
  for (PointIndex s : net) points.emplace_back(s, 0);
  const std::size_t extra = max_x > points.size() ? uniform(rng, 0, max_x - points.size()) : 0;
  std::vector<long> height(ny, 0);
  for (std::size_t k = 0; k < extra; ++k) {
    const PointIndex s = net[uniform(rng, 0, net.size() - 1)];
    points.emplace_back(s, ++height[s]);
  }

  const std::size_t n = points.size();
  std::vector<std::string> ids;
  std::vector<Dist> dist(n * n);
  std::vector<PointIndex> assign;
  for (std::size_t i = 0; i < n; ++i) {
    ids.push_back(Y->id(points[i].first) + "/" + std::to_string(points[i].second));
    assign.push_back(points[i].first);
    for (std::size_t j = 0; j < n; ++j) {
      dist[i * n + j] = (*Y)(points[i].first, points[j].first) +
                        static_cast<Dist>(std::labs(points[i].second - points[j].second));
    }
  }
  SpacePtr X = make_space(std::move(ids), std::move(dist));
  return {MappedPair(X, Y, std::move(assign)), r};
}

}  // namespace coarse
