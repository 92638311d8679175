#include <algorithm>
#include <cstdlib>
#include <deque>
#include <map>
#include <stdexcept>
#include <string>
#include <unordered_map>

#include "coarse/gallery.hpp"
#include "coarse/parallel.hpp"

namespace coarse {

namespace {

struct ElementHash {
  std::size_t operator()(const HeisenbergElement& g) const noexcept {
    std::size_t h = std::hash<long>{}(g[0]);
    h = h * 1000003u ^ std::hash<long>{}(g[1]);
    return h * 1000003u ^ std::hash<long>{}(g[2]);
  }
};

using LengthTable = std::unordered_map<HeisenbergElement, int, ElementHash>;

// Breadth-first ball: elements in discovery order plus the length table.
std::pair<std::vector<HeisenbergElement>, LengthTable> breadth_first_ball(int R) {
  std::vector<HeisenbergElement> order{{0, 0, 0}};
  LengthTable length{{{0, 0, 0}, 0}};
  for (std::size_t head = 0; head < order.size(); ++head) {
    const HeisenbergElement g = order[head];
    const int next = length[g] + 1;
    if (next > R) break;
    for (const auto& s : heisenberg_generators()) {
      const HeisenbergElement h = heisenberg_multiply(g, s);
      if (length.emplace(h, next).second) order.push_back(h);
    }
  }
  return {std::move(order), std::move(length)};
}

std::string element_id(const HeisenbergElement& g) {
  return "(" + std::to_string(g[0]) + "," + std::to_string(g[1]) + "," + std::to_string(g[2]) + ")";
}

}  // namespace

HeisenbergElement heisenberg_multiply(const HeisenbergElement& g, const HeisenbergElement& h) {
  return {g[0] + h[0], g[1] + h[1], g[2] + h[2] + g[0] * h[1]};
}

HeisenbergElement heisenberg_inverse(const HeisenbergElement& g) {
  return {-g[0], -g[1], -g[2] + g[0] * g[1]};
}

const std::array<HeisenbergElement, 6>& heisenberg_generators() {
  static const std::array<HeisenbergElement, 6> gens{{
      {1, 0, 0}, {-1, 0, 0}, {0, 1, 0}, {0, -1, 0}, {0, 0, 1}, {0, 0, -1}}};
  return gens;
}

Window HeisenbergBall::ball(int r) const {
  Window w{std::vector<bool>(elements.size()), "word length <= " + std::to_string(r)};
  for (std::size_t i = 0; i < elements.size(); ++i) w.inside[i] = length[i] <= r;
  return w;
}

HeisenbergBall heisenberg(int R) {
  if (R < 1) throw std::invalid_argument("heisenberg: R must be >= 1");
  auto [wide, table] = breadth_first_ball(2 * R);
  std::vector<HeisenbergElement> elements;
  std::vector<int> length;
  for (const auto& g : wide) {
    const int l = table.at(g);
    if (l > R) break;
    elements.push_back(g);
    length.push_back(l);
  }

  const std::size_t n = elements.size();
  std::vector<std::string> ids;
  ids.reserve(n);
  for (const auto& g : elements) ids.push_back(element_id(g));
  std::vector<Dist> dist(n * n);
  parallel_for(n, [&, &table = table](std::size_t i) {
    const HeisenbergElement inv = heisenberg_inverse(elements[i]);
    for (std::size_t j = 0; j < n; ++j) {
      dist[i * n + j] = static_cast<Dist>(table.at(heisenberg_multiply(inv, elements[j])));
    }
  });
  SpacePtr group = make_space(std::move(ids), std::move(dist));

  std::vector<std::pair<long, long>> base_points;
  for (long x = -R; x <= R; ++x) {
    for (long y = -(R - std::labs(x)); y <= R - std::labs(x); ++y) base_points.emplace_back(x, y);
  }
  std::map<std::pair<long, long>, PointIndex> where;
  std::vector<std::string> base_ids;
  for (std::size_t k = 0; k < base_points.size(); ++k) {
    where[base_points[k]] = k;
    base_ids.push_back("(" + std::to_string(base_points[k].first) + "," +
                       std::to_string(base_points[k].second) + ")");
  }
  const std::size_t m = base_points.size();
  std::vector<Dist> base_dist(m * m);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      base_dist[i * m + j] = static_cast<Dist>(std::labs(base_points[i].first - base_points[j].first) +
                                               std::labs(base_points[i].second - base_points[j].second));
    }
  }
  SpacePtr base = make_space(std::move(base_ids), std::move(base_dist));

  std::vector<PointIndex> assign;
  assign.reserve(n);
  for (const auto& g : elements) assign.push_back(where.at({g[0], g[1]}));
  MappedPair projection(group, base, std::move(assign));
  return HeisenbergBall{R, std::move(elements), std::move(length), group, base, std::move(projection)};
}

std::vector<std::size_t> heisenberg_ball_sizes(int R_max) {
  std::vector<std::size_t> sizes(static_cast<std::size_t>(std::max(R_max, 0)), 0);
  if (R_max < 1) return sizes;
  const auto [order, table] = breadth_first_ball(R_max);
  for (const auto& g : order) {
    for (int r = std::max(table.at(g), 1); r <= R_max; ++r) ++sizes[static_cast<std::size_t>(r - 1)];
  }
  return sizes;
}

Dist heisenberg_central_distance(const HeisenbergElement& g, const HeisenbergElement& h) {
  const HeisenbergElement d = heisenberg_multiply(heisenberg_inverse(g), h);
  const long p = d[0], q = d[1], z = d[2];
  const long planar = std::labs(p) + std::labs(q);
  if (planar == 0) return z == 0 ? 0.0 : 1.0;
  // Words in a^±1, b^±1 reaching (p, q) realise exactly the z between 0 and pq.
  const long lo = std::min(0L, p * q), hi = std::max(0L, p * q);
  return static_cast<Dist>(planar + ((z >= lo && z <= hi) ? 0 : 1));
}

TruncationFamily heisenberg_family(std::vector<long> radii) {
  return {"R", std::move(radii), [](long R) {
            HeisenbergBall ball = heisenberg(static_cast<int>(R));
            Window w = ball.ball(static_cast<int>(R / 2));
            return FamilyInstance{R, ball.projection, std::move(w)};
          }};
}

}  // namespace coarse
