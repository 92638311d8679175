#pragma once

// Brute-force reference implementations for the tests. Deliberately naive
// and independent of the library algorithms they check.

#include <algorithm>
#include <array>
#include <cstdlib>
#include <limits>
#include <map>
#include <set>
#include <tuple>
#include <vector>

namespace oracle {

inline constexpr double kInf = std::numeric_limits<double>::infinity();

using Matrix = std::vector<std::vector<double>>;

struct WEdge {
  std::size_t u, v;
  double w;
};

inline Matrix floyd_warshall(std::size_t n, const std::vector<WEdge>& edges) {
  Matrix d(n, std::vector<double>(n, kInf));
  for (std::size_t i = 0; i < n; ++i) d[i][i] = 0;
  for (const auto& e : edges) {
    d[e.u][e.v] = std::min(d[e.u][e.v], e.w);
    d[e.v][e.u] = std::min(d[e.v][e.u], e.w);
  }
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (d[i][k] + d[k][j] < d[i][j]) d[i][j] = d[i][k] + d[k][j];
  return d;
}

// Complete graph on a metric plus extra unit edges, then Floyd-Warshall.
inline Matrix glue_closure(const Matrix& metric, const std::vector<std::pair<std::size_t, std::size_t>>& unit) {
  std::vector<WEdge> edges;
  for (std::size_t i = 0; i < metric.size(); ++i)
    for (std::size_t j = i + 1; j < metric.size(); ++j)
      if (metric[i][j] != kInf) edges.push_back({i, j, metric[i][j]});
  for (auto [a, b] : unit)
    if (a != b) edges.push_back({a, b, 1.0});
  return floyd_warshall(metric.size(), edges);
}

// l-infinity distance from (x, xp) to {(u, u') : dY(f u, f u') <= sigma}.
inline double kernel_distance(const Matrix& dx, const Matrix& dy, const std::vector<std::size_t>& f,
                              double sigma, std::size_t x, std::size_t xp) {
  double best = kInf;
  for (std::size_t u = 0; u < dx.size(); ++u)
    for (std::size_t up = 0; up < dx.size(); ++up)
      if (dy[f[u]][f[up]] <= sigma) best = std::min(best, std::max(dx[x][u], dx[xp][up]));
  return best;
}

// Minimal n with K_tau ∩ W² ⊆ N_n(K_sigma), by exhaustive scan.
inline double inclusion_density(const Matrix& dx, const Matrix& dy, const std::vector<std::size_t>& f,
                                double sigma, double tau, const std::vector<std::size_t>& window) {
  double worst = 0;
  for (auto x : window)
    for (auto xp : window)
      if (dy[f[x]][f[xp]] <= tau) worst = std::max(worst, kernel_distance(dx, dy, f, sigma, x, xp));
  return worst;
}

// Heisenberg triples, multiplied by hand.
using H = std::array<long, 3>;
inline H mul(const H& g, const H& h) { return {g[0] + h[0], g[1] + h[1], g[2] + h[2] + g[0] * h[1]}; }

// Word length of every element reachable by words of length <= R, found by
// enumerating all 6^k words (no breadth-first pruning).
inline std::map<H, int> word_enumeration(int R) {
  const std::array<H, 6> gens{{{1, 0, 0}, {-1, 0, 0}, {0, 1, 0}, {0, -1, 0}, {0, 0, 1}, {0, 0, -1}}};
  std::map<H, int> best{{H{0, 0, 0}, 0}};
  std::vector<H> layer{{0, 0, 0}};
  for (int k = 1; k <= R; ++k) {
    std::vector<H> next;
    next.reserve(layer.size() * 6);
    for (const auto& g : layer)
      for (const auto& s : gens) {
        H h = mul(g, s);
        next.push_back(h);
        auto [it, fresh] = best.emplace(h, k);
        if (!fresh) it->second = std::min(it->second, k);
      }
    layer = std::move(next);
  }
  return best;
}

// Cayley distance from the identity for the generators a^±1, b^±1 and
// z^k (|k| <= max_central), breadth-first up to `depth`.
inline std::map<H, int> central_cayley_ball(int depth, long max_central) {
  std::vector<H> gens{{1, 0, 0}, {-1, 0, 0}, {0, 1, 0}, {0, -1, 0}};
  for (long k = 1; k <= max_central; ++k) {
    gens.push_back({0, 0, k});
    gens.push_back({0, 0, -k});
  }
  std::map<H, int> dist{{H{0, 0, 0}, 0}};
  std::vector<H> frontier{{0, 0, 0}};
  for (int d = 1; d <= depth; ++d) {
    std::vector<H> next;
    for (const auto& g : frontier)
      for (const auto& s : gens) {
        H h = mul(g, s);
        if (dist.emplace(h, d).second) next.push_back(h);
      }
    frontier = std::move(next);
  }
  return dist;
}

// Minimal b >= 0 with a*dx - b <= dy over all pairs.
inline double min_lower_offset(const Matrix& dx, const Matrix& dy, double a) {
  double b = 0;
  for (std::size_t i = 0; i < dx.size(); ++i)
    for (std::size_t j = 0; j < dx.size(); ++j) b = std::max(b, a * dx[i][j] - dy[i][j]);
  return b;
}

}  // namespace oracle
