#include <algorithm>
#include <cstdlib>
#include <map>
#include <stdexcept>
#include <string>

#include "coarse/errors.hpp"
#include "coarse/gallery.hpp"
#include "coarse/parallel.hpp"

namespace coarse {

namespace {

std::string tuple_id(const std::vector<long>& coords) {
  std::string id = "(";
  for (std::size_t i = 0; i < coords.size(); ++i) {
    if (i > 0) id += ',';
    id += std::to_string(coords[i]);
  }
  return id + ")";
}

void lattice_points(int k, long radius, std::vector<long>& prefix,
                    std::vector<std::vector<long>>& out) {
  if (static_cast<int>(prefix.size()) == k) {
    out.push_back(prefix);
    return;
  }
  for (long a = -radius; a <= radius; ++a) {
    prefix.push_back(a);
    lattice_points(k, radius - std::labs(a), prefix, out);
    prefix.pop_back();
  }
}

SpacePtr l1_space(const std::vector<std::vector<long>>& points) {
  const std::size_t n = points.size();
  std::vector<std::string> ids;
  ids.reserve(n);
  for (const auto& p : points) ids.push_back(tuple_id(p));
  std::vector<Dist> dist(n * n);
  parallel_for(n, [&](std::size_t i) {
    for (std::size_t j = 0; j < n; ++j) {
      long d = 0;
      for (std::size_t c = 0; c < points[i].size(); ++c) d += std::labs(points[i][c] - points[j][c]);
      dist[i * n + j] = static_cast<Dist>(d);
    }
  });
  return make_space(std::move(ids), std::move(dist));
}

SpacePtr line_space(const std::vector<long>& values) {
  const std::size_t n = values.size();
  std::vector<std::string> ids;
  for (long v : values) ids.push_back(std::to_string(v));
  std::vector<Dist> dist(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) dist[i * n + j] = static_cast<Dist>(std::labs(values[i] - values[j]));
  }
  return make_space(std::move(ids), std::move(dist));
}

}  // namespace

PointIndex Comb::point(long x, long y) const {
  if (x < 0 || x > ray_end || y < 0 || y > column_height[static_cast<std::size_t>(x)]) {
    throw std::out_of_range("comb has no point " + std::to_string(x) + "," + std::to_string(y));
  }
  return column_start[static_cast<std::size_t>(x)] + static_cast<PointIndex>(y);
}

std::pair<PointIndex, PointIndex> Comb::locate(long sigma, long n) const {
  if (sigma < 0 || n < 1 || n > n_max) {
    throw PreconditionError("comb locator: need sigma >= 0 and 1 <= n <= n_max");
  }
  std::vector<long> stage;
  long next_stage_first = -1;
  for (const Tooth& t : teeth) {
    if (t.stage == n) stage.push_back(t.x);
    if (t.stage == n + 1 && next_stage_first < 0) next_stage_first = t.x;
  }
  if (sigma + 2 <= n) {
    const auto i = static_cast<std::size_t>(sigma);
    return {point(stage[i], n), point(stage[i + 1], n)};
  }
  if (sigma + 1 == n && next_stage_first >= 0) {
    return {point(stage.back(), n), point(next_stage_first, n)};
  }
  throw PreconditionError("comb locator: no pair of height-" + std::to_string(n) +
                          " teeth at gap " + std::to_string(sigma + 1));
}

Comb comb(long n_max) {
  if (n_max < 1) throw std::invalid_argument("comb: n_max must be >= 1");
  std::vector<Tooth> teeth;
  long x = 0;
  for (long n = 1; n <= n_max; ++n) {
    for (long j = 1; j <= n; ++j) {
      teeth.push_back({x, n, n});
      x += j;
    }
  }
  const long ray_end = x;

  std::vector<long> height(static_cast<std::size_t>(ray_end + 1), 0);
  std::vector<long> stage_of(height.size(), 0);
  for (const Tooth& t : teeth) {
    height[static_cast<std::size_t>(t.x)] = t.height;
    stage_of[static_cast<std::size_t>(t.x)] = t.stage;
  }
  std::vector<PointIndex> start(height.size());
  std::vector<std::pair<long, long>> coords;
  std::vector<std::string> ids;
  std::vector<bool> inside;
  for (long c = 0; c <= ray_end; ++c) {
    start[static_cast<std::size_t>(c)] = coords.size();
    for (long y = 0; y <= height[static_cast<std::size_t>(c)]; ++y) {
      coords.emplace_back(c, y);
      ids.push_back(std::to_string(c) + "," + std::to_string(y));
      inside.push_back(y == 0 || stage_of[static_cast<std::size_t>(c)] != n_max);
    }
  }

  const std::size_t n = coords.size();
  std::vector<Dist> path(n * n), l1(n * n);
  parallel_for(n, [&](std::size_t i) {
    const auto [xi, yi] = coords[i];
    for (std::size_t j = 0; j < n; ++j) {
      const auto [xj, yj] = coords[j];
      const long dx = std::labs(xi - xj);
      const long dy = std::labs(yi - yj);
      l1[i * n + j] = static_cast<Dist>(dx + dy);
      path[i * n + j] = static_cast<Dist>(dx == 0 ? dy : yi + yj + dx);
    }
  });
  SpacePtr path_space = make_space(ids, std::move(path));
  SpacePtr l1_space_ptr = make_space(std::move(ids), std::move(l1));
  return Comb{n_max,
              ray_end,
              std::move(teeth),
              path_space,
              l1_space_ptr,
              MappedPair(path_space, l1_space_ptr, [n] {
                std::vector<PointIndex> id(n);
                for (std::size_t i = 0; i < n; ++i) id[i] = i;
                return id;
              }()),
              Window{std::move(inside), "comb without stage-" + std::to_string(n_max) + " teeth"},
              std::move(start),
              std::move(height)};
}

CombRetraction comb_retraction(long n_max) {
  Comb c = comb(n_max);
  std::vector<long> xs;
  for (long x = 0; x <= c.ray_end; ++x) xs.push_back(x);
  SpacePtr ray = line_space(xs);
  std::vector<PointIndex> down(c.path->size());
  for (long x = 0; x <= c.ray_end; ++x) {
    for (long y = 0; y <= c.column_height[static_cast<std::size_t>(x)]; ++y) {
      down[c.point(x, y)] = static_cast<PointIndex>(x);
    }
  }
  std::vector<PointIndex> up;
  for (long x = 0; x <= c.ray_end; ++x) up.push_back(c.point(x, 0));
  SpacePtr path = c.path;
  return CombRetraction{std::move(c), ray, MappedPair(path, ray, std::move(down)),
                        MappedPair(ray, path, std::move(up))};
}

MappedPair cubes_squares(long N) {
  if (N < 2) throw std::invalid_argument("cubes_squares: N must be >= 2");
  std::vector<long> cubes, squares;
  for (long n = 1; n <= N; ++n) {
    cubes.push_back(n * n * n);
    squares.push_back(n * n);
  }
  std::vector<PointIndex> assign(static_cast<std::size_t>(N));
  for (std::size_t i = 0; i < assign.size(); ++i) assign[i] = i;
  return MappedPair(line_space(cubes), line_space(squares), std::move(assign));
}

MappedPair lattice_quotient(int k, int m, long N) {
  if (m < 1 || m > k || N < 1) throw std::invalid_argument("lattice_quotient: need 1 <= m <= k, N >= 1");
  std::vector<std::vector<long>> source, target;
  std::vector<long> prefix;
  lattice_points(k, N, prefix, source);
  lattice_points(m, N, prefix, target);
  std::map<std::vector<long>, PointIndex> where;
  for (std::size_t i = 0; i < target.size(); ++i) where[target[i]] = i;
  std::vector<PointIndex> assign;
  assign.reserve(source.size());
  for (const auto& p : source) {
    assign.push_back(where.at(std::vector<long>(p.begin(), p.begin() + m)));
  }
  return MappedPair(l1_space(source), l1_space(target), std::move(assign));
}

std::size_t lattice_ball_size(int k, long R) {
  if (R < 0) return 0;
  if (k == 0) return 1;
  std::size_t total = 0;
  for (long a = -R; a <= R; ++a) total += lattice_ball_size(k - 1, R - std::labs(a));
  return total;
}

std::vector<FamilyInstance> TruncationFamily::instances() const {
  std::vector<FamilyInstance> out;
  out.reserve(values.size());
  for (long v : values) out.push_back(generate(v));
  return out;
}

TruncationFamily comb_family(std::vector<long> n_max_values) {
  return {"n_max", std::move(n_max_values), [](long n) {
            Comb c = comb(n);
            return FamilyInstance{n, c.identity, c.interior};
          }};
}

TruncationFamily comb_retraction_family(std::vector<long> n_max_values) {
  return {"n_max", std::move(n_max_values), [](long n) {
            CombRetraction c = comb_retraction(n);
            return FamilyInstance{n, c.retraction, c.comb.interior};
          }};
}

TruncationFamily cubes_family(std::vector<long> window_values) {
  return {"N", std::move(window_values), [](long N) {
            MappedPair f = cubes_squares(N);
            Window all = Window::all(f.source().size(), "n <= " + std::to_string(N));
            return FamilyInstance{N, std::move(f), std::move(all)};
          }};
}

}  // namespace coarse
