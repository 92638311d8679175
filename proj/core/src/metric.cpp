#include "coarse/metric.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace coarse {

namespace {

bool is_integer_value(Dist d) {
  return d == kInf || (d == std::floor(d) && d < 9007199254740992.0);
}

}  // namespace

MetricSpace::MetricSpace(std::vector<std::string> ids, std::vector<Dist> dist)
    : ids_(std::move(ids)), dist_(std::move(dist)) {
  const std::size_t n = ids_.size();
  if (dist_.size() != n * n) {
    throw std::invalid_argument("distance matrix has " + std::to_string(dist_.size()) +
                                " entries, expected " + std::to_string(n * n));
  }
  index_.reserve(n);
  for (PointIndex i = 0; i < n; ++i) {
    if (!index_.emplace(ids_[i], i).second) {
      throw std::invalid_argument("duplicate point id '" + ids_[i] + "'");
    }
  }
  for (PointIndex i = 0; i < n; ++i) {
    if ((*this)(i, i) != 0.0) {
      throw std::invalid_argument("nonzero self-distance at '" + ids_[i] + "'");
    }
    for (PointIndex j = i + 1; j < n; ++j) {
      const Dist d = (*this)(i, j);
      if (std::isnan(d) || d < 0.0) {
        throw std::invalid_argument("negative or NaN distance between '" + ids_[i] + "' and '" +
                                    ids_[j] + "'");
      }
      if (d != (*this)(j, i)) {
        throw std::invalid_argument("asymmetric distance between '" + ids_[i] + "' and '" +
                                    ids_[j] + "'");
      }
      if (d == 0.0) {
        throw std::invalid_argument("distinct points '" + ids_[i] + "' and '" + ids_[j] +
                                    "' at distance 0");
      }
      if (integral_ && !is_integer_value(d)) integral_ = false;
    }
  }
}

std::optional<PointIndex> MetricSpace::find(std::string_view id) const {
  auto it = index_.find(std::string(id));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

PointIndex MetricSpace::index_of(std::string_view id) const {
  if (auto i = find(id)) return *i;
  throw std::out_of_range("unknown point id '" + std::string(id) + "'");
}

Dist MetricSpace::finite_diameter() const {
  Dist best = 0.0;
  for (Dist d : dist_) {
    if (d != kInf) best = std::max(best, d);
  }
  return best;
}

std::vector<Dist> MetricSpace::realized_distances() const {
  std::vector<Dist> out;
  for (Dist d : dist_) {
    if (d != kInf) out.push_back(d);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::optional<TriangleViolation> MetricSpace::find_triangle_violation() const {
  const std::size_t n = size();
  const double tol = tolerance();
  for (PointIndex q = 0; q < n; ++q) {
    auto rq = row(q);
    for (PointIndex p = 0; p < n; ++p) {
      const Dist dpq = rq[p];
      if (dpq == kInf) continue;
      auto rp = row(p);
      for (PointIndex r = 0; r < n; ++r) {
        const Dist dqr = rq[r];
        if (dqr == kInf) continue;
        if (!leq(rp[r], dpq + dqr, tol)) return TriangleViolation{p, q, r};
      }
    }
  }
  return std::nullopt;
}

SpacePtr induced_subspace(const MetricSpace& space, std::span<const PointIndex> points) {
  const std::size_t m = points.size();
  std::vector<std::string> ids;
  ids.reserve(m);
  std::vector<Dist> dist(m * m);
  for (std::size_t a = 0; a < m; ++a) {
    ids.push_back(space.id(points[a]));
    for (std::size_t b = 0; b < m; ++b) dist[a * m + b] = space(points[a], points[b]);
  }
  return make_space(std::move(ids), std::move(dist));
}

std::size_t Window::count() const {
  return static_cast<std::size_t>(std::count(inside.begin(), inside.end(), true));
}

std::vector<PointIndex> Window::members() const {
  std::vector<PointIndex> out;
  for (PointIndex i = 0; i < inside.size(); ++i) {
    if (inside[i]) out.push_back(i);
  }
  return out;
}

}  // namespace coarse
