#pragma once

#include <cstddef>
#include <limits>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace coarse {

/// Extended nonnegative distance. Infinity marks points in different coarse
/// components.
using Dist = double;
inline constexpr Dist kInf = std::numeric_limits<Dist>::infinity();

using PointIndex = std::size_t;

/// Comparison tolerance: exact in the integer path, 1e-9 otherwise.
inline constexpr double kFloatTolerance = 1e-9;

inline bool is_finite(Dist d) { return d != kInf; }

/// a <= b up to `tol`, with INF treated as the largest value.
inline bool leq(Dist a, Dist b, double tol) {
  if (b == kInf) return true;
  if (a == kInf) return false;
  return a <= b + tol;
}

struct TriangleViolation {
  PointIndex p, q, r;  // d(p,r) > d(p,q) + d(q,r)
};

/// A finite extended metric space: point ids plus a dense symmetric distance
/// matrix. Immutable once constructed; construction validates symmetry, zero
/// diagonal and identity of indiscernibles (the triangle inequality is
/// O(n^3) and checked on demand by find_triangle_violation()).
///
/// Distances are stored as doubles. When every finite entry is an integer
/// (below 2^53) the space is flagged integral and all comparisons against it
/// are exact; this is the integer fast path.
class MetricSpace {
 public:
  MetricSpace() = default;

  /// `dist` is row-major n*n. Throws std::invalid_argument on malformed input
  /// or duplicate ids.
  MetricSpace(std::vector<std::string> ids, std::vector<Dist> dist);

  std::size_t size() const noexcept { return ids_.size(); }
  bool empty() const noexcept { return ids_.empty(); }

  Dist operator()(PointIndex i, PointIndex j) const noexcept {
    return dist_[i * ids_.size() + j];
  }
  std::span<const Dist> row(PointIndex i) const noexcept {
    return {dist_.data() + i * ids_.size(), ids_.size()};
  }
  std::span<const Dist> matrix() const noexcept { return dist_; }

  const std::string& id(PointIndex i) const { return ids_[i]; }
  const std::vector<std::string>& ids() const noexcept { return ids_; }
  std::optional<PointIndex> find(std::string_view id) const;
  PointIndex index_of(std::string_view id) const;  // throws std::out_of_range

  bool integral() const noexcept { return integral_; }
  double tolerance() const noexcept { return integral_ ? 0.0 : kFloatTolerance; }

  /// Largest finite distance (0 for spaces with fewer than two points).
  Dist finite_diameter() const;
  /// Sorted distinct finite distances, including 0 when nonempty.
  std::vector<Dist> realized_distances() const;

  std::optional<TriangleViolation> find_triangle_violation() const;

  /// Same ids in the same order and identical distance matrix.
  friend bool operator==(const MetricSpace& a, const MetricSpace& b) {
    return a.ids_ == b.ids_ && a.dist_ == b.dist_;
  }

 private:
  std::vector<std::string> ids_;
  std::vector<Dist> dist_;
  std::unordered_map<std::string, PointIndex> index_;
  bool integral_ = true;
};

using SpacePtr = std::shared_ptr<const MetricSpace>;

inline SpacePtr make_space(std::vector<std::string> ids, std::vector<Dist> dist) {
  return std::make_shared<const MetricSpace>(std::move(ids), std::move(dist));
}

/// Tolerance to use when comparing values drawn from several spaces.
inline double joint_tolerance(const MetricSpace& a, const MetricSpace& b) {
  return (a.integral() && b.integral()) ? 0.0 : kFloatTolerance;
}

/// Induced metric on the listed points (kept in the given order).
SpacePtr induced_subspace(const MetricSpace& space, std::span<const PointIndex> points);

/// Truncation interior: the subset of points on which windowed checks are run.
struct Window {
  std::vector<bool> inside;
  std::string description;

  static Window all(std::size_t n, std::string description = "all points") {
    return {std::vector<bool>(n, true), std::move(description)};
  }
  std::size_t count() const;
  std::vector<PointIndex> members() const;
  bool contains(PointIndex i) const { return inside[i]; }
};

}  // namespace coarse
