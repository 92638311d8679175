#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "coarse/metric.hpp"

namespace coarse {

enum class WeightKind { kExp2, kOne, kLinearPlus, kTable };

/// Increasing weight Θ: [0,∞) → [1,∞) used on internal Rips edges.
class WeightFunction {
 public:
  static WeightFunction exp2();         // t ↦ 2^t
  static WeightFunction one();          // t ↦ 1
  static WeightFunction linear_plus();  // t ↦ t + 1
  /// Right-continuous step function through (t_i, v_i): Θ(t) = v_i for the
  /// largest t_i <= t. Needs t_0 = 0, strictly increasing t_i and
  /// nondecreasing v_i >= 1; throws std::invalid_argument otherwise.
  static WeightFunction table(std::vector<std::pair<Dist, double>> steps);
  /// "exp2", "one", "linear" (case-sensitive); throws std::invalid_argument.
  static WeightFunction from_name(std::string_view name);

  WeightKind kind() const noexcept { return kind_; }
  std::string_view name() const noexcept;
  double operator()(Dist t) const;

  /// Closed-form C with Θ(t + 2r) <= C Θ(t) for all t >= 0, when known.
  std::optional<double> doubling_constant(Dist r) const;
  /// max over t in `grid` of Θ(t + 2r) / Θ(t).
  double observed_doubling(Dist r, std::span<const Dist> grid) const;
  /// t <= Θ(t) on every finite grid value.
  bool dominates_identity(std::span<const Dist> grid) const;

 private:
  WeightKind kind_ = WeightKind::kOne;
  std::vector<std::pair<Dist, double>> steps_;
};

/// Doubling certificate (r, C): Θ(t + 2r) <= C Θ(t).
struct DoublingCertificate {
  Dist r = 0;
  double C = 1;
};

/// (r, C) from the closed form, or from the observed ratio on `grid` for
/// tables.
DoublingCertificate doubling_certificate(const WeightFunction& theta, Dist r,
                                         std::span<const Dist> grid);

}  // namespace coarse
