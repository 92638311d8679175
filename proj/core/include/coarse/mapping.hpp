#pragma once

#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "coarse/metric.hpp"

namespace coarse {

/// A total map between two finite spaces, with its fibres cached.
class MappedPair {
 public:
  /// `assign[x]` is the image of source point x. Throws std::invalid_argument
  /// if the assignment is not total or points outside the target.
  MappedPair(SpacePtr source, SpacePtr target, std::vector<PointIndex> assign);

  static MappedPair identity(SpacePtr space);

  const MetricSpace& source() const noexcept { return *source_; }
  const MetricSpace& target() const noexcept { return *target_; }
  const SpacePtr& source_ptr() const noexcept { return source_; }
  const SpacePtr& target_ptr() const noexcept { return target_; }

  PointIndex operator()(PointIndex x) const noexcept { return assign_[x]; }
  const std::vector<PointIndex>& assignment() const noexcept { return assign_; }

  /// Fibre over y; empty iff y is not in the image.
  std::span<const PointIndex> preimage(PointIndex y) const noexcept;
  /// Distinct image points in increasing order.
  const std::vector<PointIndex>& image() const noexcept { return image_; }
  bool in_image(PointIndex y) const noexcept { return fibre_begin_[y] != fibre_begin_[y + 1]; }

  /// Comparison tolerance for distances in source and target together.
  double tolerance() const noexcept { return joint_tolerance(*source_, *target_); }

 private:
  SpacePtr source_;
  SpacePtr target_;
  std::vector<PointIndex> assign_;
  std::vector<std::size_t> fibre_begin_;  // CSR offsets into fibres_, size |target|+1
  std::vector<PointIndex> fibres_;
  std::vector<PointIndex> image_;
};

/// g ∘ f. Throws std::domain_error unless f.target and g.source are the same space.
MappedPair compose(const MappedPair& g, const MappedPair& f);

/// True if the two spaces are the same object or structurally equal.
bool same_space(const MetricSpace& a, const MetricSpace& b);

/// sup_x d_Y(fx, gx). Throws std::domain_error if source or target differ.
Dist closeness_distance(const MappedPair& f, const MappedPair& g);

/// Realized-grid envelopes of a map's upper and lower behaviour.
struct ControlProfile {
  /// (t, max d_Y(fx,fx') over pairs with d_X <= t) for each realized finite t.
  std::vector<std::pair<Dist, Dist>> upper;
  /// (R, max d_X(x,x') over pairs with d_Y(fx,fx') <= R) for each realized
  /// finite image distance R. INF entries mean no lower control on the window.
  std::vector<std::pair<Dist, Dist>> lower;
  /// min r with N_r(f(X)) = Y, INF if none.
  Dist surjectivity_radius = 0.0;

  bool has_finite_lower() const;
};

ControlProfile control_profile(const MappedPair& f);

/// Affine control t -> slope * t + offset.
struct AffineWitness {
  double slope = 1.0;
  double offset = 0.0;

  AffineWitness() = default;
  AffineWitness(double a, double b);  // throws std::invalid_argument if a or b < 0
  double operator()(Dist t) const { return t == kInf ? kInf : slope * t + offset; }
};

struct PairWitness {
  PointIndex first = 0;
  PointIndex second = 0;
};

struct AffineUpperVerdict {
  bool holds = true;
  /// Pair maximizing d_Y(fx,fx') - (a d_X(x,x') + b) over finite-d_X pairs.
  std::optional<PairWitness> worst;
  double worst_excess = 0.0;  // INF if some finite pair maps to INF
};

/// d_Y(fx,fx') <= a d_X(x,x') + b for every pair with finite d_X.
AffineUpperVerdict check_affine_upper(const MappedPair& f, const AffineWitness& w);

struct AffineLowerFit {
  double slope = 0.0;
  /// Minimal b >= 0 with slope*d_X - b <= d_Y, or nullopt when some pair at
  /// infinite source distance has finite image distance.
  std::optional<double> offset;
  std::optional<PairWitness> extremal;  // pair attaining the offset / violation
};

std::vector<AffineLowerFit> min_affine_lower(const MappedPair& f, std::span<const double> slopes);

/// Smallest b >= 0 with d_Y <= a d_X + b for each slope (the upper analogue
/// of min_affine_lower); nullopt when a finite-d_X pair has infinite image.
std::vector<std::optional<double>> min_affine_upper(const MappedPair& f,
                                                    std::span<const double> slopes);

/// Largest ratio d_Y(fx,fx') / d_X(x,x') over distinct pairs with finite
/// d_X (INF if some finite pair has infinite image). 0 for trivial sources.
struct LipschitzFit {
  double constant = 0.0;
  std::optional<PairWitness> witness;
};
LipschitzFit lipschitz_constant(const MappedPair& f);

}  // namespace coarse
