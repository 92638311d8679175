#pragma once

#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "coarse/graph.hpp"
#include "coarse/mapping.hpp"
#include "coarse/products.hpp"

namespace coarse {

/// Eq_κ(f,g) = {x : d_Y(fx,gx) <= κ} with the induced metric and its
/// isometric inclusion into X. Throws std::domain_error on mismatched maps
/// and std::invalid_argument for κ < 0.
Subspace eq_sublevel(const MappedPair& f, const MappedPair& g, Dist kappa);

/// K_σ(f) = {(x,x') : d_Y(fx,fx') <= σ} ⊆ X × X, kept implicitly as a pair
/// list because |K_σ| grows quadratically in |X|.
struct KernelSublevel {
  SpacePtr base;  // X
  Dist sigma = 0;
  /// Ordered pairs in lexicographic order (the product's index order).
  std::vector<std::pair<PointIndex, PointIndex>> pairs;

  bool contains(PointIndex x, PointIndex xp) const;
  /// l-infinity distance between the i-th and j-th members.
  Dist distance(std::size_t i, std::size_t j) const;

  /// Explicit subspace of product_linf(X, X) together with π₁ι_σ and π₂ι_σ.
  /// Quadratic in |K_σ|; meant for small instances and cross-checks.
  struct Explicit {
    Subspace sub;
    MappedPair first;
    MappedPair second;
  };
  Explicit materialize() const;
};

KernelSublevel kernel_sublevel(const MappedPair& f, Dist sigma);

/// Q_σ(f): X with a unit glued edge across every pair of K_σ(f), path metric.
struct QuotientResult {
  WeightedGraph graph;
  SpacePtr space;
  MappedPair quotient;  // q_σ: X → Q_σ(f), the underlying identity
  MappedPair induced;   // f_σ: Q_σ(f) → Y, equal to f on points
};

QuotientResult quotient_space(const MappedPair& f, Dist sigma);

/// l-infinity distance in X × X from (x, x') to the nearest member of K_σ(f).
Dist kernel_pair_distance(const MappedPair& f, Dist sigma, PointIndex x, PointIndex xp);

enum class RecordKind { kInclusionDensity, kBondingDistortion };

std::string_view to_string(RecordKind kind);

struct ProfileRecord {
  Dist sigma = 0;
  Dist tau = 0;
  Dist value = 0;
  std::optional<PairWitness> witness;  // window pair attaining value
};

/// Per-(σ, τ) records over a σ-grid. For inclusion density, value is the
/// minimal n with K_τ ⊆ N_n(K_σ) on the window; for bonding distortion it is
/// the max d_{Q_σ} over window pairs with d_{Q_τ} <= 1.
struct FiltrationProfile {
  RecordKind kind = RecordKind::kInclusionDensity;
  std::vector<Dist> sigma_grid;
  std::vector<ProfileRecord> records;  // σ <= τ, row-major over the grid
  std::string window_description;
  std::size_t window_size = 0;
  std::optional<long> truncation_param;

  const ProfileRecord& at(Dist sigma, Dist tau) const;  // throws std::out_of_range
  Dist value(Dist sigma, Dist tau) const { return at(sigma, tau).value; }

  /// First pair of records breaking "nonincreasing in σ, nondecreasing in τ".
  std::optional<std::pair<ProfileRecord, ProfileRecord>> monotonicity_violation() const;

  static void write_csv_header(std::ostream& os);
  void write_csv(std::ostream& os) const;
};

/// Realized distances of Y up to `cap` (inclusive).
std::vector<Dist> default_sigma_grid(const MetricSpace& target, Dist cap);

/// Both profiles require a nonempty increasing grid of nonnegative values and
/// check their own monotonicity before returning (std::logic_error if broken).
FiltrationProfile kernel_stability_profile(const MappedPair& f, std::span<const Dist> grid,
                                           const Window& window);
FiltrationProfile quotient_stability_profile(const MappedPair& f, std::span<const Dist> grid,
                                             const Window& window);

/// Coarse-quotient witness: minimal δ such that every y' within ε of fx
/// (x in the window) has some w with d_X(x,w) <= δ and d_Y(fw,y') <= R.
struct ZhangResult {
  Dist R = 0;
  Dist epsilon = 0;
  std::optional<Dist> delta;  // nullopt when infeasible on this truncation
  /// (x, y') attaining δ, or the violating pair when infeasible.
  std::optional<std::pair<PointIndex, PointIndex>> witness;
  std::size_t checked = 0;  // number of (x, y') pairs examined
};

ZhangResult zhang_delta(const MappedPair& f, Dist R, Dist epsilon, const Window& window);

}  // namespace coarse
