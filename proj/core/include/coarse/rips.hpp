#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "coarse/graph.hpp"
#include "coarse/mapping.hpp"
#include "coarse/weight.hpp"

namespace coarse {

/// Internal edges heavier than this are left out of Rips graphs; see
/// RipsGraph::omission_exact.
inline constexpr double kDefaultWeightCap = 1099511627776.0;  // 2^40

/// Rips^Θ_σ(Y; f) and its path metric ∂^Θ_σ on the points of Y.
struct RipsGraph {
  WeightedGraph graph;
  SpacePtr space;
  Dist sigma = kInf;
  double weight_cap = kDefaultWeightCap;
  std::vector<Edge> omitted;  // internal edges left out, with their Θ weight
  /// Every omitted edge (y, y') already satisfies ∂(y,y') <= Θ(d_Y(y,y')),
  /// so the capped metric equals the uncapped one.
  bool omission_exact = true;
};

/// Internal edges Θ(d_Y) between pairs with d_Y <= σ (every finite pair when
/// σ = INF) plus augmented edges d_X(f⁻¹y, f⁻¹y') + 1 between image points at
/// finite preimage distance.
RipsGraph augmented_rips(const MappedPair& f, const WeightFunction& theta, Dist sigma,
                         double cap = kDefaultWeightCap);

/// augmented_rips without the augmented edges.
RipsGraph internal_rips(const SpacePtr& target, const WeightFunction& theta, Dist sigma,
                        double cap = kDefaultWeightCap);

/// Standard Rips graph: a unit edge for each pair at distance <= σ.
WeightedGraph rips_graph(const MetricSpace& space, Dist sigma);

/// U^Θ_σ: the subgraph of Rips^Θ_σ spanned by f(X).
struct ImageRips {
  WeightedGraph graph;
  SpacePtr space;
  std::vector<PointIndex> points;  // Y index of each U point (= f.image())
  MappedPair inclusion;            // ι: U → (Y, ∂^Θ_σ)
  bool omission_exact = true;
};

ImageRips image_subspace(const MappedPair& f, const RipsGraph& rips);
ImageRips image_subspace(const MappedPair& f, const WeightFunction& theta, Dist sigma,
                         double cap = kDefaultWeightCap);

/// Q_σ(f) → U^Θ_σ, x ↦ fx: upper bound (Θ(σ)+1)·d_Q and lower control
/// d_Q <= 2 d_U + 1, both checked on every pair.
struct ExtQiReport {
  Dist sigma = 0;
  double upper_claimed = 0;
  double upper_observed = 0;  // max d_U / d_Q over pairs with d_Q > 0
  std::optional<PairWitness> upper_witness;
  bool upper_ok = true;
  double lower_worst_excess = 0;  // max d_Q - (2 d_U + 1), <= 0 when it holds
  std::optional<PairWitness> lower_witness;
  bool lower_ok = true;
  bool omission_exact = true;

  bool ok() const { return upper_ok && lower_ok && omission_exact; }
};

ExtQiReport check_ext_qi(const MappedPair& f, const WeightFunction& theta, Dist sigma,
                         double cap = kDefaultWeightCap);

/// The nearest-point retraction φ: Y → f(X) (ties to the smallest index)
/// against its claimed constants.
struct ImageQiReport {
  Dist sigma = 0;
  DoublingCertificate certificate;
  bool certificate_ok = true;  // Θ(t + 2r) <= C Θ(t) on realized t
  bool retraction_ok = true;   // φ∘ι = id
  bool iota_ok = true;         // ι is 1-Lipschitz
  double phi_observed = 0;     // max over Rips edges of d_U(φy,φy') / weight
  std::optional<PairWitness> phi_witness;  // edge endpoints in Y
  bool phi_ok = true;
  /// Rips edges whose retracted endpoints end up farther apart than σ in Y.
  std::size_t phi_edges_out_of_scale = 0;
  double surjectivity_weight = 0;  // max over y of Θ(d_Y(y, φy)) on a joining edge
  bool surjectivity_ok = true;
  bool omission_exact = true;
  std::vector<PointIndex> phi;  // Y index → Y index of the chosen image point

  bool ok() const {
    return certificate_ok && retraction_ok && iota_ok && phi_ok && surjectivity_ok &&
           omission_exact;
  }
};

/// Needs σ >= r and N_r(f(X)) = Y; throws PreconditionError otherwise.
ImageQiReport check_image_qi(const MappedPair& f, const WeightFunction& theta, Dist sigma,
                             const DoublingCertificate& certificate,
                             double cap = kDefaultWeightCap);

/// Retraction used by check_image_qi.
std::vector<PointIndex> nearest_image_retraction(const MappedPair& f);

/// Rips^Θ_∞ edge bound d_Y <= ρ(w) + w with ρ = a t + b, plus the relaxed
/// metric's bound ∂_∞ <= Θ(d_Y).
struct LowerReport {
  AffineWitness rho;
  bool upper_control_ok = true;
  double worst_excess = 0;  // max d_Y - (ρ(w) + w) over edges
  std::optional<PairWitness> worst_edge;
  bool theta_bound_ok = true;
  std::size_t omitted = 0;
  /// control_profile of id: (Y, ∂_∞) → (Y, d_Y), lower part.
  std::vector<std::pair<Dist, Dist>> lower_control;
  SpacePtr relaxed;  // (Y, ∂^Θ_∞)

  bool ok() const { return upper_control_ok && theta_bound_ok; }
};

/// Needs t <= Θ(t) on the realized distances of Y and an affine witness that
/// check_affine_upper accepts; throws PreconditionError otherwise.
LowerReport check_lower(const MappedPair& f, const WeightFunction& theta,
                        const AffineWitness& witness, double cap = kDefaultWeightCap);

struct ArrowReport {
  std::string name;
  double constant_claimed = 0;
  double constant_observed = 0;
  std::optional<PairWitness> witness;
  bool ok = true;
};

/// Affine fit of one metric on Y against another: minimal b for each slope
/// with d_lhs <= a d_rhs + b.
struct MetricComparison {
  std::string lhs;
  std::string rhs;
  std::vector<double> slopes;
  std::vector<std::optional<double>> offsets;
};

/// (Y, ∂^Θ_σ) with the factorisation X → Q_σ → U → Y_σ → Y_∞ checked arrow
/// by arrow, plus affine fits of d_Y against ∂^Θ_σ in both directions.
struct MaximalMetricReport {
  SpacePtr metric;
  std::vector<ArrowReport> arrows;
  MetricComparison target_vs_metric;  // d_Y <= a ∂ + b
  MetricComparison metric_vs_target;  // ∂ <= a d_Y + b
  ExtQiReport ext;
  ImageQiReport image;

  bool ok() const;
};

MaximalMetricReport synthesize_maximal_metric(const MappedPair& f, const WeightFunction& theta,
                                              Dist sigma, const DoublingCertificate& certificate,
                                              std::span<const double> slopes,
                                              double cap = kDefaultWeightCap);

/// One truncation for precedes_on_family: two metrics on the same points.
struct MetricPair {
  SpacePtr d;
  SpacePtr d_prime;
  long param = 0;
};

/// d ≺ d' asks for d <= a d' + b. Per truncation the minimal b for each
/// slope; "consistent" iff for some slope that b never grows across the
/// family, otherwise the least-squares growth of the smallest b against the
/// family parameter is reported.
struct PrecedesVerdict {
  std::vector<double> slopes;
  std::vector<long> params;
  std::vector<std::vector<std::optional<double>>> offsets;  // [truncation][slope]
  bool consistent = false;
  std::optional<double> stable_slope;
  std::optional<double> stable_offset;
  double divergence_slope = 0;
};

/// Throws std::invalid_argument if a pair's metrics live on different points.
PrecedesVerdict precedes_on_family(std::span<const MetricPair> family,
                                   std::span<const double> slopes);

}  // namespace coarse
