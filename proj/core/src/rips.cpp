#include "coarse/rips.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "coarse/errors.hpp"
#include "coarse/filtration.hpp"
#include "coarse/stats.hpp"

namespace coarse {

namespace {

std::vector<PointIndex> iota_indices(std::size_t n) {
  std::vector<PointIndex> out(n);
  std::iota(out.begin(), out.end(), PointIndex{0});
  return out;
}

std::vector<std::size_t> positions_in(const std::vector<PointIndex>& points, std::size_t n) {
  std::vector<std::size_t> pos(n, static_cast<std::size_t>(-1));
  for (std::size_t k = 0; k < points.size(); ++k) pos[points[k]] = k;
  return pos;
}

bool omitted_edges_bridged(const std::vector<Edge>& omitted, const MetricSpace& metric) {
  return std::all_of(omitted.begin(), omitted.end(), [&](const Edge& e) {
    return leq(metric(e.u, e.v), e.weight, metric.tolerance());
  });
}

RipsGraph build_rips(const SpacePtr& target, const MappedPair* f, const WeightFunction& theta,
                     Dist sigma, double cap) {
  if (!(sigma >= 0)) throw std::invalid_argument("rips: sigma must be >= 0");
  const MetricSpace& Y = *target;
  const double tol = Y.tolerance();
  RipsGraph rips;
  rips.sigma = sigma;
  rips.weight_cap = cap;

  GraphBuilder builder(Y.ids());
  for (PointIndex y = 0; y < Y.size(); ++y) {
    for (PointIndex yp = y + 1; yp < Y.size(); ++yp) {
      const Dist d = Y(y, yp);
      if (d == kInf || !leq(d, sigma, tol)) continue;
      const double w = theta(d);
      if (w > cap) {
        rips.omitted.push_back({y, yp, w, EdgeKind::kInternal});
        continue;
      }
      builder.add(y, yp, w, EdgeKind::kInternal);
    }
  }
  if (f != nullptr) {
    const MetricSpace& X = f->source();
    const auto& img = f->image();
    for (std::size_t k = 0; k < img.size(); ++k) {
      for (std::size_t l = k + 1; l < img.size(); ++l) {
        if (Y(img[k], img[l]) == kInf) continue;
        Dist gap = kInf;
        for (PointIndex u : f->preimage(img[k])) {
          for (PointIndex up : f->preimage(img[l])) gap = std::min(gap, X(u, up));
        }
        if (gap != kInf) builder.add(img[k], img[l], gap + 1.0, EdgeKind::kAugmented);
      }
    }
  }
  rips.graph = std::move(builder).build();
  rips.space = std::make_shared<const MetricSpace>(path_metric(rips.graph));
  rips.omission_exact = omitted_edges_bridged(rips.omitted, *rips.space);
  return rips;
}

MappedPair identity_between(const SpacePtr& from, const SpacePtr& to) {
  return MappedPair(from, to, iota_indices(from->size()));
}

}  // namespace

RipsGraph augmented_rips(const MappedPair& f, const WeightFunction& theta, Dist sigma,
                         double cap) {
  return build_rips(f.target_ptr(), &f, theta, sigma, cap);
}

RipsGraph internal_rips(const SpacePtr& target, const WeightFunction& theta, Dist sigma,
                        double cap) {
  return build_rips(target, nullptr, theta, sigma, cap);
}

WeightedGraph rips_graph(const MetricSpace& space, Dist sigma) {
  GraphBuilder builder(space.ids());
  for (PointIndex y = 0; y < space.size(); ++y) {
    for (PointIndex yp = y + 1; yp < space.size(); ++yp) {
      if (leq(space(y, yp), sigma, space.tolerance()) && space(y, yp) != kInf) {
        builder.add(y, yp, 1.0, EdgeKind::kInternal);
      }
    }
  }
  return std::move(builder).build();
}

ImageRips image_subspace(const MappedPair& f, const RipsGraph& rips) {
  const auto& points = f.image();
  const auto pos = positions_in(points, f.target().size());
  std::vector<std::string> ids;
  ids.reserve(points.size());
  for (PointIndex y : points) ids.push_back(f.target().id(y));
  GraphBuilder builder(ids);
  for (const Edge& e : rips.graph.edges()) {
    if (f.in_image(e.u) && f.in_image(e.v)) builder.add(pos[e.u], pos[e.v], e.weight, e.kind);
  }
  std::vector<Edge> omitted;
  for (const Edge& e : rips.omitted) {
    if (f.in_image(e.u) && f.in_image(e.v)) omitted.push_back({pos[e.u], pos[e.v], e.weight, e.kind});
  }
  WeightedGraph graph = std::move(builder).build();
  auto space = std::make_shared<const MetricSpace>(path_metric(graph));
  const bool exact = omitted_edges_bridged(omitted, *space);
  return ImageRips{std::move(graph), space, points, MappedPair(space, rips.space, points), exact};
}

ImageRips image_subspace(const MappedPair& f, const WeightFunction& theta, Dist sigma,
                         double cap) {
  return image_subspace(f, augmented_rips(f, theta, sigma, cap));
}

ExtQiReport check_ext_qi(const MappedPair& f, const WeightFunction& theta, Dist sigma,
                         double cap) {
  const QuotientResult quotient = quotient_space(f, sigma);
  const ImageRips image = image_subspace(f, theta, sigma, cap);
  const MetricSpace& Q = *quotient.space;
  const MetricSpace& U = *image.space;
  const auto pos = positions_in(image.points, f.target().size());
  const double tol = joint_tolerance(Q, U);

  ExtQiReport report;
  report.sigma = sigma;
  report.upper_claimed = theta(sigma) + 1.0;
  report.lower_worst_excess = -kInf;
  report.omission_exact = image.omission_exact;
  for (PointIndex x = 0; x < Q.size(); ++x) {
    for (PointIndex xp = x + 1; xp < Q.size(); ++xp) {
      const Dist dq = Q(x, xp);
      const Dist du = U(pos[f(x)], pos[f(xp)]);
      if (dq != kInf) {
        const double ratio = du / dq;
        if (!report.upper_witness || ratio > report.upper_observed) {
          report.upper_observed = ratio;
          report.upper_witness = PairWitness{x, xp};
        }
        if (!leq(du, report.upper_claimed * dq, tol)) report.upper_ok = false;
      }
      const Dist bound = du == kInf ? kInf : 2.0 * du + 1.0;
      const double excess = bound == kInf ? -kInf : (dq == kInf ? kInf : dq - bound);
      if (excess > report.lower_worst_excess) {
        report.lower_worst_excess = excess;
        report.lower_witness = PairWitness{x, xp};
      }
      if (!leq(dq, bound, tol)) report.lower_ok = false;
    }
  }
  if (report.lower_worst_excess == -kInf) report.lower_worst_excess = 0;
  return report;
}

std::vector<PointIndex> nearest_image_retraction(const MappedPair& f) {
  const MetricSpace& Y = f.target();
  const auto& img = f.image();
  std::vector<PointIndex> phi(Y.size());
  for (PointIndex y = 0; y < Y.size(); ++y) {
    if (f.in_image(y)) {
      phi[y] = y;
      continue;
    }
    PointIndex best = img.front();
    for (PointIndex u : img) {
      if (Y(y, u) < Y(y, best)) best = u;
    }
    phi[y] = best;
  }
  return phi;
}

ImageQiReport check_image_qi(const MappedPair& f, const WeightFunction& theta, Dist sigma,
                             const DoublingCertificate& certificate, double cap) {
  const MetricSpace& Y = f.target();
  const double tol = Y.tolerance();
  if (f.image().empty()) throw PreconditionError("check_image_qi: empty source");
  if (!leq(certificate.r, sigma, tol)) {
    throw PreconditionError("check_image_qi: needs sigma >= r");
  }
  const std::vector<PointIndex> phi = nearest_image_retraction(f);
  for (PointIndex y = 0; y < Y.size(); ++y) {
    if (!leq(Y(y, phi[y]), certificate.r, tol)) {
      throw PreconditionError("check_image_qi: image is not r-dense (point " + Y.id(y) + ")");
    }
  }

  const RipsGraph rips = augmented_rips(f, theta, sigma, cap);
  const ImageRips image = image_subspace(f, rips);
  const MetricSpace& U = *image.space;
  const auto pos = positions_in(image.points, Y.size());
  const double utol = joint_tolerance(U, *rips.space);

  ImageQiReport report;
  report.sigma = sigma;
  report.certificate = certificate;
  report.phi = phi;
  report.omission_exact = rips.omission_exact && image.omission_exact;

  const std::vector<Dist> grid = Y.realized_distances();
  for (Dist t : grid) {
    if (t == kInf) continue;
    if (!leq(theta(t + 2.0 * certificate.r), certificate.C * theta(t), kFloatTolerance)) {
      report.certificate_ok = false;
    }
  }
  for (PointIndex u : f.image()) {
    if (phi[u] != u) report.retraction_ok = false;
  }
  for (std::size_t k = 0; k < image.points.size(); ++k) {
    for (std::size_t l = k + 1; l < image.points.size(); ++l) {
      if (!leq((*rips.space)(image.points[k], image.points[l]), U(k, l), utol)) {
        report.iota_ok = false;
      }
    }
  }
  for (const Edge& e : rips.graph.edges()) {
    const Dist du = U(pos[phi[e.u]], pos[phi[e.v]]);
    const double ratio = du / e.weight;
    if (!report.phi_witness || ratio > report.phi_observed) {
      report.phi_observed = ratio;
      report.phi_witness = PairWitness{e.u, e.v};
    }
    if (!leq(du, certificate.C * e.weight, utol)) report.phi_ok = false;
    if (!leq(Y(phi[e.u], phi[e.v]), sigma, tol)) ++report.phi_edges_out_of_scale;
  }
  const double allowed = theta(certificate.r);
  for (PointIndex y = 0; y < Y.size(); ++y) {
    if (f.in_image(y)) continue;
    const Dist d = Y(y, phi[y]);
    const double w = theta(d);
    report.surjectivity_weight = std::max(report.surjectivity_weight, w);
    if (!leq(d, sigma, tol) || w > cap || !leq(w, allowed, kFloatTolerance)) {
      report.surjectivity_ok = false;
    }
  }
  return report;
}

LowerReport check_lower(const MappedPair& f, const WeightFunction& theta,
                        const AffineWitness& witness, double cap) {
  const MetricSpace& Y = f.target();
  const std::vector<Dist> grid = Y.realized_distances();
  if (!theta.dominates_identity(grid)) {
    throw PreconditionError("check_lower: weight function " + std::string(theta.name()) +
                            " does not dominate t on the realized distances");
  }
  if (!check_affine_upper(f, witness).holds) {
    throw PreconditionError("check_lower: affine witness does not bound the map");
  }
  const RipsGraph rips = augmented_rips(f, theta, kInf, cap);
  const MetricSpace& relaxed = *rips.space;
  const double tol = Y.tolerance();

  LowerReport report;
  report.rho = witness;
  report.omitted = rips.omitted.size();
  report.relaxed = rips.space;
  report.worst_excess = -kInf;
  for (const Edge& e : rips.graph.edges()) {
    const Dist dy = Y(e.u, e.v);
    const double bound = witness(e.weight) + e.weight;
    const double excess = dy == kInf ? kInf : dy - bound;
    if (excess > report.worst_excess) {
      report.worst_excess = excess;
      report.worst_edge = PairWitness{e.u, e.v};
    }
    if (!leq(dy, bound, tol == 0 ? 0.0 : kFloatTolerance)) report.upper_control_ok = false;
  }
  if (report.worst_excess == -kInf) report.worst_excess = 0;
  for (PointIndex y = 0; y < Y.size(); ++y) {
    for (PointIndex yp = y + 1; yp < Y.size(); ++yp) {
      const Dist d = Y(y, yp);
      if (d != kInf && !leq(relaxed(y, yp), theta(d), joint_tolerance(relaxed, Y))) {
        report.theta_bound_ok = false;
      }
    }
  }
  report.lower_control = control_profile(identity_between(rips.space, f.target_ptr())).lower;
  return report;
}

bool MaximalMetricReport::ok() const {
  return std::all_of(arrows.begin(), arrows.end(), [](const ArrowReport& a) { return a.ok; });
}

MaximalMetricReport synthesize_maximal_metric(const MappedPair& f, const WeightFunction& theta,
                                              Dist sigma, const DoublingCertificate& certificate,
                                              std::span<const double> slopes, double cap) {
  MaximalMetricReport report;
  report.ext = check_ext_qi(f, theta, sigma, cap);
  report.image = check_image_qi(f, theta, sigma, certificate, cap);

  const RipsGraph rips = augmented_rips(f, theta, sigma, cap);
  const RipsGraph relaxed = augmented_rips(f, theta, kInf, cap);
  const ImageRips image = image_subspace(f, rips);
  const QuotientResult quotient = quotient_space(f, sigma);
  report.metric = rips.space;

  auto arrow = [&](std::string name, double claimed, const LipschitzFit& fit, double tol) {
    report.arrows.push_back({std::move(name), claimed, fit.constant, fit.witness,
                             leq(fit.constant, claimed, tol)});
  };
  arrow("q: X -> Q_sigma", 1.0, lipschitz_constant(quotient.quotient),
        quotient.space->tolerance());
  report.arrows.push_back({"Q_sigma -> U", report.ext.upper_claimed, report.ext.upper_observed,
                           report.ext.upper_witness, report.ext.ok()});
  arrow("iota: U -> Y_sigma", 1.0, lipschitz_constant(image.inclusion), kFloatTolerance);

  const auto pos = positions_in(image.points, f.target().size());
  std::vector<PointIndex> phi_u;
  for (PointIndex y : report.image.phi) phi_u.push_back(pos[y]);
  const MappedPair phi(rips.space, image.space, phi_u);
  arrow("phi: Y_sigma -> U", certificate.C, lipschitz_constant(phi), kFloatTolerance);
  arrow("Y_sigma -> Y_inf", 1.0, lipschitz_constant(identity_between(rips.space, relaxed.space)),
        kFloatTolerance);

  const std::vector<double> grid(slopes.begin(), slopes.end());
  report.target_vs_metric = {"d_Y", "rips", grid,
                             min_affine_upper(identity_between(rips.space, f.target_ptr()), grid)};
  report.metric_vs_target = {"rips", "d_Y", grid,
                             min_affine_upper(identity_between(f.target_ptr(), rips.space), grid)};
  return report;
}

PrecedesVerdict precedes_on_family(std::span<const MetricPair> family,
                                   std::span<const double> slopes) {
  PrecedesVerdict verdict;
  verdict.slopes.assign(slopes.begin(), slopes.end());
  for (const MetricPair& pair : family) {
    if (pair.d->ids() != pair.d_prime->ids()) {
      throw std::invalid_argument("precedes: metrics are on different point sets");
    }
    verdict.params.push_back(pair.param);
    verdict.offsets.push_back(min_affine_upper(identity_between(pair.d_prime, pair.d), slopes));
  }
  if (family.empty() || slopes.empty()) return verdict;

  for (std::size_t s = 0; s < slopes.size(); ++s) {
    bool stable = true;
    std::optional<double> first = verdict.offsets.front()[s];
    for (const auto& row : verdict.offsets) {
      if (!row[s] || !first || *row[s] > *first + kFloatTolerance) {
        stable = false;
        break;
      }
    }
    if (stable) {
      verdict.consistent = true;
      verdict.stable_slope = slopes[s];
      verdict.stable_offset = first;
      return verdict;
    }
  }

  // Growth of the smallest offset (over all slopes) against the parameter.
  std::vector<double> x, y;
  for (std::size_t k = 0; k < family.size(); ++k) {
    double best = kInf;
    for (const auto& b : verdict.offsets[k]) {
      if (b) best = std::min(best, *b);
    }
    x.push_back(static_cast<double>(verdict.params[k]));
    y.push_back(best);
  }
  const bool finite = std::all_of(y.begin(), y.end(), [](double v) { return v != kInf; });
  if (!finite) {
    verdict.divergence_slope = kInf;
  } else if (family.size() >= 2 && x.front() != x.back()) {
    verdict.divergence_slope = least_squares_slope(x, y);
  }
  return verdict;
}

}  // namespace coarse
