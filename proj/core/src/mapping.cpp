#include "coarse/mapping.hpp"

#include <algorithm>
#include <stdexcept>

namespace coarse {

MappedPair::MappedPair(SpacePtr source, SpacePtr target, std::vector<PointIndex> assign)
    : source_(std::move(source)), target_(std::move(target)), assign_(std::move(assign)) {
  if (!source_ || !target_) throw std::invalid_argument("map endpoints must be non-null");
  if (assign_.size() != source_->size()) {
    throw std::invalid_argument("map assigns " + std::to_string(assign_.size()) +
                                " points but source has " + std::to_string(source_->size()));
  }
  const std::size_t m = target_->size();
  fibre_begin_.assign(m + 1, 0);
  for (PointIndex y : assign_) {
    if (y >= m) throw std::invalid_argument("map sends a point outside the target");
    ++fibre_begin_[y + 1];
  }
  for (std::size_t y = 0; y < m; ++y) fibre_begin_[y + 1] += fibre_begin_[y];
  fibres_.resize(assign_.size());
  std::vector<std::size_t> cursor(fibre_begin_.begin(), fibre_begin_.end() - 1);
  for (PointIndex x = 0; x < assign_.size(); ++x) fibres_[cursor[assign_[x]]++] = x;
  for (PointIndex y = 0; y < m; ++y) {
    if (in_image(y)) image_.push_back(y);
  }
}

MappedPair MappedPair::identity(SpacePtr space) {
  std::vector<PointIndex> assign(space->size());
  for (PointIndex i = 0; i < assign.size(); ++i) assign[i] = i;
  return MappedPair(space, space, std::move(assign));
}

std::span<const PointIndex> MappedPair::preimage(PointIndex y) const noexcept {
  return {fibres_.data() + fibre_begin_[y], fibre_begin_[y + 1] - fibre_begin_[y]};
}

bool same_space(const MetricSpace& a, const MetricSpace& b) { return &a == &b || a == b; }

MappedPair compose(const MappedPair& g, const MappedPair& f) {
  if (!same_space(f.target(), g.source())) {
    throw std::domain_error("compose: target of f is not the source of g");
  }
  std::vector<PointIndex> assign(f.source().size());
  for (PointIndex x = 0; x < assign.size(); ++x) assign[x] = g(f(x));
  return MappedPair(f.source_ptr(), g.target_ptr(), std::move(assign));
}

Dist closeness_distance(const MappedPair& f, const MappedPair& g) {
  if (!same_space(f.source(), g.source()) || !same_space(f.target(), g.target())) {
    throw std::domain_error("closeness_distance: maps do not share source and target");
  }
  Dist best = 0.0;
  for (PointIndex x = 0; x < f.source().size(); ++x) {
    best = std::max(best, f.target()(f(x), g(x)));
  }
  return best;
}

namespace {

// Running-max envelope of (key, value) samples over sorted distinct keys.
std::vector<std::pair<Dist, Dist>> envelope(std::vector<std::pair<Dist, Dist>> samples) {
  std::sort(samples.begin(), samples.end());
  std::vector<std::pair<Dist, Dist>> out;
  Dist running = 0.0;
  for (const auto& [key, value] : samples) {
    running = std::max(running, value);
    if (!out.empty() && out.back().first == key) {
      out.back().second = running;
    } else {
      out.emplace_back(key, running);
    }
  }
  return out;
}

}  // namespace

bool ControlProfile::has_finite_lower() const {
  return std::all_of(lower.begin(), lower.end(),
                     [](const auto& entry) { return entry.second != kInf; });
}

ControlProfile control_profile(const MappedPair& f) {
  const MetricSpace& X = f.source();
  const MetricSpace& Y = f.target();
  const std::size_t n = X.size();

  std::vector<std::pair<Dist, Dist>> up;
  std::vector<std::pair<Dist, Dist>> low;
  for (PointIndex i = 0; i < n; ++i) {
    for (PointIndex j = i; j < n; ++j) {
      const Dist dx = X(i, j);
      const Dist dy = Y(f(i), f(j));
      if (dx != kInf) up.emplace_back(dx, dy);
      if (dy != kInf) low.emplace_back(dy, dx);
    }
  }

  ControlProfile profile;
  profile.upper = envelope(std::move(up));
  profile.lower = envelope(std::move(low));

  Dist radius = 0.0;
  for (PointIndex y = 0; y < Y.size(); ++y) {
    Dist nearest = kInf;
    for (PointIndex u : f.image()) nearest = std::min(nearest, Y(y, u));
    radius = std::max(radius, nearest);
  }
  profile.surjectivity_radius = radius;
  return profile;
}

AffineWitness::AffineWitness(double a, double b) : slope(a), offset(b) {
  if (a < 0.0 || b < 0.0) throw std::invalid_argument("affine witness needs a, b >= 0");
}

AffineUpperVerdict check_affine_upper(const MappedPair& f, const AffineWitness& w) {
  const MetricSpace& X = f.source();
  const MetricSpace& Y = f.target();
  const double tol = f.tolerance();
  AffineUpperVerdict verdict;
  double worst = -kInf;
  for (PointIndex i = 0; i < X.size(); ++i) {
    for (PointIndex j = i + 1; j < X.size(); ++j) {
      const Dist dx = X(i, j);
      if (dx == kInf) continue;
      const Dist dy = Y(f(i), f(j));
      const double bound = w(dx);
      const double excess = dy == kInf ? kInf : dy - bound;
      if (excess > worst) {
        worst = excess;
        verdict.worst = PairWitness{i, j};
      }
      if (!leq(dy, bound, tol)) verdict.holds = false;
    }
  }
  verdict.worst_excess = verdict.worst ? worst : 0.0;
  return verdict;
}

std::vector<AffineLowerFit> min_affine_lower(const MappedPair& f, std::span<const double> slopes) {
  const MetricSpace& X = f.source();
  const MetricSpace& Y = f.target();
  std::vector<AffineLowerFit> fits;
  fits.reserve(slopes.size());
  for (double a : slopes) {
    AffineLowerFit fit;
    fit.slope = a;
    double b = 0.0;
    bool feasible = true;
    for (PointIndex i = 0; i < X.size() && feasible; ++i) {
      for (PointIndex j = i + 1; j < X.size(); ++j) {
        const Dist dx = X(i, j);
        const Dist dy = Y(f(i), f(j));
        if (dy == kInf) continue;
        if (dx == kInf) {
          feasible = false;
          fit.extremal = PairWitness{i, j};
          break;
        }
        const double need = a * dx - dy;
        if (need > b) {
          b = need;
          fit.extremal = PairWitness{i, j};
        }
      }
    }
    if (feasible) fit.offset = b;
    fits.push_back(fit);
  }
  return fits;
}

std::vector<std::optional<double>> min_affine_upper(const MappedPair& f,
                                                    std::span<const double> slopes) {
  const MetricSpace& X = f.source();
  const MetricSpace& Y = f.target();
  std::vector<std::optional<double>> out;
  for (double a : slopes) {
    std::optional<double> b = 0.0;
    for (PointIndex i = 0; i < X.size() && b; ++i) {
      for (PointIndex j = i + 1; j < X.size(); ++j) {
        const Dist dx = X(i, j);
        if (dx == kInf) continue;
        const Dist dy = Y(f(i), f(j));
        if (dy == kInf) {
          b.reset();
          break;
        }
        b = std::max(*b, dy - a * dx);
      }
    }
    out.push_back(b);
  }
  return out;
}

LipschitzFit lipschitz_constant(const MappedPair& f) {
  const MetricSpace& X = f.source();
  const MetricSpace& Y = f.target();
  LipschitzFit fit;
  for (PointIndex i = 0; i < X.size(); ++i) {
    for (PointIndex j = i + 1; j < X.size(); ++j) {
      const Dist dx = X(i, j);
      if (dx == kInf) continue;
      const Dist dy = Y(f(i), f(j));
      const double ratio = dy == kInf ? kInf : dy / dx;
      if (!fit.witness || ratio > fit.constant) {
        fit.constant = ratio;
        fit.witness = PairWitness{i, j};
      }
    }
  }
  return fit;
}

}  // namespace coarse
