#include "coarse/weight.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace coarse {

WeightFunction WeightFunction::exp2() {
  WeightFunction w;
  w.kind_ = WeightKind::kExp2;
  return w;
}

WeightFunction WeightFunction::one() { return WeightFunction{}; }

WeightFunction WeightFunction::linear_plus() {
  WeightFunction w;
  w.kind_ = WeightKind::kLinearPlus;
  return w;
}

WeightFunction WeightFunction::table(std::vector<std::pair<Dist, double>> steps) {
  if (steps.empty() || steps.front().first != 0.0) {
    throw std::invalid_argument("weight table must start at t = 0");
  }
  for (std::size_t i = 0; i < steps.size(); ++i) {
    if (!(steps[i].second >= 1.0)) throw std::invalid_argument("weight table values must be >= 1");
    if (i > 0 && !(steps[i].first > steps[i - 1].first)) {
      throw std::invalid_argument("weight table abscissae must be strictly increasing");
    }
    if (i > 0 && steps[i].second < steps[i - 1].second) {
      throw std::invalid_argument("weight table must be nondecreasing");
    }
  }
  WeightFunction w;
  w.kind_ = WeightKind::kTable;
  w.steps_ = std::move(steps);
  return w;
}

WeightFunction WeightFunction::from_name(std::string_view name) {
  if (name == "exp2") return exp2();
  if (name == "one") return one();
  if (name == "linear") return linear_plus();
  throw std::invalid_argument("unknown weight function '" + std::string(name) + "'");
}

std::string_view WeightFunction::name() const noexcept {
  switch (kind_) {
    case WeightKind::kExp2: return "exp2";
    case WeightKind::kOne: return "one";
    case WeightKind::kLinearPlus: return "linear";
    case WeightKind::kTable: return "table";
  }
  return "table";
}

double WeightFunction::operator()(Dist t) const {
  if (t == kInf) return kInf;
  switch (kind_) {
    case WeightKind::kExp2: return std::exp2(t);
    case WeightKind::kOne: return 1.0;
    case WeightKind::kLinearPlus: return t + 1.0;
    case WeightKind::kTable: {
      auto it = std::upper_bound(steps_.begin(), steps_.end(), t,
                                 [](Dist v, const auto& step) { return v < step.first; });
      return std::prev(it)->second;
    }
  }
  return 1.0;
}

std::optional<double> WeightFunction::doubling_constant(Dist r) const {
  switch (kind_) {
    case WeightKind::kExp2: return std::exp2(2.0 * r);
    case WeightKind::kOne: return 1.0;
    case WeightKind::kLinearPlus: return 2.0 * r + 1.0;
    case WeightKind::kTable: return std::nullopt;
  }
  return std::nullopt;
}

double WeightFunction::observed_doubling(Dist r, std::span<const Dist> grid) const {
  double worst = 1.0;
  for (Dist t : grid) {
    if (t == kInf) continue;
    worst = std::max(worst, (*this)(t + 2.0 * r) / (*this)(t));
  }
  return worst;
}

bool WeightFunction::dominates_identity(std::span<const Dist> grid) const {
  return std::all_of(grid.begin(), grid.end(),
                     [&](Dist t) { return t == kInf || t <= (*this)(t); });
}

DoublingCertificate doubling_certificate(const WeightFunction& theta, Dist r,
                                         std::span<const Dist> grid) {
  if (auto c = theta.doubling_constant(r)) return {r, *c};
  return {r, theta.observed_doubling(r, grid)};
}

}  // namespace coarse
