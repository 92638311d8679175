#include "coarse/filtration.hpp"

#include <algorithm>
#include <numeric>
#include <ostream>
#include <stdexcept>

#include "coarse/parallel.hpp"

namespace coarse {

namespace {

constexpr std::size_t kNone = static_cast<std::size_t>(-1);

void require_nonnegative(Dist value, const char* what) {
  if (!(value >= 0.0)) throw std::invalid_argument(std::string(what) + " must be >= 0");
}

std::vector<Dist> checked_grid(std::span<const Dist> grid) {
  if (grid.empty()) throw std::invalid_argument("sigma grid is empty");
  for (std::size_t i = 0; i < grid.size(); ++i) {
    require_nonnegative(grid[i], "grid value");
    if (i > 0 && !(grid[i] > grid[i - 1])) {
      throw std::invalid_argument("sigma grid must be strictly increasing");
    }
  }
  return {grid.begin(), grid.end()};
}

void require_window(const Window& window, const MetricSpace& space) {
  if (window.inside.size() != space.size()) {
    throw std::invalid_argument("window does not match the source space");
  }
}

// Records for σ_s <= τ_t, stored at s * g + t.
struct RecordTable {
  std::size_t g = 0;
  std::vector<Dist> value;
  std::vector<std::optional<PairWitness>> witness;

  explicit RecordTable(std::size_t grid_size)
      : g(grid_size), value(grid_size * grid_size, 0.0), witness(grid_size * grid_size) {}

  void raise(std::size_t s, std::size_t t, Dist v, PairWitness w) {
    const std::size_t k = s * g + t;
    if (!witness[k] || v > value[k]) {
      value[k] = v;
      witness[k] = w;
    }
  }
  void merge(const RecordTable& other) {
    for (std::size_t k = 0; k < value.size(); ++k) {
      if (other.witness[k] && (!witness[k] || other.value[k] > value[k])) {
        value[k] = other.value[k];
        witness[k] = other.witness[k];
      }
    }
  }
};

FiltrationProfile assemble(RecordKind kind, const std::vector<Dist>& grid, const RecordTable& table,
                           const Window& window) {
  FiltrationProfile profile;
  profile.kind = kind;
  profile.sigma_grid = grid;
  profile.window_description = window.description;
  profile.window_size = window.count();
  for (std::size_t s = 0; s < grid.size(); ++s) {
    for (std::size_t t = s; t < grid.size(); ++t) {
      const std::size_t k = s * grid.size() + t;
      profile.records.push_back({grid[s], grid[t], table.value[k], table.witness[k]});
    }
  }
  if (auto broken = profile.monotonicity_violation()) {
    throw std::logic_error("filtration profile is not monotone at sigma=" +
                           std::to_string(broken->first.sigma) +
                           " tau=" + std::to_string(broken->first.tau));
  }
  return profile;
}

// Position of each target point in f.image(), kNone outside the image.
std::vector<std::size_t> image_positions(const MappedPair& f) {
  std::vector<std::size_t> pos(f.target().size(), kNone);
  for (std::size_t k = 0; k < f.image().size(); ++k) pos[f.image()[k]] = k;
  return pos;
}

// reach[x'][k] = min over u' with d_Y(img_k, f u') <= σ of d_X(x', u').
std::vector<Dist> fibre_reach(const MappedPair& f, Dist sigma,
                              const std::vector<Dist>& fibre_distance) {
  const MetricSpace& Y = f.target();
  const auto& img = f.image();
  const std::size_t m = img.size();
  const std::size_t n = f.source().size();
  const double tol = Y.tolerance();

  std::vector<std::vector<std::size_t>> nearby(m);
  for (std::size_t k = 0; k < m; ++k) {
    for (std::size_t l = 0; l < m; ++l) {
      if (leq(Y(img[k], img[l]), sigma, tol)) nearby[k].push_back(l);
    }
  }
  std::vector<Dist> reach(n * m, kInf);
  parallel_for(n, [&](std::size_t xp) {
    const Dist* fd = fibre_distance.data() + xp * m;
    Dist* out = reach.data() + xp * m;
    for (std::size_t k = 0; k < m; ++k) {
      Dist best = kInf;
      for (std::size_t l : nearby[k]) best = std::min(best, fd[l]);
      out[k] = best;
    }
  });
  return reach;
}

// fibre_distance[x'][k] = d_X(x', f⁻¹(img_k)).
std::vector<Dist> fibre_distances(const MappedPair& f) {
  const MetricSpace& X = f.source();
  const auto& img = f.image();
  const std::size_t m = img.size();
  std::vector<Dist> out(X.size() * m, kInf);
  parallel_for(X.size(), [&](std::size_t xp) {
    for (std::size_t k = 0; k < m; ++k) {
      Dist best = kInf;
      for (PointIndex u : f.preimage(img[k])) best = std::min(best, X(xp, u));
      out[xp * m + k] = best;
    }
  });
  return out;
}

// min over u of max(d_X(x,u), reach[x'][pos(fu)]), scanning u by distance.
Dist nearest_kernel_member(const MappedPair& f, const std::vector<std::size_t>& pos,
                           const Dist* reach_row, PointIndex x,
                           const std::vector<PointIndex>& order) {
  const MetricSpace& X = f.source();
  Dist best = kInf;
  for (PointIndex u : order) {
    const Dist du = X(x, u);
    if (du >= best) break;
    best = std::min(best, std::max(du, reach_row[pos[f(u)]]));
  }
  return best;
}

std::vector<PointIndex> by_distance_from(const MetricSpace& X, PointIndex x) {
  std::vector<PointIndex> order(X.size());
  std::iota(order.begin(), order.end(), PointIndex{0});
  std::sort(order.begin(), order.end(),
            [&](PointIndex a, PointIndex b) { return X(x, a) < X(x, b); });
  return order;
}

}  // namespace

Subspace eq_sublevel(const MappedPair& f, const MappedPair& g, Dist kappa) {
  require_nonnegative(kappa, "kappa");
  if (!same_space(f.source(), g.source()) || !same_space(f.target(), g.target())) {
    throw std::domain_error("eq_sublevel: maps do not share source and target");
  }
  const double tol = f.target().tolerance();
  std::vector<PointIndex> members;
  for (PointIndex x = 0; x < f.source().size(); ++x) {
    if (leq(f.target()(f(x), g(x)), kappa, tol)) members.push_back(x);
  }
  return subspace(f.source_ptr(), members);
}

bool KernelSublevel::contains(PointIndex x, PointIndex xp) const {
  return std::binary_search(pairs.begin(), pairs.end(), std::make_pair(x, xp));
}

Dist KernelSublevel::distance(std::size_t i, std::size_t j) const {
  return std::max((*base)(pairs[i].first, pairs[j].first),
                  (*base)(pairs[i].second, pairs[j].second));
}

KernelSublevel::Explicit KernelSublevel::materialize() const {
  const Product product = product_linf(base, base);
  std::vector<PointIndex> members;
  members.reserve(pairs.size());
  for (const auto& [x, xp] : pairs) members.push_back(product.index(x, xp));
  Subspace sub = subspace(product.space, members);
  MappedPair first = compose(product.first, sub.inclusion);
  MappedPair second = compose(product.second, sub.inclusion);
  return Explicit{std::move(sub), std::move(first), std::move(second)};
}

KernelSublevel kernel_sublevel(const MappedPair& f, Dist sigma) {
  require_nonnegative(sigma, "sigma");
  const MetricSpace& X = f.source();
  const MetricSpace& Y = f.target();
  const double tol = Y.tolerance();
  KernelSublevel kernel{f.source_ptr(), sigma, {}};
  for (PointIndex x = 0; x < X.size(); ++x) {
    for (PointIndex xp = 0; xp < X.size(); ++xp) {
      if (leq(Y(f(x), f(xp)), sigma, tol)) kernel.pairs.emplace_back(x, xp);
    }
  }
  return kernel;
}

QuotientResult quotient_space(const MappedPair& f, Dist sigma) {
  require_nonnegative(sigma, "sigma");
  const MetricSpace& X = f.source();
  const MetricSpace& Y = f.target();
  const double tol = Y.tolerance();

  GraphBuilder builder(X.ids());
  for (const Edge& e : metric_skeleton(X)) builder.add(e.u, e.v, e.weight, EdgeKind::kInternal);
  for (PointIndex x = 0; x < X.size(); ++x) {
    for (PointIndex xp = x + 1; xp < X.size(); ++xp) {
      if (leq(Y(f(x), f(xp)), sigma, tol)) builder.add(x, xp, 1.0, EdgeKind::kGlued);
    }
  }
  WeightedGraph graph = std::move(builder).build();
  auto space = std::make_shared<const MetricSpace>(path_metric(graph));
  std::vector<PointIndex> identity(X.size());
  std::iota(identity.begin(), identity.end(), PointIndex{0});
  return QuotientResult{std::move(graph), space, MappedPair(f.source_ptr(), space, identity),
                        MappedPair(space, f.target_ptr(), f.assignment())};
}

Dist kernel_pair_distance(const MappedPair& f, Dist sigma, PointIndex x, PointIndex xp) {
  require_nonnegative(sigma, "sigma");
  if (leq(f.target()(f(x), f(xp)), sigma, f.target().tolerance())) return 0.0;
  const auto pos = image_positions(f);
  const auto reach = fibre_reach(f, sigma, fibre_distances(f));
  const std::size_t m = f.image().size();
  return nearest_kernel_member(f, pos, reach.data() + xp * m, x,
                               by_distance_from(f.source(), x));
}

std::string_view to_string(RecordKind kind) {
  return kind == RecordKind::kInclusionDensity ? "inclusion_density" : "bonding_distortion";
}

const ProfileRecord& FiltrationProfile::at(Dist sigma, Dist tau) const {
  for (const auto& r : records) {
    if (r.sigma == sigma && r.tau == tau) return r;
  }
  throw std::out_of_range("no profile record for (" + std::to_string(sigma) + ", " +
                          std::to_string(tau) + ")");
}

std::optional<std::pair<ProfileRecord, ProfileRecord>>
FiltrationProfile::monotonicity_violation() const {
  for (const auto& a : records) {
    for (const auto& b : records) {
      // Fixed τ: nonincreasing in σ.
      if (a.tau == b.tau && a.sigma < b.sigma && b.value > a.value) return std::make_pair(a, b);
      // Fixed σ: nondecreasing in τ.
      if (a.sigma == b.sigma && a.tau < b.tau && b.value < a.value) return std::make_pair(a, b);
    }
  }
  return std::nullopt;
}

namespace {

void write_number(std::ostream& os, double v) {
  if (v == kInf) {
    os << "inf";
  } else if (v == static_cast<double>(static_cast<long long>(v))) {
    os << static_cast<long long>(v);
  } else {
    os << v;
  }
}

}  // namespace

void FiltrationProfile::write_csv_header(std::ostream& os) {
  os << "sigma,tau,record_kind,value,window_size,truncation_param\n";
}

void FiltrationProfile::write_csv(std::ostream& os) const {
  for (const auto& r : records) {
    write_number(os, r.sigma);
    os << ',';
    write_number(os, r.tau);
    os << ',' << to_string(kind) << ',';
    write_number(os, r.value);
    os << ',' << window_size << ',';
    if (truncation_param) os << *truncation_param;
    os << '\n';
  }
}

std::vector<Dist> default_sigma_grid(const MetricSpace& target, Dist cap) {
  std::vector<Dist> grid;
  for (Dist d : target.realized_distances()) {
    if (d <= cap) grid.push_back(d);
  }
  if (grid.empty()) grid.push_back(0.0);
  return grid;
}

FiltrationProfile kernel_stability_profile(const MappedPair& f, std::span<const Dist> grid_in,
                                           const Window& window) {
  const std::vector<Dist> grid = checked_grid(grid_in);
  const MetricSpace& X = f.source();
  const MetricSpace& Y = f.target();
  require_window(window, X);
  const double tol = Y.tolerance();
  const std::size_t g = grid.size();
  const std::size_t m = f.image().size();

  const auto pos = image_positions(f);
  const auto fibre_distance = fibre_distances(f);
  std::vector<std::vector<Dist>> reach;
  reach.reserve(g);
  for (Dist sigma : grid) reach.push_back(fibre_reach(f, sigma, fibre_distance));

  const std::vector<PointIndex> members = window.members();
  std::vector<RecordTable> per_point(members.size(), RecordTable(g));
  parallel_for(members.size(), [&](std::size_t i) {
    const PointIndex x = members[i];
    const std::vector<PointIndex> order = by_distance_from(X, x);
    RecordTable& table = per_point[i];
    for (PointIndex xp : members) {
      const Dist dy = Y(f(x), f(xp));
      std::size_t t0 = 0;
      while (t0 < g && !leq(dy, grid[t0], tol)) ++t0;
      if (t0 == g) continue;  // not in K_τ for any grid τ
      for (std::size_t s = 0; s < g; ++s) {
        Dist v = 0.0;
        if (s < t0) v = nearest_kernel_member(f, pos, reach[s].data() + xp * m, x, order);
        for (std::size_t t = std::max(s, t0); t < g; ++t) table.raise(s, t, v, {x, xp});
      }
    }
  });
  RecordTable merged(g);
  for (const auto& table : per_point) merged.merge(table);
  return assemble(RecordKind::kInclusionDensity, grid, merged, window);
}

FiltrationProfile quotient_stability_profile(const MappedPair& f, std::span<const Dist> grid_in,
                                             const Window& window) {
  const std::vector<Dist> grid = checked_grid(grid_in);
  require_window(window, f.source());
  const std::size_t g = grid.size();

  std::vector<SpacePtr> quotients;
  quotients.reserve(g);
  for (Dist sigma : grid) quotients.push_back(quotient_space(f, sigma).space);
  const double tol = quotients.front()->tolerance();

  const std::vector<PointIndex> members = window.members();
  std::vector<RecordTable> per_point(members.size(), RecordTable(g));
  parallel_for(members.size(), [&](std::size_t i) {
    const PointIndex x = members[i];
    RecordTable& table = per_point[i];
    for (PointIndex xp : members) {
      for (std::size_t t = 0; t < g; ++t) {
        if (!leq((*quotients[t])(x, xp), 1.0, tol)) continue;
        for (std::size_t s = 0; s <= t; ++s) table.raise(s, t, (*quotients[s])(x, xp), {x, xp});
      }
    }
  });
  RecordTable merged(g);
  for (const auto& table : per_point) merged.merge(table);
  return assemble(RecordKind::kBondingDistortion, grid, merged, window);
}

ZhangResult zhang_delta(const MappedPair& f, Dist R, Dist epsilon, const Window& window) {
  require_nonnegative(R, "R");
  require_nonnegative(epsilon, "epsilon");
  const MetricSpace& X = f.source();
  const MetricSpace& Y = f.target();
  require_window(window, X);
  const double tol = Y.tolerance();

  // Source points whose image lands within R of y'.
  std::vector<std::vector<PointIndex>> near(Y.size());
  for (PointIndex yp = 0; yp < Y.size(); ++yp) {
    for (PointIndex u : f.image()) {
      if (!leq(Y(u, yp), R, tol)) continue;
      const auto fibre = f.preimage(u);
      near[yp].insert(near[yp].end(), fibre.begin(), fibre.end());
    }
  }

  ZhangResult result;
  result.R = R;
  result.epsilon = epsilon;
  Dist delta = 0.0;
  for (PointIndex x : window.members()) {
    for (PointIndex yp = 0; yp < Y.size(); ++yp) {
      if (!leq(Y(f(x), yp), epsilon, tol)) continue;
      ++result.checked;
      Dist need = kInf;
      for (PointIndex w : near[yp]) need = std::min(need, X(x, w));
      if (need == kInf) {
        result.delta.reset();
        result.witness = std::make_pair(x, yp);
        return result;
      }
      if (need > delta || !result.witness) {
        delta = std::max(delta, need);
        result.witness = std::make_pair(x, yp);
      }
    }
  }
  result.delta = delta;
  return result;
}

}  // namespace coarse
