#include "coarse/scenarios.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <sstream>
#include <stdexcept>

#include "coarse/filtration.hpp"
#include "coarse/gallery.hpp"
#include "coarse/glue.hpp"
#include "coarse/random.hpp"
#include "coarse/rips.hpp"
#include "coarse/stats.hpp"

namespace coarse {

namespace {

Json pair_json(const MetricSpace& space, PointIndex a, PointIndex b) {
  return Json::array({space.id(a), space.id(b)});
}

Json witness_json(const MetricSpace& space, const std::optional<PairWitness>& w) {
  if (!w) return nullptr;
  return pair_json(space, w->first, w->second);
}

Json optional_json(const std::optional<double>& v) {
  return v ? distance_to_json(*v) : Json(nullptr);
}

bool strictly_increasing(const std::vector<double>& v) {
  for (std::size_t i = 1; i < v.size(); ++i) {
    if (!(v[i] > v[i - 1])) return false;
  }
  return true;
}

std::string profile_csv(const std::vector<FiltrationProfile>& profiles) {
  std::ostringstream os;
  FiltrationProfile::write_csv_header(os);
  for (const auto& p : profiles) p.write_csv(os);
  return os.str();
}

std::vector<Dist> sigma_or(const ScenarioParams& params, std::vector<Dist> fallback) {
  return params.sigma ? *params.sigma : std::move(fallback);
}

ScenarioReport start(std::string name, Json params) {
  ScenarioReport report;
  report.name = std::move(name);
  report.params = std::move(params);
  return report;
}

void add(ScenarioReport& report, std::string claim, std::string anchor, bool pass, Json detail) {
  report.assertions.push_back({std::move(claim), std::move(anchor), pass, std::move(detail)});
}

// -- comb-Q ------------------------------------------------------------------

ScenarioReport comb_q(const ScenarioParams& params) {
  const long n_max = params.n_max.value_or(6);
  const long sigma = 2, n = 5;
  ScenarioReport report = start("comb-Q", {{"n_max", n_max}, {"sigma", sigma}, {"n", n}});
  const Comb c = comb(n_max);
  const auto [v, vp] = c.locate(sigma, n);
  const Dist q_next = (*quotient_space(c.identity, sigma + 1).space)(v, vp);
  const Dist q_here = (*quotient_space(c.identity, sigma).space)(v, vp);
  const Json pair = pair_json(*c.path, v, vp);
  add(report, "located pair is one step apart in Q_{sigma+1}", "comb quotient divergence",
      q_next == 1.0, {{"pair", pair}, {"distance", distance_to_json(q_next)}});
  const double bound = 2.0 * n / sigma;
  add(report, "located pair stays at least 2n/sigma apart in Q_sigma", "comb quotient divergence",
      q_here >= bound,
      {{"pair", pair}, {"distance", distance_to_json(q_here)}, {"bound", bound}});

  const std::vector<Dist> grid = sigma_or(params, {2, 3});
  std::vector<FiltrationProfile> profiles;
  std::vector<double> xs, rs;
  Json table = Json::array();
  for (const FamilyInstance& inst : comb_family({4, 6, 8, 10}).instances()) {
    FiltrationProfile p = quotient_stability_profile(inst.map, grid, inst.window);
    p.truncation_param = inst.param;
    const Dist r = p.value(grid.front(), grid.back());
    xs.push_back(static_cast<double>(inst.param));
    rs.push_back(r);
    table.push_back({{"n_max", inst.param}, {"r", distance_to_json(r)},
                     {"window_size", p.window_size}});
    profiles.push_back(std::move(p));
  }
  const bool finite = std::all_of(rs.begin(), rs.end(), [](double r) { return r != kInf; });
  const double slope = finite ? least_squares_slope(xs, rs) : kInf;
  add(report, "bonding distortion r(sigma,tau) grows at least linearly in n_max (slope >= 0.5)",
      "comb quotient divergence", finite && slope >= 0.5,
      {{"grid", grid}, {"family", table}, {"slope", distance_to_json(slope)}});
  report.files.emplace_back("comb-Q.csv", profile_csv(profiles));
  return report;
}

// -- comb-K ------------------------------------------------------------------

ScenarioReport comb_k(const ScenarioParams& params) {
  const long n_max = params.n_max.value_or(6);
  const long sigma = 2, n = 5;
  ScenarioReport report = start("comb-K", {{"n_max", n_max}, {"sigma", sigma}, {"n", n}});
  const CombRetraction cr = comb_retraction(n_max);
  const MappedPair& f = cr.retraction;
  const auto [v, vp] = cr.comb.locate(sigma, n);
  const Json pair = pair_json(*cr.comb.path, v, vp);
  const Dist image_gap = f.target()(f(v), f(vp));
  add(report, "located pair lies in K_{sigma+1}", "comb retraction kernel", image_gap <= sigma + 1,
      {{"pair", pair}, {"image_distance", distance_to_json(image_gap)}});
  const Dist to_kernel = kernel_pair_distance(f, sigma, v, vp);
  add(report, "located pair is farther than n from K_sigma", "comb retraction kernel",
      to_kernel > static_cast<Dist>(n), {{"pair", pair}, {"distance", distance_to_json(to_kernel)}});

  const std::vector<Dist> grid = sigma_or(params, {2, 3});
  std::vector<FiltrationProfile> profiles;
  std::vector<double> ns;
  Json table = Json::array();
  for (const FamilyInstance& inst : comb_retraction_family({4, 6, 8}).instances()) {
    FiltrationProfile p = kernel_stability_profile(inst.map, grid, inst.window);
    p.truncation_param = inst.param;
    const Dist value = p.value(grid.front(), grid.back());
    ns.push_back(value);
    table.push_back({{"n_max", inst.param}, {"n", distance_to_json(value)},
                     {"window_size", p.window_size}});
    profiles.push_back(std::move(p));
  }
  add(report, "inclusion density n(sigma,tau) strictly increases with n_max",
      "comb retraction kernel", strictly_increasing(ns), {{"grid", grid}, {"family", table}});
  report.files.emplace_back("comb-K.csv", profile_csv(profiles));
  return report;
}

// -- heisenberg-K ------------------------------------------------------------

ScenarioReport heisenberg_k(const ScenarioParams& params) {
  const int R = params.radius.value_or(6);
  const std::vector<Dist> grid = sigma_or(params, {0, 1, 2, 3});
  const int inner = static_cast<int>(params.window.value_or(R - static_cast<long>(grid.back())));
  ScenarioReport report = start("heisenberg-K", {{"radius", R}, {"sigma", grid}, {"window", inner}});

  const HeisenbergBall ball = heisenberg(R);
  FiltrationProfile p = kernel_stability_profile(ball.projection, grid, ball.ball(inner));
  p.truncation_param = R;
  Json rows = Json::array();
  bool within = true;
  for (Dist s : grid) {
    const ProfileRecord& rec = p.at(grid.front(), s);
    within = within && rec.value <= s;
    rows.push_back({{"sigma", distance_to_json(s)}, {"n", distance_to_json(rec.value)},
                    {"witness", witness_json(*ball.group, rec.witness)}});
  }
  add(report, "every window pair of K_sigma is within sigma of K_0", "central extension stability",
      within, {{"window_size", p.window_size}, {"records", rows}});

  const std::vector<std::size_t> sizes = heisenberg_ball_sizes(8);
  std::vector<double> radii, heis, cubic;
  for (int r = 4; r <= 8; ++r) {
    radii.push_back(r);
    heis.push_back(static_cast<double>(sizes[static_cast<std::size_t>(r - 1)]));
    cubic.push_back(static_cast<double>(lattice_ball_size(3, r)));
  }
  const double s_heis = log_log_slope(radii, heis);
  const double s_cubic = log_log_slope(radii, cubic);
  add(report, "ball growth exponent exceeds the Z^3 exponent by more than 0.3",
      "central extension growth", s_heis - s_cubic > 0.3,
      {{"ball_sizes", sizes}, {"heisenberg_slope", s_heis}, {"z3_slope", s_cubic}});
  report.files.emplace_back("heisenberg-K.csv", profile_csv({p}));
  return report;
}

// -- coeq-sandwich -----------------------------------------------------------

ScenarioReport coeq_sandwich(const ScenarioParams& params) {
  const int trials = params.trials.value_or(100);
  ScenarioReport report = start("coeq-sandwich", {{"seed", params.seed}, {"trials", trials}});
  Rng rng(params.seed);
  int r_bad = 0, s_bad = 0, rs_bad = 0, sr_bad = 0;
  Json failures = Json::array();
  double worst_s = 0, worst_sr = 0;
  for (int t = 0; t < trials; ++t) {
    const CoeqInstance inst = random_coeq_instance(rng, 20, 10, 20);
    const ComparisonReport c = double_glue_comparison(inst.f, inst.g);
    worst_s = std::max(worst_s, c.s_lipschitz);
    worst_sr = std::max(worst_sr, c.sr_closeness);
    r_bad += !c.r_ok();
    s_bad += !c.s_ok();
    rs_bad += !c.rs_identity;
    sr_bad += !c.sr_ok();
    if (!c.all_ok()) {
      failures.push_back({{"trial", t}, {"r", c.r_lipschitz}, {"s", c.s_lipschitz},
                          {"rs_identity", c.rs_identity},
                          {"sr", distance_to_json(c.sr_closeness)}});
    }
  }
  const std::string anchor = "coequaliser comparison maps";
  add(report, "r is 1-Lipschitz", anchor, r_bad == 0, {{"failures", r_bad}});
  add(report, "s is 2-Lipschitz", anchor, s_bad == 0, {{"failures", s_bad}, {"worst", worst_s}});
  add(report, "r s = id", anchor, rs_bad == 0, {{"failures", rs_bad}});
  add(report, "s r is 1-close to id", anchor, sr_bad == 0,
      {{"failures", sr_bad}, {"worst", distance_to_json(worst_sr)}});
  report.diagnostics["failed_trials"] = failures;
  return report;
}

// -- rips-constants ----------------------------------------------------------

ScenarioReport rips_constants(const ScenarioParams& params) {
  const int trials = params.trials.value_or(50);
  std::vector<WeightFunction> thetas;
  if (params.theta) {
    thetas.push_back(WeightFunction::from_name(*params.theta));
  } else {
    thetas = {WeightFunction::exp2(), WeightFunction::one()};
  }
  Json theta_names = Json::array();
  for (const auto& t : thetas) theta_names.push_back(std::string(t.name()));
  ScenarioReport report = start("rips-constants",
                        {{"seed", params.seed}, {"trials", trials}, {"theta", theta_names}});
  Rng rng(params.seed);

  int ext_runs = 0, ext_bad = 0, img_runs = 0, img_bad = 0, low_runs = 0, low_bad = 0;
  int chain_bad = 0, tight_runs = 0, tight_bad = 0;
  std::size_t out_of_scale = 0, omitted = 0;
  Json failures = Json::array();
  for (int t = 0; t < trials; ++t) {
    const RipsInstance inst = random_rips_instance(rng, 12, 40, 3, 2);
    const MetricSpace& Y = inst.f.target();
    const std::vector<Dist> grid = Y.realized_distances();
    Dist big = 0;
    for (Dist d : grid) {
      if (d != kInf) big = std::max(big, d);
    }
    big = std::max(big, static_cast<Dist>(inst.r));
    for (const WeightFunction& theta : thetas) {
      for (Dist sigma : {0.0, 1.0, 2.0, big}) {
        ++ext_runs;
        const ExtQiReport ext = check_ext_qi(inst.f, theta, sigma);
        if (!ext.ok()) {
          ++ext_bad;
          failures.push_back({{"trial", t}, {"check", "ext"}, {"theta", theta.name()},
                              {"sigma", sigma}});
        }
      }
      const DoublingCertificate cert = doubling_certificate(theta, static_cast<Dist>(inst.r), grid);
      ++img_runs;
      const ImageQiReport img = check_image_qi(inst.f, theta, big, cert);
      out_of_scale += img.phi_edges_out_of_scale;
      if (!img.ok()) {
        ++img_bad;
        failures.push_back({{"trial", t}, {"check", "image"}, {"theta", theta.name()},
                            {"phi_observed", img.phi_observed}});
      }
      // Smallest admissible scale: recorded only.
      ++tight_runs;
      tight_bad += !check_image_qi(inst.f, theta, static_cast<Dist>(inst.r), cert).ok();

      if (theta.dominates_identity(grid)) {
        ++low_runs;
        const LowerReport low = check_lower(inst.f, theta, AffineWitness(1.0, 0.0));
        omitted += low.omitted;
        if (!low.ok()) {
          ++low_bad;
          failures.push_back({{"trial", t}, {"check", "lower"}, {"theta", theta.name()},
                              {"worst_excess", low.worst_excess}});
        }
      }
      // ∂_∞ <= ∂_τ <= ∂_σ for σ <= τ.
      const RipsGraph r1 = augmented_rips(inst.f, theta, 1.0);
      const RipsGraph r2 = augmented_rips(inst.f, theta, 2.0);
      const RipsGraph rinf = augmented_rips(inst.f, theta, kInf);
      for (PointIndex a = 0; a < Y.size(); ++a) {
        for (PointIndex b = 0; b < Y.size(); ++b) {
          if ((*r2.space)(a, b) > (*r1.space)(a, b) || (*rinf.space)(a, b) > (*r2.space)(a, b)) {
            ++chain_bad;
          }
        }
      }
    }
  }
  add(report, "Q_sigma -> U is (Theta(sigma)+1)-Lipschitz with lower control (t-1)/2",
      "extension quasi-isometry", ext_bad == 0, {{"runs", ext_runs}, {"failures", ext_bad}});
  add(report, "phi is C-Lipschitz, phi iota = id, joining weight <= Theta(r) (sigma >= diam Y)",
      "image quasi-isometry", img_bad == 0, {{"runs", img_runs}, {"failures", img_bad}});
  add(report, "every Rips^Theta_inf edge of weight w has d_Y <= rho(w) + w",
      "lower control", low_bad == 0, {{"runs", low_runs}, {"failures", low_bad}});
  add(report, "Rips metrics decrease along the scale", "rips ordering chain", chain_bad == 0,
      {{"violations", chain_bad}});
  report.diagnostics["failed_checks"] = failures;
  report.diagnostics["image_qi_at_sigma_equal_r"] = {{"runs", tight_runs}, {"failures", tight_bad}};
  report.diagnostics["phi_edges_out_of_scale"] = out_of_scale;
  report.diagnostics["omitted_heavy_edges"] = omitted;
  return report;
}

// -- cubes-window ------------------------------------------------------------

ScenarioReport cubes_window(const ScenarioParams& params) {
  std::vector<long> windows{10, 50, 100, 200};
  if (params.window) windows = {*params.window};
  const std::vector<double> slopes{1.0, 0.5, 0.1};
  ScenarioReport report = start("cubes-window", {{"windows", windows}, {"slopes", slopes}});
  bool upper = true;
  std::vector<std::vector<double>> offsets(slopes.size());
  bool feasible = true;
  std::ostringstream csv;
  csv << "N,slope,offset\n";
  Json table = Json::array();
  for (const FamilyInstance& inst : cubes_family(windows).instances()) {
    upper = upper && check_affine_upper(inst.map, AffineWitness(1.0, 0.0)).holds;
    const auto fits = min_affine_lower(inst.map, slopes);
    Json row = {{"N", inst.param}};
    for (std::size_t s = 0; s < slopes.size(); ++s) {
      if (!fits[s].offset) {
        feasible = false;
        continue;
      }
      offsets[s].push_back(*fits[s].offset);
      row["b"].push_back(*fits[s].offset);
      csv << inst.param << ',' << slopes[s] << ',' << *fits[s].offset << '\n';
    }
    table.push_back(std::move(row));
  }
  add(report, "n^3 -> n^2 is 1-Lipschitz on every window", "cubes to squares", upper, {});
  bool diverges = feasible && windows.size() >= 2;
  for (const auto& b : offsets) diverges = diverges && strictly_increasing(b);
  add(report, "minimal lower offset b strictly increases with the window for every slope",
      "cubes to squares", diverges, {{"table", table}});
  report.files.emplace_back("cubes-window.csv", csv.str());
  return report;
}

// -- zhang-projection --------------------------------------------------------

ScenarioReport zhang_projection(const ScenarioParams& params) {
  const long N = params.window.value_or(5);
  ScenarioReport report = start("zhang-projection", {{"k", 2}, {"m", 1}, {"N", N}, {"R", 0}});
  const MappedPair f = lattice_quotient(2, 1, N);
  const MetricSpace& X = f.source();

  // Distance of each source point from the origin.
  PointIndex origin = *X.find("(0,0)");
  Json rows = Json::array();
  bool exact = true;
  for (Dist eps : f.target().realized_distances()) {
    Window w{std::vector<bool>(X.size()), "source ball of radius N - epsilon"};
    for (PointIndex x = 0; x < X.size(); ++x) w.inside[x] = X(origin, x) + eps <= static_cast<Dist>(N);
    const ZhangResult z = zhang_delta(f, 0.0, eps, w);
    const bool vacuous = z.checked == 0;
    if (!vacuous) exact = exact && z.delta && *z.delta == eps;
    rows.push_back({{"epsilon", distance_to_json(eps)}, {"delta", optional_json(z.delta)},
                    {"checked", z.checked}, {"vacuous", vacuous}});
  }
  add(report, "delta(epsilon) = epsilon with R = 0", "coarse quotient witness", exact,
      {{"table", rows}});

  const std::vector<Dist> grid = f.target().realized_distances();
  FiltrationProfile p = kernel_stability_profile(f, grid, Window::all(X.size()));
  p.truncation_param = N;
  Json ns = Json::array();
  bool finite = true;
  for (Dist tau : grid) {
    const Dist v = p.value(grid.front(), tau);
    finite = finite && v != kInf;
    ns.push_back({{"tau", distance_to_json(tau)}, {"n", distance_to_json(v)}});
  }
  add(report, "n(0, tau) is finite for every grid tau", "coarse quotient witness", finite,
      {{"profile", ns}});
  report.files.emplace_back("zhang-projection.csv", profile_csv({p}));
  return report;
}

// -- maximal-metric-comb -----------------------------------------------------

ScenarioReport maximal_metric_comb(const ScenarioParams& params) {
  const std::vector<Dist> sigmas = sigma_or(params, {2, 3});
  const WeightFunction theta = WeightFunction::from_name(params.theta.value_or("exp2"));
  const std::vector<long> family{3, 4, 5, 6};
  const std::vector<double> slopes{1, 2, 4, 8};
  ScenarioReport report = start("maximal-metric-comb",
                        {{"sigma", sigmas}, {"theta", theta.name()}, {"n_max", family},
                         {"slopes", slopes}});

  for (Dist sigma : sigmas) {
    bool arrows_ok = true;
    std::vector<double> ratios;
    bool finite = true;
    Json table = Json::array();
    for (long n : family) {
      const Comb c = comb(n);
      const DoublingCertificate cert = doubling_certificate(theta, 0.0, c.l1->realized_distances());
      const MaximalMetricReport m = synthesize_maximal_metric(c.identity, theta, sigma, cert, slopes);
      arrows_ok = arrows_ok && m.ok();
      Json arrows = Json::array();
      for (const ArrowReport& a : m.arrows) {
        arrows.push_back({{"name", a.name}, {"constant_claimed", a.constant_claimed},
                          {"constant_observed", distance_to_json(a.constant_observed)},
                          {"witness_pair", witness_json(*c.path, a.witness)}, {"ok", a.ok}});
      }
      // Best slope with zero offset for rips <= a * l1 on this truncation.
      const LipschitzFit fit =
          lipschitz_constant(MappedPair(c.l1, m.metric, c.identity.assignment()));
      finite = finite && fit.constant != kInf;
      ratios.push_back(fit.constant);
      Json rips_vs_l1 = Json::array(), l1_vs_rips = Json::array();
      for (std::size_t s = 0; s < slopes.size(); ++s) {
        rips_vs_l1.push_back(optional_json(m.metric_vs_target.offsets[s]));
        l1_vs_rips.push_back(optional_json(m.target_vs_metric.offsets[s]));
      }
      table.push_back({{"n_max", n},
                       {"arrows", arrows},
                       {"rips_over_l1_slope", distance_to_json(fit.constant)},
                       {"rips_over_l1_witness", witness_json(*c.path, fit.witness)},
                       {"rips_vs_l1_offsets", rips_vs_l1},
                       {"l1_vs_rips_offsets", l1_vs_rips}});
    }
    const std::string tag = "sigma=" + std::to_string(static_cast<long>(sigma));
    add(report, "factorisation arrows meet their constants (" + tag + ")",
        "maximal metric synthesis", arrows_ok, {{"family", table}});
    add(report, "fitted slope of the Rips metric against l1 strictly increases with n_max (" + tag + ")",
        "comb has no relatively maximal metric", finite && strictly_increasing(ratios),
        {{"slopes", ratios}});
  }

  std::vector<MetricPair> forward, backward;
  for (long n : family) {
    const Comb c = comb(n);
    forward.push_back({c.l1, c.path, n});
    backward.push_back({c.path, c.l1, n});
  }
  const PrecedesVerdict fwd = precedes_on_family(forward, slopes);
  const PrecedesVerdict bwd = precedes_on_family(backward, slopes);
  add(report, "l1 precedes the path metric with a fixed affine bound", "comb metrics ordering",
      fwd.consistent,
      {{"slope", optional_json(fwd.stable_slope)}, {"offset", optional_json(fwd.stable_offset)}});
  add(report, "the path metric does not precede l1 (offsets diverge)", "comb metrics ordering",
      !bwd.consistent, {{"divergence_slope", distance_to_json(bwd.divergence_slope)}});
  return report;
}

using Runner = std::function<ScenarioReport(const ScenarioParams&)>;

const std::map<std::string, Runner, std::less<>>& registry() {
  static const std::map<std::string, Runner, std::less<>> runners{
      {"comb-Q", comb_q},
      {"comb-K", comb_k},
      {"heisenberg-K", heisenberg_k},
      {"coeq-sandwich", coeq_sandwich},
      {"rips-constants", rips_constants},
      {"cubes-window", cubes_window},
      {"zhang-projection", zhang_projection},
      {"maximal-metric-comb", maximal_metric_comb},
  };
  return runners;
}

}  // namespace

bool ScenarioReport::passed() const {
  return std::all_of(assertions.begin(), assertions.end(), [](const Assertion& a) { return a.pass; });
}

Json ScenarioReport::to_json() const {
  Json list = Json::array();
  for (const Assertion& a : assertions) {
    list.push_back({{"claim", a.claim}, {"anchor", a.anchor}, {"pass", a.pass}, {"detail", a.detail}});
  }
  return {{"scenario", name}, {"params", params}, {"passed", passed()}, {"assertions", list},
          {"diagnostics", diagnostics}};
}

const std::vector<std::string>& scenario_names() {
  static const std::vector<std::string> names{"comb-Q",         "comb-K",
                                              "heisenberg-K",   "coeq-sandwich",
                                              "rips-constants", "cubes-window",
                                              "zhang-projection", "maximal-metric-comb"};
  return names;
}

ScenarioReport run_scenario(std::string_view name, const ScenarioParams& params) {
  auto it = registry().find(name);
  if (it == registry().end()) throw std::invalid_argument("unknown scenario '" + std::string(name) + "'");
  return it->second(params);
}

void write_report(const ScenarioReport& report, const std::filesystem::path& dir) {
  write_file_atomic(dir / (report.name + ".json"), report.to_json().dump(2) + "\n");
  for (const auto& [file, content] : report.files) write_file_atomic(dir / file, content);
}

}  // namespace coarse
