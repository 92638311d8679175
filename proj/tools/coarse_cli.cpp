// coarse: command-line front end for the coarse geometry toolkit.
//
//   coarse space gen comb --n-max 5 | coarse qfilt --sigma 2,3
//   coarse scenario comb-Q --out reports/

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "coarse/errors.hpp"
#include "coarse/filtration.hpp"
#include "coarse/gallery.hpp"
#include "coarse/glue.hpp"
#include "coarse/io.hpp"
#include "coarse/rips.hpp"
#include "coarse/scenarios.hpp"

namespace {

using namespace coarse;

constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

struct Options {
  std::string in;
  std::string map;
  bool exact = false;
  std::optional<long> n_max;
  std::vector<long> n_max_list;
  std::vector<double> sigma;
  std::optional<int> radius;
  std::optional<long> window;
  std::string theta = "exp2";
  std::string out;
  std::uint64_t seed = kDefaultSeed;
  std::optional<int> trials;
  std::string family;
  int k = 2;
  int m = 1;
  std::string scenario;
};

Bundle load(const Options& o) {
  Json j;
  if (o.in.empty() || o.in == "-") {
    j = read_json(std::cin);
  } else {
    std::ifstream file(o.in);
    if (!file) throw std::runtime_error("cannot open " + o.in);
    j = read_json(file);
  }
  return bundle_from_json(j, o.exact);
}

void emit(const Options& o, const std::string& name, const std::string& content) {
  if (o.out.empty()) {
    std::cout << content;
  } else {
    write_file_atomic(std::filesystem::path(o.out) / name, content);
  }
}

Bundle single_map_bundle(const MappedPair& f, const Window& window) {
  Bundle b;
  b.spaces.emplace("X", f.source_ptr());
  b.spaces.emplace("Y", f.target_ptr());
  b.maps.emplace("f", NamedMap{"X", "Y", f});
  std::vector<std::string> ids;
  for (PointIndex x : window.members()) ids.push_back(f.source().id(x));
  if (ids.size() != f.source().size()) b.window = std::move(ids);
  return b;
}

int space_gen(const Options& o) {
  Bundle b;
  if (o.family == "comb") {
    const Comb c = comb(o.n_max.value_or(5));
    b = single_map_bundle(c.identity, c.interior);
  } else if (o.family == "comb-retract") {
    const CombRetraction c = comb_retraction(o.n_max.value_or(5));
    b = single_map_bundle(c.retraction, c.comb.interior);
  } else if (o.family == "heisenberg") {
    const HeisenbergBall h = heisenberg(o.radius.value_or(3));
    b = single_map_bundle(h.projection, h.ball(static_cast<int>(o.window.value_or(h.radius))));
  } else if (o.family == "cubes") {
    const MappedPair f = cubes_squares(o.window.value_or(10));
    b = single_map_bundle(f, Window::all(f.source().size()));
  } else if (o.family == "lattice") {
    const MappedPair f = lattice_quotient(o.k, o.m, o.window.value_or(3));
    b = single_map_bundle(f, Window::all(f.source().size()));
  } else {
    throw CLI::ValidationError("family", "unknown family '" + o.family + "'");
  }
  emit(o, "bundle.json", bundle_to_json(b).dump() + "\n");
  return 0;
}

int space_load(const Options& o) {
  emit(o, "bundle.json", bundle_to_json(load(o)).dump() + "\n");
  return 0;
}

// Two maps out of a common space, named f and g unless the bundle has exactly two.
std::pair<const NamedMap*, const NamedMap*> two_maps(const Bundle& b) {
  if (b.maps.count("f") && b.maps.count("g")) return {&b.map("f"), &b.map("g")};
  if (b.maps.size() == 2) return {&b.maps.begin()->second, &std::next(b.maps.begin())->second};
  throw std::invalid_argument("expected maps named f and g");
}

int glue_cmd(const Options& o) {
  const Bundle b = load(o);
  const auto [f, g] = two_maps(b);
  const GlueResult r = coarse_glue(f->map, g->map);
  Json out{{"space", space_to_json(*r.space)}, {"graph", graph_to_json(r.graph)}};
  emit(o, "glue.json", out.dump() + "\n");
  return 0;
}

int coeq_cmd(const Options& o) {
  const Bundle b = load(o);
  const auto [f, g] = two_maps(b);
  const CoequaliserResult r = coeq_space(f->map, g->map);
  const ComparisonReport c = double_glue_comparison(f->map, g->map);
  Json out{{"space", space_to_json(*r.space)},
           {"graph", graph_to_json(r.graph)},
           {"comparison",
            {{"r_lipschitz", c.r_lipschitz},
             {"s_lipschitz", c.s_lipschitz},
             {"rs_identity", c.rs_identity},
             {"sr_closeness", distance_to_json(c.sr_closeness)},
             {"ok", c.all_ok()}}}};
  emit(o, "coeq.json", out.dump() + "\n");
  return c.all_ok() ? 0 : kExitFail;
}

int filtration_cmd(const Options& o, bool kernel) {
  const Bundle b = load(o);
  const MappedPair& f = b.map(o.map).map;
  std::vector<Dist> grid(o.sigma.begin(), o.sigma.end());
  if (grid.empty()) grid = default_sigma_grid(f.target(), kInf);
  const Window w = b.window_for(f);
  FiltrationProfile p = kernel ? kernel_stability_profile(f, grid, w)
                               : quotient_stability_profile(f, grid, w);
  std::ostringstream os;
  FiltrationProfile::write_csv_header(os);
  p.write_csv(os);
  emit(o, kernel ? "kfilt.csv" : "qfilt.csv", os.str());
  return 0;
}

int rips_cmd(const Options& o) {
  const Bundle b = load(o);
  const MappedPair& f = b.map(o.map).map;
  const WeightFunction theta = WeightFunction::from_name(o.theta);
  const Dist sigma = o.sigma.empty() ? kInf : o.sigma.front();
  const RipsGraph r = augmented_rips(f, theta, sigma);
  Json out{{"sigma", distance_to_json(sigma)},
           {"theta", theta.name()},
           {"space", space_to_json(*r.space)},
           {"graph", graph_to_json(r.graph)},
           {"omitted_edges", r.omitted.size()},
           {"weight_cap", r.weight_cap},
           {"omission_exact", r.omission_exact}};
  emit(o, "rips.json", out.dump() + "\n");
  return r.omission_exact ? 0 : kExitFail;
}

Json table_json(const std::vector<std::pair<Dist, Dist>>& table) {
  Json out = Json::array();
  for (const auto& [t, v] : table) out.push_back({distance_to_json(t), distance_to_json(v)});
  return out;
}

int classify_cmd(const Options& o) {
  const Bundle b = load(o);
  const MappedPair& f = b.map(o.map).map;
  const ControlProfile c = control_profile(f);
  const LipschitzFit lip = lipschitz_constant(f);
  Json out{{"upper_control", table_json(c.upper)},
           {"lower_control", table_json(c.lower)},
           {"surjectivity_radius", distance_to_json(c.surjectivity_radius)},
           {"lipschitz_constant", distance_to_json(lip.constant)},
           {"monomorphism_witness", c.has_finite_lower()},
           {"epimorphism_witness", c.surjectivity_radius != kInf}};
  emit(o, "classify.json", out.dump(2) + "\n");
  return 0;
}

Json verdict_json(const PrecedesVerdict& v) {
  Json rows = Json::array();
  for (std::size_t k = 0; k < v.params.size(); ++k) {
    Json b = Json::array();
    for (const auto& off : v.offsets[k]) b.push_back(off ? distance_to_json(*off) : Json(nullptr));
    rows.push_back({{"param", v.params[k]}, {"offsets", b}});
  }
  Json out{{"slopes", v.slopes}, {"truncations", rows}, {"consistent", v.consistent}};
  if (v.consistent) {
    out["witness"] = {*v.stable_slope, *v.stable_offset};
  } else {
    out["divergence_slope"] = distance_to_json(v.divergence_slope);
  }
  return out;
}

int precedes_cmd(const Options& o) {
  const std::vector<double> slopes{0.5, 1, 2, 4, 8};
  std::vector<MetricPair> forward, backward;
  if (o.family == "comb") {
    std::vector<long> ns = o.n_max_list.empty() ? std::vector<long>{3, 4, 5, 6} : o.n_max_list;
    for (long n : ns) {
      const Comb c = comb(n);
      forward.push_back({c.l1, c.path, n});
      backward.push_back({c.path, c.l1, n});
    }
  } else if (o.family.empty()) {
    const Bundle b = load(o);
    const MappedPair& f = b.map(o.map).map;
    forward.push_back({f.target_ptr(), f.source_ptr(), 0});
    backward.push_back({f.source_ptr(), f.target_ptr(), 0});
  } else {
    throw CLI::ValidationError("family", "precedes supports --family comb or a bundle");
  }
  Json out{{"target_precedes_source", verdict_json(precedes_on_family(forward, slopes))},
           {"source_precedes_target", verdict_json(precedes_on_family(backward, slopes))}};
  emit(o, "precedes.json", out.dump(2) + "\n");
  return 0;
}

int scenario_cmd(const Options& o) {
  ScenarioParams p;
  p.n_max = o.n_max;
  if (!o.sigma.empty()) p.sigma = std::vector<Dist>(o.sigma.begin(), o.sigma.end());
  p.radius = o.radius;
  p.window = o.window;
  if (!o.theta.empty() && o.theta != "exp2") p.theta = o.theta;
  p.trials = o.trials;
  p.seed = o.seed;
  const ScenarioReport report = run_scenario(o.scenario, p);
  if (!o.out.empty()) write_report(report, o.out);
  for (const Assertion& a : report.assertions) {
    std::cout << (a.pass ? "pass" : "FAIL") << "  " << a.claim << "  [" << a.anchor << "]\n";
  }
  std::cout << report.name << ": " << (report.passed() ? "passed" : "failed") << "\n";
  return report.passed() ? 0 : kExitFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Coarse geometry constructions on finite truncations"};
  app.require_subcommand(1);
  Options o;

  auto input = [&](CLI::App* sub) {
    sub->add_option("--in", o.in, "Bundle JSON (default: stdin)");
    sub->add_flag("--exact", o.exact, "Require integral distances");
    sub->add_option("--out", o.out, "Write into this directory instead of stdout");
  };

  auto* space = app.add_subcommand("space", "Generate or load spaces");
  space->require_subcommand(1);
  auto* gen = space->add_subcommand("gen", "Generate a gallery family as a bundle");
  gen->add_option("family", o.family, "comb | comb-retract | heisenberg | cubes | lattice")->required();
  gen->add_option("--n-max", o.n_max, "Comb stages");
  gen->add_option("--radius", o.radius, "Heisenberg ball radius");
  gen->add_option("--window", o.window, "Window parameter (cubes N, lattice N, Heisenberg inner radius)");
  gen->add_option("--k", o.k, "Lattice source rank");
  gen->add_option("--m", o.m, "Lattice target rank");
  gen->add_option("--out", o.out, "Write into this directory instead of stdout");
  auto* load_cmd = space->add_subcommand("load", "Validate and normalise a bundle");
  input(load_cmd);

  auto* glue = app.add_subcommand("glue", "Coarse gluing of maps f: A -> X, g: A -> Y");
  input(glue);
  auto* coeq = app.add_subcommand("coeq", "Coequaliser of maps f, g: A -> X");
  input(coeq);

  auto* kfilt = app.add_subcommand("kfilt", "Kernel filtration profile (CSV)");
  auto* qfilt = app.add_subcommand("qfilt", "Quotient filtration profile (CSV)");
  for (auto* sub : {kfilt, qfilt}) {
    input(sub);
    sub->add_option("--map", o.map, "Map name in the bundle");
    sub->add_option("--sigma", o.sigma, "Sigma grid")->delimiter(',');
  }

  auto* rips = app.add_subcommand("rips", "Augmented weighted Rips metric");
  input(rips);
  rips->add_option("--map", o.map, "Map name in the bundle");
  rips->add_option("--sigma", o.sigma, "Scale (default: infinite)")->delimiter(',');
  rips->add_option("--theta", o.theta, "Weight function")
      ->check(CLI::IsMember({"exp2", "one", "linear"}));

  auto* classify = app.add_subcommand("classify", "Control profile and mono/epi witnesses of a map");
  input(classify);
  classify->add_option("--map", o.map, "Map name in the bundle");

  auto* precedes = app.add_subcommand("precedes", "Compare two metrics on the same points");
  input(precedes);
  precedes->add_option("--map", o.map, "Map name in the bundle");
  precedes->add_option("--family", o.family, "Built-in family (comb)");
  precedes->add_option("--n-max", o.n_max_list, "Family parameters")->delimiter(',');

  auto* scenario = app.add_subcommand("scenario", "Run a named check scenario");
  scenario->add_option("name", o.scenario, "Scenario name")
      ->required()
      ->check(CLI::IsMember(scenario_names()));
  scenario->add_option("--n-max", o.n_max, "Comb stages");
  scenario->add_option("--sigma", o.sigma, "Sigma grid")->delimiter(',');
  scenario->add_option("--radius", o.radius, "Ball radius");
  scenario->add_option("--window", o.window, "Window parameter");
  scenario->add_option("--theta", o.theta, "Weight function")
      ->check(CLI::IsMember({"exp2", "one", "linear"}));
  scenario->add_option("--seed", o.seed, "Random seed");
  scenario->add_option("--trials", o.trials, "Random trials");
  scenario->add_option("--out", o.out, "Report directory");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : kExitUsage;
  }

  try {
    if (*space) return *gen ? space_gen(o) : space_load(o);
    if (*glue) return glue_cmd(o);
    if (*coeq) return coeq_cmd(o);
    if (*kfilt) return filtration_cmd(o, true);
    if (*qfilt) return filtration_cmd(o, false);
    if (*rips) return rips_cmd(o);
    if (*classify) return classify_cmd(o);
    if (*precedes) return precedes_cmd(o);
    if (*scenario) return scenario_cmd(o);
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const CLI::Error& e) {
    std::cerr << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFail;
  }
  return kExitUsage;
}
