#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "coarse/io.hpp"

namespace coarse {

inline constexpr std::uint64_t kDefaultSeed = 0x5eed2024;

struct ScenarioParams {
  std::optional<long> n_max;
  std::optional<std::vector<Dist>> sigma;
  std::optional<int> radius;
  std::optional<long> window;
  std::optional<std::string> theta;
  std::optional<int> trials;
  std::uint64_t seed = kDefaultSeed;
};

struct Assertion {
  std::string claim;   // what is asserted
  std::string anchor;  // short name of the property the claim belongs to
  bool pass = false;
  Json detail;
};

struct ScenarioReport {
  std::string name;
  Json params;
  std::vector<Assertion> assertions;
  Json diagnostics = Json::object();  // recorded, never asserted
  /// Extra output files (CSV profiles), keyed by file name.
  std::vector<std::pair<std::string, std::string>> files;

  bool passed() const;
  Json to_json() const;
};

const std::vector<std::string>& scenario_names();

/// Throws std::invalid_argument for an unknown name or bad parameters.
ScenarioReport run_scenario(std::string_view name, const ScenarioParams& params);

/// Writes <dir>/<name>.json and the CSV files, each atomically.
void write_report(const ScenarioReport& report, const std::filesystem::path& dir);

}  // namespace coarse
