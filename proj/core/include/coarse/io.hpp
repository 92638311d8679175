#pragma once

#include <filesystem>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "coarse/graph.hpp"
#include "coarse/mapping.hpp"

namespace coarse {

using Json = nlohmann::json;

/// Integral values as JSON integers, INF as "inf", anything else as a double.
Json distance_to_json(Dist d);
/// Inverse of distance_to_json. Throws ParseError at `pointer`.
Dist distance_from_json(const Json& value, const std::string& pointer);

/// {"points": [ids], "dist": [[d, ...], ...]}
Json space_to_json(const MetricSpace& space);
/// With `exact`, non-integral finite distances are rejected.
SpacePtr space_from_json(const Json& j, const std::string& pointer = "", bool exact = false);

/// {"source": name, "target": name, "assign": {source id: target id}}
Json map_to_json(const MappedPair& f, const std::string& source, const std::string& target);

/// {"vertices": [ids], "edges": [[u, v, weight, kind], ...]}
Json graph_to_json(const WeightedGraph& g);
WeightedGraph graph_from_json(const Json& j, const std::string& pointer = "");

struct NamedMap {
  std::string source;
  std::string target;
  MappedPair map;
};

/// {"spaces": {name: space}, "maps": {name: map}, "window": [source ids]}
struct Bundle {
  std::map<std::string, SpacePtr> spaces;
  std::map<std::string, NamedMap> maps;
  std::optional<std::vector<std::string>> window;

  /// The named map, or the only map when `name` is empty.
  const NamedMap& map(const std::string& name = "") const;
  /// Window over the source of `f`: the listed ids, or every point.
  Window window_for(const MappedPair& f) const;
};

Json bundle_to_json(const Bundle& bundle);
Bundle bundle_from_json(const Json& j, bool exact = false);

/// Parses a whole stream as JSON; syntax errors become ParseError at "".
Json read_json(std::istream& in);

/// Writes `content` to a sibling temporary and renames it into place.
void write_file_atomic(const std::filesystem::path& path, const std::string& content);

}  // namespace coarse
