#include "coarse/io.hpp"

#include <cmath>
#include <fstream>
#include <istream>
#include <set>

#include "coarse/errors.hpp"

namespace coarse {

namespace {

constexpr double kMaxExactInteger = 9007199254740992.0;  // 2^53

std::string at(const std::string& pointer, const std::string& key) {
  std::string escaped;
  for (char c : key) {
    if (c == '~') {
      escaped += "~0";
    } else if (c == '/') {
      escaped += "~1";
    } else {
      escaped += c;
    }
  }
  return pointer + "/" + escaped;
}

std::string at(const std::string& pointer, std::size_t index) {
  return pointer + "/" + std::to_string(index);
}

const Json& member(const Json& j, const std::string& key, const std::string& pointer) {
  if (!j.is_object()) throw ParseError(pointer, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) throw ParseError(at(pointer, key), "missing member");
  return *it;
}

std::vector<std::string> string_list(const Json& j, const std::string& pointer) {
  if (!j.is_array()) throw ParseError(pointer, "expected an array of strings");
  std::vector<std::string> out;
  for (std::size_t i = 0; i < j.size(); ++i) {
    if (!j[i].is_string()) throw ParseError(at(pointer, i), "expected a string");
    out.push_back(j[i].get<std::string>());
  }
  return out;
}

PointIndex lookup(const MetricSpace& space, const std::string& id, const std::string& pointer) {
  auto idx = space.find(id);
  if (!idx) throw ParseError(pointer, "unknown point '" + id + "'");
  return *idx;
}

}  // namespace

Json distance_to_json(Dist d) {
  if (d == kInf) return "inf";
  if (std::floor(d) == d && std::fabs(d) < kMaxExactInteger) return static_cast<std::int64_t>(d);
  return d;
}

Dist distance_from_json(const Json& value, const std::string& pointer) {
  if (value.is_string()) {
    if (value.get<std::string>() == "inf") return kInf;
    throw ParseError(pointer, "expected a number or \"inf\"");
  }
  if (!value.is_number()) throw ParseError(pointer, "expected a number or \"inf\"");
  return value.get<double>();
}

Json space_to_json(const MetricSpace& space) {
  Json rows = Json::array();
  for (PointIndex i = 0; i < space.size(); ++i) {
    Json row = Json::array();
    for (PointIndex j = 0; j < space.size(); ++j) row.push_back(distance_to_json(space(i, j)));
    rows.push_back(std::move(row));
  }
  return Json{{"points", space.ids()}, {"dist", std::move(rows)}};
}

SpacePtr space_from_json(const Json& j, const std::string& pointer, bool exact) {
  auto ids = string_list(member(j, "points", pointer), at(pointer, "points"));
  const Json& rows = member(j, "dist", pointer);
  const std::string rows_ptr = at(pointer, "dist");
  const std::size_t n = ids.size();
  if (!rows.is_array() || rows.size() != n) {
    throw ParseError(rows_ptr, "expected " + std::to_string(n) + " rows");
  }
  std::vector<Dist> dist(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    const std::string row_ptr = at(rows_ptr, i);
    if (!rows[i].is_array() || rows[i].size() != n) {
      throw ParseError(row_ptr, "expected " + std::to_string(n) + " entries");
    }
    for (std::size_t k = 0; k < n; ++k) {
      const Dist d = distance_from_json(rows[i][k], at(row_ptr, k));
      if (exact && d != kInf && std::floor(d) != d) {
        throw ParseError(at(row_ptr, k), "non-integral distance with --exact");
      }
      dist[i * n + k] = d;
    }
  }
  try {
    return make_space(std::move(ids), std::move(dist));
  } catch (const std::invalid_argument& e) {
    throw ParseError(pointer, e.what());
  }
}

Json map_to_json(const MappedPair& f, const std::string& source, const std::string& target) {
  Json assign = Json::object();
  for (PointIndex x = 0; x < f.source().size(); ++x) assign[f.source().id(x)] = f.target().id(f(x));
  return Json{{"source", source}, {"target", target}, {"assign", std::move(assign)}};
}

Json graph_to_json(const WeightedGraph& g) {
  Json edges = Json::array();
  for (const Edge& e : g.edges()) {
    edges.push_back(Json::array({g.vertices()[e.u], g.vertices()[e.v], distance_to_json(e.weight),
                                 std::string(to_string(e.kind))}));
  }
  return Json{{"vertices", g.vertices()}, {"edges", std::move(edges)}};
}

WeightedGraph graph_from_json(const Json& j, const std::string& pointer) {
  auto vertices = string_list(member(j, "vertices", pointer), at(pointer, "vertices"));
  std::map<std::string, PointIndex> where;
  for (std::size_t i = 0; i < vertices.size(); ++i) where.emplace(vertices[i], i);
  const Json& edges = member(j, "edges", pointer);
  const std::string edges_ptr = at(pointer, "edges");
  if (!edges.is_array()) throw ParseError(edges_ptr, "expected an array");
  GraphBuilder builder(vertices);
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const std::string e_ptr = at(edges_ptr, i);
    const Json& e = edges[i];
    if (!e.is_array() || e.size() != 4) throw ParseError(e_ptr, "expected [u, v, weight, kind]");
    PointIndex ends[2];
    for (std::size_t k = 0; k < 2; ++k) {
      if (!e[k].is_string()) throw ParseError(at(e_ptr, k), "expected a vertex id");
      auto it = where.find(e[k].get<std::string>());
      if (it == where.end()) throw ParseError(at(e_ptr, k), "unknown vertex");
      ends[k] = it->second;
    }
    const Dist w = distance_from_json(e[2], at(e_ptr, 2));
    if (!e[3].is_string()) throw ParseError(at(e_ptr, 3), "expected an edge kind");
    EdgeKind kind;
    try {
      kind = edge_kind_from_string(e[3].get<std::string>());
    } catch (const std::invalid_argument& err) {
      throw ParseError(at(e_ptr, 3), err.what());
    }
    builder.add(ends[0], ends[1], w, kind);
  }
  try {
    return std::move(builder).build();
  } catch (const std::invalid_argument& err) {
    throw ParseError(pointer, err.what());
  }
}

const NamedMap& Bundle::map(const std::string& name) const {
  if (name.empty()) {
    if (maps.size() != 1) {
      throw std::invalid_argument("bundle has " + std::to_string(maps.size()) +
                                  " maps; name one explicitly");
    }
    return maps.begin()->second;
  }
  auto it = maps.find(name);
  if (it == maps.end()) throw std::invalid_argument("bundle has no map '" + name + "'");
  return it->second;
}

Window Bundle::window_for(const MappedPair& f) const {
  if (!window) return Window::all(f.source().size());
  Window w{std::vector<bool>(f.source().size(), false), "bundle window"};
  for (std::size_t i = 0; i < window->size(); ++i) {
    w.inside[lookup(f.source(), (*window)[i], at("/window", i))] = true;
  }
  return w;
}

Json bundle_to_json(const Bundle& bundle) {
  Json spaces = Json::object();
  for (const auto& [name, space] : bundle.spaces) spaces[name] = space_to_json(*space);
  Json maps = Json::object();
  for (const auto& [name, m] : bundle.maps) maps[name] = map_to_json(m.map, m.source, m.target);
  Json j{{"spaces", std::move(spaces)}, {"maps", std::move(maps)}};
  if (bundle.window) j["window"] = *bundle.window;
  return j;
}

Bundle bundle_from_json(const Json& j, bool exact) {
  Bundle bundle;
  const Json& spaces = member(j, "spaces", "");
  if (!spaces.is_object()) throw ParseError("/spaces", "expected an object");
  for (const auto& [name, value] : spaces.items()) {
    bundle.spaces.emplace(name, space_from_json(value, at("/spaces", name), exact));
  }
  if (j.contains("maps")) {
    const Json& maps = j["maps"];
    if (!maps.is_object()) throw ParseError("/maps", "expected an object");
    for (const auto& [name, value] : maps.items()) {
      const std::string ptr = at("/maps", name);
      std::string names[2];
      const char* keys[2] = {"source", "target"};
      SpacePtr ends[2];
      for (int k = 0; k < 2; ++k) {
        const Json& v = member(value, keys[k], ptr);
        if (!v.is_string()) throw ParseError(at(ptr, keys[k]), "expected a space name");
        names[k] = v.get<std::string>();
        auto it = bundle.spaces.find(names[k]);
        if (it == bundle.spaces.end()) throw ParseError(at(ptr, keys[k]), "unknown space '" + names[k] + "'");
        ends[k] = it->second;
      }
      const Json& assign = member(value, "assign", ptr);
      const std::string assign_ptr = at(ptr, "assign");
      if (!assign.is_object()) throw ParseError(assign_ptr, "expected an object");
      std::vector<PointIndex> image(ends[0]->size());
      std::vector<bool> seen(ends[0]->size(), false);
      for (const auto& [src, tgt] : assign.items()) {
        const std::string entry_ptr = at(assign_ptr, src);
        const PointIndex x = lookup(*ends[0], src, entry_ptr);
        if (!tgt.is_string()) throw ParseError(entry_ptr, "expected a target id");
        image[x] = lookup(*ends[1], tgt.get<std::string>(), entry_ptr);
        seen[x] = true;
      }
      for (PointIndex x = 0; x < seen.size(); ++x) {
        if (!seen[x]) throw ParseError(assign_ptr, "no image for '" + ends[0]->id(x) + "'");
      }
      bundle.maps.emplace(name, NamedMap{names[0], names[1], MappedPair(ends[0], ends[1], std::move(image))});
    }
  }
  if (j.contains("window")) bundle.window = string_list(j["window"], "/window");
  return bundle;
}

Json read_json(std::istream& in) {
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw ParseError("", e.what());
  }
}

void write_file_atomic(const std::filesystem::path& path, const std::string& content) {
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  std::filesystem::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write " + tmp.string());
    out << content;
    if (!out.flush()) throw std::runtime_error("write failed for " + tmp.string());
  }
  std::filesystem::rename(tmp, path);
}

}  // namespace coarse
