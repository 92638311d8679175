#include "coarse/graph.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <queue>
#include <stdexcept>

#include "coarse/parallel.hpp"

namespace coarse {

std::string_view to_string(EdgeKind kind) {
  switch (kind) {
    case EdgeKind::kInternal: return "internal";
    case EdgeKind::kGlued: return "glued";
    case EdgeKind::kAugmented: return "augmented";
  }
  return "internal";
}

EdgeKind edge_kind_from_string(std::string_view name) {
  if (name == "internal") return EdgeKind::kInternal;
  if (name == "glued") return EdgeKind::kGlued;
  if (name == "augmented") return EdgeKind::kAugmented;
  throw std::invalid_argument("unknown edge kind '" + std::string(name) + "'");
}

WeightedGraph::WeightedGraph(std::vector<std::string> vertices, std::vector<Edge> edges)
    : vertices_(std::move(vertices)) {
  const std::size_t n = vertices_.size();
  for (Edge& e : edges) {
    if (e.u >= n || e.v >= n) throw std::invalid_argument("edge endpoint out of range");
    if (e.u == e.v) throw std::invalid_argument("self-loop at '" + vertices_[e.u] + "'");
    if (!(e.weight > 0.0) || std::isnan(e.weight)) {
      throw std::invalid_argument("edge weight must be positive");
    }
    if (e.u > e.v) std::swap(e.u, e.v);
  }
  std::stable_sort(edges.begin(), edges.end(), [](const Edge& a, const Edge& b) {
    return std::tie(a.u, a.v) < std::tie(b.u, b.v);
  });
  for (const Edge& e : edges) {
    if (!edges_.empty() && edges_.back().u == e.u && edges_.back().v == e.v) {
      if (e.weight < edges_.back().weight) edges_.back() = e;
    } else {
      edges_.push_back(e);
    }
  }

  offsets_.assign(n + 1, 0);
  for (const Edge& e : edges_) {
    ++offsets_[e.u + 1];
    ++offsets_[e.v + 1];
  }
  for (std::size_t i = 0; i < n; ++i) offsets_[i + 1] += offsets_[i];
  arcs_.resize(offsets_[n]);
  std::vector<std::size_t> cursor(offsets_.begin(), offsets_.end() - 1);
  for (const Edge& e : edges_) {
    arcs_[cursor[e.u]++] = {e.v, e.weight};
    arcs_[cursor[e.v]++] = {e.u, e.weight};
  }
}

std::size_t WeightedGraph::count(EdgeKind kind) const {
  return static_cast<std::size_t>(
      std::count_if(edges_.begin(), edges_.end(), [kind](const Edge& e) { return e.kind == kind; }));
}

WeightedGraph GraphBuilder::build() && {
  return WeightedGraph(std::move(vertices_), std::move(edges_));
}

std::vector<Dist> shortest_paths_from(const WeightedGraph& g, PointIndex source) {
  std::vector<Dist> dist(g.vertex_count(), kInf);
  using Entry = std::pair<Dist, PointIndex>;
  std::priority_queue<Entry, std::vector<Entry>, std::greater<>> heap;
  dist[source] = 0.0;
  heap.emplace(0.0, source);
  while (!heap.empty()) {
    auto [d, v] = heap.top();
    heap.pop();
    if (d > dist[v]) continue;
    for (const auto& arc : g.neighbours(v)) {
      const Dist nd = d + arc.weight;
      if (nd < dist[arc.to]) {
        dist[arc.to] = nd;
        heap.emplace(nd, arc.to);
      }
    }
  }
  return dist;
}

MetricSpace path_metric(const WeightedGraph& g) {
  const std::size_t n = g.vertex_count();
  std::vector<Dist> matrix(n * n);
  parallel_for(n, [&](std::size_t s) {
    auto row = shortest_paths_from(g, s);
    std::copy(row.begin(), row.end(), matrix.begin() + static_cast<std::ptrdiff_t>(s * n));
  });
  // Floating sums along different paths can differ in the last ulp; keep the
  // matrix exactly symmetric.
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const Dist d = std::min(matrix[i * n + j], matrix[j * n + i]);
      matrix[i * n + j] = matrix[j * n + i] = d;
    }
  }
  return MetricSpace(g.vertices(), std::move(matrix));
}

WeightedGraph metric_to_complete_graph(const MetricSpace& space) {
  GraphBuilder builder(space.ids());
  for (PointIndex i = 0; i < space.size(); ++i) {
    for (PointIndex j = i + 1; j < space.size(); ++j) {
      const Dist d = space(i, j);
      if (d != kInf && d > 0.0) builder.add(i, j, d, EdgeKind::kInternal);
    }
  }
  return std::move(builder).build();
}

std::vector<Edge> metric_skeleton(const MetricSpace& space) {
  const std::size_t n = space.size();
  // Nearest points first: a detour through a close point is the likeliest.
  std::vector<std::vector<PointIndex>> by_distance(n);
  parallel_for(n, [&](std::size_t u) {
    auto& order = by_distance[u];
    for (PointIndex w = 0; w < n; ++w) {
      if (w != u && space(u, w) != kInf) order.push_back(w);
    }
    std::sort(order.begin(), order.end(), [&](PointIndex a, PointIndex b) {
      return space(u, a) < space(u, b);
    });
  });

  std::vector<std::vector<Edge>> per_source(n);
  parallel_for(n, [&](std::size_t u) {
    auto ru = space.row(u);
    for (PointIndex v = u + 1; v < n; ++v) {
      const Dist d = ru[v];
      if (d == kInf) continue;
      auto rv = space.row(v);
      bool redundant = false;
      for (PointIndex w : by_distance[u]) {
        if (ru[w] >= d) break;
        if (w != v && ru[w] + rv[w] <= d) {
          redundant = true;
          break;
        }
      }
      if (!redundant) per_source[u].push_back({u, v, d, EdgeKind::kInternal});
    }
  });
  std::vector<Edge> edges;
  for (auto& list : per_source) edges.insert(edges.end(), list.begin(), list.end());
  return edges;
}

}  // namespace coarse
