#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "coarse/metric.hpp"

namespace coarse {

enum class EdgeKind { kInternal, kGlued, kAugmented };

std::string_view to_string(EdgeKind kind);
EdgeKind edge_kind_from_string(std::string_view name);  // throws std::invalid_argument

struct Edge {
  PointIndex u = 0;
  PointIndex v = 0;
  Dist weight = 1.0;
  EdgeKind kind = EdgeKind::kInternal;
};

/// Undirected graph with positive edge weights and typed edges. Parallel
/// edges are collapsed to the lightest at construction (ties keep the kind
/// added first); self-loops and non-positive weights are rejected.
class WeightedGraph {
 public:
  WeightedGraph() = default;
  WeightedGraph(std::vector<std::string> vertices, std::vector<Edge> edges);

  std::size_t vertex_count() const noexcept { return vertices_.size(); }
  const std::vector<std::string>& vertices() const noexcept { return vertices_; }
  /// Collapsed edge list with u < v, sorted by (u, v).
  const std::vector<Edge>& edges() const noexcept { return edges_; }

  struct Arc {
    PointIndex to;
    Dist weight;
  };
  /// Adjacency in CSR form.
  std::span<const Arc> neighbours(PointIndex v) const noexcept {
    return {arcs_.data() + offsets_[v], offsets_[v + 1] - offsets_[v]};
  }

  std::size_t count(EdgeKind kind) const;

 private:
  std::vector<std::string> vertices_;
  std::vector<Edge> edges_;
  std::vector<std::size_t> offsets_;
  std::vector<Arc> arcs_;
};

/// Mutable edge accumulator; build() collapses and validates.
class GraphBuilder {
 public:
  explicit GraphBuilder(std::vector<std::string> vertices) : vertices_(std::move(vertices)) {}
  void add(PointIndex u, PointIndex v, Dist weight, EdgeKind kind) {
    edges_.push_back({u, v, weight, kind});
  }
  std::size_t vertex_count() const noexcept { return vertices_.size(); }
  WeightedGraph build() &&;

 private:
  std::vector<std::string> vertices_;
  std::vector<Edge> edges_;
};

/// Single-source shortest-path distances (binary-heap Dijkstra).
std::vector<Dist> shortest_paths_from(const WeightedGraph& g, PointIndex source);

/// Path metric on the vertex set, one Dijkstra per source run in parallel.
/// Disconnected pairs are at distance INF.
MetricSpace path_metric(const WeightedGraph& g);

/// Complete graph with an internal edge of weight d(x,x') for every pair at
/// finite positive distance.
WeightedGraph metric_to_complete_graph(const MetricSpace& space);

/// Internal edges of the complete graph that no two-edge detour matches:
/// the smallest subgraph whose path metric is still `space`. Used in place
/// of the complete graph when building glued spaces.
std::vector<Edge> metric_skeleton(const MetricSpace& space);

}  // namespace coarse
