#include "coarse/products.hpp"

#include <algorithm>
#include <stdexcept>

namespace coarse {

Product product_linf(const SpacePtr& left, const SpacePtr& right) {
  const std::size_t n = left->size();
  const std::size_t m = right->size();
  const std::size_t total = n * m;
  std::vector<std::string> ids;
  ids.reserve(total);
  for (PointIndex x = 0; x < n; ++x) {
    for (PointIndex y = 0; y < m; ++y) ids.push_back("(" + left->id(x) + "," + right->id(y) + ")");
  }
  std::vector<Dist> dist(total * total);
  for (std::size_t p = 0; p < total; ++p) {
    for (std::size_t q = 0; q < total; ++q) {
      dist[p * total + q] = std::max((*left)(p / m, q / m), (*right)(p % m, q % m));
    }
  }
  auto space = make_space(std::move(ids), std::move(dist));
  std::vector<PointIndex> first(total), second(total);
  for (std::size_t p = 0; p < total; ++p) {
    first[p] = p / m;
    second[p] = p % m;
  }
  return Product{space, MappedPair(space, left, std::move(first)),
                 MappedPair(space, right, std::move(second)), m};
}

Coproduct coproduct(const SpacePtr& left, const SpacePtr& right) {
  const std::size_t n = left->size();
  const std::size_t m = right->size();
  const std::size_t total = n + m;
  std::vector<std::string> ids;
  ids.reserve(total);
  for (const auto& id : left->ids()) ids.push_back("0/" + id);
  for (const auto& id : right->ids()) ids.push_back("1/" + id);
  std::vector<Dist> dist(total * total, kInf);
  for (PointIndex i = 0; i < n; ++i) {
    for (PointIndex j = 0; j < n; ++j) dist[i * total + j] = (*left)(i, j);
  }
  for (PointIndex i = 0; i < m; ++i) {
    for (PointIndex j = 0; j < m; ++j) dist[(n + i) * total + n + j] = (*right)(i, j);
  }
  auto space = make_space(std::move(ids), std::move(dist));
  std::vector<PointIndex> in_left(n), in_right(m);
  for (PointIndex i = 0; i < n; ++i) in_left[i] = i;
  for (PointIndex i = 0; i < m; ++i) in_right[i] = n + i;
  return Coproduct{space, MappedPair(left, space, std::move(in_left)),
                   MappedPair(right, space, std::move(in_right))};
}

MappedPair copair(const Coproduct& domain, const MappedPair& f, const MappedPair& g) {
  if (!same_space(f.target(), g.target())) {
    throw std::domain_error("copair: maps have different targets");
  }
  if (!same_space(f.source(), domain.left.source()) ||
      !same_space(g.source(), domain.right.source())) {
    throw std::domain_error("copair: map sources do not match the coproduct summands");
  }
  std::vector<PointIndex> assign(domain.space->size());
  for (PointIndex a = 0; a < f.source().size(); ++a) assign[domain.left(a)] = f(a);
  for (PointIndex b = 0; b < g.source().size(); ++b) assign[domain.right(b)] = g(b);
  return MappedPair(domain.space, f.target_ptr(), std::move(assign));
}

Subspace subspace(const SpacePtr& ambient, std::span<const PointIndex> points) {
  auto space = induced_subspace(*ambient, points);
  return Subspace{space, MappedPair(space, ambient, {points.begin(), points.end()})};
}

}  // namespace coarse
