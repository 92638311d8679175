#pragma once

#include "coarse/mapping.hpp"

namespace coarse {

/// X × Y with the l-infinity metric and its two projections.
struct Product {
  SpacePtr space;
  MappedPair first;   // π₁
  MappedPair second;  // π₂
  std::size_t right_size = 0;
  /// Index of (x, y) in the product.
  PointIndex index(PointIndex x, PointIndex y) const { return x * right_size + y; }
};

Product product_linf(const SpacePtr& left, const SpacePtr& right);

/// X ⊔ Y with infinite cross distances and the two isometric inclusions.
/// Point ids are prefixed "0/" and "1/".
struct Coproduct {
  SpacePtr space;
  MappedPair left;
  MappedPair right;
};

Coproduct coproduct(const SpacePtr& left, const SpacePtr& right);

/// f ⊔ g : A ⊔ B → X for maps with a common target.
MappedPair copair(const Coproduct& domain, const MappedPair& f, const MappedPair& g);

/// Induced subspace with its isometric inclusion.
struct Subspace {
  SpacePtr space;
  MappedPair inclusion;
};

Subspace subspace(const SpacePtr& ambient, std::span<const PointIndex> points);

}  // namespace coarse
