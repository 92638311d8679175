#pragma once

#include <cstdint>
#include <random>
#include <string>

#include "coarse/mapping.hpp"

namespace coarse {

using Rng = std::mt19937_64;

/// Path metric of a complete graph with uniform integer weights in
/// [1, max_weight], so every finite distance is at most max_weight. With
/// `split`, points are dealt into two components at infinite distance.
SpacePtr random_integer_metric(Rng& rng, std::size_t n, int max_weight, bool split,
                               const std::string& prefix = "p");

/// Two arbitrary maps A → X for coequaliser checks.
struct CoeqInstance {
  MappedPair f;
  MappedPair g;
};

CoeqInstance random_coeq_instance(Rng& rng, std::size_t max_x, std::size_t max_a, int max_weight);

/// f: X → Y where X = {(s, h)} lies over an r-net S ⊆ Y with
/// d_X((s,h),(s',h')) = d_Y(s,s') + |h - h'| and f the projection; f is
/// 1-Lipschitz and N_r(f(X)) = Y.
struct RipsInstance {
  MappedPair f;
  long r = 0;
};

RipsInstance random_rips_instance(Rng& rng, std::size_t max_y, std::size_t max_x, int max_weight,
                                  long max_r);

}  // namespace coarse
