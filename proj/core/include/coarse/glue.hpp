#pragma once

#include "coarse/graph.hpp"
#include "coarse/mapping.hpp"
#include "coarse/products.hpp"

namespace coarse {

/// X ⊔_A Y: both metrics as internal edges, a unit glued edge fa -- ga for
/// every a ∈ A, path metric. Point ids follow coproduct(): "0/x", "1/y".
struct GlueResult {
  WeightedGraph graph;
  SpacePtr space;
  MappedPair left;   // X → X ⊔_A Y, 1-Lipschitz
  MappedPair right;  // Y → X ⊔_A Y, 1-Lipschitz
};

/// Throws std::domain_error if f and g have different sources.
GlueResult coarse_glue(const MappedPair& f, const MappedPair& g);

/// Coeq(f, g): X glued to itself along unit edges fa -- ga. Ids are X's.
struct CoequaliserResult {
  WeightedGraph graph;
  SpacePtr space;
  MappedPair quotient;  // q: X → Coeq(f,g), the underlying identity
};

/// Throws std::domain_error unless f and g share source and target.
CoequaliserResult coeq_space(const MappedPair& f, const MappedPair& g);

/// Executable comparison between X ⊔_{A⊔X} X and Coeq(f,g) via the maps
/// r: (x,i) ↦ x and s: x ↦ (x,0).
struct ComparisonReport {
  SpacePtr double_glued;   // X ⊔_{A⊔X} X on X × {0,1}
  SpacePtr coequaliser;    // Coeq(f,g)
  double r_lipschitz = 0;  // observed Lipschitz constant of r (claimed <= 1)
  double s_lipschitz = 0;  // observed Lipschitz constant of s (claimed <= 2)
  bool rs_identity = false;
  Dist sr_closeness = 0;   // closeness_distance(s∘r, id) (claimed <= 1)
  std::optional<PairWitness> r_witness;
  std::optional<PairWitness> s_witness;
  double tolerance = 0;    // 0 in the integer path

  bool r_ok() const { return leq(r_lipschitz, 1.0, tolerance); }
  bool s_ok() const { return leq(s_lipschitz, 2.0, tolerance); }
  bool sr_ok() const { return leq(sr_closeness, 1.0, tolerance); }
  bool all_ok() const { return r_ok() && s_ok() && rs_identity && sr_ok(); }
};

ComparisonReport double_glue_comparison(const MappedPair& f, const MappedPair& g);

}  // namespace coarse
