#pragma once

#include <array>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "coarse/mapping.hpp"

namespace coarse {

// ---------------------------------------------------------------------------
// Comb

struct Tooth {
  long x = 0;
  long height = 0;
  long stage = 0;
};

/// The comb truncated after stage n_max. Stage n places n teeth of height n,
/// stepping right by 1, 2, ..., n after each; the ray runs from 0 to the
/// final position. Point ids are "x,y".
struct Comb {
  long n_max = 0;
  long ray_end = 0;
  std::vector<Tooth> teeth;
  SpacePtr path;        // graph path metric
  SpacePtr l1;          // same points, l1 metric
  MappedPair identity;  // path → l1
  Window interior;      // everything except the last stage's teeth (ray kept)

  PointIndex point(long x, long y) const;  // throws std::out_of_range
  /// Teeth of height n at horizontal gap σ+1: within stage n when σ+2 <= n,
  /// else the last stage-n tooth and the first stage-(n+1) tooth (σ+1 = n,
  /// n < n_max). Throws PreconditionError when no such pair exists.
  std::pair<PointIndex, PointIndex> locate(long sigma, long n) const;

  // Points are stored column by column: (x,0), (x,1), ..., (x,h_x).
  std::vector<PointIndex> column_start;
  std::vector<long> column_height;
};

Comb comb(long n_max);  // throws std::invalid_argument for n_max < 1

/// (x, y) ↦ x onto the truncated ray, with the section x ↦ (x, 0).
struct CombRetraction {
  Comb comb;
  SpacePtr ray;          // 0..ray_end, |x - x'|
  MappedPair retraction;
  MappedPair section;
};

CombRetraction comb_retraction(long n_max);

// ---------------------------------------------------------------------------
// Heisenberg group

using HeisenbergElement = std::array<long, 3>;

/// (x,y,z)(x',y',z') = (x+x', y+y', z+z'+x y').
HeisenbergElement heisenberg_multiply(const HeisenbergElement& g, const HeisenbergElement& h);
HeisenbergElement heisenberg_inverse(const HeisenbergElement& g);

/// a, a⁻¹, b, b⁻¹, z, z⁻¹ in breadth-first order.
const std::array<HeisenbergElement, 6>& heisenberg_generators();

/// Word-metric ball B(R) in the integer Heisenberg group and its projection
/// onto the l1 ball of radius R in ℤ².
struct HeisenbergBall {
  int radius = 0;
  std::vector<HeisenbergElement> elements;  // breadth-first order, identity first
  std::vector<int> length;                  // word length of each element
  SpacePtr group;                           // d(g,h) = |g⁻¹h|
  SpacePtr base;                            // ℤ² ball, l1
  MappedPair projection;                    // (x,y,z) ↦ (x,y)

  /// Elements of word length <= r.
  Window ball(int r) const;
};

HeisenbergBall heisenberg(int R);  // throws std::invalid_argument for R < 1

/// |B(R)| for R = 1..R_max.
std::vector<std::size_t> heisenberg_ball_sizes(int R_max);

/// Distance in the Cayley graph for the generating set Z ∪ {a^±1, b^±1},
/// where all of the centre counts as one step.
Dist heisenberg_central_distance(const HeisenbergElement& g, const HeisenbergElement& h);

// ---------------------------------------------------------------------------
// Lattices and cubes

/// n³ ↦ n² for n = 1..N, absolute-difference metrics. Ids are the numbers.
MappedPair cubes_squares(long N);  // throws std::invalid_argument for N < 2

/// Coordinate projection from the l1 ball of radius N in ℤ^k onto the one in
/// ℤ^m (first m coordinates).
MappedPair lattice_quotient(int k, int m, long N);

/// Number of points in the l1 ball of radius R in ℤ^k.
std::size_t lattice_ball_size(int k, long R);

// ---------------------------------------------------------------------------
// Families

struct FamilyInstance {
  long param = 0;
  MappedPair map;
  Window window;
};

/// A parameterized, deterministic family of truncations.
struct TruncationFamily {
  std::string param_name;
  std::vector<long> values;
  std::function<FamilyInstance(long)> generate;

  std::vector<FamilyInstance> instances() const;
};

TruncationFamily comb_family(std::vector<long> n_max_values);
TruncationFamily comb_retraction_family(std::vector<long> n_max_values);
TruncationFamily cubes_family(std::vector<long> window_values);
TruncationFamily heisenberg_family(std::vector<long> radii);

}  // namespace coarse
