#pragma once

#include <cstdint>
#include <vector>

#include "disten/geometry.hpp"

namespace disten {

/// The ceil(sqrt(n)) x ceil(sqrt(n)) integer grid truncated to exactly n
/// points in row-major order.
PointSet integer_grid(std::uint64_t n);

/// A 3-AP-free subset of {1,...,N}: the best sphere-construction output
/// (digits < q in base 2q-1 with a fixed squared norm, searched over
/// (q, dimension, norm)) or, when larger, a deterministic greedy set.
std::vector<std::int64_t> behrend_set(std::uint64_t n_limit);

/// True iff no x < y < z in the set satisfy x + z = 2y.
bool is_progression_free(const std::vector<std::int64_t>& values);

/// behrend_set placed on the x-axis; spans no isosceles triples.
PointSet behrend_collinear(std::uint64_t n_limit);

/// Line points P1 = {(1,0),...,(m,0)} plus a quadratic family P2 above the
/// axis whose cross squared distances are the integers i^2 - a*i + b.
struct BipartiteConstruction {
  PointSet line_points;
  QuadSet plane_points;
  std::uint64_t m = 0;
  std::uint64_t n = 0;
  std::uint64_t a_count = 0;
  std::uint64_t b_count = 0;
};

/// Requires n >= 4m^3; yields D(P1,P2) <= m^2 + m*a_count + b_count.
BipartiteConstruction elekes_bipartite(std::uint64_t m, std::uint64_t n);

/// Uniform random integer coordinates in [0, coord_range]^2, resampled until
/// n distinct points; deterministic per seed.
PointSet random_pointset(std::uint64_t n, std::uint64_t coord_range, std::uint64_t seed);

}  // namespace disten
