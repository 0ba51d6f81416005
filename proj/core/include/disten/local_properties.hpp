#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "disten/energy.hpp"

namespace disten {

/// Raw (k, l) local-property parameters, optionally carrying the (c, d) pair
/// they were derived from. The two forms are stored side by side and never
/// reconciled; parameter translation has slack for k not divisible by small
/// factors.
struct LocalPropertyParams {
  std::uint64_t k = 0;
  std::uint64_t l = 0;
  std::optional<std::pair<std::uint64_t, std::uint64_t>> cd;

  /// k = c(d+1), l = C(k,2) - dc + (d+1). Requires c, d >= 2.
  static LocalPropertyParams from_cd(std::uint64_t c, std::uint64_t d);
};

struct LocalPropertyReport {
  std::uint64_t min_distinct = 0;
  std::vector<Point> witness;  // a k-subset attaining the minimum

  bool property_holds(std::uint64_t l) const { return min_distinct >= l; }
};

/// Minimum over all k-subsets of the number of distinct positive squared
/// distances spanned inside the subset. Guarded by C(n,k) <= subset_cap.
LocalPropertyReport min_distinct_over_ksubsets(const PointSet& set, std::uint64_t k,
                                               std::uint64_t subset_cap = 1'000'000);

struct ForbiddenConfigReport {
  std::uint64_t max_codistance = 0;
  std::uint64_t codistance_limit = 0;  // dc - d + 1
  bool codistance_violation = false;   // some point at one distance from >= limit points
  std::uint64_t max_pairs_unordered = 0;
  Rational pair_ceiling;  // d(c-1)n/2
  bool pair_violation = false;
};

/// Scans for the configurations ruled out in a (c(d+1), ...) locally
/// constrained set: a point with too many equidistant neighbors, or a
/// distance spanned by too many pairs. Requires c, d >= 2.
ForbiddenConfigReport forbidden_configuration_scan(const PointSet& set, std::uint64_t c,
                                                   std::uint64_t d);

struct IntersectionWitness {
  std::vector<std::size_t> indices;  // d indices maximizing the intersection
  std::uint64_t size = 0;
};

/// Exhaustive maximum d-wise intersection over a family of subsets of
/// {0,...,universe-1}. Guarded by C(family, d) <= tuple_cap.
IntersectionWitness set_intersection_witness(const std::vector<std::vector<std::uint64_t>>& family,
                                             unsigned d, std::uint64_t tuple_cap = 1'000'000);

}  // namespace disten
