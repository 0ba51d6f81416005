#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "disten/geometry.hpp"

namespace disten {

/// Map from squared distance (or polynomial value) to its ordered-pair
/// multiplicity, kept sorted by ascending key. The single source for all
/// energies.
struct MultiplicitySpectrum {
  std::vector<std::pair<Rational, std::uint64_t>> entries;
  std::uint64_t total = 0;

  std::size_t distinct() const { return entries.size(); }
  std::uint64_t max_multiplicity() const;
  std::uint64_t multiplicity_of(const Rational& key) const;
};

/// k_j = number of spectrum entries with multiplicity >= j, at dyadic
/// thresholds j = 1, 2, 4, ... up to the maximum multiplicity.
struct RichSpectrum {
  std::vector<std::uint64_t> thresholds;
  std::vector<std::uint64_t> counts;
};

/// Ordered-pair spectrum of the positive squared distances of P.
/// Deterministic for any thread count: partial counts merge by addition.
MultiplicitySpectrum multiplicity_spectrum(const PointSet& set, unsigned threads = 1);

/// Ordered cross pairs (a,b) in P1 x P2 with positive squared distance.
MultiplicitySpectrum bipartite_spectrum(const PointSet& p1, const PointSet& p2);

/// Variant with the second set above the axis; requires P1 on the x-axis.
MultiplicitySpectrum bipartite_spectrum(const PointSet& p1, const QuadSet& p2);

RichSpectrum rich_spectrum(const MultiplicitySpectrum& spectrum);

/// CSV with header "sqdist,multiplicity", rows sorted by ascending key.
std::string spectrum_csv(const MultiplicitySpectrum& spectrum);

}  // namespace disten
