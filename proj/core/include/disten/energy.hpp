#pragma once

#include <cstdint>

#include "disten/spectrum.hpp"

namespace disten {

/// d'th distance energy from a spectrum: sum over classes of m^d.
/// For d = 1 this equals the spectrum total. Requires d >= 1.
BigInt energy(const MultiplicitySpectrum& spectrum, unsigned d);

/// Definitional oracle: counts ordered 2d-tuples (a_1,b_1,...,a_d,b_d) whose
/// d squared distances are all equal and positive. Enumeration is guarded by
/// a point-count cap (default 12 for d <= 3, 8 otherwise; pass n_cap to
/// override).
BigInt energy_bruteforce(const PointSet& set, unsigned d, std::uint64_t n_cap = 0);

/// Energy restricted to tuples whose 2d points are pairwise distinct,
/// counted per distance class over vertex-disjoint pair tuples. Same cap
/// rule as energy_bruteforce.
BigInt distinct_energy(const PointSet& set, unsigned d, std::uint64_t n_cap = 0);

/// (n^2 - n)^d / D^(d-1), the exact power-mean lower bound on E_d.
/// Requires n >= 2, d >= 1, D >= 1.
Rational holder_lower_bound(std::uint64_t n, std::uint64_t distinct, unsigned d);

/// Number of unordered 3-subsets with at least two equal pairwise squared
/// distances; degenerate collinear triples count, and a triple is counted
/// once even if all three distances agree.
std::uint64_t isosceles_count(const PointSet& set);

/// Max over (p, delta) of the number of points at squared distance delta
/// from p.
std::uint64_t max_codistance(const PointSet& set);

struct EnergyReport {
  std::uint64_t n = 0;
  unsigned d = 0;
  std::uint64_t distinct = 0;
  BigInt e_d;
  Rational holder_lower;
  std::uint64_t max_multiplicity = 0;
};

EnergyReport energy_report(const PointSet& set, unsigned d, unsigned threads = 1);

}  // namespace disten
