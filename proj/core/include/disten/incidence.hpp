#pragma once

#include <cstdint>
#include <vector>

#include "disten/geometry.hpp"
#include "disten/polynomial.hpp"

namespace disten {

/// Algebraic plane curve given by its defining polynomial. Circles carry
/// their (u, v, w) normal form x^2 + y^2 + ux + vy + w as well.
struct PlaneCurve {
  BivariatePolynomial poly;
  bool is_circle = false;
  Rational u, v, w;

  static PlaneCurve from_poly(BivariatePolynomial poly);
  /// Validates positive squared radius (u^2 + v^2)/4 - w > 0.
  static PlaneCurve circle(Rational u, Rational v, Rational w);

  friend bool operator==(const PlaneCurve& a, const PlaneCurve& b) { return a.poly == b.poly; }
  friend bool operator<(const PlaneCurve& a, const PlaneCurve& b) { return a.poly < b.poly; }
};

struct IncidenceReport {
  std::uint64_t count = 0;
  std::vector<std::uint64_t> per_curve;
  bool k22_free = true;  // no two curves share two incident points
};

/// Exact point-on-curve counting by polynomial evaluation. Guarded by
/// |P| * |curves| <= eval_cap.
IncidenceReport count_incidences(const PointSet& points, const std::vector<PlaneCurve>& curves,
                                 std::uint64_t eval_cap = 100'000'000);

/// Distinct circles centered on the x-axis with the given squared radii.
/// Requires all centers on the axis and all squared radii positive.
std::vector<PlaneCurve> circles_on_line(const PointSet& centers,
                                        const std::vector<Rational>& sq_radii);

struct LatticeCountReport {
  std::uint64_t count = 0;
  bool axis_parallel_factor = false;  // f vanishes on a line x = a in A or y = b in B
};

/// |V(f) cap (A x B)| plus the axis-parallel-line-component flag that
/// exempts a curve from the O(|A| + |B|) lattice bound. Requires f nonzero.
LatticeCountReport variety_lattice_count(const BivariatePolynomial& f,
                                         const std::vector<Rational>& a_set,
                                         const std::vector<Rational>& b_set);

}  // namespace disten
