#pragma once

#include <cstdint>
#include <string_view>

#include "disten/spectrum.hpp"

namespace disten {

enum class PlanVariant { plane_e5, plane_e3, curve };

/// Sampling probability plus the knobs that produced it. Deterministic given
/// (variant, n, c); the p-formulas use the natural logarithm and clamp into
/// (0, 1].
struct SamplingPlan {
  double p = 1.0;
  PlanVariant variant = PlanVariant::plane_e5;
  unsigned curve_m = 2;  // only meaningful for the curve variant
  Rational c = 1;
  std::uint64_t seed = 0;
};

/// plane-E5: p = (2c n^(41/7) ln^(13/7) n)^(-1/9)
/// plane-E3: p = (2c n^(23/7) ln^(9/7)  n)^(-1/5)
/// curve(m): p = (2c n^(m-1/3))^(-1/(2m-1))
/// Requires n >= 3; curve_m >= 2 for the curve variant.
SamplingPlan sampling_plan(std::uint64_t n, PlanVariant variant, unsigned curve_m,
                           const Rational& c, std::uint64_t seed);

PlanVariant parse_variant(std::string_view text, unsigned& curve_m);

struct ExtractionResult {
  PointSet subset;
  std::uint64_t removed_isosceles = 0;
  std::uint64_t removed_multiplicity = 0;
  std::uint64_t max_pair_multiplicity = 0;
};

/// Random sampling followed by deterministic repair: (1) keep each point
/// independently with probability plan.p, (2) repeatedly delete the
/// lexicographically smallest apex of any remaining isosceles triple,
/// (3) while some distance class has unordered multiplicity above maxpairs,
/// delete the smaller endpoint of its smallest pair. Identical inputs give
/// byte-identical outputs.
ExtractionResult extract_subset(const PointSet& set, std::uint64_t maxpairs,
                                const SamplingPlan& plan);

/// True iff every squared distance has unordered multiplicity <= maxpairs.
bool verify_max_pair_multiplicity(const PointSet& set, std::uint64_t maxpairs);

struct InterpolationReport {
  bool e5_holds = false;  // sum m^5 <= (sum m^(11/2))^(6/7) (sum m^2)^(1/7)
  bool e3_holds = false;  // sum m^3 <= (sum m^(11/2))^(2/7) (sum m^2)^(5/7)
  bool equality_case = false;  // all multiplicities equal: both sides agree exactly
  unsigned sqrt_bits = 0;      // precision that certified the strict cases
};

/// Certifies both interpolation inequalities on a spectrum. Comparisons are
/// cleared to integer powers; the only irrational ingredient, sum m^(11/2),
/// is replaced by an exact rational lower bound from binary-refined integer
/// square roots, tightened until the comparison is decided. Requires a
/// nonempty spectrum.
InterpolationReport holder_interpolation_check(const MultiplicitySpectrum& spectrum);

/// n rational points on a named curve at integer parameters. Supported ids:
/// "line", "parabola", "circle" (unit circle via the tangent-half-angle map).
PointSet curve_pointset(std::string_view curve_id, std::uint64_t n);

}  // namespace disten
