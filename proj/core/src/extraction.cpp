#include "disten/extraction.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <random>

namespace disten {

SamplingPlan sampling_plan(std::uint64_t n, PlanVariant variant, unsigned curve_m,
                           const Rational& c, std::uint64_t seed) {
  if (n < 3) throw validation_error("sampling_plan requires n >= 3");
  if (c <= 0) throw validation_error("sampling_plan requires c > 0");
  if (variant == PlanVariant::curve && curve_m < 2) {
    throw validation_error("curve sampling requires m >= 2");
  }
  const double nd = static_cast<double>(n);
  const double cd = c.convert_to<double>();
  const double ln_n = std::log(nd);
  double base = 0;
  double exponent = 0;
  switch (variant) {
    case PlanVariant::plane_e5:
      base = 2.0 * cd * std::pow(nd, 41.0 / 7.0) * std::pow(ln_n, 13.0 / 7.0);
      exponent = -1.0 / 9.0;
      break;
    case PlanVariant::plane_e3:
      base = 2.0 * cd * std::pow(nd, 23.0 / 7.0) * std::pow(ln_n, 9.0 / 7.0);
      exponent = -1.0 / 5.0;
      break;
    case PlanVariant::curve:
      base = 2.0 * cd * std::pow(nd, static_cast<double>(curve_m) - 1.0 / 3.0);
      exponent = -1.0 / (2.0 * curve_m - 1.0);
      break;
  }
  SamplingPlan plan;
  plan.variant = variant;
  plan.curve_m = curve_m;
  plan.c = c;
  plan.seed = seed;
  double p = std::pow(base, exponent);
  plan.p = std::min(1.0, std::max(p, std::numeric_limits<double>::min()));
  return plan;
}

PlanVariant parse_variant(std::string_view text, unsigned& curve_m) {
  if (text == "plane-E5") return PlanVariant::plane_e5;
  if (text == "plane-E3") return PlanVariant::plane_e3;
  if (text.starts_with("curve")) {
    curve_m = 2;
    auto open = text.find('(');
    if (open != std::string_view::npos) {
      auto close = text.find(')', open);
      if (close == std::string_view::npos) throw validation_error("malformed curve variant");
      curve_m = static_cast<unsigned>(std::stoul(std::string(text.substr(open + 1, close - open - 1))));
    }
    return PlanVariant::curve;
  }
  throw validation_error("unknown sampling variant \"" + std::string(text) + "\"");
}

namespace {

// Index of the lexicographically smallest point with two equidistant
// neighbors, or npos when the set is isosceles-free.
std::size_t find_apex(const std::vector<Point>& pts) {
  std::vector<Rational> keys;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    keys.clear();
    for (std::size_t j = 0; j < pts.size(); ++j) {
      if (j != i) keys.push_back(sqdist(pts[i], pts[j]));
    }
    std::sort(keys.begin(), keys.end());
    if (std::adjacent_find(keys.begin(), keys.end()) != keys.end()) return i;
  }
  return static_cast<std::size_t>(-1);
}

}  // namespace

ExtractionResult extract_subset(const PointSet& set, std::uint64_t maxpairs,
                                const SamplingPlan& plan) {
  if (maxpairs < 1) throw validation_error("extract_subset requires maxpairs >= 1");

  // Bernoulli sampling in canonical point order; one draw per point keeps the
  // stream independent of earlier decisions.
  std::mt19937_64 gen(plan.seed);
  std::vector<Point> pts;
  for (const auto& p : set) {
    double u = static_cast<double>(gen() >> 11) * 0x1.0p-53;
    if (u < plan.p) pts.push_back(p);
  }

  ExtractionResult result;

  // Isosceles repair: points are kept sorted, so the first apex found is the
  // lexicographically smallest.
  while (true) {
    std::size_t apex = find_apex(pts);
    if (apex == static_cast<std::size_t>(-1)) break;
    pts.erase(pts.begin() + static_cast<std::ptrdiff_t>(apex));
    ++result.removed_isosceles;
  }

  // Multiplicity repair: with no isosceles triples left, the pairs inside a
  // class are vertex-disjoint, so one endpoint removal deletes exactly one
  // pair. Violating classes are fixed in ascending key order.
  while (true) {
    std::map<Rational, std::pair<std::size_t, std::size_t>> first_pair;
    std::map<Rational, std::uint64_t> counts;
    for (std::size_t i = 0; i < pts.size(); ++i) {
      for (std::size_t j = i + 1; j < pts.size(); ++j) {
        Rational key = sqdist(pts[i], pts[j]);
        auto [it, inserted] = counts.emplace(key, 1);
        if (inserted) {
          first_pair.emplace(key, std::make_pair(i, j));
        } else {
          ++it->second;
        }
      }
    }
    std::size_t victim = static_cast<std::size_t>(-1);
    for (const auto& [key, count] : counts) {
      if (count > maxpairs) {
        victim = first_pair.at(key).first;
        break;
      }
    }
    if (victim == static_cast<std::size_t>(-1)) {
      std::uint64_t max_count = 0;
      for (const auto& [key, count] : counts) max_count = std::max(max_count, count);
      result.max_pair_multiplicity = max_count;
      break;
    }
    pts.erase(pts.begin() + static_cast<std::ptrdiff_t>(victim));
    ++result.removed_multiplicity;
  }

  result.subset = PointSet::of(std::move(pts), set.label());
  return result;
}

bool verify_max_pair_multiplicity(const PointSet& set, std::uint64_t maxpairs) {
  auto spectrum = multiplicity_spectrum(set);
  return spectrum.max_multiplicity() / 2 <= maxpairs;
}

namespace {

Rational rational_pow(const Rational& base, unsigned exponent) {
  return Rational(ipow(numerator(base), exponent), ipow(denominator(base), exponent));
}

// Exact rational lower bound on sum of m^5 * sqrt(m): each sqrt is bracketed
// by a floor square root carried to `bits` fractional bits.
Rational power_sum_11_2_lower(const MultiplicitySpectrum& spectrum, unsigned bits) {
  BigInt numerator_sum = 0;
  for (const auto& [key, count] : spectrum.entries) {
    BigInt m = count;
    BigInt root = isqrt_floor(m << (2 * bits));
    numerator_sum += ipow(m, 5) * root;
  }
  return Rational(numerator_sum, BigInt(1) << bits);
}

}  // namespace

InterpolationReport holder_interpolation_check(const MultiplicitySpectrum& spectrum) {
  if (spectrum.entries.empty()) {
    throw validation_error("holder_interpolation_check requires a nonempty spectrum");
  }
  BigInt s2 = 0, s3 = 0, s5 = 0;
  bool all_equal = true;
  for (const auto& [key, count] : spectrum.entries) {
    BigInt m = count;
    s2 += m * m;
    s3 += ipow(m, 3);
    s5 += ipow(m, 5);
    all_equal = all_equal && count == spectrum.entries.front().second;
  }

  InterpolationReport report;
  if (all_equal) {
    // Hoelder's equality case: with k classes of multiplicity m both sides
    // coincide, and the 14th (resp. 7th) powers are rational.
    BigInt k = spectrum.entries.size();
    BigInt m = spectrum.entries.front().second;
    BigInt x_squared = k * k * ipow(m, 11);  // (sum m^(11/2))^2
    report.equality_case = true;
    report.e5_holds = ipow(s5, 14) == ipow(x_squared, 6) * s2 * s2;
    report.e3_holds = ipow(s3, 7) == x_squared * ipow(s2, 5);
    return report;
  }

  for (unsigned bits = 16; bits <= 4096; bits *= 2) {
    Rational x_lo = power_sum_11_2_lower(spectrum, bits);
    if (!report.e5_holds) {
      report.e5_holds =
          Rational(ipow(s5, 14)) <= rational_pow(x_lo, 12) * Rational(s2 * s2);
    }
    if (!report.e3_holds) {
      report.e3_holds = Rational(ipow(s3, 7)) <= x_lo * x_lo * Rational(ipow(s2, 5));
    }
    if (report.e5_holds && report.e3_holds) {
      report.sqrt_bits = bits;
      break;
    }
  }
  return report;
}

PointSet curve_pointset(std::string_view curve_id, std::uint64_t n) {
  if (n < 1) throw validation_error("curve_pointset requires n >= 1");
  std::vector<Point> pts;
  pts.reserve(n);
  if (curve_id == "line") {
    for (std::uint64_t t = 0; t < n; ++t) pts.push_back(Point{Rational(t), Rational(0)});
  } else if (curve_id == "parabola") {
    for (std::uint64_t t = 0; t < n; ++t) {
      pts.push_back(Point{Rational(t), Rational(BigInt(t) * BigInt(t))});
    }
  } else if (curve_id == "circle") {
    // Tangent-half-angle map: t -> ((1-t^2)/(1+t^2), 2t/(1+t^2)), injective
    // over nonnegative integer parameters.
    for (std::uint64_t t = 0; t < n; ++t) {
      BigInt tt = BigInt(t) * BigInt(t);
      pts.push_back(Point{Rational(1 - tt, 1 + tt), Rational(2 * BigInt(t), 1 + tt)});
    }
  } else {
    throw validation_error("unknown curve id \"" + std::string(curve_id) + "\"");
  }
  return PointSet::of(std::move(pts), std::string(curve_id));
}

}  // namespace disten
