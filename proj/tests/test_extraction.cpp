#include <doctest.h>

#include <cmath>

#include "disten/constructions.hpp"
#include "disten/energy.hpp"
#include "disten/extraction.hpp"

using namespace disten;

namespace {

SamplingPlan plan_keep_all(std::uint64_t seed = 0) {
  // c small enough that the probability clamps to 1.
  return sampling_plan(3, PlanVariant::plane_e5, 2, Rational(1, 1'000'000'000), seed);
}

PointSet unit_square() { return integer_grid(4); }

}  // namespace

TEST_CASE("sampling_plan formulas") {
  SUBCASE("curve m=2 at n=1000") {
    auto plan = sampling_plan(1000, PlanVariant::curve, 2, Rational(1), 0);
    CHECK(plan.p == doctest::Approx(std::pow(2.0 * std::pow(1000.0, 5.0 / 3.0), -1.0 / 3.0))
                        .epsilon(1e-9));
    CHECK(plan.p == doctest::Approx(1.71e-2).epsilon(1e-2));
  }
  SUBCASE("plane-E5 at n=1024") {
    auto plan = sampling_plan(1024, PlanVariant::plane_e5, 2, Rational(1), 0);
    CHECK(std::abs(plan.p - 6.8e-3) < 1e-4);
  }
  SUBCASE("plane-E3 at n=1024") {
    auto plan = sampling_plan(1024, PlanVariant::plane_e3, 2, Rational(1), 0);
    double expect = std::pow(
        2.0 * std::pow(1024.0, 23.0 / 7.0) * std::pow(std::log(1024.0), 9.0 / 7.0), -1.0 / 5.0);
    CHECK(plan.p == doctest::Approx(expect).epsilon(1e-9));
  }
  SUBCASE("clamping") {
    CHECK(sampling_plan(3, PlanVariant::plane_e5, 2, Rational(1, 1'000'000'000), 0).p == 1.0);
    auto tiny = sampling_plan(1000, PlanVariant::plane_e5, 2, Rational(BigInt("1000000000000")), 0);
    CHECK(tiny.p > 0.0);
    CHECK(tiny.p < 1e-2);
  }
  SUBCASE("validation") {
    CHECK_THROWS_AS(sampling_plan(2, PlanVariant::plane_e5, 2, Rational(1), 0), validation_error);
    CHECK_THROWS_AS(sampling_plan(10, PlanVariant::plane_e5, 2, Rational(0), 0), validation_error);
    CHECK_THROWS_AS(sampling_plan(10, PlanVariant::curve, 1, Rational(1), 0), validation_error);
  }
}

TEST_CASE("parse_variant") {
  unsigned m = 0;
  CHECK(parse_variant("plane-E5", m) == PlanVariant::plane_e5);
  CHECK(parse_variant("plane-E3", m) == PlanVariant::plane_e3);
  CHECK(parse_variant("curve(3)", m) == PlanVariant::curve);
  CHECK(m == 3);
  CHECK(parse_variant("curve", m) == PlanVariant::curve);
  CHECK(m == 2);
  CHECK_THROWS_AS(parse_variant("plane-E7", m), validation_error);
}

TEST_CASE("extract_subset") {
  SUBCASE("three collinear points, maxpairs 1") {
    auto set = PointSet::of(
        {{Rational(0), Rational(0)}, {Rational(1), Rational(0)}, {Rational(2), Rational(0)}});
    auto result = extract_subset(set, 1, plan_keep_all());
    CHECK(result.subset.size() == 2);
    CHECK(result.removed_isosceles == 1);
    // the apex (1,0) goes, leaving all distances distinct
    CHECK_FALSE(result.subset.contains(Point{Rational(1), Rational(0)}));
    CHECK(verify_max_pair_multiplicity(result.subset, 1));
  }
  SUBCASE("unit square, maxpairs 4: only isosceles removals") {
    auto result = extract_subset(unit_square(), 4, plan_keep_all());
    CHECK(result.removed_multiplicity == 0);
    CHECK(verify_max_pair_multiplicity(result.subset, 4));
    if (result.subset.size() >= 2) {
      CHECK(max_codistance(result.subset) <= 1);  // isosceles-free
    }
  }
  SUBCASE("a set already satisfying the property and isosceles-free is a fixpoint") {
    auto set = PointSet::of(
        {{Rational(0), Rational(0)}, {Rational(1), Rational(0)}, {Rational(3), Rational(0)}});
    REQUIRE(isosceles_count(set) == 0);
    auto result = extract_subset(set, 1, plan_keep_all());
    CHECK(result.subset.points() == set.points());
    CHECK(result.removed_isosceles == 0);
    CHECK(result.removed_multiplicity == 0);
  }
  SUBCASE("output always satisfies the bound, any seed") {
    auto grid = integer_grid(100);
    for (std::uint64_t seed : {1u, 7u, 23u, 99u}) {
      for (auto [variant, maxpairs] :
           {std::pair{PlanVariant::plane_e5, std::uint64_t{4}},
            std::pair{PlanVariant::plane_e3, std::uint64_t{2}}}) {
        auto plan = sampling_plan(100, variant, 2, Rational(1), seed);
        auto result = extract_subset(grid, maxpairs, plan);
        CHECK(verify_max_pair_multiplicity(result.subset, maxpairs));
        CHECK(result.max_pair_multiplicity <= maxpairs);
        if (result.subset.size() >= 2) {
          CHECK(max_codistance(result.subset) <= 1);
        }
      }
    }
  }
  SUBCASE("deterministic byte-for-byte") {
    auto grid = integer_grid(64);
    auto plan = sampling_plan(64, PlanVariant::plane_e3, 2, Rational(1), 5);
    auto a = extract_subset(grid, 2, plan);
    auto b = extract_subset(grid, 2, plan);
    CHECK(write_pointset(a.subset) == write_pointset(b.subset));
    CHECK(a.removed_isosceles == b.removed_isosceles);
    CHECK(a.removed_multiplicity == b.removed_multiplicity);
  }
  SUBCASE("maxpairs must be positive") {
    CHECK_THROWS_AS(extract_subset(unit_square(), 0, plan_keep_all()), validation_error);
  }
}

TEST_CASE("verify_max_pair_multiplicity") {
  CHECK(verify_max_pair_multiplicity(unit_square(), 4));
  CHECK_FALSE(verify_max_pair_multiplicity(unit_square(), 3));
  CHECK(verify_max_pair_multiplicity(PointSet::of({{Rational(1), Rational(2)}}), 1));
}

TEST_CASE("holder interpolation certification") {
  SUBCASE("unit square values") {
    auto spectrum = multiplicity_spectrum(unit_square());
    // E5 = 8^5 + 4^5 = 33792 against (8^{11/2} + 4^{11/2})^{6/7} (8^2+4^2)^{1/7}
    CHECK(energy(spectrum, 5) == 33792);
    auto report = holder_interpolation_check(spectrum);
    CHECK(report.e5_holds);
    CHECK(report.e3_holds);
    CHECK_FALSE(report.equality_case);
  }
  SUBCASE("single class is the equality case") {
    MultiplicitySpectrum s;
    s.entries.emplace_back(Rational(5), 12);
    s.total = 12;
    auto report = holder_interpolation_check(s);
    CHECK(report.equality_case);
    CHECK(report.e5_holds);
    CHECK(report.e3_holds);
  }
  SUBCASE("random spectra always satisfy both inequalities") {
    std::mt19937_64 gen(8);
    for (int trial = 0; trial < 20; ++trial) {
      MultiplicitySpectrum s;
      std::size_t classes = 1 + gen() % 6;
      for (std::size_t i = 0; i < classes; ++i) {
        s.entries.emplace_back(Rational(static_cast<std::int64_t>(i + 1)), 1 + gen() % 50);
        s.total += s.entries.back().second;
      }
      auto report = holder_interpolation_check(s);
      CHECK(report.e5_holds);
      CHECK(report.e3_holds);
    }
  }
  SUBCASE("empty spectrum is rejected") {
    CHECK_THROWS_AS(holder_interpolation_check(MultiplicitySpectrum{}), validation_error);
  }
}

TEST_CASE("curve_pointset") {
  SUBCASE("parabola") {
    auto set = curve_pointset("parabola", 3);
    CHECK(set.contains(Point{Rational(0), Rational(0)}));
    CHECK(set.contains(Point{Rational(1), Rational(1)}));
    CHECK(set.contains(Point{Rational(2), Rational(4)}));
  }
  SUBCASE("circle points are distinct and on the unit circle") {
    auto set = curve_pointset("circle", 5);
    CHECK(set.size() == 5);
    for (const auto& p : set) {
      CHECK(p.x * p.x + p.y * p.y == Rational(1));
    }
  }
  SUBCASE("line is equally spaced") {
    auto set = curve_pointset("line", 6);
    CHECK(set.size() == 6);
    CHECK(max_codistance(set) == 2);
  }
  SUBCASE("unknown curve id") {
    CHECK_THROWS_AS(curve_pointset("spiral", 3), validation_error);
  }
}
