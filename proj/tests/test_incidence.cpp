#include <doctest.h>

#include <random>
#include <set>

#include "disten/constructions.hpp"
#include "disten/incidence.hpp"

using namespace disten;

namespace {

std::vector<Rational> rationals(std::initializer_list<std::int64_t> values) {
  std::vector<Rational> out;
  for (auto v : values) out.emplace_back(v);
  return out;
}

PlaneCurve unit_circle_at(const Point& center) {
  return PlaneCurve::circle(Rational(-2) * center.x, Rational(-2) * center.y,
                            center.x * center.x + center.y * center.y - 1);
}

}  // namespace

TEST_CASE("count_incidences") {
  SUBCASE("unit circles on the 2x2 grid") {
    auto grid = integer_grid(4);
    std::vector<PlaneCurve> curves;
    for (const auto& p : grid) curves.push_back(unit_circle_at(p));
    auto report = count_incidences(grid, curves);
    CHECK(report.count == 8);  // each circle passes through the two neighbors
    for (auto c : report.per_curve) {
      CHECK(c == 2);
    }
  }
  SUBCASE("empty curve set") {
    CHECK(count_incidences(integer_grid(9), {}).count == 0);
  }
  SUBCASE("circle through none of the points") {
    auto pts = PointSet::of(
        {{Rational(0), Rational(0)}, {Rational(1), Rational(0)}, {Rational(2), Rational(0)}});
    auto far_circle = PlaneCurve::circle(Rational(-20), Rational(-20), Rational(199));
    CHECK(count_incidences(pts, {far_circle}).count == 0);
  }
  SUBCASE("evaluation cap") {
    CHECK_THROWS_AS(count_incidences(integer_grid(100), {unit_circle_at({Rational(0), Rational(0)})}, 50),
                    cap_exceeded);
  }
}

TEST_CASE("circles_on_line") {
  auto centers = PointSet::of({{Rational(0), Rational(0)}, {Rational(1), Rational(0)}});
  SUBCASE("two centers, one radius") {
    CHECK(circles_on_line(centers, {Rational(1)}).size() == 2);
  }
  SUBCASE("duplicates are merged") {
    CHECK(circles_on_line(centers, {Rational(1), Rational(1)}).size() == 2);
  }
  SUBCASE("upper-half fixture has two incidences and is K22-free") {
    auto curves = circles_on_line(centers, {Rational(1)});
    auto upper = PointSet::of({{Rational(0), Rational(1)}, {Rational(1), Rational(1)}});
    auto report = count_incidences(upper, curves);
    CHECK(report.count == 2);
    CHECK(report.k22_free);
  }
  SUBCASE("validation") {
    CHECK_THROWS_AS(circles_on_line(PointSet::of({{Rational(0), Rational(1)}}), {Rational(1)}),
                    validation_error);
    CHECK_THROWS_AS(circles_on_line(centers, {Rational(0)}), validation_error);
    CHECK_THROWS_AS(PlaneCurve::circle(Rational(0), Rational(0), Rational(1)), validation_error);
  }
}

TEST_CASE("axis circles meet in at most one upper-half point") {
  // Randomized configurations: any two distinct circles centered on the
  // x-axis share at most one point above it, so the incidence graph of any
  // strictly-upper point set is K22-free.
  std::mt19937_64 gen(12);
  auto rnd = [&](std::int64_t range) {
    return Rational(static_cast<std::int64_t>(gen() % (2 * range + 1)) - range,
                    1 + static_cast<std::int64_t>(gen() % 4));
  };
  for (int trial = 0; trial < 40; ++trial) {
    std::set<Rational> cxs;
    while (cxs.size() < 5) cxs.insert(rnd(8));
    std::vector<Point> centers;
    for (const auto& cx : cxs) centers.push_back(Point{cx, Rational(0)});
    std::set<Rational> radii;
    while (radii.size() < 4) {
      auto r = rnd(6);
      if (r > 0) radii.insert(r);
    }
    auto curves =
        circles_on_line(PointSet::of(std::move(centers)), {radii.begin(), radii.end()});
    std::set<std::pair<Rational, Rational>> raw;
    while (raw.size() < 15) {
      auto y = rnd(6);
      if (y > 0) raw.emplace(rnd(8), y);
    }
    std::vector<Point> upper;
    for (const auto& [x, y] : raw) upper.push_back(Point{x, y});
    CHECK(count_incidences(PointSet::of(std::move(upper)), curves).k22_free);
  }
}

TEST_CASE("incidences are translation invariant") {
  auto pts = integer_grid(16);
  auto curves = circles_on_line(
      PointSet::of({{Rational(0), Rational(0)}, {Rational(2), Rational(0)}}),
      {Rational(1), Rational(5)});
  auto base = count_incidences(pts, curves);
  Rational tx(7, 3), ty(-2, 5);
  std::vector<Point> moved;
  for (const auto& p : pts) moved.push_back(Point{p.x + tx, p.y + ty});
  std::vector<PlaneCurve> moved_curves;
  for (const auto& c : curves) {
    moved_curves.push_back(PlaneCurve::from_poly(c.poly.shift(-tx, -ty)));
  }
  auto shifted = count_incidences(PointSet::of(std::move(moved)), moved_curves);
  CHECK(base.count == shifted.count);
  CHECK(base.per_curve == shifted.per_curve);
}

TEST_CASE("variety_lattice_count") {
  SUBCASE("diagonal") {
    auto report = variety_lattice_count(parse_bivariate("x - y"), rationals({1, 2, 3, 4, 5}),
                                        rationals({1, 2, 3, 4, 5}));
    CHECK(report.count == 5);
    CHECK_FALSE(report.axis_parallel_factor);
  }
  SUBCASE("parabola through three lattice points") {
    auto report = variety_lattice_count(parse_bivariate("y - x^2"), rationals({1, 2, 3}),
                                        rationals({1, 4, 9}));
    CHECK(report.count == 3);
  }
  SUBCASE("nonzero constant misses everything") {
    CHECK(variety_lattice_count(parse_bivariate("7"), rationals({1, 2}), rationals({1, 2})).count ==
          0);
  }
  SUBCASE("zero polynomial is rejected") {
    CHECK_THROWS_AS(variety_lattice_count(BivariatePolynomial{}, rationals({1}), rationals({1})),
                    validation_error);
  }
  SUBCASE("axis-parallel factor is flagged") {
    auto report = variety_lattice_count(parse_bivariate("(x - 2)*(y - x)"), rationals({1, 2, 3}),
                                        rationals({1, 2, 3}));
    CHECK(report.axis_parallel_factor);
  }
  SUBCASE("lattice bound holds when the flag is down") {
    std::mt19937_64 gen(13);
    auto a_set = rationals({1, 2, 3, 4, 5, 6, 7});
    for (const auto& f : {parse_bivariate("x*y - 6"), parse_bivariate("x^2 + y^2 - 25"),
                          parse_bivariate("y - x^2 + 3")}) {
      auto report = variety_lattice_count(f, a_set, a_set);
      if (!report.axis_parallel_factor) {
        CHECK(report.count <=
              static_cast<std::uint64_t>(f.total_degree()) * (a_set.size() + a_set.size()));
      }
    }
  }
}
