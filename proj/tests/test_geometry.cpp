#include <doctest.h>

#include <random>

#include "disten/geometry.hpp"

using namespace disten;

namespace {

Point pt(std::int64_t xn, std::int64_t xd, std::int64_t yn, std::int64_t yd) {
  return Point{Rational(xn, xd), Rational(yn, yd)};
}

Rational rnd_rational(std::mt19937_64& gen) {
  std::int64_t num = static_cast<std::int64_t>(gen() % 41) - 20;
  std::int64_t den = 1 + static_cast<std::int64_t>(gen() % 7);
  return Rational(num, den);
}

}  // namespace

TEST_CASE("sqdist on the spec fixtures") {
  CHECK(sqdist(pt(0, 1, 0, 1), pt(1, 1, 0, 1)) == Rational(1));
  CHECK(sqdist(pt(0, 1, 0, 1), pt(0, 1, 0, 1)) == Rational(0));
  CHECK(sqdist(pt(1, 2, 0, 1), pt(0, 1, 2, 1)) == Rational(17, 4));
}

TEST_CASE("sqdist symmetry and zero iff equality") {
  std::mt19937_64 gen(1);
  for (int i = 0; i < 100; ++i) {
    Point p{rnd_rational(gen), rnd_rational(gen)};
    Point q{rnd_rational(gen), rnd_rational(gen)};
    CHECK(sqdist(p, q) == sqdist(q, p));
    CHECK((sqdist(p, q) == 0) == (p == q));
    CHECK(sqdist(p, q) >= 0);
  }
}

TEST_CASE("sqdist transformation laws") {
  std::mt19937_64 gen(2);
  for (int i = 0; i < 60; ++i) {
    Point p{rnd_rational(gen), rnd_rational(gen)};
    Point q{rnd_rational(gen), rnd_rational(gen)};
    Rational tx = rnd_rational(gen), ty = rnd_rational(gen), s = rnd_rational(gen);
    CHECK(sqdist(Point{p.x + tx, p.y + ty}, Point{q.x + tx, q.y + ty}) == sqdist(p, q));
    CHECK(sqdist(Point{-p.x, p.y}, Point{-q.x, q.y}) == sqdist(p, q));
    CHECK(sqdist(Point{p.x, -p.y}, Point{q.x, -q.y}) == sqdist(p, q));
    CHECK(sqdist(Point{p.x * s, p.y * s}, Point{q.x * s, q.y * s}) == sqdist(p, q) * s * s);
  }
}

TEST_CASE("cross_sqdist") {
  CHECK(cross_sqdist(pt(1, 1, 0, 1), QuadPoint{Rational(1, 2), Rational(3, 4)}) == Rational(1));
  CHECK(cross_sqdist(pt(0, 1, 0, 1), QuadPoint{Rational(0), Rational(0)}) == Rational(0));
  CHECK(cross_sqdist(pt(2, 1, 0, 1), QuadPoint{Rational(1), Rational(5)}) == Rational(6));
  CHECK_THROWS_AS(cross_sqdist(pt(0, 1, 1, 1), QuadPoint{Rational(0), Rational(1)}),
                  validation_error);
}

TEST_CASE("QuadPoint validation") {
  CHECK_THROWS_AS(QuadSet::of({QuadPoint{Rational(0), Rational(-1)}}), validation_error);
}

TEST_CASE("parse_pointset") {
  SUBCASE("two points") {
    auto parsed = parse_pointset("0 0\n1 0\n");
    CHECK(parsed.set.size() == 2);
    CHECK(parsed.duplicates_dropped == 0);
  }
  SUBCASE("rational coordinates") {
    auto parsed = parse_pointset("1/2 -3/4\n");
    CHECK(parsed.set.size() == 1);
    CHECK(parsed.set[0].x == Rational(1, 2));
    CHECK(parsed.set[0].y == Rational(-3, 4));
  }
  SUBCASE("duplicates are dropped with a count") {
    auto parsed = parse_pointset("0 0\n0 0\n");
    CHECK(parsed.set.size() == 1);
    CHECK(parsed.duplicates_dropped == 1);
  }
  SUBCASE("comments and blank lines") {
    auto parsed = parse_pointset("# header\n\n1 2  # trailing\n");
    CHECK(parsed.set.size() == 1);
  }
  SUBCASE("empty file is a valid empty set") {
    CHECK(parse_pointset("").set.size() == 0);
  }
  SUBCASE("malformed rational") {
    CHECK_THROWS_AS(parse_pointset("1 x\n"), validation_error);
    CHECK_THROWS_AS(parse_pointset("1/0 2\n"), validation_error);
    CHECK_THROWS_AS(parse_pointset("1 2 3 4\n"), validation_error);
  }
  SUBCASE("order independence") {
    auto a = parse_pointset("0 0\n1 0\n2 5\n").set;
    auto b = parse_pointset("2 5\n0 0\n1 0\n").set;
    CHECK(a.points() == b.points());
  }
}

TEST_CASE("pointset round trip") {
  auto parsed = parse_pointset("1/2 -3/4\n0 0\n5 7\n");
  auto again = parse_pointset(write_pointset(parsed.set));
  CHECK(parsed.set.points() == again.set.points());
}

TEST_CASE("quadset parse and round trip") {
  auto parsed = parse_quadset("1/2 0 3/4\n0 0 0\n");
  CHECK(parsed.set.size() == 2);
  auto again = parse_quadset(write_quadset(parsed.set));
  CHECK(parsed.set.points() == again.set.points());
}

TEST_CASE("integerize") {
  SUBCASE("integer grid coordinates scale by 1") {
    auto set = PointSet::of({pt(0, 1, 0, 1), pt(3, 1, 4, 1)});
    auto scaled = integerize(set);
    REQUIRE(scaled.has_value());
    CHECK(scaled->scale == 1);
  }
  SUBCASE("common denominator is cleared") {
    auto set = PointSet::of({pt(1, 2, 0, 1), pt(1, 3, 1, 6)});
    auto scaled = integerize(set);
    REQUIRE(scaled.has_value());
    CHECK(scaled->scale == 6);
    CHECK(scaled->coords[0].first == 2);  // (1/3, 1/6) sorts first
  }
  SUBCASE("oversized coordinates fall back") {
    auto set = PointSet::of({Point{Rational(BigInt("123456789123456789")), Rational(0)},
                             Point{Rational(0), Rational(0)}});
    CHECK(!integerize(set).has_value());
  }
}
