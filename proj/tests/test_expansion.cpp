#include <doctest.h>

#include <random>
#include <set>

#include "disten/expansion.hpp"
#include "disten/incidence.hpp"

using namespace disten;

namespace {

std::vector<Rational> rationals(std::initializer_list<std::int64_t> values) {
  std::vector<Rational> out;
  for (auto v : values) out.emplace_back(v);
  return out;
}

BigInt quadruple_oracle(const BivariatePolynomial& f, const std::vector<Rational>& a_set,
                        const std::vector<Rational>& b_set) {
  BigInt count = 0;
  for (const auto& a1 : a_set)
    for (const auto& a2 : a_set)
      for (const auto& b1 : b_set)
        for (const auto& b2 : b_set) {
          if (f(a1, b1) == f(a2, b2)) ++count;
        }
  return count;
}

}  // namespace

TEST_CASE("image_spectrum") {
  SUBCASE("x+y on {0,1}^2") {
    auto spectrum = image_spectrum(parse_bivariate("x + y"), rationals({0, 1}), rationals({0, 1}));
    CHECK(spectrum.multiplicity_of(Rational(0)) == 1);
    CHECK(spectrum.multiplicity_of(Rational(1)) == 2);
    CHECK(spectrum.multiplicity_of(Rational(2)) == 1);
    CHECK(spectrum.total == 4);
  }
  SUBCASE("xy on {1,2,3}^2") {
    auto spectrum =
        image_spectrum(parse_bivariate("x*y"), rationals({1, 2, 3}), rationals({1, 2, 3}));
    CHECK(spectrum.distinct() == 6);
    CHECK(spectrum.multiplicity_of(Rational(1)) == 1);
    CHECK(spectrum.multiplicity_of(Rational(2)) == 2);
    CHECK(spectrum.multiplicity_of(Rational(3)) == 2);
    CHECK(spectrum.multiplicity_of(Rational(4)) == 1);
    CHECK(spectrum.multiplicity_of(Rational(6)) == 2);
    CHECK(spectrum.multiplicity_of(Rational(9)) == 1);
  }
  SUBCASE("constant polynomial") {
    auto spectrum =
        image_spectrum(parse_bivariate("7"), rationals({1, 2}), rationals({1, 2, 3}));
    REQUIRE(spectrum.entries.size() == 1);
    CHECK(spectrum.multiplicity_of(Rational(7)) == 6);
  }
}

TEST_CASE("expansion_energy") {
  auto sum_spec = image_spectrum(parse_bivariate("x + y"), rationals({0, 1}), rationals({0, 1}));
  CHECK(expansion_energy(sum_spec) == 6);
  CHECK(Rational(expansion_energy(sum_spec)) >= Rational(16, 3));

  auto prod_spec =
      image_spectrum(parse_bivariate("x*y"), rationals({1, 2, 3}), rationals({1, 2, 3}));
  CHECK(expansion_energy(prod_spec) == 15);

  auto const_spec = image_spectrum(parse_bivariate("5"), rationals({1, 2}), rationals({3, 4}));
  CHECK(expansion_energy(const_spec) == 16);  // (|A||B|)^2, the equality case

  std::mt19937_64 gen(10);
  for (int trial = 0; trial < 8; ++trial) {
    std::set<Rational> a_raw, b_raw;
    while (a_raw.size() < 4) a_raw.insert(Rational(static_cast<std::int64_t>(gen() % 19) - 9,
                                                   1 + static_cast<std::int64_t>(gen() % 3)));
    while (b_raw.size() < 5) b_raw.insert(Rational(static_cast<std::int64_t>(gen() % 19) - 9,
                                                   1 + static_cast<std::int64_t>(gen() % 3)));
    std::vector<Rational> a_set(a_raw.begin(), a_raw.end());
    std::vector<Rational> b_set(b_raw.begin(), b_raw.end());
    for (const auto& f : {parse_bivariate("x*y"), parse_bivariate("x^2 - 2*x*y + 2*y^2"),
                          parse_bivariate("x^2*y^2 + x*y")}) {
      auto spectrum = image_spectrum(f, a_set, b_set);
      CHECK(expansion_energy(spectrum) == quadruple_oracle(f, a_set, b_set));
      // Cauchy-Schwarz lower bound, exact
      CHECK(expansion_energy(spectrum) * BigInt(spectrum.distinct()) >=
            ipow(BigInt(spectrum.total), 2));
    }
  }
}

TEST_CASE("arithmetic_set") {
  CHECK(arithmetic_set(rationals({1, 2, 4}), '-').size() == 7);
  CHECK(arithmetic_set(rationals({1, 2, 4}), '/').size() == 5);
  CHECK(arithmetic_set(rationals({5}), '-') == rationals({0}));
  CHECK(arithmetic_set(rationals({1, 2}), '+').size() == 3);
  CHECK_THROWS_AS(arithmetic_set(rationals({0, 1}), '/'), validation_error);
  CHECK_THROWS_AS(arithmetic_set(rationals({1}), '%'), validation_error);
}

TEST_CASE("additive_degeneracy") {
  SUBCASE("x+y") {
    auto witness = additive_degeneracy(parse_bivariate("x + y"));
    REQUIRE(witness.has_value());
    CHECK(witness->a == Rational(1));
    CHECK(witness->b == Rational(1));
    CHECK(witness->h == parse_univariate("z"));
  }
  SUBCASE("xy is not degenerate") {
    CHECK_FALSE(additive_degeneracy(parse_bivariate("x*y")).has_value());
  }
  SUBCASE("two-line distance polynomials at s = 1, 2") {
    CHECK_FALSE(additive_degeneracy(parse_bivariate("x^2 - 2*x*y + 2*y^2")).has_value());
    CHECK_FALSE(additive_degeneracy(parse_bivariate("x^2 - 2*x*y + 5*y^2")).has_value());
  }
  SUBCASE("h(ax+by) is recognized with its direction") {
    auto f = parse_bivariate("(2*x - 3*y)^3 + (2*x - 3*y)");
    auto witness = additive_degeneracy(f);
    REQUIRE(witness.has_value());
    CHECK(witness->a == Rational(2));
    CHECK(witness->b == Rational(-3));
    auto line = BivariatePolynomial::var_x() * witness->a + BivariatePolynomial::var_y() * witness->b;
    CHECK(BivariatePolynomial::compose_outer(witness->h, line) == f);
  }
  SUBCASE("univariate-in-y polynomials") {
    auto witness = additive_degeneracy(parse_bivariate("y^2 + 1"));
    REQUIRE(witness.has_value());
    CHECK(witness->a == Rational(0));
    CHECK(witness->b == Rational(1));
  }
  SUBCASE("constant is rejected") {
    CHECK_THROWS_AS(additive_degeneracy(parse_bivariate("3")), validation_error);
  }
}

TEST_CASE("translation_symmetry_search") {
  std::vector<Rational> shifts = rationals({-1, 0, 1});
  SUBCASE("x+y: every nonzero shift pair collides") {
    auto collisions = translation_symmetry_search(parse_bivariate("x + y"), shifts, shifts);
    CHECK(collisions.size() == 8);
    bool found_1_m1 = false;
    for (const auto& [a, b] : collisions) {
      if (a == Rational(1) && b == Rational(-1)) found_1_m1 = true;
    }
    CHECK(found_1_m1);
  }
  SUBCASE("xy has none") {
    CHECK(translation_symmetry_search(parse_bivariate("x*y"), shifts, shifts).empty());
  }
  SUBCASE("zero-only shift sets find nothing") {
    CHECK(translation_symmetry_search(parse_bivariate("x*y"), rationals({0}), rationals({0}))
              .empty());
  }
  SUBCASE("cap") {
    std::vector<Rational> big(20, Rational(0));
    for (int i = 0; i < 20; ++i) big[i] = Rational(i);
    CHECK_THROWS_AS(translation_symmetry_search(parse_bivariate("x*y"), big, big, 100),
                    cap_exceeded);
  }
}

TEST_CASE("decompose") {
  SUBCASE("x^2*y^2 factors through xy") {
    auto result = decompose(parse_bivariate("x^2*y^2"));
    REQUIRE(result.has_value());
    CHECK(result->outer == parse_univariate("z^2"));
    CHECK(result->inner == parse_bivariate("x*y"));
  }
  SUBCASE("xy is indecomposable") {
    CHECK_FALSE(decompose(parse_bivariate("x*y")).has_value());
  }
  SUBCASE("x^2*y^2 + 2*x*y + 1 recomposes exactly") {
    auto f = parse_bivariate("x^2*y^2 + 2*x*y + 1");
    auto result = decompose(f);
    REQUIRE(result.has_value());
    CHECK(result->outer.degree() >= 2);
    CHECK(BivariatePolynomial::compose_outer(result->outer, result->inner) == f);
  }
  SUBCASE("degenerate squares decompose through the linear form") {
    auto f = parse_bivariate("(x + y)^2 + (x + y) + 3");
    auto result = decompose(f);
    REQUIRE(result.has_value());
    CHECK(BivariatePolynomial::compose_outer(result->outer, result->inner) == f);
  }
  SUBCASE("random compositions are recognized") {
    std::mt19937_64 gen(11);
    for (int trial = 0; trial < 10; ++trial) {
      std::vector<Rational> coeffs;
      unsigned deg = 2 + gen() % 2;
      for (unsigned i = 0; i < deg; ++i) {
        coeffs.emplace_back(static_cast<std::int64_t>(gen() % 9) - 4);
      }
      coeffs.emplace_back(1 + static_cast<std::int64_t>(gen() % 3));
      UnivariatePolynomial outer{coeffs};
      BivariatePolynomial inner;
      for (int t = 0; t < 3; ++t) {
        inner = inner + BivariatePolynomial::term(Rational(static_cast<std::int64_t>(gen() % 7) - 3),
                                                  gen() % 3, gen() % 3);
      }
      inner = inner + BivariatePolynomial::var_x() * Rational(1 + static_cast<std::int64_t>(gen() % 2));
      if (inner.total_degree() < 1) continue;
      auto f = BivariatePolynomial::compose_outer(outer, inner);
      auto result = decompose(f);
      REQUIRE(result.has_value());
      CHECK(BivariatePolynomial::compose_outer(result->outer, result->inner) == f);
      CHECK(result->outer.degree() >= 2);
    }
  }
  SUBCASE("indecomposable low-degree polynomials") {
    CHECK_FALSE(decompose(parse_bivariate("x^2 - 2*x*y + 2*y^2")).has_value());
    CHECK_FALSE(decompose(parse_bivariate("x^2 + y^3")).has_value());
    CHECK_FALSE(decompose(parse_bivariate("x + y^2")).has_value());
  }
  SUBCASE("degree cap") {
    CHECK_THROWS_AS(decompose(parse_bivariate("x^7*y^7"), 12), cap_exceeded);
    CHECK(decompose(parse_bivariate("x^7*y^7"), 14).has_value());
  }
}

TEST_CASE("compose_structured") {
  CHECK(compose_structured(parse_bivariate("x*y"), parse_univariate("z^2"),
                           parse_univariate("z^2")) == parse_bivariate("x^2*y^2"));
  auto f = parse_bivariate("x^2 - x*y + 3");
  CHECK(compose_structured(f, parse_univariate("z"), parse_univariate("z")) == f);
  CHECK(compose_structured(parse_bivariate("x + y"), parse_univariate("z^2"),
                           parse_univariate("z^2")) == parse_bivariate("x^2 + y^2"));
}

TEST_CASE("structured sets") {
  auto tau = parse_univariate("z^2");
  auto s = StructuredSet::make(rationals({-2, -1, 1, 2, 3}), tau);
  CHECK(s.values == rationals({1, 4, 9}));
  CHECK(s.preimage(Rational(4)) == Rational(-2));  // smallest generator wins
  CHECK(tau(s.preimage(Rational(9))) == Rational(9));
  CHECK_THROWS_AS(s.preimage(Rational(5)), validation_error);
}

TEST_CASE("curve_family") {
  auto small = rationals({1, 2});
  SUBCASE("xy on {1,2}^2 at j=1: 27 distinct members") {
    auto family = curve_family(parse_bivariate("x*y"), small, small, 1);
    CHECK(family.members.size() == 27);
    CHECK(family.proportional_collisions == 0);
  }
  SUBCASE("additively degenerate x+y collides") {
    auto family = curve_family(parse_bivariate("x + y"), small, small, 1);
    CHECK(family.proportional_collisions > 0);
  }
  SUBCASE("j above the maximum multiplicity gives an empty family") {
    auto family = curve_family(parse_bivariate("x*y"), small, small, 100);
    CHECK(family.members.empty());
  }
  SUBCASE("structured mode composes and uses generator differences") {
    auto tau = parse_univariate("z^2");
    auto sa = StructuredSet::make(rationals({1, 2}), tau);
    auto sb = StructuredSet::make(rationals({1, 2}), tau);
    // f(tau(x), tau(y)) = x^2 + y^4 is indecomposable, so no collisions.
    auto family = curve_family(parse_bivariate("x + y^2"), {}, {}, 1,
                               std::make_pair(sa, sb));
    CHECK(family.members.size() > 0);
    CHECK(family.proportional_collisions == 0);
  }
  SUBCASE("cap") {
    std::vector<Rational> big;
    for (int i = 0; i < 30; ++i) big.emplace_back(i);
    CHECK_THROWS_AS(curve_family(parse_bivariate("x*y"), big, big, 1, std::nullopt, 1000),
                    cap_exceeded);
  }
}

TEST_CASE("richness_incidence_check") {
  SUBCASE("xy on {1,2}^2 at j=1") {
    auto report = richness_incidence_check(parse_bivariate("x*y"), rationals({1, 2}),
                                           rationals({1, 2}), 1);
    CHECK(report.k_j == 3);
    CHECK(report.required == 12);
    CHECK(report.holds);
  }
  SUBCASE("richness at j=2 on {1,2,3}^2 uses the 2-rich values {2,3,6}") {
    auto f = parse_bivariate("x*y");
    auto spectrum = image_spectrum(f, rationals({1, 2, 3}), rationals({1, 2, 3}));
    std::set<Rational> rich;
    for (const auto& [value, count] : spectrum.entries) {
      if (count >= 2) rich.insert(value);
    }
    CHECK(rich == std::set<Rational>{Rational(2), Rational(3), Rational(6)});
    auto report = richness_incidence_check(f, rationals({1, 2, 3}), rationals({1, 2, 3}), 2);
    CHECK(report.k_j == 3);
    CHECK(report.holds);
  }
  SUBCASE("empty rich set holds vacuously") {
    auto report = richness_incidence_check(parse_bivariate("x*y"), rationals({1, 2}),
                                           rationals({1, 2}), 50);
    CHECK(report.k_j == 0);
    CHECK(report.required == 0);
    CHECK(report.holds);
  }
  SUBCASE("table route agrees with the generic incidence counter") {
    auto f = parse_bivariate("x*y");
    auto a_set = rationals({1, 2});
    auto b_set = rationals({1, 2});
    auto family = curve_family(f, a_set, b_set, 1);
    std::vector<Point> grid;
    for (const auto& a : a_set)
      for (const auto& b : b_set) grid.push_back(Point{a, b});
    std::vector<PlaneCurve> curves;
    for (const auto& member : family.members) curves.push_back(PlaneCurve::from_poly(member.poly));
    auto generic = count_incidences(PointSet::of(std::move(grid)), curves);
    auto report = richness_incidence_check(f, a_set, b_set, 1);
    CHECK(report.incidences == BigInt(generic.count));
  }
}

TEST_CASE("check_value_bound") {
  auto grid_set = rationals({1, 2, 3, 4, 5, 6});
  for (const auto& f : {parse_bivariate("x*y"), parse_bivariate("x^2 + y^3"),
                        parse_bivariate("x^2 - 2*x*y + 2*y^2")}) {
    auto report = check_value_bound(f, grid_set, grid_set);
    CHECK(report.bound_holds);
    CHECK(report.violations.empty());
  }
}
