#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "disten/polynomial.hpp"
#include "disten/spectrum.hpp"

namespace disten {

/// Value spectrum of f on A x B: each value's multiplicity counts ordered
/// pairs (a, b) with f(a, b) = value. total = |A||B|.
MultiplicitySpectrum image_spectrum(const BivariatePolynomial& f,
                                    const std::vector<Rational>& a_set,
                                    const std::vector<Rational>& b_set);

/// Sum of squared multiplicities; at least (|A||B|)^2 / D by Cauchy-Schwarz.
BigInt expansion_energy(const MultiplicitySpectrum& spectrum);

/// {a op a' : a, a' in A}, deduplicated. op is one of '+', '-', '*', '/'.
std::vector<Rational> arithmetic_set(const std::vector<Rational>& a_set, char op);

struct DegeneracyWitness {
  Rational a;
  Rational b;
  UnivariatePolynomial h;  // f = h(a*x + b*y)
};

/// Detects f = h(ax + by) via linear dependence of the two partial
/// derivatives; returns the normalized direction and outer polynomial.
/// Requires f nonconstant.
std::optional<DegeneracyWitness> additive_degeneracy(const BivariatePolynomial& f);

/// All nonzero shifts (a0, b0) from the given structure sets for which
/// f(x + a0, y + b0) - f(x, y) is a constant polynomial. Guarded by
/// |A_struct| * |B_struct| <= grid_cap.
std::vector<std::pair<Rational, Rational>> translation_symmetry_search(
    const BivariatePolynomial& f, const std::vector<Rational>& a_shifts,
    const std::vector<Rational>& b_shifts, std::uint64_t grid_cap = 10'000);

struct Decomposition {
  UnivariatePolynomial outer;   // degree >= 2
  BivariatePolynomial inner;
};

/// Searches for f = outer(inner) with deg(outer) >= 2, trying divisors of
/// deg f smallest first: take the monic e-th root of the leading form, fill
/// in lower-degree parts of the inner polynomial by descending coefficient
/// matching, then solve the outer coefficients and verify by exact
/// recomposition. Requires deg f <= degree_cap.
std::optional<Decomposition> decompose(const BivariatePolynomial& f, unsigned degree_cap = 12);

/// Exact expansion of f(tau_a(x), tau_b(y)).
BivariatePolynomial compose_structured(const BivariatePolynomial& f,
                                       const UnivariatePolynomial& tau_a,
                                       const UnivariatePolynomial& tau_b);

/// Finite set with polynomial structure: values = tau(generators). The
/// generator set acts as the stored one-sided inverse of tau.
struct StructuredSet {
  std::vector<Rational> generators;  // sorted, deduplicated
  UnivariatePolynomial tau;
  std::vector<Rational> values;  // sorted, deduplicated

  static StructuredSet make(std::vector<Rational> generators, UnivariatePolynomial tau);

  /// Some generator with tau(preimage) = value; smallest such generator.
  Rational preimage(const Rational& value) const;
};

struct CurveMember {
  BivariatePolynomial poly;  // f(x+alpha, y+beta) - delta, as written
  Rational alpha;
  Rational beta;
  Rational delta;
};

struct CurveFamily {
  std::vector<CurveMember> members;
  std::uint64_t j = 0;
  std::uint64_t proportional_collisions = 0;  // members minus distinct monic forms
};

/// Translated level curves of f over shifts from the difference sets of A
/// and B and over j-rich values. In structured mode the shifts come from
/// generator differences and the curves use the composed polynomial.
CurveFamily curve_family(const BivariatePolynomial& f, const std::vector<Rational>& a_set,
                         const std::vector<Rational>& b_set, std::uint64_t j,
                         const std::optional<std::pair<StructuredSet, StructuredSet>>& structured =
                             std::nullopt,
                         std::uint64_t member_cap = 200'000);

struct RichnessReport {
  BigInt incidences;
  BigInt required;  // j * |A| * |B| * k_j
  std::uint64_t k_j = 0;
  bool holds = false;
};

/// Exact incidence count of the grid A x B with the full curve family at
/// richness j, compared against the guaranteed minimum.
RichnessReport richness_incidence_check(const BivariatePolynomial& f,
                                        const std::vector<Rational>& a_set,
                                        const std::vector<Rational>& b_set, std::uint64_t j,
                                        std::uint64_t member_cap = 200'000);

struct ValueBoundReport {
  bool bound_holds = true;  // every m_delta <= deg(f) * (|A| + |B|)
  std::vector<Rational> exempt_values;  // values whose curve has an axis-parallel line through A or B
  std::vector<Rational> violations;     // non-exempt values breaking the bound
};

/// Checks the lattice-intersection bound on every spectrum value of f over
/// A x B, exempting values whose level curve contains an axis-parallel line
/// hitting A or B.
ValueBoundReport check_value_bound(const BivariatePolynomial& f,
                                   const std::vector<Rational>& a_set,
                                   const std::vector<Rational>& b_set);

}  // namespace disten
