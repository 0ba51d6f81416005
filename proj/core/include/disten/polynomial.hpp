#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "disten/rational.hpp"

namespace disten {

/// Dense univariate polynomial with exact rational coefficients, stored
/// lowest degree first with a nonzero leading coefficient (or empty for the
/// zero polynomial).
class UnivariatePolynomial {
 public:
  UnivariatePolynomial() = default;
  explicit UnivariatePolynomial(std::vector<Rational> coefficients);
  static UnivariatePolynomial constant(Rational value);
  static UnivariatePolynomial identity();  // z

  bool is_zero() const { return coefficients_.empty(); }
  bool is_constant() const { return coefficients_.size() <= 1; }
  int degree() const { return static_cast<int>(coefficients_.size()) - 1; }
  const std::vector<Rational>& coefficients() const { return coefficients_; }
  Rational coefficient(std::size_t power) const;
  Rational operator()(const Rational& value) const;

  UnivariatePolynomial operator+(const UnivariatePolynomial& other) const;
  UnivariatePolynomial operator-(const UnivariatePolynomial& other) const;
  UnivariatePolynomial operator*(const UnivariatePolynomial& other) const;
  UnivariatePolynomial operator*(const Rational& scalar) const;
  friend bool operator==(const UnivariatePolynomial&, const UnivariatePolynomial&) = default;

  std::string str(char variable = 'z') const;

 private:
  std::vector<Rational> coefficients_;
};

using Monomial = std::pair<unsigned, unsigned>;  // (x exponent, y exponent)

/// Sparse bivariate polynomial with exact rational coefficients; zero
/// coefficients are never stored, so the representation is canonical.
class BivariatePolynomial {
 public:
  BivariatePolynomial() = default;
  static BivariatePolynomial constant(Rational value);
  static BivariatePolynomial var_x();
  static BivariatePolynomial var_y();
  static BivariatePolynomial term(Rational coefficient, unsigned xe, unsigned ye);

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  int total_degree() const;  // -1 for the zero polynomial
  unsigned degree_x() const;
  unsigned degree_y() const;
  const std::map<Monomial, Rational>& terms() const { return terms_; }
  Rational coefficient(unsigned xe, unsigned ye) const;

  Rational operator()(const Rational& x, const Rational& y) const;

  BivariatePolynomial operator+(const BivariatePolynomial& other) const;
  BivariatePolynomial operator-(const BivariatePolynomial& other) const;
  BivariatePolynomial operator*(const BivariatePolynomial& other) const;
  BivariatePolynomial operator*(const Rational& scalar) const;
  friend bool operator==(const BivariatePolynomial&, const BivariatePolynomial&) = default;
  friend bool operator<(const BivariatePolynomial& a, const BivariatePolynomial& b) {
    return a.terms_ < b.terms_;
  }

  BivariatePolynomial pow(unsigned exponent) const;
  BivariatePolynomial partial_x() const;
  BivariatePolynomial partial_y() const;

  /// f(x + a, y + b), expanded exactly.
  BivariatePolynomial shift(const Rational& a, const Rational& b) const;

  /// f(u(x), v(y)) for univariate u, v.
  BivariatePolynomial substitute(const UnivariatePolynomial& u,
                                 const UnivariatePolynomial& v) const;

  /// f(g(x,y)) for univariate f applied to a bivariate inner polynomial.
  static BivariatePolynomial compose_outer(const UnivariatePolynomial& outer,
                                           const BivariatePolynomial& inner);

  /// Substitute x = value, leaving a univariate polynomial in y.
  UnivariatePolynomial at_x(const Rational& value) const;
  /// Substitute y = value, leaving a univariate polynomial in x.
  UnivariatePolynomial at_y(const Rational& value) const;

  /// Homogeneous part of the given total degree.
  BivariatePolynomial homogeneous_part(unsigned degree) const;

  /// Largest monomial in graded-lex order, with its coefficient.
  std::pair<Monomial, Rational> leading_term() const;

  /// Scaled so the graded-lex leading coefficient is 1. Two polynomials are
  /// proportional iff their monic forms are equal.
  BivariatePolynomial monic() const;

  /// Exact quotient if divisor divides this polynomial, otherwise nothing.
  std::optional<BivariatePolynomial> divide_exact(const BivariatePolynomial& divisor) const;

  std::string str() const;

 private:
  void set(unsigned xe, unsigned ye, Rational value);
  std::map<Monomial, Rational> terms_;
};

/// Parses "3/2*x^2*y - y + 1"; juxtaposition ("2 x y") also multiplies.
BivariatePolynomial parse_bivariate(std::string_view text);

/// Parses a polynomial in the single variable x (or z).
UnivariatePolynomial parse_univariate(std::string_view text);

}  // namespace disten
