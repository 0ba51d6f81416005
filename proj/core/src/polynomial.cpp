#include "disten/polynomial.hpp"

#include <algorithm>
#include <cctype>

namespace disten {

UnivariatePolynomial::UnivariatePolynomial(std::vector<Rational> coefficients)
    : coefficients_(std::move(coefficients)) {
  while (!coefficients_.empty() && coefficients_.back() == 0) coefficients_.pop_back();
}

UnivariatePolynomial UnivariatePolynomial::constant(Rational value) {
  return UnivariatePolynomial({std::move(value)});
}

UnivariatePolynomial UnivariatePolynomial::identity() {
  return UnivariatePolynomial({Rational(0), Rational(1)});
}

Rational UnivariatePolynomial::coefficient(std::size_t power) const {
  if (power >= coefficients_.size()) return Rational(0);
  return coefficients_[power];
}

Rational UnivariatePolynomial::operator()(const Rational& value) const {
  Rational acc = 0;
  for (auto it = coefficients_.rbegin(); it != coefficients_.rend(); ++it) {
    acc = acc * value + *it;
  }
  return acc;
}

UnivariatePolynomial UnivariatePolynomial::operator+(const UnivariatePolynomial& other) const {
  std::vector<Rational> out(std::max(coefficients_.size(), other.coefficients_.size()), Rational(0));
  for (std::size_t i = 0; i < coefficients_.size(); ++i) out[i] += coefficients_[i];
  for (std::size_t i = 0; i < other.coefficients_.size(); ++i) out[i] += other.coefficients_[i];
  return UnivariatePolynomial(std::move(out));
}

UnivariatePolynomial UnivariatePolynomial::operator-(const UnivariatePolynomial& other) const {
  std::vector<Rational> out(std::max(coefficients_.size(), other.coefficients_.size()), Rational(0));
  for (std::size_t i = 0; i < coefficients_.size(); ++i) out[i] += coefficients_[i];
  for (std::size_t i = 0; i < other.coefficients_.size(); ++i) out[i] -= other.coefficients_[i];
  return UnivariatePolynomial(std::move(out));
}

UnivariatePolynomial UnivariatePolynomial::operator*(const UnivariatePolynomial& other) const {
  if (is_zero() || other.is_zero()) return {};
  std::vector<Rational> out(coefficients_.size() + other.coefficients_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < coefficients_.size(); ++i) {
    for (std::size_t j = 0; j < other.coefficients_.size(); ++j) {
      out[i + j] += coefficients_[i] * other.coefficients_[j];
    }
  }
  return UnivariatePolynomial(std::move(out));
}

UnivariatePolynomial UnivariatePolynomial::operator*(const Rational& scalar) const {
  std::vector<Rational> out = coefficients_;
  for (auto& c : out) c *= scalar;
  return UnivariatePolynomial(std::move(out));
}

namespace {

std::string monomial_str(const std::string& var, unsigned exponent) {
  if (exponent == 0) return {};
  if (exponent == 1) return var;
  return var + "^" + std::to_string(exponent);
}

std::string join_terms(std::vector<std::pair<Rational, std::string>> terms) {
  if (terms.empty()) return "0";
  std::string out;
  for (std::size_t i = 0; i < terms.size(); ++i) {
    Rational coeff = terms[i].first;
    const std::string& mono = terms[i].second;
    bool negative = coeff < 0;
    if (i == 0) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    Rational mag = negative ? Rational(-coeff) : coeff;
    if (mono.empty()) {
      out += to_string(mag);
    } else if (mag == 1) {
      out += mono;
    } else {
      out += to_string(mag) + "*" + mono;
    }
  }
  return out;
}

}  // namespace

std::string UnivariatePolynomial::str(char variable) const {
  std::vector<std::pair<Rational, std::string>> terms;
  for (std::size_t i = coefficients_.size(); i-- > 0;) {
    if (coefficients_[i] == 0) continue;
    terms.emplace_back(coefficients_[i], monomial_str(std::string(1, variable), static_cast<unsigned>(i)));
  }
  return join_terms(std::move(terms));
}

void BivariatePolynomial::set(unsigned xe, unsigned ye, Rational value) {
  if (value == 0) {
    terms_.erase({xe, ye});
  } else {
    terms_[{xe, ye}] = std::move(value);
  }
}

BivariatePolynomial BivariatePolynomial::constant(Rational value) {
  BivariatePolynomial p;
  p.set(0, 0, std::move(value));
  return p;
}

BivariatePolynomial BivariatePolynomial::var_x() { return term(Rational(1), 1, 0); }
BivariatePolynomial BivariatePolynomial::var_y() { return term(Rational(1), 0, 1); }

BivariatePolynomial BivariatePolynomial::term(Rational coefficient, unsigned xe, unsigned ye) {
  BivariatePolynomial p;
  p.set(xe, ye, std::move(coefficient));
  return p;
}

bool BivariatePolynomial::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == Monomial{0, 0});
}

int BivariatePolynomial::total_degree() const {
  int deg = -1;
  for (const auto& [mono, coeff] : terms_) deg = std::max(deg, static_cast<int>(mono.first + mono.second));
  return deg;
}

unsigned BivariatePolynomial::degree_x() const {
  unsigned deg = 0;
  for (const auto& [mono, coeff] : terms_) deg = std::max(deg, mono.first);
  return deg;
}

unsigned BivariatePolynomial::degree_y() const {
  unsigned deg = 0;
  for (const auto& [mono, coeff] : terms_) deg = std::max(deg, mono.second);
  return deg;
}

Rational BivariatePolynomial::coefficient(unsigned xe, unsigned ye) const {
  auto it = terms_.find({xe, ye});
  return it == terms_.end() ? Rational(0) : it->second;
}

Rational BivariatePolynomial::operator()(const Rational& x, const Rational& y) const {
  // Group by x-exponent, Horner in both variables.
  Rational acc = 0;
  unsigned dx = degree_x();
  for (unsigned i = dx + 1; i-- > 0;) {
    Rational row = 0;
    unsigned dy = 0;
    for (const auto& [mono, coeff] : terms_) {
      if (mono.first == i) dy = std::max(dy, mono.second);
    }
    for (unsigned j = dy + 1; j-- > 0;) {
      row = row * y + coefficient(i, j);
    }
    acc = acc * x + row;
  }
  return acc;
}

BivariatePolynomial BivariatePolynomial::operator+(const BivariatePolynomial& other) const {
  BivariatePolynomial out = *this;
  for (const auto& [mono, coeff] : other.terms_) {
    out.set(mono.first, mono.second, out.coefficient(mono.first, mono.second) + coeff);
  }
  return out;
}

BivariatePolynomial BivariatePolynomial::operator-(const BivariatePolynomial& other) const {
  BivariatePolynomial out = *this;
  for (const auto& [mono, coeff] : other.terms_) {
    out.set(mono.first, mono.second, out.coefficient(mono.first, mono.second) - coeff);
  }
  return out;
}

BivariatePolynomial BivariatePolynomial::operator*(const BivariatePolynomial& other) const {
  BivariatePolynomial out;
  for (const auto& [ma, ca] : terms_) {
    for (const auto& [mb, cb] : other.terms_) {
      unsigned xe = ma.first + mb.first;
      unsigned ye = ma.second + mb.second;
      out.set(xe, ye, out.coefficient(xe, ye) + ca * cb);
    }
  }
  return out;
}

BivariatePolynomial BivariatePolynomial::operator*(const Rational& scalar) const {
  if (scalar == 0) return {};
  BivariatePolynomial out;
  for (const auto& [mono, coeff] : terms_) out.terms_[mono] = coeff * scalar;
  return out;
}

BivariatePolynomial BivariatePolynomial::pow(unsigned exponent) const {
  BivariatePolynomial result = constant(Rational(1));
  BivariatePolynomial base = *this;
  while (exponent > 0) {
    if (exponent & 1) result = result * base;
    exponent >>= 1;
    if (exponent > 0) base = base * base;
  }
  return result;
}

BivariatePolynomial BivariatePolynomial::partial_x() const {
  BivariatePolynomial out;
  for (const auto& [mono, coeff] : terms_) {
    if (mono.first == 0) continue;
    out.set(mono.first - 1, mono.second, coeff * Rational(mono.first));
  }
  return out;
}

BivariatePolynomial BivariatePolynomial::partial_y() const {
  BivariatePolynomial out;
  for (const auto& [mono, coeff] : terms_) {
    if (mono.second == 0) continue;
    out.set(mono.first, mono.second - 1, coeff * Rational(mono.second));
  }
  return out;
}

BivariatePolynomial BivariatePolynomial::shift(const Rational& a, const Rational& b) const {
  BivariatePolynomial out;
  for (const auto& [mono, coeff] : terms_) {
    // (x+a)^i (y+b)^j expanded binomially.
    std::vector<Rational> xs(mono.first + 1), ys(mono.second + 1);
    Rational pa = 1;
    for (unsigned s = mono.first + 1; s-- > 0;) {
      xs[s] = Rational(binomial(mono.first, s)) * pa;
      pa *= a;
    }
    Rational pb = 1;
    for (unsigned t = mono.second + 1; t-- > 0;) {
      ys[t] = Rational(binomial(mono.second, t)) * pb;
      pb *= b;
    }
    for (unsigned s = 0; s <= mono.first; ++s) {
      if (xs[s] == 0) continue;
      for (unsigned t = 0; t <= mono.second; ++t) {
        if (ys[t] == 0) continue;
        out.set(s, t, out.coefficient(s, t) + coeff * xs[s] * ys[t]);
      }
    }
  }
  return out;
}

BivariatePolynomial BivariatePolynomial::substitute(const UnivariatePolynomial& u,
                                                    const UnivariatePolynomial& v) const {
  BivariatePolynomial ub;
  for (std::size_t i = 0; i < u.coefficients().size(); ++i) {
    if (u.coefficients()[i] != 0) ub = ub + term(u.coefficients()[i], static_cast<unsigned>(i), 0);
  }
  BivariatePolynomial vb;
  for (std::size_t i = 0; i < v.coefficients().size(); ++i) {
    if (v.coefficients()[i] != 0) vb = vb + term(v.coefficients()[i], 0, static_cast<unsigned>(i));
  }

  std::vector<BivariatePolynomial> upow{constant(Rational(1))};
  std::vector<BivariatePolynomial> vpow{constant(Rational(1))};
  for (unsigned i = 1; i <= degree_x(); ++i) upow.push_back(upow.back() * ub);
  for (unsigned j = 1; j <= degree_y(); ++j) vpow.push_back(vpow.back() * vb);

  BivariatePolynomial out;
  for (const auto& [mono, coeff] : terms_) {
    out = out + upow[mono.first] * vpow[mono.second] * coeff;
  }
  return out;
}

BivariatePolynomial BivariatePolynomial::compose_outer(const UnivariatePolynomial& outer,
                                                       const BivariatePolynomial& inner) {
  BivariatePolynomial acc;
  const auto& c = outer.coefficients();
  for (std::size_t i = c.size(); i-- > 0;) {
    acc = acc * inner + constant(c[i]);
  }
  return acc;
}

UnivariatePolynomial BivariatePolynomial::at_x(const Rational& value) const {
  std::vector<Rational> out(degree_y() + 1, Rational(0));
  for (const auto& [mono, coeff] : terms_) {
    Rational xv = 1;
    for (unsigned i = 0; i < mono.first; ++i) xv *= value;
    out[mono.second] += coeff * xv;
  }
  return UnivariatePolynomial(std::move(out));
}

UnivariatePolynomial BivariatePolynomial::at_y(const Rational& value) const {
  std::vector<Rational> out(degree_x() + 1, Rational(0));
  for (const auto& [mono, coeff] : terms_) {
    Rational yv = 1;
    for (unsigned j = 0; j < mono.second; ++j) yv *= value;
    out[mono.first] += coeff * yv;
  }
  return UnivariatePolynomial(std::move(out));
}

BivariatePolynomial BivariatePolynomial::homogeneous_part(unsigned degree) const {
  BivariatePolynomial out;
  for (const auto& [mono, coeff] : terms_) {
    if (mono.first + mono.second == degree) out.terms_[mono] = coeff;
  }
  return out;
}

std::pair<Monomial, Rational> BivariatePolynomial::leading_term() const {
  if (terms_.empty()) throw validation_error("leading term of the zero polynomial");
  auto best = terms_.begin();
  for (auto it = terms_.begin(); it != terms_.end(); ++it) {
    unsigned deg_it = it->first.first + it->first.second;
    unsigned deg_best = best->first.first + best->first.second;
    if (deg_it > deg_best || (deg_it == deg_best && it->first.first > best->first.first)) {
      best = it;
    }
  }
  return {best->first, best->second};
}

BivariatePolynomial BivariatePolynomial::monic() const {
  if (terms_.empty()) return {};
  auto [mono, coeff] = leading_term();
  return *this * Rational(denominator(coeff), numerator(coeff));
}

std::optional<BivariatePolynomial> BivariatePolynomial::divide_exact(
    const BivariatePolynomial& divisor) const {
  if (divisor.is_zero()) throw validation_error("division by the zero polynomial");
  BivariatePolynomial rem = *this;
  BivariatePolynomial quot;
  auto [dmono, dcoeff] = divisor.leading_term();
  while (!rem.is_zero()) {
    auto [rmono, rcoeff] = rem.leading_term();
    if (rmono.first < dmono.first || rmono.second < dmono.second) return std::nullopt;
    BivariatePolynomial t =
        term(rcoeff / dcoeff, rmono.first - dmono.first, rmono.second - dmono.second);
    quot = quot + t;
    rem = rem - t * divisor;
  }
  return quot;
}

std::string BivariatePolynomial::str() const {
  std::vector<std::pair<Monomial, Rational>> sorted(terms_.begin(), terms_.end());
  std::sort(sorted.begin(), sorted.end(), [](const auto& a, const auto& b) {
    unsigned da = a.first.first + a.first.second;
    unsigned db = b.first.first + b.first.second;
    if (da != db) return da > db;
    return a.first.first > b.first.first;
  });
  std::vector<std::pair<Rational, std::string>> parts;
  for (const auto& [mono, coeff] : sorted) {
    std::string xs = monomial_str("x", mono.first);
    std::string ys = monomial_str("y", mono.second);
    std::string monostr = xs;
    if (!ys.empty()) monostr += (monostr.empty() ? "" : "*") + ys;
    parts.emplace_back(coeff, monostr);
  }
  return join_terms(std::move(parts));
}

namespace {

struct Lexer {
  std::string_view text;
  std::size_t pos = 0;

  enum class Kind { Number, X, Y, Plus, Minus, Star, Caret, LParen, RParen, End };
  struct Token {
    Kind kind;
    Rational value;
  };
  Token current;

  explicit Lexer(std::string_view t) : text(t) { advance(); }

  void advance() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos >= text.size()) {
      current = {Kind::End, Rational(0)};
      return;
    }
    char c = text[pos];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
      if (pos < text.size() && text[pos] == '/') {
        std::size_t slash = pos;
        ++pos;
        if (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
          while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        } else {
          pos = slash;  // lone slash is not part of a literal
        }
      }
      current = {Kind::Number, parse_rational(text.substr(start, pos - start))};
      return;
    }
    ++pos;
    switch (c) {
      case 'x': current = {Kind::X, Rational(0)}; return;
      case 'z': current = {Kind::X, Rational(0)}; return;  // univariate alias
      case 'y': current = {Kind::Y, Rational(0)}; return;
      case '+': current = {Kind::Plus, Rational(0)}; return;
      case '-': current = {Kind::Minus, Rational(0)}; return;
      case '*': current = {Kind::Star, Rational(0)}; return;
      case '^': current = {Kind::Caret, Rational(0)}; return;
      case '(': current = {Kind::LParen, Rational(0)}; return;
      case ')': current = {Kind::RParen, Rational(0)}; return;
      default:
        throw validation_error(std::string("unexpected character '") + c + "' in polynomial");
    }
  }
};

class PolyParser {
 public:
  explicit PolyParser(std::string_view text) : lex_(text) {}

  BivariatePolynomial parse() {
    auto p = parse_expr();
    if (lex_.current.kind != Lexer::Kind::End) {
      throw validation_error("trailing input in polynomial");
    }
    return p;
  }

 private:
  Lexer lex_;

  bool starts_factor() const {
    switch (lex_.current.kind) {
      case Lexer::Kind::Number:
      case Lexer::Kind::X:
      case Lexer::Kind::Y:
      case Lexer::Kind::LParen:
        return true;
      default:
        return false;
    }
  }

  BivariatePolynomial parse_expr() {
    BivariatePolynomial acc = parse_term();
    while (lex_.current.kind == Lexer::Kind::Plus || lex_.current.kind == Lexer::Kind::Minus) {
      bool minus = lex_.current.kind == Lexer::Kind::Minus;
      lex_.advance();
      auto rhs = parse_term();
      acc = minus ? acc - rhs : acc + rhs;
    }
    return acc;
  }

  BivariatePolynomial parse_term() {
    BivariatePolynomial acc = parse_signed();
    while (lex_.current.kind == Lexer::Kind::Star || starts_factor()) {
      if (lex_.current.kind == Lexer::Kind::Star) lex_.advance();
      acc = acc * parse_signed();
    }
    return acc;
  }

  BivariatePolynomial parse_signed() {
    if (lex_.current.kind == Lexer::Kind::Minus) {
      lex_.advance();
      return parse_signed() * Rational(-1);
    }
    return parse_power();
  }

  BivariatePolynomial parse_power() {
    BivariatePolynomial base = parse_primary();
    if (lex_.current.kind == Lexer::Kind::Caret) {
      lex_.advance();
      if (lex_.current.kind != Lexer::Kind::Number || denominator(lex_.current.value) != 1 ||
          lex_.current.value < 0) {
        throw validation_error("exponent must be a nonnegative integer");
      }
      unsigned e = numerator(lex_.current.value).convert_to<unsigned>();
      lex_.advance();
      return base.pow(e);
    }
    return base;
  }

  BivariatePolynomial parse_primary() {
    switch (lex_.current.kind) {
      case Lexer::Kind::Number: {
        auto v = lex_.current.value;
        lex_.advance();
        return BivariatePolynomial::constant(v);
      }
      case Lexer::Kind::X:
        lex_.advance();
        return BivariatePolynomial::var_x();
      case Lexer::Kind::Y:
        lex_.advance();
        return BivariatePolynomial::var_y();
      case Lexer::Kind::LParen: {
        lex_.advance();
        auto p = parse_expr();
        if (lex_.current.kind != Lexer::Kind::RParen) {
          throw validation_error("missing closing parenthesis");
        }
        lex_.advance();
        return p;
      }
      default:
        throw validation_error("expected a number, variable, or parenthesis");
    }
  }
};

}  // namespace

BivariatePolynomial parse_bivariate(std::string_view text) {
  return PolyParser(text).parse();
}

UnivariatePolynomial parse_univariate(std::string_view text) {
  auto p = parse_bivariate(text);
  if (p.degree_y() != 0) throw validation_error("expected a univariate polynomial");
  std::vector<Rational> coeffs(p.degree_x() + 1, Rational(0));
  for (const auto& [mono, coeff] : p.terms()) coeffs[mono.first] = coeff;
  return UnivariatePolynomial(std::move(coeffs));
}

}  // namespace disten
