#include "disten/expansion.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace disten {

MultiplicitySpectrum image_spectrum(const BivariatePolynomial& f,
                                    const std::vector<Rational>& a_set,
                                    const std::vector<Rational>& b_set) {
  std::map<Rational, std::uint64_t> counts;
  for (const auto& a : a_set) {
    // Partial evaluation keeps the inner loop univariate.
    auto row = f.at_x(a);
    for (const auto& b : b_set) ++counts[row(b)];
  }
  MultiplicitySpectrum spectrum;
  for (auto& [key, count] : counts) {
    spectrum.entries.emplace_back(key, count);
    spectrum.total += count;
  }
  return spectrum;
}

BigInt expansion_energy(const MultiplicitySpectrum& spectrum) {
  BigInt sum = 0;
  for (const auto& [key, count] : spectrum.entries) sum += BigInt(count) * BigInt(count);
  return sum;
}

std::vector<Rational> arithmetic_set(const std::vector<Rational>& a_set, char op) {
  if (op == '/') {
    for (const auto& a : a_set) {
      if (a == 0) throw validation_error("arithmetic_set: division with 0 in the set");
    }
  }
  std::set<Rational> out;
  for (const auto& a : a_set) {
    for (const auto& b : a_set) {
      switch (op) {
        case '+': out.insert(a + b); break;
        case '-': out.insert(a - b); break;
        case '*': out.insert(a * b); break;
        case '/': out.insert(a / b); break;
        default: throw validation_error("arithmetic_set: unknown operator");
      }
    }
  }
  return {out.begin(), out.end()};
}

namespace {

// Scales (a, b) to coprime integers with the first nonzero entry positive.
std::pair<Rational, Rational> normalize_direction(const Rational& a, const Rational& b) {
  BigInt den = boost::multiprecision::lcm(denominator(a), denominator(b));
  BigInt na = numerator(a) * (den / denominator(a));
  BigInt nb = numerator(b) * (den / denominator(b));
  BigInt g = boost::multiprecision::gcd(abs(na), abs(nb));
  if (g != 0) {
    na /= g;
    nb /= g;
  }
  if (na < 0 || (na == 0 && nb < 0)) {
    na = -na;
    nb = -nb;
  }
  return {Rational(na), Rational(nb)};
}

std::optional<UnivariatePolynomial> outer_along_direction(const BivariatePolynomial& f,
                                                          const Rational& a, const Rational& b) {
  // f = h(ax + by): read h off a coordinate axis and verify exactly.
  UnivariatePolynomial restricted = (a != 0) ? f.at_y(Rational(0)) : f.at_x(Rational(0));
  Rational scale = (a != 0) ? a : b;
  std::vector<Rational> coeffs = restricted.coefficients();
  Rational power = 1;
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    coeffs[k] /= power;
    power *= scale;
  }
  UnivariatePolynomial h{std::move(coeffs)};
  BivariatePolynomial line = BivariatePolynomial::var_x() * a + BivariatePolynomial::var_y() * b;
  if (BivariatePolynomial::compose_outer(h, line) == f) return h;
  return std::nullopt;
}

}  // namespace

std::optional<DegeneracyWitness> additive_degeneracy(const BivariatePolynomial& f) {
  if (f.is_constant()) throw validation_error("additive_degeneracy: constant polynomial");
  auto fx = f.partial_x();
  auto fy = f.partial_y();

  Rational a, b;
  if (fx.is_zero()) {
    a = 0;
    b = 1;
  } else if (fy.is_zero()) {
    a = 1;
    b = 0;
  } else {
    auto [mono, lead] = fy.leading_term();
    Rational ratio = fx.coefficient(mono.first, mono.second) / lead;
    if (!(fx - fy * ratio).is_zero()) return std::nullopt;
    std::tie(a, b) = normalize_direction(ratio, Rational(1));
  }

  auto h = outer_along_direction(f, a, b);
  if (!h) return std::nullopt;
  return DegeneracyWitness{a, b, *h};
}

std::vector<std::pair<Rational, Rational>> translation_symmetry_search(
    const BivariatePolynomial& f, const std::vector<Rational>& a_shifts,
    const std::vector<Rational>& b_shifts, std::uint64_t grid_cap) {
  if (static_cast<std::uint64_t>(a_shifts.size()) * b_shifts.size() > grid_cap) {
    throw cap_exceeded("translation_symmetry_search: shift grid exceeds cap " +
                       std::to_string(grid_cap));
  }
  std::vector<Rational> as = a_shifts, bs = b_shifts;
  std::sort(as.begin(), as.end());
  std::sort(bs.begin(), bs.end());
  std::vector<std::pair<Rational, Rational>> collisions;
  for (const auto& a0 : as) {
    for (const auto& b0 : bs) {
      if (a0 == 0 && b0 == 0) continue;
      if ((f.shift(a0, b0) - f).is_constant()) collisions.emplace_back(a0, b0);
    }
  }
  return collisions;
}

namespace {

// Monic e-th root of a monic homogeneous form, by descending coefficient
// matching; nothing if no polynomial root exists.
std::optional<BivariatePolynomial> monic_homogeneous_root(const BivariatePolynomial& form,
                                                          unsigned e, unsigned k) {
  auto [lead, lead_coeff] = form.leading_term();
  if (lead.first % e != 0 || lead.second % e != 0) return std::nullopt;
  Monomial mu{lead.first / e, lead.second / e};
  BivariatePolynomial g = BivariatePolynomial::term(Rational(1), mu.first, mu.second);
  unsigned tail = static_cast<unsigned>(e - 1);
  for (unsigned iter = 0; iter <= k + 1; ++iter) {
    BivariatePolynomial residual = form - g.pow(e);
    if (residual.is_zero()) return g;
    auto [rmono, rcoeff] = residual.leading_term();
    if (rmono.first < tail * mu.first || rmono.second < tail * mu.second) return std::nullopt;
    Monomial w{rmono.first - tail * mu.first, rmono.second - tail * mu.second};
    if (w.first + w.second != k) return std::nullopt;
    // must be strictly below mu in graded-lex to make progress
    if (w.first >= mu.first) return std::nullopt;
    g = g + BivariatePolynomial::term(rcoeff / Rational(e), w.first, w.second);
  }
  return std::nullopt;
}

std::optional<Decomposition> try_decompose_order(const BivariatePolynomial& f, unsigned e) {
  const unsigned n = static_cast<unsigned>(f.total_degree());
  const unsigned k = n / e;
  BivariatePolynomial top = f.homogeneous_part(n);
  auto [lead, lead_coeff] = top.leading_term();
  BivariatePolynomial monic_top = top * (Rational(1) / lead_coeff);
  auto root = monic_homogeneous_root(monic_top, e, k);
  if (!root) return std::nullopt;

  // Inner polynomial: monic leading form plus lower homogeneous parts
  // determined band by band; its constant term is normalized to zero.
  BivariatePolynomial inner = *root;
  BivariatePolynomial divisor = root->pow(e - 1) * Rational(e);
  for (unsigned j = 1; j < k; ++j) {
    BivariatePolynomial residual =
        f.homogeneous_part(n - j) * (Rational(1) / lead_coeff) - inner.pow(e).homogeneous_part(n - j);
    if (residual.is_zero()) continue;
    auto part = residual.divide_exact(divisor);
    if (!part) return std::nullopt;
    for (const auto& [mono, coeff] : part->terms()) {
      if (mono.first + mono.second != k - j) return std::nullopt;
    }
    inner = inner + *part;
  }

  // Outer coefficients, highest power first; leading monomials of the inner
  // powers are distinct, so the system is triangular.
  std::vector<BivariatePolynomial> powers(e + 1);
  powers[0] = BivariatePolynomial::constant(Rational(1));
  for (unsigned i = 1; i <= e; ++i) powers[i] = powers[i - 1] * inner;
  std::vector<Rational> outer_coeffs(e + 1, Rational(0));
  BivariatePolynomial rem = f;
  for (unsigned i = e + 1; i-- > 0;) {
    if (rem.is_zero()) break;
    auto [mu, mu_coeff] = powers[i].leading_term();
    Rational c = rem.coefficient(mu.first, mu.second) / mu_coeff;
    if (c != 0) {
      outer_coeffs[i] = c;
      rem = rem - powers[i] * c;
    }
  }
  if (!rem.is_zero()) return std::nullopt;
  UnivariatePolynomial outer{std::move(outer_coeffs)};
  if (outer.degree() != static_cast<int>(e)) return std::nullopt;
  if (BivariatePolynomial::compose_outer(outer, inner) != f) return std::nullopt;
  return Decomposition{std::move(outer), std::move(inner)};
}

}  // namespace

std::optional<Decomposition> decompose(const BivariatePolynomial& f, unsigned degree_cap) {
  int deg = f.total_degree();
  if (deg < 2) return std::nullopt;
  if (static_cast<unsigned>(deg) > degree_cap) {
    throw cap_exceeded("decompose: degree " + std::to_string(deg) + " exceeds cap " +
                       std::to_string(degree_cap));
  }
  const unsigned n = static_cast<unsigned>(deg);
  for (unsigned e = 2; e <= n; ++e) {
    if (n % e != 0) continue;
    if (auto result = try_decompose_order(f, e)) return result;
  }
  return std::nullopt;
}

BivariatePolynomial compose_structured(const BivariatePolynomial& f,
                                       const UnivariatePolynomial& tau_a,
                                       const UnivariatePolynomial& tau_b) {
  return f.substitute(tau_a, tau_b);
}

StructuredSet StructuredSet::make(std::vector<Rational> generators, UnivariatePolynomial tau) {
  std::sort(generators.begin(), generators.end());
  generators.erase(std::unique(generators.begin(), generators.end()), generators.end());
  std::set<Rational> values;
  for (const auto& g : generators) values.insert(tau(g));
  StructuredSet out;
  out.generators = std::move(generators);
  out.tau = std::move(tau);
  out.values.assign(values.begin(), values.end());
  return out;
}

Rational StructuredSet::preimage(const Rational& value) const {
  for (const auto& g : generators) {
    if (tau(g) == value) return g;
  }
  throw validation_error("StructuredSet::preimage: value not in tau(generators)");
}

CurveFamily curve_family(const BivariatePolynomial& f, const std::vector<Rational>& a_set,
                         const std::vector<Rational>& b_set, std::uint64_t j,
                         const std::optional<std::pair<StructuredSet, StructuredSet>>& structured,
                         std::uint64_t member_cap) {
  if (j < 1) throw validation_error("curve_family requires j >= 1");
  if (f.is_constant()) throw validation_error("curve_family: constant polynomial");

  BivariatePolynomial carrier = f;
  std::vector<Rational> a_shifts, b_shifts;
  MultiplicitySpectrum spectrum;
  if (structured) {
    carrier = compose_structured(f, structured->first.tau, structured->second.tau);
    a_shifts = arithmetic_set(structured->first.generators, '-');
    b_shifts = arithmetic_set(structured->second.generators, '-');
    spectrum = image_spectrum(f, structured->first.values, structured->second.values);
  } else {
    a_shifts = arithmetic_set(a_set, '-');
    b_shifts = arithmetic_set(b_set, '-');
    spectrum = image_spectrum(f, a_set, b_set);
  }

  std::vector<Rational> rich_values;
  for (const auto& [value, count] : spectrum.entries) {
    if (count >= j) rich_values.push_back(value);
  }

  std::uint64_t expected = static_cast<std::uint64_t>(a_shifts.size()) * b_shifts.size() *
                           rich_values.size();
  if (expected > member_cap) {
    throw cap_exceeded("curve_family: " + std::to_string(expected) + " members exceed cap " +
                       std::to_string(member_cap));
  }

  CurveFamily family;
  family.j = j;
  family.members.reserve(expected);
  std::map<std::string, std::uint64_t> monic_forms;
  for (const auto& alpha : a_shifts) {
    for (const auto& beta : b_shifts) {
      BivariatePolynomial shifted = carrier.shift(alpha, beta);
      for (const auto& delta : rich_values) {
        BivariatePolynomial poly = shifted - BivariatePolynomial::constant(delta);
        ++monic_forms[poly.monic().str()];
        family.members.push_back(CurveMember{std::move(poly), alpha, beta, delta});
      }
    }
  }
  family.proportional_collisions = family.members.size() - monic_forms.size();
  return family;
}

RichnessReport richness_incidence_check(const BivariatePolynomial& f,
                                        const std::vector<Rational>& a_set,
                                        const std::vector<Rational>& b_set, std::uint64_t j,
                                        std::uint64_t member_cap) {
  auto family = curve_family(f, a_set, b_set, j, std::nullopt, member_cap);

  // Incidence of (a, b) with the member (alpha, beta, delta) means
  // f(a + alpha, b + beta) = delta; evaluations are shared through a table
  // over the shifted abscissas. Cross-checked against the generic
  // point-curve counter in the tests.
  std::set<Rational> xs_set, ys_set;
  std::set<Rational> alphas, betas;
  for (const auto& member : family.members) {
    alphas.insert(member.alpha);
    betas.insert(member.beta);
  }
  for (const auto& a : a_set) {
    for (const auto& alpha : alphas) xs_set.insert(a + alpha);
  }
  for (const auto& b : b_set) {
    for (const auto& beta : betas) ys_set.insert(b + beta);
  }
  std::map<Rational, std::size_t> xi, yi;
  std::size_t next = 0;
  for (const auto& x : xs_set) xi[x] = next++;
  next = 0;
  for (const auto& y : ys_set) yi[y] = next++;
  std::vector<std::vector<Rational>> table(xi.size(), std::vector<Rational>(yi.size()));
  for (const auto& [x, i] : xi) {
    auto row = f.at_x(x);
    for (const auto& [y, jdx] : yi) table[i][jdx] = row(y);
  }

  RichnessReport report;
  report.incidences = 0;
  std::uint64_t k_j = 0;
  {
    auto spectrum = image_spectrum(f, a_set, b_set);
    for (const auto& [value, count] : spectrum.entries) {
      if (count >= j) ++k_j;
    }
  }
  report.k_j = k_j;
  for (const auto& member : family.members) {
    for (const auto& a : a_set) {
      const auto& row = table[xi.at(a + member.alpha)];
      for (const auto& b : b_set) {
        if (row[yi.at(b + member.beta)] == member.delta) ++report.incidences;
      }
    }
  }
  report.required = BigInt(j) * BigInt(a_set.size()) * BigInt(b_set.size()) * BigInt(k_j);
  report.holds = report.incidences >= report.required;
  return report;
}

ValueBoundReport check_value_bound(const BivariatePolynomial& f,
                                   const std::vector<Rational>& a_set,
                                   const std::vector<Rational>& b_set) {
  ValueBoundReport report;
  if (f.is_constant()) {
    // A constant collapses the whole grid to one value; the lattice bound
    // does not apply.
    report.bound_holds = true;
    return report;
  }
  auto spectrum = image_spectrum(f, a_set, b_set);
  const std::uint64_t bound =
      static_cast<std::uint64_t>(f.total_degree()) * (a_set.size() + b_set.size());
  for (const auto& [value, count] : spectrum.entries) {
    if (count <= bound) continue;
    bool exempt = false;
    for (const auto& a : a_set) {
      auto row = f.at_x(a);
      if (row.is_constant() && row(Rational(0)) == value) {
        exempt = true;
        break;
      }
    }
    if (!exempt) {
      for (const auto& b : b_set) {
        auto col = f.at_y(b);
        if (col.is_constant() && col(Rational(0)) == value) {
          exempt = true;
          break;
        }
      }
    }
    if (exempt) {
      report.exempt_values.push_back(value);
    } else {
      report.violations.push_back(value);
      report.bound_holds = false;
    }
  }
  return report;
}

}  // namespace disten
