#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace disten {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Thrown when an input violates an operation's stated preconditions.
struct validation_error : std::runtime_error {
  explicit validation_error(const std::string& what) : std::runtime_error(what) {}
};

/// Thrown when an enumeration would exceed its configured work cap.
struct cap_exceeded : std::runtime_error {
  explicit cap_exceeded(const std::string& what) : std::runtime_error(what) {}
};

/// Parses "p/q" or "p" with optional sign. Rejects zero denominators.
Rational parse_rational(std::string_view text);

/// Canonical text form: "p" when the denominator is 1, else "p/q".
std::string to_string(const Rational& value);

BigInt ipow(const BigInt& base, std::uint64_t exponent);

/// Exact binomial coefficient; 0 when k > n.
BigInt binomial(std::uint64_t n, std::uint64_t k);

/// Largest integer r with r*r <= value. Requires value >= 0.
BigInt isqrt_floor(const BigInt& value);

}  // namespace disten
