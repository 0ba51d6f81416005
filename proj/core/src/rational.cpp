#include "disten/rational.hpp"

namespace disten {

Rational parse_rational(std::string_view text) {
  if (text.empty()) throw validation_error("empty rational literal");
  auto slash = text.find('/');
  try {
    if (slash == std::string_view::npos) {
      return Rational(BigInt(std::string(text)));
    }
    BigInt num{std::string(text.substr(0, slash))};
    BigInt den{std::string(text.substr(slash + 1))};
    if (den == 0) throw validation_error("zero denominator in \"" + std::string(text) + "\"");
    return Rational(num, den);
  } catch (const validation_error&) {
    throw;
  } catch (const std::exception&) {
    throw validation_error("malformed rational \"" + std::string(text) + "\"");
  }
}

std::string to_string(const Rational& value) {
  if (denominator(value) == 1) return numerator(value).str();
  return numerator(value).str() + "/" + denominator(value).str();
}

BigInt ipow(const BigInt& base, std::uint64_t exponent) {
  BigInt result = 1;
  BigInt b = base;
  while (exponent > 0) {
    if (exponent & 1) result *= b;
    exponent >>= 1;
    if (exponent > 0) b *= b;
  }
  return result;
}

BigInt binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  if (k > n - k) k = n - k;
  BigInt result = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    result *= BigInt(n - k + i);
    result /= BigInt(i);
  }
  return result;
}

BigInt isqrt_floor(const BigInt& value) {
  if (value < 0) throw validation_error("isqrt of negative value");
  return boost::multiprecision::sqrt(value);
}

}  // namespace disten
