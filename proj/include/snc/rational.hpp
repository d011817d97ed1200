#pragma once

#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace snc {

// Exact arbitrary-precision rationals; always kept in canonical form
// (reduced, positive denominator).
using BigInt = boost::multiprecision::number<
    boost::multiprecision::cpp_int_backend<>, boost::multiprecision::et_off>;
using Rational =
    boost::multiprecision::number<boost::multiprecision::cpp_rational_backend,
                                  boost::multiprecision::et_off>;

/// Builds num/den, throwing std::invalid_argument when den == 0.
Rational make_rational(const BigInt& num, const BigInt& den);

inline BigInt numerator_of(const Rational& r) {
  return boost::multiprecision::numerator(r);
}
inline BigInt denominator_of(const Rational& r) {
  return boost::multiprecision::denominator(r);
}

/// "p/q", or just "p" when the denominator is 1.
std::string to_string(const Rational& r);

/// Decimal expansion truncated toward zero after `digits` fractional digits.
std::string to_decimal(const Rational& r, int digits);

}  // namespace snc
