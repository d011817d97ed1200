#include "snc/rational.hpp"

#include <stdexcept>

namespace snc {

Rational make_rational(const BigInt& num, const BigInt& den) {
  if (den == 0) throw std::invalid_argument("zero denominator");
  return Rational(num, den);
}

std::string to_string(const Rational& r) {
  const BigInt den = denominator_of(r);
  if (den == 1) return numerator_of(r).str();
  return numerator_of(r).str() + "/" + den.str();
}

std::string to_decimal(const Rational& r, int digits) {
  BigInt num = numerator_of(r);
  const BigInt den = denominator_of(r);
  std::string sign;
  if (num < 0) {
    sign = "-";
    num = -num;
  }
  BigInt scale = 1;
  for (int k = 0; k < digits; ++k) scale *= 10;
  const BigInt scaled = num * scale / den;
  std::string text = (scaled / scale).str();
  if (digits > 0) {
    std::string frac = (scaled % scale).str();
    frac.insert(0, static_cast<std::size_t>(digits) - frac.size(), '0');
    text += "." + frac;
  }
  return sign + text;
}

}  // namespace snc
