#include "sclab/bignum.hpp"

#include <stdexcept>
#include <utility>

namespace sclab {

Nat pow2(long exponent) {
  if (exponent < 0) throw std::invalid_argument("pow2: negative exponent");
  if (exponent > 4000000) throw std::invalid_argument("pow2: exponent too large");
  return Nat(1) << static_cast<unsigned long>(exponent);
}

Ratio::Ratio(Nat numerator, Nat denominator)
    : num(std::move(numerator)), den(std::move(denominator)) {
  if (den == 0) throw std::invalid_argument("Ratio: zero denominator");
  if (num < 0 || den < 0) throw std::invalid_argument("Ratio: negative operand");
  Nat g = boost::multiprecision::gcd(num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
}

std::string Ratio::str() const {
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

bool operator<(const Ratio& a, const Ratio& b) { return a.num * b.den < b.num * a.den; }
bool operator>(const Ratio& a, const Ratio& b) { return b < a; }
bool operator<=(const Ratio& a, const Ratio& b) { return !(b < a); }
bool operator>=(const Ratio& a, const Ratio& b) { return !(a < b); }

}  // namespace sclab
