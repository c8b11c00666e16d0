#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace sclab {

/// Exact nonnegative integer. Every formula value is computed in this type;
/// no floating point is used anywhere in the formula layer.
using Nat = boost::multiprecision::cpp_int;

/// 2^exponent, exact.
Nat pow2(long exponent);

/// Exact nonnegative rational, stored reduced.
struct Ratio {
  Nat num{0};
  Nat den{1};

  Ratio() = default;
  Ratio(Nat numerator, Nat denominator);
  explicit Ratio(long value) : num(value) {}

  std::string str() const;

  friend bool operator==(const Ratio&, const Ratio&) = default;
};

bool operator<(const Ratio& a, const Ratio& b);
bool operator>(const Ratio& a, const Ratio& b);
bool operator<=(const Ratio& a, const Ratio& b);
bool operator>=(const Ratio& a, const Ratio& b);

}  // namespace sclab
