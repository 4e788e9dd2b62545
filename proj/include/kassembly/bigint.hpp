#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace kas {

using BigInt = boost::multiprecision::cpp_int;

inline BigInt abs_value(const BigInt& x) { return x < 0 ? BigInt(-x) : x; }

inline BigInt gcd(const BigInt& a, const BigInt& b) {
  return boost::multiprecision::gcd(abs_value(a), abs_value(b));
}

inline BigInt lcm(const BigInt& a, const BigInt& b) {
  if (a == 0 || b == 0) return 0;
  return abs_value(a) / gcd(a, b) * abs_value(b);
}

inline std::string to_string(const BigInt& x) { return x.str(); }

}  // namespace kas
