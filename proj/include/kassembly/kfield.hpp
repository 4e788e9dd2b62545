#pragma once

#include <cstdint>
#include <string>

#include "abelian.hpp"
#include "bigint.hpp"
#include "errors.hpp"

namespace kas {

// q = p^e with p prime.
struct PrimePower {
  std::uint64_t q = 2;
  std::uint64_t p = 2;
  unsigned e = 1;

  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

// Trial factorization; the smallest divisor found is the only candidate prime.
inline PrimePower validate_prime_power(std::uint64_t q) {
  if (q < 2) throw Error(ErrorKind::NotAPrimePower, std::to_string(q) + " is not a prime power");
  std::uint64_t p = q;
  for (std::uint64_t d = 2; d <= q / d; ++d)
    if (q % d == 0) {
      p = d;
      break;
    }
  std::uint64_t rest = q;
  unsigned e = 0;
  while (rest % p == 0) {
    rest /= p;
    ++e;
  }
  if (rest != 1) throw Error(ErrorKind::NotAPrimePower, std::to_string(q) + " is not a prime power");
  return {q, p, e};
}

// Quillen's computation: K_0 = Z, K_{2i-1} = Z/(q^i - 1), and K_n = 0 for
// even n > 0 and for n < 0.
inline FgAbelianGroup k_finite_field(const PrimePower& field, long long n) {
  if (n < 0) return FgAbelianGroup::trivial();
  if (n == 0) return FgAbelianGroup::integers();
  if (n % 2 == 0) return FgAbelianGroup::trivial();
  const auto i = static_cast<unsigned>((n + 1) / 2);
  return FgAbelianGroup::cyclic(boost::multiprecision::pow(BigInt(field.q), i) - 1);
}

}  // namespace kas
