#include <catch2/catch_amalgamated.hpp>

#include "test_support.hpp"

using namespace kas;

TEST_CASE("validate_prime_power", "[kfield]") {
  CHECK(validate_prime_power(9) == PrimePower{9, 3, 2});
  CHECK(validate_prime_power(2) == PrimePower{2, 2, 1});
  CHECK(validate_prime_power(1024) == PrimePower{1024, 2, 10});
  CHECK(validate_prime_power(4294967291ULL) == PrimePower{4294967291ULL, 4294967291ULL, 1});
  for (std::uint64_t bad : {0, 1, 6, 12, 100}) {
    try {
      validate_prime_power(bad);
      FAIL("accepted " << bad);
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::NotAPrimePower);
    }
  }
}

TEST_CASE("K-groups of finite fields", "[kfield]") {
  const auto f2 = validate_prime_power(2);
  CHECK(k_finite_field(f2, 3) == FgAbelianGroup::cyclic(3));
  CHECK(k_finite_field(f2, 5) == FgAbelianGroup::cyclic(7));
  CHECK(k_finite_field(f2, 1).is_trivial());
  CHECK(k_finite_field(validate_prime_power(5), 0) == FgAbelianGroup::integers());
  CHECK(k_finite_field(validate_prime_power(7), 4).is_trivial());
  for (long long n = -5; n < 0; ++n) CHECK(k_finite_field(f2, n).is_trivial());
}

TEST_CASE("odd K-groups have order q^i - 1", "[kfield][property]") {
  for (std::uint64_t q : {2, 3, 4, 5, 7, 8, 9}) {
    const auto field = validate_prime_power(q);
    BigInt power = 1;
    for (unsigned i = 1; i <= 10; ++i) {
      power *= q;
      const auto k = k_finite_field(field, 2 * i - 1);
      REQUIRE(k.free_rank() == 0);
      REQUIRE(k.invariant_factors().size() <= 1);  // cyclic
      REQUIRE(*k.cardinality() == power - 1);
      REQUIRE(k_finite_field(field, 2 * i).is_trivial());
    }
  }
}

TEST_CASE("K-groups of large fields stay exact", "[kfield]") {
  const auto field = validate_prime_power(4294967291ULL);
  const auto k = k_finite_field(field, 19);
  CHECK(*k.cardinality() == boost::multiprecision::pow(BigInt(4294967291ULL), 10) - 1);
}
