#include <catch2/catch_amalgamated.hpp>

#include <map>
#include <numeric>
#include <random>

#include "test_support.hpp"

using namespace kas;

namespace {

FgAbelianGroup Z(std::size_t r = 1) { return FgAbelianGroup::free(r); }
FgAbelianGroup Zm(long long m) { return FgAbelianGroup::cyclic(m); }

// Orders of all elements of a finite group presented as a list of cyclic
// summands, counted by brute force. Two finite abelian groups are isomorphic
// iff these multisets agree.
std::map<BigInt, std::size_t> order_profile(const std::vector<long long>& moduli) {
  std::map<BigInt, std::size_t> profile;
  std::vector<long long> x(moduli.size(), 0);
  for (;;) {
    BigInt ord = 1;
    for (std::size_t i = 0; i < moduli.size(); ++i) ord = lcm(ord, BigInt(moduli[i] / std::gcd(x[i], moduli[i])));
    ++profile[ord];
    std::size_t k = 0;
    while (k < moduli.size() && ++x[k] == moduli[k]) x[k++] = 0;
    if (k == moduli.size()) break;
  }
  return profile;
}

FgAbelianGroup random_group(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> rank(0, 2), count(0, 3), factor(1, 12);
  std::vector<BigInt> orders;
  for (int i = count(rng); i > 0; --i) orders.push_back(factor(rng));
  return FgAbelianGroup(static_cast<std::size_t>(rank(rng)), orders);
}

}  // namespace

TEST_CASE("canonical form of basic groups", "[abelian]") {
  CHECK(FgAbelianGroup().is_trivial());
  CHECK(Z().free_rank() == 1);
  CHECK(Z().invariant_factors().empty());
  CHECK(Zm(7).invariant_factors() == std::vector<BigInt>{7});
  CHECK(Zm(1).is_trivial());
  CHECK(FgAbelianGroup(0, {4, 2}).invariant_factors() == std::vector<BigInt>{2, 4});
  CHECK(FgAbelianGroup(0, {6, 10, 15}).invariant_factors() == std::vector<BigInt>{30, 30});
  CHECK(FgAbelianGroup(1, {0, 3}) == FgAbelianGroup(2, {3}));
}

TEST_CASE("canonicalization agrees with element-order profiles", "[abelian][oracle]") {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int> count(1, 4), factor(1, 12);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<long long> raw;
    for (int i = count(rng); i > 0; --i) raw.push_back(factor(rng));
    const FgAbelianGroup g(0, std::vector<BigInt>(raw.begin(), raw.end()));
    std::vector<long long> canonical;
    for (const auto& f : g.invariant_factors()) canonical.push_back(static_cast<long long>(f));
    for (std::size_t i = 1; i < canonical.size(); ++i) REQUIRE(canonical[i] % canonical[i - 1] == 0);
    REQUIRE(order_profile(raw) == order_profile(canonical));
  }
}

TEST_CASE("display syntax", "[abelian]") {
  CHECK(FgAbelianGroup().to_string() == "0");
  CHECK(Z().to_string() == "Z");
  CHECK(FgAbelianGroup(2, {2, 4}).to_string() == "Z^2 + Z/2 + Z/4");
  CHECK(Zm(6).to_string() == "Z/6");
}

TEST_CASE("from_presentation", "[abelian]") {
  CHECK(from_presentation(IntegerMatrix(0, 3)) == Z(3));
  // Z/2 + Z/3 is Z/6 (CRT: 1 has order 6 in Z/2 x Z/3).
  CHECK(order_profile({2, 3}) == order_profile({6}));
  CHECK(from_presentation(IntegerMatrix{{2, 0}, {0, 3}}) == Zm(6));
  CHECK(from_presentation(IntegerMatrix{{1}}).is_trivial());
  CHECK(from_presentation(IntegerMatrix{{2, 0, 0}}) == FgAbelianGroup(2, {2}));
}

TEST_CASE("from_presentation is invariant under unimodular changes", "[abelian][property]") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<std::size_t> dim(1, 4);
  for (int trial = 0; trial < 200; ++trial) {
    const auto a = test::random_matrix(rng, dim(rng), dim(rng), -6, 6, 0.7);
    const auto u = test::random_unimodular(rng, a.rows());
    const auto v = test::random_unimodular(rng, a.cols());
    REQUIRE(from_presentation(u * a * v) == from_presentation(a));
  }
}

TEST_CASE("direct_sum", "[abelian]") {
  CHECK(direct_sum(Z(), Z()) == Z(2));
  CHECK(direct_sum(Zm(2), Zm(4)) == FgAbelianGroup(0, {2, 4}));
  CHECK(direct_sum(Zm(2), Zm(4)).invariant_factors() == std::vector<BigInt>{2, 4});
  CHECK(direct_sum(Zm(2), Zm(3)) == Zm(6));

  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 200; ++trial) {
    const auto a = random_group(rng), b = random_group(rng), c = random_group(rng);
    REQUIRE(direct_sum(a, b) == direct_sum(b, a));
    REQUIRE(direct_sum(direct_sum(a, b), c) == direct_sum(a, direct_sum(b, c)));
  }
}

TEST_CASE("tensor and Tor", "[abelian]") {
  CHECK(tensor(Z(), Zm(5)) == Zm(5));
  CHECK(tensor(Zm(4), Zm(6)) == Zm(2));
  CHECK(tensor(Z(2), Zm(2)) == FgAbelianGroup(0, {2, 2}));
  CHECK(tor_product(Z(), Zm(5)).is_trivial());
  CHECK(tor_product(Zm(4), Zm(6)) == Zm(2));
  CHECK(tor_product(FgAbelianGroup(0, {2, 2}), Zm(2)) == FgAbelianGroup(0, {2, 2}));

  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 200; ++trial) {
    const auto a = random_group(rng), b = random_group(rng), c = random_group(rng);
    REQUIRE(tensor(a, b) == tensor(b, a));
    REQUIRE(tor_product(a, b) == tor_product(b, a));
    REQUIRE(tensor(direct_sum(a, b), c) == direct_sum(tensor(a, c), tensor(b, c)));
    REQUIRE(tor_product(direct_sum(a, b), c) == direct_sum(tor_product(a, c), tor_product(b, c)));
  }
}

TEST_CASE("cardinality", "[abelian]") {
  CHECK(cardinality(Zm(7)) == BigInt(7));
  CHECK_FALSE(cardinality(Z()).has_value());
  CHECK(cardinality(FgAbelianGroup(0, {2, 4})) == BigInt(8));
  CHECK(cardinality(FgAbelianGroup()) == BigInt(1));
}

TEST_CASE("JSON form", "[abelian]") {
  const FgAbelianGroup g(2, {2, 4});
  const nlohmann::ordered_json j = g;
  CHECK(j.dump() == R"({"free_rank":2,"invariant_factors":[2,4]})");
  CHECK(j.get<FgAbelianGroup>() == g);

  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 50; ++trial) {
    const auto a = random_group(rng);
    REQUIRE(nlohmann::ordered_json(a).get<FgAbelianGroup>() == a);
  }
  const FgAbelianGroup huge = FgAbelianGroup::cyclic(BigInt("1000000000000000000000000"));
  CHECK(nlohmann::ordered_json(huge).get<FgAbelianGroup>() == huge);

  CHECK_THROWS_AS(nlohmann::ordered_json::parse(R"({"free_rank":0,"invariant_factors":[4,2]})").get<FgAbelianGroup>(),
                  Error);
}
