#pragma once

#include <algorithm>
#include <cstdint>
#include <limits>
#include <cstddef>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "bigint.hpp"
#include "errors.hpp"
#include "limits.hpp"
#include "matrix.hpp"
#include "smith.hpp"

namespace kas {

// Finitely generated abelian group Z^free_rank + Z/d1 + ... + Z/dk with
// 2 <= d1 | d2 | ... | dk. The canonical form is unique, so isomorphism is
// structural equality.
class FgAbelianGroup {
 public:
  FgAbelianGroup() = default;

  // Canonicalizes an arbitrary direct sum of cyclic groups. Orders equal to
  // 0 are infinite cyclic summands; orders equal to 1 vanish.
  FgAbelianGroup(std::size_t free_rank, std::vector<BigInt> cyclic_orders) : free_rank_(free_rank) {
    for (auto& c : cyclic_orders) {
      c = abs_value(c);
      if (c == 0)
        ++free_rank_;
      else if (c != 1)
        factors_.push_back(std::move(c));
    }
    canonicalize();
  }

  static FgAbelianGroup trivial() { return {}; }
  static FgAbelianGroup free(std::size_t rank) { return FgAbelianGroup(rank, {}); }
  static FgAbelianGroup integers() { return free(1); }
  static FgAbelianGroup cyclic(const BigInt& m) { return FgAbelianGroup(0, {m}); }

  std::size_t free_rank() const noexcept { return free_rank_; }
  const std::vector<BigInt>& invariant_factors() const noexcept { return factors_; }

  bool is_trivial() const noexcept { return free_rank_ == 0 && factors_.empty(); }
  bool is_finite() const noexcept { return free_rank_ == 0; }

  // Order of the group, or nullopt when it is infinite.
  std::optional<BigInt> cardinality() const {
    if (free_rank_ != 0) return std::nullopt;
    BigInt n = 1;
    for (const auto& f : factors_) n *= f;
    return n;
  }

  std::string to_string() const {
    if (is_trivial()) return "0";
    std::string out;
    auto append = [&out](const std::string& s) {
      if (!out.empty()) out += " + ";
      out += s;
    };
    if (free_rank_ == 1) append("Z");
    if (free_rank_ > 1) append("Z^" + std::to_string(free_rank_));
    for (const auto& f : factors_) append("Z/" + f.str());
    return out;
  }

  friend bool operator==(const FgAbelianGroup&, const FgAbelianGroup&) = default;

  friend std::ostream& operator<<(std::ostream& os, const FgAbelianGroup& g) { return os << g.to_string(); }

 private:
  // Pairwise (gcd, lcm) replacement preserves the isomorphism class
  // (Z/a + Z/b = Z/gcd + Z/lcm) and leaves factors_[i] dividing every later one.
  void canonicalize() {
    auto& f = factors_;
    for (std::size_t i = 0; i < f.size(); ++i)
      for (std::size_t j = i + 1; j < f.size(); ++j) {
        BigInt g = gcd(f[i], f[j]);
        BigInt l = f[i] / g * f[j];
        f[i] = std::move(g);
        f[j] = std::move(l);
      }
    f.erase(std::remove(f.begin(), f.end(), BigInt(1)), f.end());
  }

  std::size_t free_rank_ = 0;
  std::vector<BigInt> factors_;
};

// Cokernel of the relation matrix: rows are relations among `cols()` generators.
inline FgAbelianGroup from_presentation(const IntegerMatrix& relations, const Limits& limits = {}) {
  const std::size_t generators = relations.cols();
  if (relations.rows() == 0) return FgAbelianGroup::free(generators);
  std::vector<BigInt> diag = smith_diagonal(relations, limits);
  std::size_t nonzero = 0;
  std::vector<BigInt> torsion;
  for (auto& d : diag)
    if (d != 0) {
      ++nonzero;
      torsion.push_back(std::move(d));
    }
  return FgAbelianGroup(generators - nonzero, std::move(torsion));
}

inline FgAbelianGroup direct_sum(const FgAbelianGroup& a, const FgAbelianGroup& b) {
  std::vector<BigInt> orders = a.invariant_factors();
  orders.insert(orders.end(), b.invariant_factors().begin(), b.invariant_factors().end());
  return FgAbelianGroup(a.free_rank() + b.free_rank(), std::move(orders));
}

inline FgAbelianGroup tensor(const FgAbelianGroup& a, const FgAbelianGroup& b) {
  std::vector<BigInt> orders;
  for (std::size_t k = 0; k < b.free_rank(); ++k)
    orders.insert(orders.end(), a.invariant_factors().begin(), a.invariant_factors().end());
  for (std::size_t k = 0; k < a.free_rank(); ++k)
    orders.insert(orders.end(), b.invariant_factors().begin(), b.invariant_factors().end());
  for (const auto& x : a.invariant_factors())
    for (const auto& y : b.invariant_factors()) orders.push_back(gcd(x, y));
  return FgAbelianGroup(a.free_rank() * b.free_rank(), std::move(orders));
}

inline FgAbelianGroup tor_product(const FgAbelianGroup& a, const FgAbelianGroup& b) {
  std::vector<BigInt> orders;
  for (const auto& x : a.invariant_factors())
    for (const auto& y : b.invariant_factors()) orders.push_back(gcd(x, y));
  return FgAbelianGroup(0, std::move(orders));
}

inline std::optional<BigInt> cardinality(const FgAbelianGroup& a) { return a.cardinality(); }

// JSON form {free_rank, invariant_factors}. Factors that do not fit in 64
// bits are written as decimal strings.
inline void to_json(nlohmann::ordered_json& j, const FgAbelianGroup& g) {
  auto factors = nlohmann::ordered_json::array();
  for (const auto& f : g.invariant_factors()) {
    if (f <= BigInt(std::numeric_limits<std::uint64_t>::max()))
      factors.push_back(static_cast<std::uint64_t>(f));
    else
      factors.push_back(f.str());
  }
  j = nlohmann::ordered_json{{"free_rank", g.free_rank()}, {"invariant_factors", std::move(factors)}};
}

inline void from_json(const nlohmann::ordered_json& j, FgAbelianGroup& g) {
  std::vector<BigInt> orders;
  for (const auto& f : j.at("invariant_factors")) {
    BigInt v = f.is_string() ? BigInt(f.get<std::string>()) : BigInt(f.get<std::uint64_t>());
    if (v < 2) throw Error(ErrorKind::InvalidArgument, "invariant factors must be at least 2");
    orders.push_back(std::move(v));
  }
  g = FgAbelianGroup(j.at("free_rank").get<std::size_t>(), orders);
  if (g.invariant_factors() != orders)
    throw Error(ErrorKind::InvalidArgument, "invariant factors are not in canonical form");
}

}  // namespace kas
