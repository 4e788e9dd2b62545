#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "abelian.hpp"
#include "errors.hpp"
#include "groups.hpp"
#include "kfield.hpp"

namespace kas {

// Structure of F_q[G] when it is semisimple. Field degrees are only known
// for abelian G, where every simple component is a field.
struct WedderburnSummary {
  bool semisimple = false;
  std::optional<std::size_t> d;
  std::optional<std::vector<std::size_t>> field_degrees;
  std::string method = "q-classes";
};

inline bool is_semisimple(const FiniteGroup& g, const PrimePower& field) { return g.order() % field.p != 0; }

namespace detail {

inline void require_semisimple(const FiniteGroup& g, const PrimePower& field) {
  if (!is_semisimple(g, field))
    throw Error(ErrorKind::NotSemisimple, "characteristic " + std::to_string(field.p) + " divides |G| = " +
                                              std::to_string(g.order()));
}

// Orbits of a set of maps on {0, ..., n-1}, each orbit sorted, orbits
// ordered by their least element.
template <class Step>
std::vector<std::vector<std::size_t>> orbits(std::size_t n, Step&& neighbours) {
  std::vector<char> seen(n, 0);
  std::vector<std::vector<std::size_t>> out;
  for (std::size_t start = 0; start < n; ++start) {
    if (seen[start]) continue;
    std::vector<std::size_t> orbit{start};
    seen[start] = 1;
    for (std::size_t head = 0; head < orbit.size(); ++head)
      neighbours(orbit[head], [&](std::size_t y) {
        if (!seen[y]) {
          seen[y] = 1;
          orbit.push_back(y);
        }
      });
    std::sort(orbit.begin(), orbit.end());
    out.push_back(std::move(orbit));
  }
  return out;
}

inline std::vector<std::size_t> sorted_sizes(const std::vector<std::vector<std::size_t>>& parts) {
  std::vector<std::size_t> sizes;
  for (const auto& p : parts) sizes.push_back(p.size());
  std::sort(sizes.begin(), sizes.end());
  return sizes;
}

}  // namespace detail

// q-classes: x ~ g x^(q^m) g^-1 for all g in G and m >= 0.
inline std::vector<std::vector<Element>> q_classes(const FiniteGroup& g, const PrimePower& field) {
  detail::require_semisimple(g, field);
  return detail::orbits(g.order(), [&](std::size_t x, auto&& visit) {
    visit(g.power(x, field.q));
    for (Element h = 0; h < g.order(); ++h) visit(g.multiply(g.multiply(h, x), g.inverse(h)));
  });
}

// Number of simple components of F_q[G], counted as q-classes.
inline std::size_t component_count(const FiniteGroup& g, const PrimePower& field) {
  return q_classes(g, field).size();
}

// For abelian G every component is a field F_{q^f}; the degrees f are the
// orbit sizes of x -> x^q.
inline WedderburnSummary abelian_wedderburn(const FiniteGroup& g, const PrimePower& field) {
  if (!g.is_abelian()) throw Error(ErrorKind::NotAbelian, "field degrees need an abelian group");
  const auto classes = q_classes(g, field);
  WedderburnSummary s;
  s.semisimple = true;
  s.d = classes.size();
  s.field_degrees = detail::sorted_sizes(classes);
  return s;
}

inline WedderburnSummary wedderburn_summary(const FiniteGroup& g, const PrimePower& field) {
  if (!is_semisimple(g, field)) return WedderburnSummary{};
  if (g.is_abelian()) return abelian_wedderburn(g, field);
  WedderburnSummary s;
  s.semisimple = true;
  s.d = component_count(g, field);
  return s;
}

// Field degrees from the orbits of chi -> chi^q on the character group,
// which for abelian G is the sum of Z/n_i over its invariant factors.
inline WedderburnSummary character_orbit_wedderburn(const FiniteGroup& g, const PrimePower& field) {
  if (!g.is_abelian()) throw Error(ErrorKind::NotAbelian, "character orbits need an abelian group");
  detail::require_semisimple(g, field);
  std::vector<std::size_t> moduli;
  const FgAbelianGroup dual = abelianization(g);
  for (const auto& f : dual.invariant_factors()) moduli.push_back(static_cast<std::size_t>(f));
  // Mixed-radix encoding of characters.
  std::size_t total = 1;
  for (auto m : moduli) total *= m;
  auto scale = [&](std::size_t code) {
    std::size_t out = 0, place = 1;
    for (auto m : moduli) {
      const std::size_t digit = code % m;
      code /= m;
      out += static_cast<std::size_t>((static_cast<unsigned __int128>(digit) * field.q) % m) * place;
      place *= m;
    }
    return out;
  };
  const auto orbits = detail::orbits(total, [&](std::size_t x, auto&& visit) { visit(scale(x)); });
  WedderburnSummary s;
  s.semisimple = true;
  s.d = orbits.size();
  s.field_degrees = detail::sorted_sizes(orbits);
  s.method = "character-orbits";
  return s;
}

// q-cyclotomic cosets modulo n: orbits of r -> q r on Z/n, sorted sizes.
inline std::vector<std::size_t> cyclotomic_coset_sizes(std::size_t n, std::uint64_t q) {
  if (n == 0) throw Error(ErrorKind::InvalidArgument, "modulus must be positive");
  return detail::sorted_sizes(detail::orbits(n, [&](std::size_t r, auto&& visit) {
    visit(static_cast<std::size_t>((static_cast<unsigned __int128>(r) * q) % n));
  }));
}

// K_n(F_q[G]) through Morita invariance and Quillen's computation. Returns
// nullopt for odd n > 0 and nonabelian G, where field degrees are unknown.
inline std::optional<FgAbelianGroup> k_group_ring(const FiniteGroup& g, const PrimePower& field, long long n) {
  detail::require_semisimple(g, field);
  if (n < 0) return FgAbelianGroup::trivial();
  if (n == 0) return FgAbelianGroup::free(component_count(g, field));
  if (n % 2 == 0) return FgAbelianGroup::trivial();
  if (!g.is_abelian()) return std::nullopt;
  // Component F_{q^f} contributes K_{2i-1} = Z/(q^(f i) - 1).
  const auto i = static_cast<unsigned>((n + 1) / 2);
  std::vector<BigInt> orders;
  const WedderburnSummary summary = abelian_wedderburn(g, field);
  for (std::size_t f : *summary.field_degrees)
    orders.push_back(boost::multiprecision::pow(BigInt(field.q), static_cast<unsigned>(f) * i) - 1);
  FgAbelianGroup out(0, std::move(orders));
  return out;
}

inline void to_json(nlohmann::ordered_json& j, const WedderburnSummary& s) {
  j = nlohmann::ordered_json::object();
  j["semisimple"] = s.semisimple;
  j["d"] = s.d ? nlohmann::ordered_json(*s.d) : nlohmann::ordered_json(nullptr);
  if (s.field_degrees) j["field_degrees"] = *s.field_degrees;
  j["method"] = s.method;
}

}  // namespace kas
