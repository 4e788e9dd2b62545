#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "abelian.hpp"
#include "errors.hpp"
#include "grouprings.hpp"
#include "groups.hpp"
#include "homology.hpp"
#include "kfield.hpp"
#include "limits.hpp"

namespace kas {

inline constexpr const char* kToolVersion = "kassembly 0.1.0";

// E^2_{p,q} = H_p(G; K_q(F_q)) of the Atiyah-Hirzebruch spectral sequence
// for H_*(BG; K(F_q)). Stores the square 0 <= p, q <= N, which contains every
// entry of total degree <= N; rows q < 0 vanish and are not stored.
class E2Page {
 public:
  E2Page() = default;
  E2Page(int max_total_degree, std::map<std::pair<int, int>, FgAbelianGroup> entries)
      : max_total_degree_(max_total_degree), entries_(std::move(entries)) {}

  int max_total_degree() const noexcept { return max_total_degree_; }

  FgAbelianGroup at(int p, int q) const {
    if (p < 0 || q < 0) return FgAbelianGroup::trivial();
    auto it = entries_.find({p, q});
    if (it == entries_.end())
      throw Error(ErrorKind::InvalidArgument, "E2(" + std::to_string(p) + "," + std::to_string(q) + ") is outside the page");
    return it->second;
  }

  const std::map<std::pair<int, int>, FgAbelianGroup>& entries() const noexcept { return entries_; }

 private:
  int max_total_degree_ = 0;
  std::map<std::pair<int, int>, FgAbelianGroup> entries_;
};

inline E2Page e2_page(const FiniteGroup& g, const PrimePower& field, int max_total_degree, const Limits& limits = {}) {
  if (max_total_degree < 0) throw Error(ErrorKind::InvalidArgument, "negative total degree");
  const auto h = integral_homology_sequence(g, max_total_degree, limits);
  std::map<std::pair<int, int>, FgAbelianGroup> entries;
  for (int q = 0; q <= max_total_degree; ++q) {
    const FgAbelianGroup coefficients = k_finite_field(field, q);
    for (int p = 0; p <= max_total_degree; ++p) {
      const auto pp = static_cast<std::size_t>(p);
      entries[{p, q}] = p == 0 ? coefficients
                               : universal_coefficients(h[pp], h[pp - 1], coefficients);
    }
  }
  return E2Page(max_total_degree, std::move(entries));
}

struct SurvivingTerm {
  int p = 0;
  int q = 0;
  std::string justification;
};

inline constexpr const char* kLowDegreeInjectivity = "cited: low-degree assembly injectivity";
inline constexpr const char* kSurvivesWithE2_01 =
    "cited: E2(2,0) = H_2(G; K_0(F)) survives because E2(0,1) survives";

// Positions known to survive to E-infinity. Nothing here is computed from
// differentials; the tags record where each fact comes from.
inline std::vector<SurvivingTerm> surviving_low_degree(const E2Page& page) {
  if (page.max_total_degree() < 2)
    throw Error(ErrorKind::InsufficientDegree, "survival data needs a page through total degree 2");
  return {
      {0, 0, kLowDegreeInjectivity},
      {1, 0, kLowDegreeInjectivity},
      {0, 1, kLowDegreeInjectivity},
      {2, 0, kSurvivesWithE2_01},
  };
}

// ---------------------------------------------------------------------------
// Certificate

enum class Verdict { NotInjective, Inconclusive };

inline const char* to_string(Verdict v) { return v == Verdict::NotInjective ? "NOT_INJECTIVE" : "INCONCLUSIVE"; }

enum class InconclusiveReason { CharacteristicDividesOrder, H2Trivial };

inline const char* to_string(InconclusiveReason r) {
  return r == InconclusiveReason::CharacteristicDividesOrder ? "CharacteristicDividesOrder" : "H2Trivial";
}

struct Witness {
  int degree = 2;
  std::string source;
  std::string target;
};

inline const std::vector<std::string>& cited_facts() {
  static const std::vector<std::string> facts = {
      "Quillen: K_n(F_q) = Z/(q^i - 1) for n = 2i - 1 > 0, K_n(F_q) = 0 for even n > 0 and n < 0, K_0(F_q) = Z",
      "Maschke: F_q[G] is semisimple iff the characteristic p does not divide |G|",
      "Artin-Wedderburn: a finite semisimple ring is a product of matrix rings over finite fields",
      "Morita invariance: K_*(M_n(E)) = K_*(E)",
      "Low-degree survival: the assembly map is injective in degrees 0 and 1 and E2(0,0), E2(1,0), E2(0,1) "
      "survive (Lueck-Reich, Lemma 2); hence E2(2,0) = H_2(G; K_0(F)) survives to E-infinity",
  };
  return facts;
}

inline constexpr const char* kBermanFact =
    "Berman: the number of simple components of F_q[G] equals the number of q-classes of G";

class NonInjectivityCertificate {
 public:
  struct Fields {
    std::string group;
    std::size_t group_order = 1;
    PrimePower field;
    bool semisimple = false;
    std::optional<std::size_t> d;
    FgAbelianGroup h2;
    std::optional<FgAbelianGroup> k2_group_ring;
    std::vector<SurvivingTerm> surviving_terms;
    Verdict verdict = Verdict::Inconclusive;
    std::vector<InconclusiveReason> reasons;
    std::optional<Witness> witness;
    std::vector<std::string> cited_assumptions;
  };

  // Re-checks the soundness conditions of a NOT_INJECTIVE verdict from the
  // raw fields; a violation is a logic error in the caller.
  explicit NonInjectivityCertificate(Fields f) : f_(std::move(f)) {
    if (f_.verdict == Verdict::NotInjective) {
      const bool coprime = f_.group_order % f_.field.p != 0;
      const bool k2_zero = f_.k2_group_ring && f_.k2_group_ring->is_trivial();
      if (!f_.semisimple || !coprime || f_.h2.is_trivial() || !k2_zero || !f_.witness || !f_.reasons.empty())
        throw std::logic_error("NOT_INJECTIVE certificate without its hypotheses");
    } else if (f_.reasons.empty()) {
      throw std::logic_error("INCONCLUSIVE certificate must name a failed hypothesis");
    }
    bool has_survival = false;
    for (const auto& a : f_.cited_assumptions) has_survival |= a.rfind("Low-degree survival", 0) == 0;
    if (!has_survival) throw std::logic_error("certificate must cite the low-degree survival fact");
  }

  const Fields& fields() const noexcept { return f_; }
  Verdict verdict() const noexcept { return f_.verdict; }

 private:
  Fields f_;
};

inline NonInjectivityCertificate certify_noninjectivity(const FiniteGroup& g, const PrimePower& field,
                                                        const Limits& limits = {}) {
  NonInjectivityCertificate::Fields f;
  f.group = g.name().empty() ? "order-" + std::to_string(g.order()) + " group" : g.name();
  f.group_order = g.order();
  f.field = field;
  f.semisimple = is_semisimple(g, field);
  f.cited_assumptions = cited_facts();

  const E2Page page = e2_page(g, field, 2, limits);
  f.h2 = page.at(2, 0);
  f.surviving_terms = surviving_low_degree(page);

  if (f.semisimple) {
    f.d = component_count(g, field);
    f.k2_group_ring = k_group_ring(g, field, 2);
    f.cited_assumptions.emplace_back(kBermanFact);
  } else {
    f.reasons.push_back(InconclusiveReason::CharacteristicDividesOrder);
  }
  if (f.h2.is_trivial()) f.reasons.push_back(InconclusiveReason::H2Trivial);

  if (f.reasons.empty() && f.k2_group_ring && f.k2_group_ring->is_trivial()) {
    f.verdict = Verdict::NotInjective;
    f.witness = Witness{2, "E2(2,0) = H_2(G) = " + f.h2.to_string(), "K_2(F G) = 0"};
  }
  return NonInjectivityCertificate(std::move(f));
}

inline void to_json(nlohmann::ordered_json& j, const SurvivingTerm& t) {
  j = nlohmann::ordered_json{{"p", t.p}, {"q", t.q}, {"justification", t.justification}};
}

// Field order: group, q, p, e, semisimple, d, h2, k2_group_ring,
// surviving_terms, verdict, reasons, witness, cited_assumptions, tool_version.
inline void to_json(nlohmann::ordered_json& j, const NonInjectivityCertificate& c) {
  const auto& f = c.fields();
  using json = nlohmann::ordered_json;
  j = json::object();
  j["group"] = f.group;
  j["q"] = f.field.q;
  j["p"] = f.field.p;
  j["e"] = f.field.e;
  j["semisimple"] = f.semisimple;
  j["d"] = f.d ? json(*f.d) : json(nullptr);
  j["h2"] = f.h2;
  j["k2_group_ring"] = f.k2_group_ring ? json(*f.k2_group_ring) : json(nullptr);
  j["surviving_terms"] = f.surviving_terms;
  j["verdict"] = to_string(f.verdict);
  auto reasons = json::array();
  for (auto r : f.reasons) reasons.push_back(to_string(r));
  j["reasons"] = std::move(reasons);
  if (f.witness)
    j["witness"] = json{{"degree", f.witness->degree}, {"source", f.witness->source}, {"target", f.witness->target}};
  else
    j["witness"] = nullptr;
  j["cited_assumptions"] = f.cited_assumptions;
  j["tool_version"] = kToolVersion;
}

}  // namespace kas
