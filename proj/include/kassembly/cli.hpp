#pragma once

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "abelian.hpp"
#include "assembly.hpp"
#include "errors.hpp"
#include "grouprings.hpp"
#include "groups.hpp"
#include "homology.hpp"
#include "kfield.hpp"
#include "limits.hpp"

namespace kas::cli {

// Parsed --group argument: a built-in group or a table file.
struct GroupSpec {
  enum class Kind { Standard, Table };
  Kind kind = Kind::Standard;
  StandardGroup standard;
  std::string path;
  std::string text;
};

namespace detail {

class SpecParser {
 public:
  explicit SpecParser(std::string_view text) : text_(text) {}

  GroupSpec parse() {
    GroupSpec spec;
    spec.text = std::string(text_);
    if (text_.empty()) throw ParseError("empty group spec", 0, {"group spec"});
    if (text_.starts_with("table:")) {
      spec.kind = GroupSpec::Kind::Table;
      spec.path = std::string(text_.substr(6));
      if (spec.path.empty()) throw ParseError("missing table path", 6, {"file path"});
      return spec;
    }
    if (text_.starts_with("perm:")) {
      pos_ = 5;
      spec.standard = StandardGroup::permutations(generators(), spec.text);
      expect_end();
      return spec;
    }
    std::vector<StandardGroup> factors{atom()};
    while (pos_ < text_.size() && text_[pos_] == 'x') {
      ++pos_;
      factors.push_back(atom());
    }
    expect_end();
    spec.standard = factors.size() == 1 ? factors.front() : StandardGroup::product(std::move(factors));
    return spec;
  }

 private:
  StandardGroup atom() {
    if (pos_ >= text_.size()) throw ParseError("unexpected end of group spec", pos_, {"C", "D", "S"});
    const char kind = text_[pos_];
    if (kind != 'C' && kind != 'D' && kind != 'S') throw ParseError("unknown group family", pos_, {"C", "D", "S"});
    ++pos_;
    const std::size_t at = pos_;
    const std::size_t n = number();
    if (n == 0) throw ParseError("group parameter must be positive", at, {"positive integer"});
    if (kind == 'C') return StandardGroup::cyclic(n);
    if (kind == 'D') return StandardGroup::dihedral(n);
    if (n > 5) throw ParseError("symmetric groups are limited to S1..S5", at, {"integer in 1..5"});
    return StandardGroup::symmetric(n);
  }

  std::size_t number() {
    const std::size_t start = pos_;
    std::size_t value = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      value = value * 10 + static_cast<std::size_t>(text_[pos_] - '0');
      if (value > 1'000'000) throw ParseError("number too large", start, {"small integer"});
      ++pos_;
    }
    if (pos_ == start) throw ParseError("expected a number", pos_, {"digit"});
    return value;
  }

  void skip_spaces() {
    while (pos_ < text_.size() && text_[pos_] == ' ') ++pos_;
  }

  // cycles;cycles;... with 1-based points, e.g. "(1 2 3);(1,2)".
  std::vector<Permutation> generators() {
    std::vector<std::vector<std::vector<std::size_t>>> gens;
    std::size_t degree = 0;
    for (;;) {
      std::vector<std::vector<std::size_t>> cycles;
      skip_spaces();
      if (pos_ >= text_.size() || text_[pos_] != '(') throw ParseError("expected a cycle", pos_, {"("});
      while (pos_ < text_.size() && text_[pos_] == '(') {
        ++pos_;
        std::vector<std::size_t> cycle;
        skip_spaces();
        while (pos_ < text_.size() && text_[pos_] != ')') {
          const std::size_t at = pos_;
          const std::size_t point = number();
          if (point == 0) throw ParseError("points are numbered from 1", at, {"positive integer"});
          if (std::find(cycle.begin(), cycle.end(), point - 1) != cycle.end())
            throw ParseError("point repeated in a cycle", at, {"distinct points"});
          cycle.push_back(point - 1);
          degree = std::max(degree, point);
          skip_spaces();
          if (pos_ < text_.size() && text_[pos_] == ',') ++pos_;
          skip_spaces();
        }
        if (pos_ >= text_.size()) throw ParseError("unterminated cycle", pos_, {")"});
        ++pos_;
        cycles.push_back(std::move(cycle));
        skip_spaces();
      }
      gens.push_back(std::move(cycles));
      if (pos_ < text_.size() && text_[pos_] == ';') {
        ++pos_;
        continue;
      }
      break;
    }
    std::vector<Permutation> out;
    for (const auto& cycles : gens) {
      Permutation p(std::max<std::size_t>(degree, 1));
      for (std::size_t x = 0; x < p.size(); ++x) p[x] = static_cast<std::uint32_t>(x);
      // Cycles compose right to left, like the permutation product.
      for (auto it = cycles.rbegin(); it != cycles.rend(); ++it) {
        Permutation c(p.size());
        for (std::size_t x = 0; x < c.size(); ++x) c[x] = static_cast<std::uint32_t>(x);
        for (std::size_t k = 0; k < it->size(); ++k)
          c[(*it)[k]] = static_cast<std::uint32_t>((*it)[(k + 1) % it->size()]);
        p = kas::detail::compose(c, p);
      }
      out.push_back(std::move(p));
    }
    return out;
  }

  void expect_end() {
    skip_spaces();
    if (pos_ != text_.size()) throw ParseError("trailing characters in group spec", pos_, {"end of input", "x"});
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace detail

inline GroupSpec parse_group_spec(std::string_view text) { return detail::SpecParser(text).parse(); }

inline FiniteGroup build_group(const GroupSpec& spec, const Limits& limits = {}) {
  if (spec.kind == GroupSpec::Kind::Table) {
    std::ifstream in(spec.path);
    if (!in) throw Error(ErrorKind::InvalidArgument, "cannot open table file " + spec.path);
    FiniteGroup g = read_table(in, spec.text);
    if (g.order() > limits.max_group_order)
      throw Error(ErrorKind::TooLarge, "table group has order " + std::to_string(g.order()) + ", above the cap of " +
                                           std::to_string(limits.max_group_order));
    return g;
  }
  return standard_group(spec.standard, limits);
}

// Single-token form for chart cells: "0", "Z", "Z^r", "Z/m", "(Z/m)^k",
// summands joined by "+".
inline std::string chart_token(const FgAbelianGroup& g) {
  if (g.is_trivial()) return "0";
  std::vector<std::string> parts;
  if (g.free_rank() == 1) parts.push_back("Z");
  if (g.free_rank() > 1) parts.push_back("Z^" + std::to_string(g.free_rank()));
  const auto& f = g.invariant_factors();
  for (std::size_t i = 0; i < f.size();) {
    std::size_t j = i;
    while (j < f.size() && f[j] == f[i]) ++j;
    const std::string base = "Z/" + kas::to_string(f[i]);
    parts.push_back(j - i == 1 ? base : "(" + base + ")^" + std::to_string(j - i));
    i = j;
  }
  std::string out;
  for (const auto& p : parts) out += (out.empty() ? "" : "+") + p;
  return out;
}

// ASCII chart of the E2 page: p to the right, q upward, K_q(F) in column
// p = 0 and H_p(G) in row q = 0. Every column has the same width.
inline std::string render_e2_ascii(const E2Page& page, const std::string& group, const PrimePower& field) {
  const int n = page.max_total_degree();
  std::size_t width = 1;
  for (const auto& [pos, value] : page.entries()) width = std::max(width, chart_token(value).size());
  const std::size_t label_width = std::max<std::size_t>(1, std::to_string(n).size());
  auto pad = [](std::string s, std::size_t w) {
    s.resize(std::max(w, s.size()), ' ');
    return s;
  };
  auto trim = [](std::string s) {
    while (!s.empty() && s.back() == ' ') s.pop_back();
    return s;
  };

  std::ostringstream os;
  os << "E^2_{p,q} = H_p(" << group << "; K_q(F_" << field.q << ")), total degree <= " << n << "\n\n";
  os << pad("q", label_width) << " |\n";
  for (int q = n; q >= 0; --q) {
    std::string line = pad(std::to_string(q), label_width) + " |";
    for (int p = 0; p <= n; ++p) line += "  " + pad(chart_token(page.at(p, q)), width);
    os << trim(line) << '\n';
  }
  os << std::string(label_width, ' ') << " +" << std::string(static_cast<std::size_t>(n + 1) * (width + 2), '-') << '\n';
  std::string axis = std::string(label_width, ' ') + "  ";
  for (int p = 0; p <= n; ++p) axis += "  " + pad(std::to_string(p), width);
  os << trim(axis) << "  p\n";
  return os.str();
}

// Size guards can be raised (or lowered) from the environment.
inline Limits limits_from_environment() {
  Limits limits;
  auto read = [](const char* name, auto& target) {
    if (const char* v = std::getenv(name)) {
      char* end = nullptr;
      const unsigned long long parsed = std::strtoull(v, &end, 10);
      if (end == v || *end != '\0' || parsed == 0)
        throw Error(ErrorKind::InvalidArgument, std::string(name) + " must be a positive integer");
      target = static_cast<std::remove_reference_t<decltype(target)>>(parsed);
    }
  };
  read("KASSEMBLY_MAX_GENERATORS", limits.max_generators);
  read("KASSEMBLY_MAX_DEGREE", limits.max_degree);
  read("KASSEMBLY_MAX_ORDER", limits.max_group_order);
  read("KASSEMBLY_MAX_DENSE_ENTRIES", limits.max_dense_entries);
  return limits;
}

inline constexpr int kExitOk = 0;
inline constexpr int kExitError = 1;
inline constexpr int kExitInconclusive = 2;

namespace detail {

using json = nlohmann::ordered_json;

inline json group_value(const FgAbelianGroup& g) {
  json j = g;
  j["display"] = g.to_string();
  return j;
}

struct Options {
  std::string group;
  std::uint64_t q = 0;
  int max_degree = 4;
  bool max_degree_given = false;
  std::string format = "ascii";
};

inline int run_kfield(const Options& o, std::ostream& out) {
  const PrimePower field = validate_prime_power(o.q);
  const int top = o.max_degree_given ? o.max_degree : 5;
  if (o.format == "json") {
    json j{{"q", field.q}, {"p", field.p}, {"e", field.e}};
    json groups = json::array();
    for (int n = 0; n <= top; ++n) groups.push_back(json{{"n", n}, {"group", group_value(k_finite_field(field, n))}});
    j["k_groups"] = std::move(groups);
    out << j.dump(2) << '\n';
  } else {
    out << "K_n(F_" << field.q << "), p = " << field.p << ", e = " << field.e << '\n';
    for (int n = 0; n <= top; ++n) out << "K_" << n << " = " << k_finite_field(field, n) << '\n';
  }
  return kExitOk;
}

inline int run_homology(const Options& o, const Limits& limits, std::ostream& out) {
  const FiniteGroup g = build_group(parse_group_spec(o.group), limits);
  const auto h = integral_homology_sequence(g, o.max_degree, limits);
  if (o.format == "json") {
    json j{{"group", g.name()}, {"order", g.order()}};
    json seq = json::array();
    for (std::size_t n = 0; n < h.size(); ++n) seq.push_back(json{{"n", n}, {"group", group_value(h[n])}});
    j["homology"] = std::move(seq);
    out << j.dump(2) << '\n';
  } else {
    out << "H_n(" << g.name() << "; Z), |G| = " << g.order() << '\n';
    for (std::size_t n = 0; n < h.size(); ++n) out << "H_" << n << " = " << h[n] << '\n';
  }
  return kExitOk;
}

inline int run_wedderburn(const Options& o, const Limits& limits, std::ostream& out) {
  const FiniteGroup g = build_group(parse_group_spec(o.group), limits);
  const PrimePower field = validate_prime_power(o.q);
  const WedderburnSummary s = wedderburn_summary(g, field);
  std::vector<std::optional<FgAbelianGroup>> k;
  if (s.semisimple)
    for (int n = 0; n <= o.max_degree; ++n) k.push_back(k_group_ring(g, field, n));
  if (o.format == "json") {
    json j{{"group", g.name()}, {"q", field.q}, {"summary", s}};
    json groups = json::array();
    for (std::size_t n = 0; n < k.size(); ++n)
      groups.push_back(json{{"n", n}, {"group", k[n] ? group_value(*k[n]) : json(nullptr)}});
    j["k_groups"] = std::move(groups);
    out << j.dump(2) << '\n';
  } else {
    out << "F_" << field.q << "[" << g.name() << "]: ";
    if (!s.semisimple) {
      out << "not semisimple (p = " << field.p << " divides |G| = " << g.order() << ")\n";
      return kExitOk;
    }
    out << "semisimple, d = " << *s.d << " simple components\n";
    if (s.field_degrees) {
      out << "field degrees:";
      for (auto f : *s.field_degrees) out << ' ' << f;
      out << '\n';
    }
    for (std::size_t n = 0; n < k.size(); ++n)
      out << "K_" << n << "(F G) = " << (k[n] ? k[n]->to_string() : std::string("unknown")) << '\n';
  }
  return kExitOk;
}

inline int run_e2page(const Options& o, const Limits& limits, std::ostream& out) {
  const FiniteGroup g = build_group(parse_group_spec(o.group), limits);
  const PrimePower field = validate_prime_power(o.q);
  const E2Page page = e2_page(g, field, o.max_degree, limits);
  if (o.format == "json") {
    json j{{"group", g.name()}, {"q", field.q}, {"p", field.p}, {"e", field.e}, {"max_total_degree", o.max_degree}};
    json entries = json::array();
    for (const auto& [pos, value] : page.entries())
      entries.push_back(json{{"p", pos.first}, {"q", pos.second}, {"group", group_value(value)}});
    j["entries"] = std::move(entries);
    out << j.dump(2) << '\n';
  } else {
    out << render_e2_ascii(page, g.name(), field);
  }
  return kExitOk;
}

inline int run_certify(const Options& o, const Limits& limits, std::ostream& out) {
  const FiniteGroup g = build_group(parse_group_spec(o.group), limits);
  const PrimePower field = validate_prime_power(o.q);
  const auto cert = certify_noninjectivity(g, field, limits);
  const auto& f = cert.fields();
  if (o.format == "json") {
    out << json(cert).dump(2) << '\n';
  } else {
    out << "group: " << f.group << " (order " << f.group_order << ")\n";
    out << "field: F_" << f.field.q << " (p = " << f.field.p << ", e = " << f.field.e << ")\n";
    out << "semisimple: " << (f.semisimple ? "yes" : "no") << '\n';
    out << "d: " << (f.d ? std::to_string(*f.d) : std::string("n/a")) << '\n';
    out << "H_2(G; Z): " << f.h2 << '\n';
    out << "K_2(F G): " << (f.k2_group_ring ? f.k2_group_ring->to_string() : std::string("n/a")) << '\n';
    out << "surviving terms:\n";
    for (const auto& t : f.surviving_terms)
      out << "  E2(" << t.p << "," << t.q << ")  " << t.justification << '\n';
    out << "verdict: " << to_string(f.verdict) << '\n';
    for (auto r : f.reasons) out << "reason: " << to_string(r) << '\n';
    if (f.witness) out << "witness: degree " << f.witness->degree << ", " << f.witness->source << " -> " << f.witness->target << '\n';
    out << "cited assumptions:\n";
    for (const auto& a : f.cited_assumptions) out << "  - " << a << '\n';
  }
  return cert.verdict() == Verdict::NotInjective ? kExitOk : kExitInconclusive;
}

}  // namespace detail

// Command-line entry point. args[0] is the program name.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Algebraic K-theory of finite group algebras and assembly-map obstructions", "kassembly"};
  app.require_subcommand(1);
  detail::Options o;

  auto add_format = [&o](CLI::App* sub) {
    sub->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"ascii", "json"}));
  };
  auto add_degree = [&o](CLI::App* sub) {
    sub->add_option("--max-degree", o.max_degree, "Largest degree to compute")->check(CLI::NonNegativeNumber);
  };

  auto* kfield = app.add_subcommand("kfield", "K-groups of the finite field F_q");
  kfield->add_option("--q", o.q, "Field size (a prime power)")->required();
  add_degree(kfield);
  add_format(kfield);

  auto* homology = app.add_subcommand("homology", "Integral homology H_n(G; Z)");
  homology->add_option("--group", o.group, "Group spec: C<n>, C<a>xC<b>, D<n>, S<n>, perm:<cycles;...>, table:<path>")->required();
  add_degree(homology);
  add_format(homology);

  auto* wedderburn = app.add_subcommand("wedderburn", "Semisimple structure and K-groups of F_q[G]");
  wedderburn->add_option("--group", o.group, "Group spec")->required();
  wedderburn->add_option("--q", o.q, "Field size (a prime power)")->required();
  add_degree(wedderburn);
  add_format(wedderburn);

  auto* e2page = app.add_subcommand("e2page", "Atiyah-Hirzebruch E2 page for H_*(BG; K(F_q))");
  e2page->add_option("--group", o.group, "Group spec")->required();
  e2page->add_option("--q", o.q, "Field size (a prime power)")->required();
  add_degree(e2page);
  add_format(e2page);

  auto* certify = app.add_subcommand("certify", "Non-injectivity certificate for the assembly map");
  certify->add_option("--group", o.group, "Group spec")->required();
  certify->add_option("--q", o.q, "Field size (a prime power)")->required();
  add_format(certify);

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitError;
  }
  for (auto* sub : {kfield, homology, wedderburn, e2page})
    if (sub->parsed() && sub->count("--max-degree")) o.max_degree_given = true;

  try {
    const Limits limits = limits_from_environment();
    if (*kfield) return detail::run_kfield(o, out);
    if (*homology) return detail::run_homology(o, limits, out);
    if (*wedderburn) return detail::run_wedderburn(o, limits, out);
    if (*e2page) return detail::run_e2page(o, limits, out);
    if (*certify) return detail::run_certify(o, limits, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitError;
  }
  return kExitError;
}

}  // namespace kas::cli
