#pragma once

#include <algorithm>
#include <array>
#include <cstddef>
#include <cstdint>
#include <istream>
#include <map>
#include <numeric>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "abelian.hpp"
#include "errors.hpp"
#include "limits.hpp"
#include "matrix.hpp"

namespace kas {

using Element = std::size_t;
using MultiplicationTable = std::vector<std::vector<Element>>;

// Finite group given by its multiplication table: table[i][j] is the index
// of g_i * g_j. Index 0 is always the identity. Immutable once built.
class FiniteGroup {
 public:
  std::size_t order() const noexcept { return table_.size(); }
  Element identity() const noexcept { return 0; }
  Element multiply(Element a, Element b) const { return table_[a][b]; }
  Element inverse(Element a) const { return inverses_[a]; }
  const MultiplicationTable& table() const noexcept { return table_; }
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  const std::string& name() const noexcept { return name_; }

  bool is_abelian() const {
    for (Element a = 0; a < order(); ++a)
      for (Element b = a + 1; b < order(); ++b)
        if (table_[a][b] != table_[b][a]) return false;
    return true;
  }

  Element power(Element x, std::uint64_t k) const {
    Element result = 0;
    Element base = x;
    while (k) {
      if (k & 1) result = table_[result][base];
      base = table_[base][base];
      k >>= 1;
    }
    return result;
  }

  friend FiniteGroup group_from_table(MultiplicationTable table, std::vector<std::string> labels,
                                      std::string name);

 private:
  MultiplicationTable table_;
  std::vector<Element> inverses_;
  std::vector<std::string> labels_;
  std::string name_;
};

// Validates the group axioms and relabels so that the identity is index 0.
// Throws NotAGroupError carrying the first violating triple.
inline FiniteGroup group_from_table(MultiplicationTable table, std::vector<std::string> labels = {},
                                    std::string name = {}) {
  const std::size_t n = table.size();
  if (n == 0) throw NotAGroupError("empty table", {0, 0, 0});
  for (std::size_t i = 0; i < n; ++i) {
    if (table[i].size() != n)
      throw NotAGroupError("row " + std::to_string(i) + " has " + std::to_string(table[i].size()) +
                               " entries, expected " + std::to_string(n),
                           {i, 0, 0});
    for (std::size_t j = 0; j < n; ++j)
      if (table[i][j] >= n)
        throw NotAGroupError("entry (" + std::to_string(i) + "," + std::to_string(j) + ") out of range",
                             {i, j, j});
  }
  if (!labels.empty() && labels.size() != n)
    throw Error(ErrorKind::InvalidArgument, "expected " + std::to_string(n) + " labels");

  // Latin square: each row and column is a permutation.
  std::vector<std::size_t> seen(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const Element e = table[i][j];
      if (seen[e] == i)
        throw NotAGroupError("not a Latin square: row " + std::to_string(i) + " repeats " + std::to_string(e),
                             {i, j, e});
      seen[e] = i;
    }
  std::fill(seen.begin(), seen.end(), n);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t i = 0; i < n; ++i) {
      const Element e = table[i][j];
      if (seen[e] == j)
        throw NotAGroupError("not a Latin square: column " + std::to_string(j) + " repeats " + std::to_string(e),
                             {i, j, e});
      seen[e] = j;
    }

  std::optional<Element> identity;
  for (Element e = 0; e < n && !identity; ++e) {
    bool ok = true;
    for (Element x = 0; x < n && ok; ++x) ok = table[e][x] == x && table[x][e] == x;
    if (ok) identity = e;
  }
  if (!identity) throw NotAGroupError("no two-sided identity", {0, 0, 0});

  if (*identity != 0) {
    // Swap the labels of the identity and index 0.
    const Element id = *identity;
    auto relabel = [id](Element x) { return x == id ? 0 : (x == 0 ? id : x); };
    MultiplicationTable swapped(n, std::vector<Element>(n));
    for (Element i = 0; i < n; ++i)
      for (Element j = 0; j < n; ++j) swapped[relabel(i)][relabel(j)] = relabel(table[i][j]);
    table = std::move(swapped);
    if (!labels.empty()) std::swap(labels[0], labels[id]);
  }

  for (Element i = 0; i < n; ++i)
    for (Element j = 0; j < n; ++j)
      for (Element k = 0; k < n; ++k)
        if (table[table[i][j]][k] != table[i][table[j][k]])
          throw NotAGroupError("associativity fails for (" + std::to_string(i) + "," + std::to_string(j) + "," +
                                   std::to_string(k) + ")",
                               {i, j, k});

  std::vector<Element> inverses(n, n);
  for (Element i = 0; i < n; ++i)
    for (Element j = 0; j < n; ++j)
      if (table[i][j] == 0 && table[j][i] == 0) inverses[i] = j;
  for (Element i = 0; i < n; ++i)
    if (inverses[i] == n) throw NotAGroupError("element " + std::to_string(i) + " has no inverse", {i, i, i});

  if (labels.empty()) {
    labels.reserve(n);
    for (Element i = 0; i < n; ++i) labels.push_back(i == 0 ? "e" : "g" + std::to_string(i));
  }

  FiniteGroup g;
  g.table_ = std::move(table);
  g.inverses_ = std::move(inverses);
  g.labels_ = std::move(labels);
  g.name_ = std::move(name);
  return g;
}

// ---------------------------------------------------------------------------
// Builders

// Permutation of {0, ..., degree-1} stored as its image list.
using Permutation = std::vector<std::uint32_t>;

namespace detail {

inline void check_order(std::size_t order, const Limits& limits, const std::string& what) {
  if (order > limits.max_group_order)
    throw Error(ErrorKind::TooLarge, what + " has order " + std::to_string(order) + ", above the cap of " +
                                         std::to_string(limits.max_group_order));
}

// (a*b)(x) = a(b(x))
inline Permutation compose(const Permutation& a, const Permutation& b) {
  Permutation c(a.size());
  for (std::size_t x = 0; x < a.size(); ++x) c[x] = a[b[x]];
  return c;
}

// 1-based cycle notation, "()" for the identity.
inline std::string cycle_string(const Permutation& p) {
  std::string out;
  std::vector<char> done(p.size(), 0);
  for (std::size_t start = 0; start < p.size(); ++start) {
    if (done[start] || p[start] == start) continue;
    out += "(";
    std::size_t x = start;
    bool first = true;
    while (!done[x]) {
      done[x] = 1;
      if (!first) out += " ";
      out += std::to_string(x + 1);
      first = false;
      x = p[x];
    }
    out += ")";
  }
  return out.empty() ? "()" : out;
}

inline FiniteGroup group_from_permutations(const std::vector<Permutation>& elements, std::string name) {
  std::map<Permutation, Element> index;
  for (Element i = 0; i < elements.size(); ++i) index.emplace(elements[i], i);
  MultiplicationTable table(elements.size(), std::vector<Element>(elements.size()));
  std::vector<std::string> labels;
  for (Element i = 0; i < elements.size(); ++i) {
    labels.push_back(cycle_string(elements[i]));
    for (Element j = 0; j < elements.size(); ++j) table[i][j] = index.at(compose(elements[i], elements[j]));
  }
  return group_from_table(std::move(table), std::move(labels), std::move(name));
}

}  // namespace detail

inline FiniteGroup cyclic_group(std::size_t n, const Limits& limits = {}) {
  if (n == 0) throw Error(ErrorKind::InvalidArgument, "cyclic group needs n >= 1");
  detail::check_order(n, limits, "C" + std::to_string(n));
  MultiplicationTable table(n, std::vector<Element>(n));
  std::vector<std::string> labels;
  for (Element i = 0; i < n; ++i) {
    labels.push_back(i == 0 ? "e" : (i == 1 ? "g" : "g^" + std::to_string(i)));
    for (Element j = 0; j < n; ++j) table[i][j] = (i + j) % n;
  }
  return group_from_table(std::move(table), std::move(labels), "C" + std::to_string(n));
}

// Pair (a, b) has index a * |B| + b.
inline FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b, const Limits& limits = {}) {
  std::string name = a.name() + "x" + b.name();
  detail::check_order(a.order() * b.order(), limits, name);
  const std::size_t m = b.order();
  const std::size_t n = a.order() * m;
  MultiplicationTable table(n, std::vector<Element>(n));
  std::vector<std::string> labels;
  for (Element i = 0; i < n; ++i) {
    labels.push_back("(" + a.labels()[i / m] + "," + b.labels()[i % m] + ")");
    for (Element j = 0; j < n; ++j)
      table[i][j] = a.multiply(i / m, j / m) * m + b.multiply(i % m, j % m);
  }
  return group_from_table(std::move(table), std::move(labels), std::move(name));
}

// Symmetries of a regular n-gon, order 2n. r^i s^j has index j * n + i.
inline FiniteGroup dihedral_group(std::size_t n, const Limits& limits = {}) {
  if (n == 0) throw Error(ErrorKind::InvalidArgument, "dihedral group needs n >= 1");
  detail::check_order(2 * n, limits, "D" + std::to_string(n));
  MultiplicationTable table(2 * n, std::vector<Element>(2 * n));
  std::vector<std::string> labels;
  for (Element x = 0; x < 2 * n; ++x) {
    const std::size_t a = x % n, s = x / n;
    std::string rot = a == 0 ? "" : (a == 1 ? "r" : "r^" + std::to_string(a));
    labels.push_back(s ? rot + "s" : (rot.empty() ? "e" : rot));
    for (Element y = 0; y < 2 * n; ++y) {
      const std::size_t c = y % n, t = y / n;
      // r^a s^s * r^c s^t = r^(a + (-1)^s c) s^(s+t)
      const std::size_t rotation = s ? (a + n - c) % n : (a + c) % n;
      table[x][y] = ((s + t) % 2) * n + rotation;
    }
  }
  return group_from_table(std::move(table), std::move(labels), "D" + std::to_string(n));
}

// All permutations of n points in lexicographic order (identity first).
inline FiniteGroup symmetric_group(std::size_t n, const Limits& limits = {}) {
  if (n == 0 || n > 5) throw Error(ErrorKind::InvalidArgument, "symmetric group needs 1 <= n <= 5");
  std::size_t order = 1;
  for (std::size_t k = 2; k <= n; ++k) order *= k;
  detail::check_order(order, limits, "S" + std::to_string(n));
  std::vector<Permutation> elements;
  Permutation p(n);
  std::iota(p.begin(), p.end(), 0u);
  do elements.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  return detail::group_from_permutations(elements, "S" + std::to_string(n));
}

// Subgroup generated by the given permutations, elements in breadth-first
// discovery order from the identity.
inline FiniteGroup permutation_closure(std::vector<Permutation> generators, const Limits& limits = {},
                                       std::string name = {}) {
  std::size_t degree = 0;
  for (const auto& g : generators) degree = std::max(degree, g.size());
  if (degree == 0) degree = 1;
  for (auto& g : generators) {
    const std::size_t old = g.size();
    std::vector<char> hit(degree, 0);
    for (std::size_t x = 0; x < old; ++x) {
      if (g[x] >= old) throw Error(ErrorKind::InvalidArgument, "generator is not a permutation");
      hit[g[x]] = 1;
    }
    if (std::count(hit.begin(), hit.begin() + static_cast<std::ptrdiff_t>(old), 1) != static_cast<std::ptrdiff_t>(old))
      throw Error(ErrorKind::InvalidArgument, "generator is not a permutation");
    for (std::size_t x = old; x < degree; ++x) g.push_back(static_cast<std::uint32_t>(x));
  }
  Permutation id(degree);
  std::iota(id.begin(), id.end(), 0u);
  std::vector<Permutation> elements{id};
  std::map<Permutation, Element> seen{{id, 0}};
  for (std::size_t head = 0; head < elements.size(); ++head)
    for (const auto& g : generators) {
      Permutation next = detail::compose(elements[head], g);
      if (seen.count(next)) continue;
      seen.emplace(next, elements.size());
      elements.push_back(std::move(next));
      detail::check_order(elements.size(), limits, "permutation closure");
    }
  return detail::group_from_permutations(elements, std::move(name));
}

// Description of a built-in group, evaluated by standard_group.
struct StandardGroup {
  enum class Kind { Cyclic, DirectProduct, Dihedral, Symmetric, PermutationClosure };
  Kind kind = Kind::Cyclic;
  std::size_t n = 1;
  std::vector<StandardGroup> factors;
  std::vector<Permutation> generators;
  std::string name;

  static StandardGroup cyclic(std::size_t n) { return {Kind::Cyclic, n, {}, {}, {}}; }
  static StandardGroup dihedral(std::size_t n) { return {Kind::Dihedral, n, {}, {}, {}}; }
  static StandardGroup symmetric(std::size_t n) { return {Kind::Symmetric, n, {}, {}, {}}; }
  static StandardGroup product(std::vector<StandardGroup> factors) {
    return {Kind::DirectProduct, 0, std::move(factors), {}, {}};
  }
  static StandardGroup permutations(std::vector<Permutation> gens, std::string name = {}) {
    return {Kind::PermutationClosure, 0, {}, std::move(gens), std::move(name)};
  }
};

inline FiniteGroup standard_group(const StandardGroup& spec, const Limits& limits = {}) {
  switch (spec.kind) {
    case StandardGroup::Kind::Cyclic: return cyclic_group(spec.n, limits);
    case StandardGroup::Kind::Dihedral: return dihedral_group(spec.n, limits);
    case StandardGroup::Kind::Symmetric: return symmetric_group(spec.n, limits);
    case StandardGroup::Kind::PermutationClosure: return permutation_closure(spec.generators, limits, spec.name);
    case StandardGroup::Kind::DirectProduct: {
      if (spec.factors.empty()) throw Error(ErrorKind::InvalidArgument, "direct product needs factors");
      FiniteGroup g = standard_group(spec.factors.front(), limits);
      for (std::size_t i = 1; i < spec.factors.size(); ++i)
        g = direct_product(g, standard_group(spec.factors[i], limits), limits);
      return g;
    }
  }
  throw Error(ErrorKind::InvalidArgument, "unknown group kind");
}

// ---------------------------------------------------------------------------
// Elementary structure

struct ConjugacyClassSet {
  std::vector<std::vector<Element>> classes;  // sorted, ordered by representative
  std::vector<Element> representatives;       // minimal index of each class

  std::size_t size() const noexcept { return classes.size(); }
};

inline ConjugacyClassSet conjugacy_classes(const FiniteGroup& g) {
  const std::size_t n = g.order();
  std::vector<char> assigned(n, 0);
  ConjugacyClassSet out;
  for (Element x = 0; x < n; ++x) {
    if (assigned[x]) continue;
    std::vector<Element> cls;
    for (Element h = 0; h < n; ++h) {
      const Element y = g.multiply(g.multiply(h, x), g.inverse(h));
      if (!assigned[y]) {
        assigned[y] = 1;
        cls.push_back(y);
      }
    }
    std::sort(cls.begin(), cls.end());
    out.representatives.push_back(x);
    out.classes.push_back(std::move(cls));
  }
  return out;
}

inline std::size_t element_order(const FiniteGroup& g, Element x) {
  if (x >= g.order()) throw Error(ErrorKind::InvalidArgument, "element index out of range");
  std::size_t k = 1;
  for (Element y = x; y != g.identity(); y = g.multiply(y, x)) ++k;
  return k;
}

// Smallest subgroup containing `seeds`, as a sorted element list.
inline std::vector<Element> subgroup_closure(const FiniteGroup& g, const std::vector<Element>& seeds) {
  std::vector<char> in(g.order(), 0);
  std::vector<Element> elems{g.identity()};
  in[g.identity()] = 1;
  for (std::size_t head = 0; head < elems.size(); ++head)
    for (Element s : seeds) {
      const Element y = g.multiply(elems[head], s);
      if (!in[y]) {
        in[y] = 1;
        elems.push_back(y);
      }
    }
  std::sort(elems.begin(), elems.end());
  return elems;
}

inline std::vector<Element> commutator_subgroup(const FiniteGroup& g) {
  std::vector<Element> commutators;
  std::vector<char> seen(g.order(), 0);
  for (Element a = 0; a < g.order(); ++a)
    for (Element b = 0; b < g.order(); ++b) {
      const Element c = g.multiply(g.multiply(a, b), g.multiply(g.inverse(a), g.inverse(b)));
      if (!seen[c]) {
        seen[c] = 1;
        commutators.push_back(c);
      }
    }
  return subgroup_closure(g, commutators);
}

// G / [G, G]. The quotient is presented on one generator per coset with
// relations [c] + [s] = [c s] for every coset c and every coset s of a
// generating set, plus [identity coset] = 0.
inline FgAbelianGroup abelianization(const FiniteGroup& g, const Limits& limits = {}) {
  const std::vector<Element> derived = commutator_subgroup(g);
  const std::size_t n = g.order();
  std::vector<std::size_t> coset(n, n);
  std::size_t cosets = 0;
  for (Element x = 0; x < n; ++x) {
    if (coset[x] != n) continue;
    for (Element d : derived) coset[g.multiply(x, d)] = cosets;
    ++cosets;
  }

  // Greedy generating set of the quotient.
  std::vector<Element> gens;
  std::vector<char> covered(cosets, 0);
  covered[coset[0]] = 1;
  std::vector<Element> span{g.identity()};
  for (Element x = 0; x < n; ++x) {
    if (covered[coset[x]]) continue;
    gens.push_back(x);
    span = subgroup_closure(g, [&] {
      auto s = gens;
      s.insert(s.end(), derived.begin(), derived.end());
      return s;
    }());
    for (Element y : span) covered[coset[y]] = 1;
  }

  std::vector<Element> coset_rep(cosets, n);
  for (Element x = 0; x < n; ++x)
    if (coset_rep[coset[x]] == n) coset_rep[coset[x]] = x;

  IntegerMatrix relations(cosets * gens.size() + 1, cosets);
  std::size_t row = 0;
  for (std::size_t c = 0; c < cosets; ++c)
    for (Element s : gens) {
      relations(row, c) += 1;
      relations(row, coset[s]) += 1;
      relations(row, coset[g.multiply(coset_rep[c], s)]) -= 1;
      ++row;
    }
  relations(row, coset[0]) = 1;
  return from_presentation(relations, limits);
}

// ---------------------------------------------------------------------------
// Multiplication-table text format:
//   line 1: order m
//   next m lines: whitespace-separated row of indices
//   optional trailing section: m labels, one per line

inline FiniteGroup read_table(std::istream& in, std::string name = {}) {
  std::vector<std::string> lines;
  for (std::string line; std::getline(in, line);) {
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    auto last = line.find_last_not_of(" \t\r");
    lines.push_back(line.substr(first, last - first + 1));
  }
  if (lines.empty()) throw ParseError("empty table file", 1, {"order"});
  std::size_t m = 0;
  {
    std::istringstream head(lines[0]);
    long long v = 0;
    std::string extra;
    if (!(head >> v) || v <= 0 || (head >> extra)) throw ParseError("invalid order line", 1, {"positive integer"});
    m = static_cast<std::size_t>(v);
  }
  if (lines.size() < m + 1) throw ParseError("table has fewer than " + std::to_string(m) + " rows", lines.size() + 1, {"table row"});
  MultiplicationTable table(m);
  for (std::size_t i = 0; i < m; ++i) {
    std::istringstream row(lines[i + 1]);
    long long v = 0;
    while (row >> v) {
      if (v < 0) throw ParseError("negative index", i + 2, {"index in [0, order)"});
      table[i].push_back(static_cast<Element>(v));
    }
    if (!row.eof()) throw ParseError("non-numeric entry in row", i + 2, {"integer"});
    if (table[i].size() != m)
      throw ParseError("row has " + std::to_string(table[i].size()) + " entries", i + 2,
                       {std::to_string(m) + " entries"});
  }
  std::vector<std::string> labels(lines.begin() + static_cast<std::ptrdiff_t>(m + 1), lines.end());
  if (!labels.empty() && labels.size() != m)
    throw ParseError("label section has " + std::to_string(labels.size()) + " lines", m + 2,
                     {std::to_string(m) + " labels"});
  return group_from_table(std::move(table), std::move(labels), std::move(name));
}

inline void write_table(std::ostream& out, const FiniteGroup& g) {
  out << g.order() << '\n';
  for (const auto& row : g.table()) {
    for (std::size_t j = 0; j < row.size(); ++j) out << (j ? " " : "") << row[j];
    out << '\n';
  }
  for (const auto& label : g.labels()) out << label << '\n';
}

}  // namespace kas
