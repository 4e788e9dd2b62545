#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "abelian.hpp"
#include "chain.hpp"
#include "errors.hpp"
#include "groups.hpp"
#include "limits.hpp"
#include "matrix.hpp"
#include "sparse.hpp"

namespace kas {

// Degree-n level of the normalized bar complex with trivial coefficients.
// Basis tuples [g1|...|gn] of non-identity elements are ordered
// lexicographically; tuple t has index sum (t_k - 1) * (|G|-1)^(n-1-k).
struct BarChainLevel {
  int degree = 0;
  std::size_t group_order = 1;

  std::size_t dimension() const {
    std::size_t d = 1;
    for (int k = 0; k < degree; ++k) d *= group_order - 1;
    return d;
  }

  std::vector<Element> tuple(std::size_t index) const {
    std::vector<Element> t(static_cast<std::size_t>(degree));
    const std::size_t base = group_order - 1;
    for (int k = degree - 1; k >= 0; --k) {
      t[static_cast<std::size_t>(k)] = index % base + 1;
      index /= base;
    }
    return t;
  }

  std::size_t index(const std::vector<Element>& t) const {
    std::size_t idx = 0;
    for (Element g : t) idx = idx * (group_order - 1) + (g - 1);
    return idx;
  }

  std::vector<std::vector<Element>> basis() const {
    std::vector<std::vector<Element>> out;
    out.reserve(dimension());
    for (std::size_t i = 0; i < dimension(); ++i) out.push_back(tuple(i));
    return out;
  }
};

namespace detail {

inline std::size_t checked_power(std::size_t base, int exponent, std::size_t cap) {
  std::size_t d = 1;
  for (int k = 0; k < exponent; ++k) {
    if (base != 0 && d > cap / base) return cap + 1;
    d *= base;
  }
  return d;
}

inline void check_bar_size(const FiniteGroup& g, int degree, const Limits& limits) {
  if (degree < 0) throw Error(ErrorKind::InvalidArgument, "negative degree");
  const std::size_t dim = checked_power(g.order() - 1, degree, limits.max_generators);
  if (dim > limits.max_generators)
    throw Error(ErrorKind::TooLarge, "bar complex of " + (g.name().empty() ? std::string("group") : g.name()) +
                                         " in degree " + std::to_string(degree) + " has more than " +
                                         std::to_string(limits.max_generators) + " generators");
}

}  // namespace detail

// Boundary C_n -> C_{n-1} of the normalized bar complex with trivial
// coefficients:
//   d[g1|...|gn] = [g2|...|gn] + sum_{i=1}^{n-1} (-1)^i [g1|...|gi gi+1|...|gn]
//                  + (-1)^n [g1|...|gn-1],
// dropping faces that contain the identity.
inline SparseMatrix bar_boundary_sparse(const FiniteGroup& g, int n, const Limits& limits = {}) {
  if (n < 1) throw Error(ErrorKind::InvalidArgument, "bar boundary needs degree >= 1");
  detail::check_bar_size(g, n, limits);
  const BarChainLevel source{n, g.order()};
  const BarChainLevel target{n - 1, g.order()};
  SparseMatrix d(target.dimension(), source.dimension());
  std::vector<std::pair<std::uint32_t, std::int64_t>> acc;
  std::vector<Element> face;
  for (std::size_t col = 0; col < source.dimension(); ++col) {
    const auto t = source.tuple(col);
    acc.clear();
    auto emit = [&](std::int64_t sign) {
      for (Element x : face)
        if (x == g.identity()) return;
      acc.emplace_back(static_cast<std::uint32_t>(target.index(face)), sign);
    };
    face.assign(t.begin() + 1, t.end());
    emit(1);
    for (int i = 1; i < n; ++i) {
      face.clear();
      for (int k = 0; k < n; ++k) {
        if (k == i) continue;
        if (k == i - 1)
          face.push_back(g.multiply(t[static_cast<std::size_t>(k)], t[static_cast<std::size_t>(k + 1)]));
        else
          face.push_back(t[static_cast<std::size_t>(k)]);
      }
      emit(i % 2 ? -1 : 1);
    }
    face.assign(t.begin(), t.end() - 1);
    emit(n % 2 ? -1 : 1);

    std::sort(acc.begin(), acc.end());
    SparseMatrix::Column column;
    for (std::size_t k = 0; k < acc.size();) {
      std::int64_t v = 0;
      const std::uint32_t row = acc[k].first;
      for (; k < acc.size() && acc[k].first == row; ++k) v += acc[k].second;
      if (v != 0) column.push_back({row, v});
    }
    d.set_column(col, std::move(column));
  }
  return d;
}

inline IntegerMatrix bar_boundary(const FiniteGroup& g, int n, const Limits& limits = {}) {
  return bar_boundary_sparse(g, n, limits).to_dense(limits);
}

// H_0, ..., H_max_degree of G with integer coefficients from the bar
// complex. Each boundary is reduced once:
//   H_n = Z^(dim C_n - rank d_n - rank d_{n+1}) + torsion(coker d_{n+1}).
inline std::vector<FgAbelianGroup> integral_homology_sequence(const FiniteGroup& g, int max_degree,
                                                              const Limits& limits = {}) {
  if (max_degree < 0) throw Error(ErrorKind::InvalidArgument, "negative degree");
  if (max_degree > limits.max_degree)
    throw Error(ErrorKind::TooLarge, "degree " + std::to_string(max_degree) + " exceeds the degree cap of " +
                                         std::to_string(limits.max_degree));
  detail::check_bar_size(g, max_degree + 1, limits);

  std::vector<DiagonalForm> forms(static_cast<std::size_t>(max_degree) + 2);  // forms[k] describes d_k; d_0 = 0
  for (int k = 1; k <= max_degree + 1; ++k) forms[static_cast<std::size_t>(k)] = diagonalize(bar_boundary_sparse(g, k, limits), limits);

  std::vector<FgAbelianGroup> out;
  for (int n = 0; n <= max_degree; ++n) {
    const std::size_t dim = BarChainLevel{n, g.order()}.dimension();
    const auto& in = forms[static_cast<std::size_t>(n) + 1];
    const std::size_t free = dim - forms[static_cast<std::size_t>(n)].rank - in.rank;
    out.emplace_back(free, in.torsion);
  }
  return out;
}

inline FgAbelianGroup integral_homology(const FiniteGroup& g, int n, const Limits& limits = {}) {
  if (n < 0) throw Error(ErrorKind::InvalidArgument, "negative degree");
  if (n > limits.max_degree)
    throw Error(ErrorKind::TooLarge, "degree " + std::to_string(n) + " exceeds the degree cap of " +
                                         std::to_string(limits.max_degree));
  if (n == 0) return FgAbelianGroup::integers();
  detail::check_bar_size(g, n + 1, limits);
  const auto out_form = diagonalize(bar_boundary_sparse(g, n, limits), limits);
  const auto in_form = diagonalize(bar_boundary_sparse(g, n + 1, limits), limits);
  const std::size_t dim = BarChainLevel{n, g.order()}.dimension();
  return FgAbelianGroup(dim - out_form.rank - in_form.rank, in_form.torsion);
}

// Universal coefficients for a trivial coefficient module A:
//   H_n(G; A) = H_n(G) (x) A + Tor(H_{n-1}(G), A).
inline FgAbelianGroup universal_coefficients(const FgAbelianGroup& h_n, const FgAbelianGroup& h_n_minus_1,
                                             const FgAbelianGroup& coefficients) {
  return direct_sum(tensor(h_n, coefficients), tor_product(h_n_minus_1, coefficients));
}

inline FgAbelianGroup homology_with_coefficients(const FiniteGroup& g, int n, const FgAbelianGroup& coefficients,
                                                 const Limits& limits = {}) {
  if (n < 0) throw Error(ErrorKind::InvalidArgument, "negative degree");
  if (n == 0) return coefficients;
  const auto h = integral_homology_sequence(g, n, limits);
  return universal_coefficients(h[static_cast<std::size_t>(n)], h[static_cast<std::size_t>(n) - 1], coefficients);
}

// ---------------------------------------------------------------------------
// Oracles

// H_n(Z/m; Z) from the 2-periodic free resolution
//   ... -> ZG --N--> ZG --(t-1)--> ZG --N--> ZG --(t-1)--> ZG -> Z,
// tensored down to Z with the augmentation. Group-ring elements are
// coefficient vectors over t^0, ..., t^(m-1).
inline FgAbelianGroup cyclic_homology_oracle(std::size_t m, int n) {
  if (m == 0) throw Error(ErrorKind::InvalidArgument, "cyclic oracle needs m >= 1");
  if (n < 0) throw Error(ErrorKind::InvalidArgument, "negative degree");

  std::vector<long long> t_minus_one(m, 0);
  t_minus_one[0] -= 1;
  t_minus_one[1 % m] += 1;
  const std::vector<long long> norm(m, 1);
  auto augment = [](const std::vector<long long>& x) {
    long long s = 0;
    for (long long c : x) s += c;
    return s;
  };
  // Boundary out of degree k (k >= 1) as a 1x1 matrix; degree 0 maps to 0.
  auto boundary = [&](int k) -> IntegerMatrix {
    if (k == 0) return IntegerMatrix(0, 1);
    return IntegerMatrix{{augment(k % 2 ? t_minus_one : norm)}};
  };
  return homology_of_pair(boundary(n + 1), boundary(n));
}

// Kunneth formula for G x H from the homology sequences of G and H:
//   H_n = sum_{i+j=n} A_i (x) B_j + sum_{i+j=n-1} Tor(A_i, B_j).
inline FgAbelianGroup kunneth_oracle(const std::vector<FgAbelianGroup>& a, const std::vector<FgAbelianGroup>& b,
                                     int n) {
  if (n < 0) throw Error(ErrorKind::InvalidArgument, "negative degree");
  const auto need = static_cast<std::size_t>(n) + 1;
  if (a.size() < need || b.size() < need)
    throw Error(ErrorKind::InsufficientDegree, "homology sequences must reach degree " + std::to_string(n));
  FgAbelianGroup out;
  for (int i = 0; i <= n; ++i)
    out = direct_sum(out, tensor(a[static_cast<std::size_t>(i)], b[static_cast<std::size_t>(n - i)]));
  for (int i = 0; i <= n - 1; ++i)
    out = direct_sum(out, tor_product(a[static_cast<std::size_t>(i)], b[static_cast<std::size_t>(n - 1 - i)]));
  return out;
}

}  // namespace kas
