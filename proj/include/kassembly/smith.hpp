#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "bigint.hpp"
#include "errors.hpp"
#include "limits.hpp"
#include "matrix.hpp"

namespace kas {

// U * A * V = D with U, V unimodular, D diagonal and
// diagonal[0] | diagonal[1] | ... (all entries nonnegative).
struct SmithDecomposition {
  IntegerMatrix U;
  IntegerMatrix D;
  IntegerMatrix V;
  std::vector<BigInt> diagonal;
};

namespace detail {

struct SmithState {
  IntegerMatrix D;
  IntegerMatrix U;
  IntegerMatrix V;
  IntegerMatrix V_inverse;
  bool track = false;

  void swap_rows(std::size_t a, std::size_t b) {
    D.swap_rows(a, b);
    if (track) U.swap_rows(a, b);
  }
  void swap_cols(std::size_t a, std::size_t b) {
    D.swap_cols(a, b);
    if (track) {
      V.swap_cols(a, b);
      V_inverse.swap_rows(a, b);
    }
  }
  void add_row_multiple(std::size_t target, std::size_t source, const BigInt& f) {
    D.add_row_multiple(target, source, f);
    if (track) U.add_row_multiple(target, source, f);
  }
  void add_col_multiple(std::size_t target, std::size_t source, const BigInt& f) {
    D.add_col_multiple(target, source, f);
    if (track) {
      V.add_col_multiple(target, source, f);
      V_inverse.add_row_multiple(source, target, -f);
    }
  }
  void negate_row(std::size_t r) {
    D.negate_row(r);
    if (track) U.negate_row(r);
  }
};

inline void check_dense_size(const IntegerMatrix& a, const Limits& limits) {
  const std::size_t total = a.size() + (a.rows() * a.rows()) + 2 * (a.cols() * a.cols());
  if (a.size() > limits.max_dense_entries || total > 4 * limits.max_dense_entries)
    throw Error(ErrorKind::TooLarge, "dense matrix of " + std::to_string(a.rows()) + "x" +
                                         std::to_string(a.cols()) + " exceeds the entry limit");
}

// Smallest nonzero |entry| in the trailing block starting at (t, t); ties go
// to the lowest (row, col) in row-major order.
inline std::optional<std::pair<std::size_t, std::size_t>> find_pivot(const IntegerMatrix& d, std::size_t t) {
  std::optional<std::pair<std::size_t, std::size_t>> best;
  BigInt best_abs;
  for (std::size_t i = t; i < d.rows(); ++i)
    for (std::size_t j = t; j < d.cols(); ++j) {
      const BigInt& v = d(i, j);
      if (v == 0) continue;
      BigInt a = abs_value(v);
      if (!best || a < best_abs) {
        best = {i, j};
        best_abs = std::move(a);
        if (best_abs == 1) return best;
      }
    }
  return best;
}

inline void run_smith(SmithState& s) {
  IntegerMatrix& d = s.D;
  const std::size_t steps = std::min(d.rows(), d.cols());
  for (std::size_t t = 0; t < steps; ++t) {
    for (;;) {
      auto pivot = find_pivot(d, t);
      if (!pivot) return;
      s.swap_rows(t, pivot->first);
      s.swap_cols(t, pivot->second);

      bool clean = true;
      for (std::size_t i = t + 1; i < d.rows(); ++i) {
        if (d(i, t) == 0) continue;
        BigInt q = d(i, t) / d(t, t);
        s.add_row_multiple(i, t, -q);
        if (d(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < d.cols(); ++j) {
        if (d(t, j) == 0) continue;
        BigInt q = d(t, j) / d(t, t);
        s.add_col_multiple(j, t, -q);
        if (d(t, j) != 0) clean = false;
      }
      if (!clean) continue;

      // Row and column are clear; enforce divisibility of the trailing block.
      bool divisible = true;
      for (std::size_t i = t + 1; i < d.rows() && divisible; ++i)
        for (std::size_t j = t + 1; j < d.cols(); ++j)
          if (d(i, j) % d(t, t) != 0) {
            s.add_row_multiple(t, i, 1);
            divisible = false;
            break;
          }
      if (!divisible) continue;

      if (d(t, t) < 0) s.negate_row(t);
      break;
    }
  }
}

inline std::vector<BigInt> diagonal_of(const IntegerMatrix& d) {
  std::vector<BigInt> diag;
  const std::size_t n = std::min(d.rows(), d.cols());
  diag.reserve(n);
  for (std::size_t i = 0; i < n; ++i) diag.push_back(d(i, i));
  return diag;
}

struct SmithWithInverse {
  SmithDecomposition snf;
  IntegerMatrix V_inverse;
};

inline SmithWithInverse smith_with_inverse(const IntegerMatrix& a, const Limits& limits) {
  check_dense_size(a, limits);
  SmithState s;
  s.D = a;
  s.U = IntegerMatrix::identity(a.rows());
  s.V = IntegerMatrix::identity(a.cols());
  s.V_inverse = IntegerMatrix::identity(a.cols());
  s.track = true;
  run_smith(s);
  SmithWithInverse out;
  out.snf.diagonal = diagonal_of(s.D);
  out.snf.U = std::move(s.U);
  out.snf.D = std::move(s.D);
  out.snf.V = std::move(s.V);
  out.V_inverse = std::move(s.V_inverse);
  return out;
}

}  // namespace detail

inline SmithDecomposition smith_normal_form(const IntegerMatrix& a, const Limits& limits = {}) {
  return detail::smith_with_inverse(a, limits).snf;
}

// Diagonal of the Smith form without the transforms.
inline std::vector<BigInt> smith_diagonal(const IntegerMatrix& a, const Limits& limits = {}) {
  if (a.size() > limits.max_dense_entries)
    throw Error(ErrorKind::TooLarge, "dense matrix exceeds the entry limit");
  detail::SmithState s;
  s.D = a;
  detail::run_smith(s);
  return detail::diagonal_of(s.D);
}

inline std::size_t rank(const IntegerMatrix& a, const Limits& limits = {}) {
  std::size_t r = 0;
  for (const auto& d : smith_diagonal(a, limits))
    if (d != 0) ++r;
  return r;
}

}  // namespace kas
