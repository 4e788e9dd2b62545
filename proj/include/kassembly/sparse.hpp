#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <queue>
#include <string>
#include <utility>
#include <vector>

#include "bigint.hpp"
#include "errors.hpp"
#include "limits.hpp"
#include "matrix.hpp"
#include "smith.hpp"

namespace kas {

// Column-compressed sparse integer matrix with small entries. Used for bar
// complex boundaries, whose entries are bounded by the degree.
class SparseMatrix {
 public:
  struct Entry {
    std::uint32_t row;
    std::int64_t value;
    friend bool operator==(const Entry&, const Entry&) = default;
  };
  using Column = std::vector<Entry>;

  SparseMatrix() = default;
  SparseMatrix(std::size_t rows, std::size_t cols) : rows_(rows), columns_(cols) {}

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return columns_.size(); }

  // Entries must be sorted by row and nonzero.
  void set_column(std::size_t j, Column column) { columns_[j] = std::move(column); }
  const Column& column(std::size_t j) const { return columns_[j]; }

  std::size_t nonzeros() const {
    std::size_t n = 0;
    for (const auto& c : columns_) n += c.size();
    return n;
  }

  IntegerMatrix to_dense(const Limits& limits = {}) const {
    if (rows_ * cols() > limits.max_dense_entries)
      throw Error(ErrorKind::TooLarge, "dense form of a " + std::to_string(rows_) + "x" +
                                           std::to_string(cols()) + " matrix exceeds the entry limit");
    IntegerMatrix m(rows_, cols());
    for (std::size_t j = 0; j < cols(); ++j)
      for (const auto& e : columns_[j]) m(e.row, j) = e.value;
    return m;
  }

  // True when this * right is the zero matrix.
  bool composes_to_zero(const SparseMatrix& right) const {
    if (cols() != right.rows()) throw Error(ErrorKind::InvalidArgument, "matrix shapes do not compose");
    std::vector<BigInt> acc(rows_);
    std::vector<std::uint32_t> touched;
    for (std::size_t j = 0; j < right.cols(); ++j) {
      touched.clear();
      for (const auto& outer : right.column(j))
        for (const auto& inner : columns_[outer.row]) {
          acc[inner.row] += BigInt(outer.value) * inner.value;
          touched.push_back(inner.row);
        }
      bool zero = true;
      for (auto r : touched) {
        if (acc[r] != 0) zero = false;
        acc[r] = 0;
      }
      if (!zero) return false;
    }
    return true;
  }

 private:
  std::size_t rows_ = 0;
  std::vector<Column> columns_;
};

// Rank and elementary divisors of an integer matrix. The torsion list holds
// the diagonal entries > 1 of some diagonal form, which determine the
// cokernel up to isomorphism but need not form a divisibility chain.
struct DiagonalForm {
  std::size_t rank = 0;
  std::vector<BigInt> torsion;
};

namespace detail {

struct Overflow {};

inline std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw Overflow{};
  return r;
}
inline std::int64_t checked_sub(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_sub_overflow(a, b, &r)) throw Overflow{};
  return r;
}
inline BigInt checked_mul(const BigInt& a, const BigInt& b) { return a * b; }
inline BigInt checked_sub(const BigInt& a, const BigInt& b) { return a - b; }

inline bool is_unit(std::int64_t v) { return v == 1 || v == -1; }
inline bool is_unit(const BigInt& v) { return v == 1 || v == -1; }

// Unit-pivot sparse elimination. Each vector is one column of the input;
// eliminating a unit pivot (v, i) removes vector v and index i while
// preserving the cokernel, so the remaining block carries all nonunit
// elementary divisors and is finished by a dense Smith form.
template <class T>
class UnitEliminator {
 public:
  using Vec = std::vector<std::pair<std::uint32_t, T>>;

  explicit UnitEliminator(const SparseMatrix& m)
      : vecs_(m.cols()), occ_(m.rows()), count_(m.rows(), 0), alive_(m.cols(), 1), stamp_(m.cols(), 0) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      auto& v = vecs_[j];
      v.reserve(m.column(j).size());
      for (const auto& e : m.column(j)) {
        v.emplace_back(e.row, T(e.value));
        occ_[e.row].push_back(static_cast<std::uint32_t>(j));
        ++count_[e.row];
      }
    }
  }

  std::size_t eliminate() {
    using Key = std::pair<std::size_t, std::uint32_t>;
    std::priority_queue<Key, std::vector<Key>, std::greater<>> heap;
    for (std::size_t j = 0; j < vecs_.size(); ++j)
      if (!vecs_[j].empty()) heap.emplace(vecs_[j].size(), static_cast<std::uint32_t>(j));

    std::size_t pivots = 0;
    Vec scratch;
    while (!heap.empty()) {
      auto [len, v] = heap.top();
      heap.pop();
      if (!alive_[v] || vecs_[v].size() != len || len == 0) continue;

      // Unit entry of v whose index is shared by the fewest vectors.
      std::size_t best = len;
      for (std::size_t k = 0; k < len; ++k)
        if (is_unit(vecs_[v][k].second) && (best == len || count_[vecs_[v][k].first] < count_[vecs_[v][best].first]))
          best = k;
      if (best == len) continue;  // re-queued if an update later changes v

      const std::uint32_t index = vecs_[v][best].first;
      const T unit = vecs_[v][best].second;
      ++epoch_;
      stamp_[v] = epoch_;
      for (std::uint32_t w : occ_[index]) {
        if (!alive_[w] || stamp_[w] == epoch_) continue;
        stamp_[w] = epoch_;
        const T* a = find(vecs_[w], index);
        if (!a) continue;
        const T factor = checked_mul(*a, unit);
        axpy(w, v, factor, scratch);
        heap.emplace(vecs_[w].size(), w);
      }
      for (const auto& [i, value] : vecs_[v]) --count_[i];
      occ_[index].clear();
      occ_[index].shrink_to_fit();
      alive_[v] = 0;
      Vec().swap(vecs_[v]);
      ++pivots;
    }
    return pivots;
  }

  // Residual block in dense form: nonzero vectors become columns.
  IntegerMatrix residual(const Limits& limits) const {
    std::vector<std::uint32_t> live_vecs;
    std::vector<std::int64_t> index_map(occ_.size(), -1);
    std::size_t rows = 0;
    for (std::size_t j = 0; j < vecs_.size(); ++j) {
      if (!alive_[j] || vecs_[j].empty()) continue;
      live_vecs.push_back(static_cast<std::uint32_t>(j));
      for (const auto& [i, value] : vecs_[j])
        if (index_map[i] < 0) index_map[i] = static_cast<std::int64_t>(rows++);
    }
    if (rows * live_vecs.size() > limits.max_dense_entries)
      throw Error(ErrorKind::TooLarge, "residual block of " + std::to_string(rows) + "x" +
                                           std::to_string(live_vecs.size()) +
                                           " after sparse elimination exceeds the dense entry limit");
    IntegerMatrix m(rows, live_vecs.size());
    for (std::size_t c = 0; c < live_vecs.size(); ++c)
      for (const auto& [i, value] : vecs_[live_vecs[c]]) m(static_cast<std::size_t>(index_map[i]), c) = BigInt(value);
    return m;
  }

 private:
  static const T* find(const Vec& v, std::uint32_t index) {
    auto it = std::lower_bound(v.begin(), v.end(), index, [](const auto& e, std::uint32_t i) { return e.first < i; });
    return (it != v.end() && it->first == index) ? &it->second : nullptr;
  }

  // vecs_[w] -= factor * vecs_[v]
  void axpy(std::uint32_t w, std::uint32_t v, const T& factor, Vec& out) {
    const Vec& a = vecs_[w];
    const Vec& b = vecs_[v];
    out.clear();
    out.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
      if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
        out.push_back(a[i++]);
      } else if (i == a.size() || b[j].first < a[i].first) {
        const std::uint32_t idx = b[j].first;
        out.emplace_back(idx, checked_sub(T(0), checked_mul(factor, b[j].second)));
        ++count_[idx];
        occ_[idx].push_back(w);
        ++j;
      } else {
        const std::uint32_t idx = a[i].first;
        T value = checked_sub(a[i].second, checked_mul(factor, b[j].second));
        if (value != 0)
          out.emplace_back(idx, std::move(value));
        else
          --count_[idx];
        ++i;
        ++j;
      }
    }
    vecs_[w].swap(out);
  }

  std::vector<Vec> vecs_;
  std::vector<std::vector<std::uint32_t>> occ_;
  std::vector<std::size_t> count_;
  std::vector<char> alive_;
  std::vector<std::uint64_t> stamp_;
  std::uint64_t epoch_ = 0;
};

template <class T>
DiagonalForm diagonalize_with(const SparseMatrix& m, const Limits& limits) {
  UnitEliminator<T> elim(m);
  DiagonalForm out;
  out.rank = elim.eliminate();
  IntegerMatrix rest = elim.residual(limits);
  for (auto& d : smith_diagonal(rest, limits)) {
    if (d == 0) continue;
    ++out.rank;
    if (d != 1) out.torsion.push_back(std::move(d));
  }
  return out;
}

}  // namespace detail

// Rank and nonunit elementary divisors. Runs in 64-bit arithmetic and
// restarts with arbitrary precision if any intermediate value overflows.
inline DiagonalForm diagonalize(const SparseMatrix& m, const Limits& limits = {}) {
  try {
    return detail::diagonalize_with<std::int64_t>(m, limits);
  } catch (const detail::Overflow&) {
    return detail::diagonalize_with<BigInt>(m, limits);
  }
}

}  // namespace kas
