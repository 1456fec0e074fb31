#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "brim/field.hpp"

namespace brim {

template <Field K>
class DenseMatrix {
 public:
  DenseMatrix() = default;
  DenseMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, K::zero()) {}

  static DenseMatrix identity(std::size_t n) {
    DenseMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = K::one();
    return m;
  }
  static DenseMatrix random(std::size_t rows, std::size_t cols, Rng& rng) {
    DenseMatrix m(rows, cols);
    for (auto& v : m.data_) v = K::random(rng);
    return m;
  }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  K& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const K& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  DenseMatrix transposed() const {
    DenseMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }
  friend DenseMatrix operator*(const DenseMatrix& l, const DenseMatrix& r) {
    DenseMatrix p(l.rows_, r.cols_);
    for (std::size_t i = 0; i < l.rows_; ++i)
      for (std::size_t k = 0; k < l.cols_; ++k) {
        if (l(i, k).is_zero()) continue;
        for (std::size_t j = 0; j < r.cols_; ++j) p(i, j) += l(i, k) * r(k, j);
      }
    return p;
  }
  friend bool operator==(const DenseMatrix&, const DenseMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<K> data_;
};

// Reduced row echelon form in place; returns pivot columns.
template <Field K>
std::vector<std::size_t> row_reduce(DenseMatrix<K>& m) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t sel = row;
    while (sel < m.rows() && m(sel, col).is_zero()) ++sel;
    if (sel == m.rows()) continue;
    if (sel != row)
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(sel, j), m(row, j));
    K inv = m(row, col).inv();
    for (std::size_t j = col; j < m.cols(); ++j) m(row, j) *= inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == row || m(i, col).is_zero()) continue;
      K f = m(i, col);
      for (std::size_t j = col; j < m.cols(); ++j) m(i, j) -= f * m(row, j);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

template <Field K>
struct EchelonResult {
  std::size_t rank = 0;
  // Reduced echelon basis of the column span.
  std::vector<std::vector<K>> column_basis;
  // Basis of {v : m v = 0}.
  std::vector<std::vector<K>> kernel;
};

template <Field K>
EchelonResult<K> rank_and_echelon(const DenseMatrix<K>& m) {
  EchelonResult<K> out;
  DenseMatrix<K> r = m;
  auto pivots = row_reduce(r);
  out.rank = pivots.size();
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : pivots) is_pivot[p] = true;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    std::vector<K> v(m.cols(), K::zero());
    v[free] = K::one();
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -r(i, free);
    out.kernel.push_back(std::move(v));
  }
  DenseMatrix<K> t = m.transposed();
  auto tp = row_reduce(t);
  for (std::size_t i = 0; i < tp.size(); ++i) {
    std::vector<K> v(t.cols());
    for (std::size_t j = 0; j < t.cols(); ++j) v[j] = t(i, j);
    out.column_basis.push_back(std::move(v));
  }
  return out;
}

template <Field K>
std::optional<DenseMatrix<K>> inverse(const DenseMatrix<K>& m) {
  const std::size_t n = m.rows();
  DenseMatrix<K> aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = K::one();
  }
  auto pivots = row_reduce(aug);
  if (pivots.size() < n || pivots[n - 1] != n - 1) return std::nullopt;
  DenseMatrix<K> inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = aug(i, n + j);
  return inv;
}

template <Field K>
using SparseVec = std::vector<std::pair<std::uint32_t, K>>;

// Incremental semi-echelon basis of a subspace of K^dim. The pivot of a row
// is its lowest nonzero index, so with degree-graded indices the span of the
// rows meets every index suffix in (number of pivots in that suffix)
// dimensions. Optionally tracks, for every row, the combination of inserted
// (labelled) vectors producing it, which turns dependencies into kernel
// relations.
//
// Reduction buffers are reused across calls: one instance per thread.
template <Field K>
class SparseEchelon {
 public:
  explicit SparseEchelon(std::size_t dim, std::size_t label_dim = 0)
      : dim_(dim), label_dim_(label_dim), pivot_row_(dim, -1), work_(dim, K::zero()), queued_(dim, 0) {
    if (label_dim_ > 0) {
      label_work_.assign(label_dim_, K::zero());
      label_touched_flag_.assign(label_dim_, 0);
    }
  }

  std::size_t dimension() const noexcept { return dim_; }
  std::size_t rank() const noexcept { return rows_.size(); }
  bool has_pivot(std::size_t i) const { return pivot_row_[i] >= 0; }
  const std::vector<SparseVec<K>>& rows() const noexcept { return rows_; }
  const std::vector<std::uint32_t>& pivots() const noexcept { return pivot_index_; }
  const std::vector<SparseVec<K>>& combinations() const noexcept { return combos_; }

  // Adds v if it is independent of the current rows.
  bool insert(const SparseVec<K>& v) {
    auto rest = reduce_impl(v, nullptr);
    if (rest.empty()) return false;
    add_row(std::move(rest), {});
    return true;
  }

  // Tracked insertion of the formal basis vector `label`, mapping to v.
  // Returns the kernel relation when v depends on earlier vectors.
  std::optional<SparseVec<K>> insert_tracked(const SparseVec<K>& v, std::uint32_t label) {
    label_work_[label] = K::one();
    label_touched_.push_back(label);
    label_touched_flag_[label] = 1;
    auto rest = reduce_impl(v, &label_work_);
    SparseVec<K> combo = drain_labels();
    if (rest.empty()) return combo;
    add_row(std::move(rest), std::move(combo));
    return std::nullopt;
  }

  bool contains(const SparseVec<K>& v) const { return reduce_impl(v, nullptr).empty(); }

  // Residual after eliminating leading entries; empty iff v is in the span.
  SparseVec<K> reduce(const SparseVec<K>& v) const { return reduce_impl(v, nullptr); }

 private:
  void add_row(SparseVec<K> row, SparseVec<K> combo) {
    K inv = row.front().second.inv();
    if (!(row.front().second == K::one())) {
      for (auto& e : row) e.second *= inv;
      for (auto& e : combo) e.second *= inv;
    }
    pivot_row_[row.front().first] = static_cast<std::int32_t>(rows_.size());
    pivot_index_.push_back(row.front().first);
    rows_.push_back(std::move(row));
    if (label_dim_ > 0) combos_.push_back(std::move(combo));
  }

  SparseVec<K> drain_labels() {
    SparseVec<K> out;
    std::sort(label_touched_.begin(), label_touched_.end());
    for (auto l : label_touched_) {
      if (!label_work_[l].is_zero()) out.emplace_back(l, label_work_[l]);
      label_work_[l] = K::zero();
      label_touched_flag_[l] = 0;
    }
    label_touched_.clear();
    return out;
  }

  void push(std::uint32_t i) const {
    if (queued_[i]) return;
    queued_[i] = 1;
    heap_.push_back(i);
    std::push_heap(heap_.begin(), heap_.end(), std::greater<>{});
  }
  std::uint32_t pop() const {
    std::pop_heap(heap_.begin(), heap_.end(), std::greater<>{});
    std::uint32_t i = heap_.back();
    heap_.pop_back();
    queued_[i] = 0;
    return i;
  }

  SparseVec<K> reduce_impl(const SparseVec<K>& v, std::vector<K>* labels) const {
    for (const auto& [i, c] : v) {
      work_[i] = c;
      push(i);
    }
    SparseVec<K> rest;
    while (!heap_.empty()) {
      std::uint32_t i = pop();
      if (work_[i].is_zero()) continue;
      std::int32_t p = pivot_row_[i];
      if (p < 0) {
        rest.emplace_back(i, work_[i]);
        work_[i] = K::zero();
        while (!heap_.empty()) {
          std::uint32_t j = pop();
          if (!work_[j].is_zero()) rest.emplace_back(j, work_[j]);
          work_[j] = K::zero();
        }
        break;
      }
      K c = work_[i];
      work_[i] = K::zero();
      const auto& row = rows_[p];
      for (std::size_t t = 1; t < row.size(); ++t) {
        auto [j, val] = row[t];
        work_[j] -= c * val;
        push(j);
      }
      if (labels != nullptr) {
        for (const auto& [l, val] : combos_[p]) {
          (*labels)[l] -= c * val;
          if (!label_touched_flag_[l]) {
            label_touched_flag_[l] = 1;
            label_touched_.push_back(l);
          }
        }
      }
    }
    return rest;
  }

  std::size_t dim_;
  std::size_t label_dim_;
  std::vector<std::int32_t> pivot_row_;
  std::vector<std::uint32_t> pivot_index_;
  std::vector<SparseVec<K>> rows_;
  std::vector<SparseVec<K>> combos_;

  mutable std::vector<K> work_;
  mutable std::vector<char> queued_;
  mutable std::vector<std::uint32_t> heap_;
  std::vector<K> label_work_;
  mutable std::vector<std::uint32_t> label_touched_;
  mutable std::vector<char> label_touched_flag_;
};

}  // namespace brim
