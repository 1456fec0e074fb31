#pragma once

#include <cstdint>
#include <limits>
#include <unordered_map>
#include <vector>

#include "brim/errors.hpp"
#include "brim/linalg.hpp"
#include "brim/poly.hpp"

namespace brim {

template <Field K>
class PolyMatrix {
 public:
  PolyMatrix() = default;
  PolyMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static PolyMatrix from_columns(std::size_t rows, const std::vector<PolyVector<K>>& columns) {
    PolyMatrix m(rows, columns.size());
    for (std::size_t j = 0; j < columns.size(); ++j) {
      if (columns[j].size() != rows) throw InputError("column has the wrong length");
      for (std::size_t i = 0; i < rows; ++i) m(i, j) = columns[j][i];
    }
    return m;
  }
  static PolyMatrix from_rows(const std::vector<PolyVector<K>>& rows) {
    PolyMatrix m(rows.size(), rows.empty() ? 0 : rows.front().size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != m.cols_) throw InputError("ragged matrix");
      for (std::size_t j = 0; j < m.cols_; ++j) m(i, j) = rows[i][j];
    }
    return m;
  }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  Poly<K>& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Poly<K>& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  PolyVector<K> column(std::size_t j) const {
    PolyVector<K> c(rows_);
    for (std::size_t i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
    return c;
  }
  std::vector<PolyVector<K>> columns() const {
    std::vector<PolyVector<K>> out;
    for (std::size_t j = 0; j < cols_; ++j) out.push_back(column(j));
    return out;
  }
  PolyMatrix transposed() const {
    PolyMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }
  PolyMatrix row_slice(std::size_t first, std::size_t count) const {
    PolyMatrix s(count, cols_);
    for (std::size_t i = 0; i < count; ++i)
      for (std::size_t j = 0; j < cols_; ++j) s(i, j) = (*this)(first + i, j);
    return s;
  }
  PolyMatrix truncated(std::uint32_t n) const {
    PolyMatrix t = *this;
    for (auto& p : t.data_) p = p.truncated(n);
    return t;
  }
  bool all_in_maximal_ideal() const {
    for (const auto& p : data_)
      if (p.is_unit()) return false;
    return true;
  }

  friend PolyMatrix operator*(const PolyMatrix& l, const PolyMatrix& r) {
    PolyMatrix p(l.rows_, r.cols_);
    for (std::size_t i = 0; i < l.rows_; ++i)
      for (std::size_t k = 0; k < l.cols_; ++k) {
        if (l(i, k).is_zero()) continue;
        for (std::size_t j = 0; j < r.cols_; ++j) p(i, j) += l(i, k) * r(k, j);
      }
    return p;
  }
  // Scalar matrix acting on the left.
  friend PolyMatrix operator*(const DenseMatrix<K>& l, const PolyMatrix& r) {
    PolyMatrix p(l.rows(), r.cols_);
    for (std::size_t i = 0; i < l.rows(); ++i)
      for (std::size_t k = 0; k < l.cols(); ++k) {
        if (l(i, k).is_zero()) continue;
        for (std::size_t j = 0; j < r.cols_; ++j) p(i, j) += r(k, j).scaled(l(i, k));
      }
    return p;
  }
  friend PolyMatrix operator*(const PolyMatrix& l, const DenseMatrix<K>& r) {
    PolyMatrix p(l.rows_, r.cols());
    for (std::size_t i = 0; i < l.rows_; ++i)
      for (std::size_t k = 0; k < l.cols_; ++k) {
        if (l(i, k).is_zero()) continue;
        for (std::size_t j = 0; j < r.cols(); ++j) p(i, j) += l(i, k).scaled(r(k, j));
      }
    return p;
  }
  friend bool operator==(const PolyMatrix&, const PolyMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Poly<K>> data_;
};

namespace detail {

inline void subsets(std::size_t n, std::size_t k, std::vector<std::uint64_t>& out) {
  if (k > n) return;
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  for (;;) {
    std::uint64_t mask = 0;
    for (auto i : idx) mask |= std::uint64_t{1} << i;
    out.push_back(mask);
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
    if (i == 0) break;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

struct MaskPairHash {
  std::size_t operator()(const std::pair<std::uint64_t, std::uint64_t>& p) const noexcept {
    return std::hash<std::uint64_t>{}(p.first * 0x9E3779B97F4A7C15ULL ^ p.second);
  }
};

}  // namespace detail

// Laplace expansion along the first row of each row subset, memoized on
// (row subset, column subset); every k-minor reuses the (k-1)-minors of the
// rows below. Products are truncated at degree `truncation`.
template <Field K>
class MinorTable {
 public:
  explicit MinorTable(const PolyMatrix<K>& m, std::uint32_t truncation = std::numeric_limits<std::uint32_t>::max())
      : m_(m), trunc_(truncation) {
    if (m.rows() > 63 || m.cols() > 63) throw ResourceError("matrix too large for minor enumeration");
  }

  const Poly<K>& minor(std::uint64_t row_mask, std::uint64_t col_mask) {
    auto key = std::make_pair(row_mask, col_mask);
    if (auto it = cache_.find(key); it != cache_.end()) return it->second;
    Poly<K> det;
    if (row_mask == 0) {
      det = Poly<K>(K::one());
    } else {
      int r = std::countr_zero(row_mask);
      std::uint64_t rest_rows = row_mask & (row_mask - 1);
      bool negative = false;
      for (std::uint64_t cm = col_mask; cm != 0; cm &= cm - 1) {
        int c = std::countr_zero(cm);
        const Poly<K>& entry = m_(r, c);
        if (!entry.is_zero()) {
          const Poly<K>& sub = minor(rest_rows, col_mask & ~(std::uint64_t{1} << c));
          if (!sub.is_zero()) {
            Poly<K> term = Poly<K>::multiply(entry, sub, trunc_);
            det = negative ? det - term : det + term;
          }
        }
        negative = !negative;
      }
    }
    return cache_.emplace(key, std::move(det)).first->second;
  }

 private:
  const PolyMatrix<K>& m_;
  std::uint32_t trunc_;
  std::unordered_map<std::pair<std::uint64_t, std::uint64_t>, Poly<K>, detail::MaskPairHash> cache_;
};

// All k x k minors, row subsets outer and column subsets inner, each in
// lexicographic order. minors(m, 0) = {1}.
template <Field K>
std::vector<Poly<K>> minors(const PolyMatrix<K>& m, std::size_t k,
                            std::uint32_t truncation = std::numeric_limits<std::uint32_t>::max()) {
  if (k > std::min(m.rows(), m.cols())) throw InputError("minor size exceeds matrix dimensions");
  if (k == 0) return {Poly<K>(K::one())};
  std::vector<std::uint64_t> rs, cs;
  detail::subsets(m.rows(), k, rs);
  detail::subsets(m.cols(), k, cs);
  MinorTable<K> table(m, truncation);
  std::vector<Poly<K>> out;
  out.reserve(rs.size() * cs.size());
  for (auto r : rs)
    for (auto c : cs) out.push_back(table.minor(r, c));
  return out;
}

template <Field K>
Poly<K> determinant(const PolyMatrix<K>& m) {
  if (m.rows() != m.cols()) throw InputError("determinant of a non-square matrix");
  if (m.rows() == 0) return Poly<K>(K::one());
  MinorTable<K> table(m);
  std::uint64_t all = (m.rows() == 64) ? ~0ULL : ((std::uint64_t{1} << m.rows()) - 1);
  return table.minor(all, all);
}

}  // namespace brim
