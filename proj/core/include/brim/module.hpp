#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "brim/errors.hpp"
#include "brim/ideal.hpp"
#include "brim/linalg.hpp"
#include "brim/options.hpp"
#include "brim/polymatrix.hpp"
#include "brim/span.hpp"

namespace brim {

// Submodule of F = R^rank generated by the given columns.
template <Field K>
class Module {
 public:
  Module() = default;
  Module(std::size_t rank, std::vector<PolyVector<K>> columns) : rank_(rank), columns_(std::move(columns)) {
    for (const auto& c : columns_)
      if (c.size() != rank_) throw InputError("generator has " + std::to_string(c.size()) + " entries, expected " +
                                              std::to_string(rank_));
  }
  static Module from_matrix(const PolyMatrix<K>& m) { return Module(m.rows(), m.columns()); }
  static Module from_ideal(const Ideal<K>& I) { return Module(1, as_rank_one(I.gens())); }

  std::size_t rank() const noexcept { return rank_; }
  std::size_t size() const noexcept { return columns_.size(); }
  const std::vector<PolyVector<K>>& columns() const noexcept { return columns_; }
  const PolyVector<K>& column(std::size_t j) const { return columns_.at(j); }
  PolyMatrix<K> matrix() const { return PolyMatrix<K>::from_columns(rank_, columns_); }

  bool in_maximal_ideal() const {
    for (const auto& c : columns_)
      for (const auto& p : c)
        if (p.is_unit()) return false;
    return true;
  }
  // Every column has a single nonzero entry and it is a monomial.
  bool is_monomial_direct_sum() const {
    for (const auto& c : columns_) {
      int nonzero = 0;
      for (const auto& p : c) {
        if (p.is_zero()) continue;
        if (!p.is_monomial()) return false;
        ++nonzero;
      }
      if (nonzero != 1) return false;
    }
    return true;
  }
  // Component ideals of a monomial direct sum.
  std::vector<Staircase> components() const {
    std::vector<std::vector<Exponent>> exps(rank_);
    for (const auto& c : columns_)
      for (std::size_t i = 0; i < rank_; ++i)
        if (!c[i].is_zero()) exps[i].push_back(c[i].terms().front().exp);
    std::vector<Staircase> out;
    for (auto& e : exps) out.push_back(Staircase::from_exponents(std::move(e)));
    return out;
  }

  Module with_column(PolyVector<K> f) const {
    Module m = *this;
    m.columns_.push_back(std::move(f));
    return m;
  }

  friend bool operator==(const Module&, const Module&) = default;

 private:
  std::size_t rank_ = 0;
  std::vector<PolyVector<K>> columns_;
};

template <Field K>
ModuleSpan<K> module_span(const Module<K>& M, const Options& opts) {
  return ModuleSpan<K>::build(M.columns(), M.rank(), opts.trunc_cap);
}

// I_k(M); I_0(M) is the unit ideal.
template <Field K>
Ideal<K> fitting_ideal(const Module<K>& M, std::size_t k) {
  if (k > M.rank()) throw InputError("minor size exceeds the rank");
  if (k == 0) return Ideal<K>::unit();
  if (k > M.size()) throw InputError("module has fewer generators than the minor size");
  auto ms = minors(M.matrix(), k);
  if (is_zero(ms)) throw InputError("all " + std::to_string(k) + "-minors vanish");
  return Ideal<K>(std::move(ms));
}

template <Field K>
Ideal<K> ideal_of_minors(const Module<K>& M) {
  return fitting_ideal(M, M.rank());
}

template <Field K>
ColengthResult colength_FM(const Module<K>& M, const Options& opts = {}) {
  if (M.rank() == 1) {
    PolyVector<K> g;
    for (const auto& c : M.columns()) g.push_back(c[0]);
    return colength(Ideal<K>(std::move(g)), opts);
  }
  return module_span(M, opts).result();
}

template <Field K>
Module<K> maximal_ideal_times(const Module<K>& M) {
  std::vector<PolyVector<K>> cols;
  for (const auto& c : M.columns()) {
    for (Exponent e : {Exponent{1, 0}, Exponent{0, 1}}) {
      PolyVector<K> v;
      for (const auto& p : c) v.push_back(p.shifted(e));
      cols.push_back(std::move(v));
    }
  }
  return Module<K>(M.rank(), std::move(cols));
}

// Number of minimal generators, dim M / mM.
template <Field K>
std::uint64_t min_gens(const Module<K>& M, const Options& opts = {}) {
  auto outer = colength_FM(maximal_ideal_times(M), opts).get();
  auto inner = colength_FM(M, opts).get();
  return outer - inner;
}

// A minimal generating set chosen among the given columns, in order.
template <Field K>
Module<K> minimal_generators(const Module<K>& M, const Options& opts = {}) {
  auto span = module_span(maximal_ideal_times(M), opts);
  if (!span.certified()) throw ResourceError("colength of mM exceeds the truncation cap");
  SparseEchelon<K> e = span.echelon();
  std::vector<PolyVector<K>> keep;
  for (const auto& c : M.columns())
    if (e.insert(embed(c, {0, 0}, span.truncation()))) keep.push_back(c);
  return Module<K>(M.rank(), std::move(keep));
}

// A minimal generating subset, listed as a staircase when it is monomial and
// otherwise scaled so each generator has leading coefficient one.
template <Field K>
Ideal<K> simplified(const Ideal<K>& I, const Options& opts = {}) {
  if (auto s = I.staircase()) return Ideal<K>::from_staircase(*s);
  auto m = minimal_generators(Module<K>::from_ideal(I), opts);
  PolyVector<K> gens;
  for (const auto& c : m.columns()) gens.push_back(c[0]);
  if (auto s = as_staircase<K>(gens)) return Ideal<K>::from_staircase(*s);
  for (auto& g : gens) g = g.scaled(g.terms().front().coef.inv());
  return Ideal<K>(std::move(gens));
}

// Rank of the generator matrix at a random point, retried with fresh points.
template <Field K>
bool has_generic_rank(const Module<K>& M, std::uint64_t seed, int tries = 3) {
  Rng rng(seed);
  for (int t = 0; t < tries; ++t) {
    K x = K::random(rng), y = K::random(rng);
    DenseMatrix<K> m(M.rank(), M.size());
    for (std::size_t j = 0; j < M.size(); ++j)
      for (std::size_t i = 0; i < M.rank(); ++i) m(i, j) = M.column(j)[i].evaluate(x, y);
    if (rank_and_echelon(m).rank == M.rank()) return true;
  }
  return false;
}

// Validated construction: generic rank equal to the ambient rank and finite colength.
template <Field K>
Module<K> module_new(std::size_t rank, std::vector<PolyVector<K>> columns, const Options& opts = {},
                     std::uint64_t seed = 1) {
  if (rank == 0) throw InputError("ambient rank must be positive");
  if (columns.empty()) throw InputError("module needs at least one generator");
  Module<K> M(rank, std::move(columns));
  if (M.size() < rank || !has_generic_rank(M, seed)) throw InputError("generator matrix has rank below " + std::to_string(rank));
  auto I = ideal_of_minors(M);
  if (auto s = I.staircase(); s && !s->is_m_primary())
    throw InputError("F/M has infinite length (ideal of maximal minors is not m-primary)");
  if (!colength_FM(M, opts).finite()) throw ResourceError("colength of F/M exceeds the truncation cap");
  return M;
}

template <Field K>
struct SplitResult {
  Module<K> reduced;
  std::size_t free_rank = 0;
};

// Splits off free summands by pivoting on unit entries with polynomial-only
// row and column operations (unit multiples are harmless in the local ring).
template <Field K>
SplitResult<K> split_free(const Module<K>& M) {
  PolyMatrix<K> a = M.matrix();
  std::size_t free_rank = 0;
  for (;;) {
    std::size_t pi = a.rows(), pj = a.cols();
    for (std::size_t i = 0; i < a.rows() && pi == a.rows(); ++i)
      for (std::size_t j = 0; j < a.cols(); ++j)
        if (a(i, j).is_unit()) {
          pi = i;
          pj = j;
          break;
        }
    if (pi == a.rows()) break;
    const Poly<K> u = a(pi, pj);
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (k == pj || a(pi, k).is_zero()) continue;
      Poly<K> c = a(pi, k);
      for (std::size_t i = 0; i < a.rows(); ++i) a(i, k) = u * a(i, k) - c * a(i, pj);
    }
    for (std::size_t l = 0; l < a.rows(); ++l) {
      if (l == pi || a(l, pj).is_zero()) continue;
      Poly<K> c = a(l, pj);
      for (std::size_t j = 0; j < a.cols(); ++j) a(l, j) = u * a(l, j) - c * a(pi, j);
    }
    PolyMatrix<K> b(a.rows() - 1, a.cols() - 1);
    for (std::size_t i = 0, bi = 0; i < a.rows(); ++i) {
      if (i == pi) continue;
      for (std::size_t j = 0, bj = 0; j < a.cols(); ++j) {
        if (j == pj) continue;
        b(bi, bj++) = a(i, j);
      }
      ++bi;
    }
    a = std::move(b);
    ++free_rank;
  }
  std::vector<PolyVector<K>> cols;
  for (auto& c : a.columns())
    if (!is_zero(c)) cols.push_back(std::move(c));
  return {Module<K>(a.rows(), std::move(cols)), free_rank};
}

template <Field K>
Module<K> direct_sum(const Module<K>& A, const Module<K>& B) {
  const std::size_t r = A.rank() + B.rank();
  std::vector<PolyVector<K>> cols;
  for (const auto& c : A.columns()) {
    PolyVector<K> v(r);
    for (std::size_t i = 0; i < A.rank(); ++i) v[i] = c[i];
    cols.push_back(std::move(v));
  }
  for (const auto& c : B.columns()) {
    PolyVector<K> v(r);
    for (std::size_t i = 0; i < B.rank(); ++i) v[A.rank() + i] = c[i];
    cols.push_back(std::move(v));
  }
  return Module<K>(r, std::move(cols));
}

template <Field K>
Module<K> direct_sum(const std::vector<Staircase>& parts) {
  Module<K> out;
  bool first = true;
  for (const auto& s : parts) {
    auto m = Module<K>::from_ideal(Ideal<K>::from_staircase(s));
    out = first ? m : direct_sum(out, m);
    first = false;
  }
  return out;
}

inline void check_mabc(int a, int b, int c) {
  if (!(1 <= a && a <= c && c < b && b <= a + c))
    throw InputError("M(a,b,c) needs 1 <= a <= c < b <= a+c, got (" + std::to_string(a) + "," + std::to_string(b) +
                     "," + std::to_string(c) + ")");
}

// Columns [y^a, x^a], [x^b, 0], [0, y^b], [x^c y^c, 0].
template <Field K>
Module<K> family_Mabc(int a, int b, int c) {
  check_mabc(a, b, c);
  auto m = [](int i, int j) { return Poly<K>::monomial(static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(j)); };
  return Module<K>(2, {{m(0, a), m(a, 0)}, {m(b, 0), Poly<K>()}, {Poly<K>(), m(0, b)}, {m(c, c), Poly<K>()}});
}

// The designated reduction: the first three columns.
template <Field K>
Module<K> family_Mabc_reduction(int a, int b, int c) {
  auto M = family_Mabc<K>(a, b, c);
  return Module<K>(2, {M.column(0), M.column(1), M.column(2)});
}

template <Field K>
bool is_contracted(const Module<K>& M, const Options& opts = {}) {
  return min_gens(M, opts) == order(ideal_of_minors(M)) + M.rank();
}

}  // namespace brim
