#pragma once

#include <cstdint>
#include <vector>

#include "brim/linalg.hpp"
#include "brim/poly.hpp"

namespace brim {

// R_N = R / m^N with the monomial basis {x^a y^b : a + b < N} in graded order.
struct TruncCtx {
  std::uint32_t N = 1;

  std::size_t dimension() const noexcept { return static_cast<std::size_t>(monomials_below(N)); }
  std::size_t index(Exponent e) const noexcept { return static_cast<std::size_t>(graded_index(e)); }
};

template <Field K>
std::vector<K> trunc(const Poly<K>& f, TruncCtx ctx) {
  std::vector<K> v(ctx.dimension(), K::zero());
  for (const auto& t : f.terms()) {
    if (t.exp.degree() >= ctx.N) break;
    v[ctx.index(t.exp)] = t.coef;
  }
  return v;
}

template <Field K>
Poly<K> untrunc(const std::vector<K>& v) {
  std::vector<typename Poly<K>::Term> terms;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (!v[i].is_zero()) terms.push_back({exponent_at(i), v[i]});
  return Poly<K>::from_terms(std::move(terms));
}

// Sparse image of shift * v in F_N = R_N^rank; position = monomial index * rank + component.
template <Field K>
SparseVec<K> embed(const PolyVector<K>& v, Exponent shift, std::uint32_t N) {
  const std::size_t rank = v.size();
  SparseVec<K> out;
  for (std::size_t c = 0; c < rank; ++c) {
    for (const auto& t : v[c].terms()) {
      Exponent e = t.exp + shift;
      if (e.degree() >= N) break;
      out.emplace_back(static_cast<std::uint32_t>(graded_index(e) * rank + c), t.coef);
    }
  }
  std::sort(out.begin(), out.end(), [](const auto& l, const auto& r) { return l.first < r.first; });
  return out;
}

template <Field K>
PolyVector<K> unembed(const SparseVec<K>& v, std::size_t rank) {
  std::vector<std::vector<typename Poly<K>::Term>> terms(rank);
  for (const auto& [pos, c] : v) terms[pos % rank].push_back({exponent_at(pos / rank), c});
  PolyVector<K> out(rank);
  for (std::size_t c = 0; c < rank; ++c) out[c] = Poly<K>::from_terms(std::move(terms[c]));
  return out;
}

}  // namespace brim
