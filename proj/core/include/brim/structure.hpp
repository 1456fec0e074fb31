#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "brim/errors.hpp"
#include "brim/ideal.hpp"
#include "brim/linalg.hpp"
#include "brim/module.hpp"
#include "brim/multiplicity.hpp"
#include "brim/polymatrix.hpp"
#include "brim/span.hpp"

namespace brim {

// n x (n - r) matrix whose columns minimally generate the syzygies of the
// generators of M. Entries are exact modulo m^precision.
template <Field K>
struct PresentationMatrix {
  Module<K> generators;
  PolyMatrix<K> A;
  std::uint32_t precision = 0;
  // Row i of A belongs to generator order[i] of the original generator list.
  std::vector<std::size_t> order;
};

template <Field K>
struct CertifiedIdeal {
  Ideal<K> ideal;
  ColengthResult colength;
};

// An ideal known modulo m^P equals the true ideal once it contains m^s, s < P.
template <Field K>
std::optional<CertifiedIdeal<K>> certify_truncated(PolyVector<K> gens, std::uint32_t precision, const Options& opts) {
  PolyVector<K> kept;
  for (auto& g : gens) {
    g = g.truncated(precision);
    if (!g.is_zero()) kept.push_back(std::move(g));
  }
  if (kept.empty()) return std::nullopt;
  Ideal<K> I(std::move(kept));
  Options o = opts;
  o.trunc_cap = std::max(opts.trunc_cap, precision + 1);
  auto c = colength(I, o);
  if (!c.finite() || c.saturation >= precision) return std::nullopt;
  return CertifiedIdeal<K>{std::move(I), c};
}

// I_k of a matrix whose entries are exact modulo m^P; k = 0 gives R.
template <Field K>
std::optional<CertifiedIdeal<K>> certified_minor_ideal(const PolyMatrix<K>& A, std::size_t k, std::uint32_t precision,
                                                       const Options& opts) {
  if (k == 0) {
    ColengthResult c;
    c.value = 0;
    return CertifiedIdeal<K>{Ideal<K>::unit(), c};
  }
  return certify_truncated(minors(A, k, precision), precision, opts);
}

namespace detail {

template <Field K>
std::optional<PresentationMatrix<K>> presentation_at(const Module<K>& M, std::uint32_t sat, std::uint32_t precision) {
  const std::size_t n = M.size(), r = M.rank();
  const std::uint32_t N = sat + precision;
  const std::size_t monos = static_cast<std::size_t>(monomials_below(N));
  // Kernel of R_N^n -> F_N; label of x^e * (generator j) is index(e) * n + j.
  SparseEchelon<K> image(monos * r, monos * n);
  std::vector<SparseVec<K>> kernel;
  for (std::size_t m = 0; m < monos; ++m) {
    Exponent e = exponent_at(m);
    for (std::size_t j = 0; j < n; ++j) {
      auto rel = image.insert_tracked(embed(M.column(j), e, N), static_cast<std::uint32_t>(m * n + j));
      if (rel) kernel.push_back(std::move(*rel));
    }
  }
  // Truncate the relations to m^precision: this is the image of the true syzygies.
  const std::uint32_t label_cut = static_cast<std::uint32_t>(monomials_below(precision) * n);
  auto cut = [&](const SparseVec<K>& v) {
    SparseVec<K> out;
    for (const auto& t : v)
      if (t.first < label_cut) out.push_back(t);
    return out;
  };
  auto to_vec = [&](const SparseVec<K>& v) { return unembed(v, n); };
  auto from_vec = [&](const PolyVector<K>& v) { return embed(v, {0, 0}, precision); };
  std::vector<PolyVector<K>> V;
  for (const auto& k : kernel) {
    auto c = cut(k);
    if (!c.empty()) V.push_back(to_vec(c));
  }
  SparseEchelon<K> mv(static_cast<std::size_t>(label_cut));
  for (const auto& v : V)
    for (Exponent s : {Exponent{1, 0}, Exponent{0, 1}}) {
      PolyVector<K> w;
      for (const auto& p : v) w.push_back(p.shifted(s));
      mv.insert(from_vec(w));
    }
  std::vector<PolyVector<K>> reps;
  for (const auto& v : V)
    if (mv.insert(from_vec(v))) reps.push_back(v);
  if (reps.size() != n - r) return std::nullopt;
  PresentationMatrix<K> P;
  P.generators = M;
  P.precision = precision;
  P.A = PolyMatrix<K>(n, n - r);
  for (std::size_t c = 0; c < reps.size(); ++c)
    for (std::size_t i = 0; i < n; ++i) P.A(i, c) = reps[c][i];
  for (std::size_t i = 0; i < n; ++i) P.order.push_back(i);
  return P;
}

}  // namespace detail

// Annihilation modulo m^precision and entries in m.
template <Field K>
void check_presentation(const PresentationMatrix<K>& P) {
  const auto& M = P.generators;
  for (std::size_t c = 0; c < P.A.cols(); ++c) {
    for (std::size_t i = 0; i < M.rank(); ++i) {
      Poly<K> acc;
      for (std::size_t j = 0; j < M.size(); ++j)
        acc += Poly<K>::multiply(P.A(j, c), M.column(j)[i], P.precision);
      if (!acc.is_zero()) throw Error("presentation column does not annihilate the generators");
    }
  }
  if (!P.A.all_in_maximal_ideal()) throw Error("presentation has a unit entry; generators are not minimal");
}

// Minimal presentation with at least the requested precision; generators are
// minimalized first.
template <Field K>
PresentationMatrix<K> presentation(const Module<K>& input, const Options& opts = {}, std::uint32_t min_precision = 0) {
  auto M = minimal_generators(input, opts);
  auto span = module_span(M, opts);
  if (!span.certified()) throw PresentationUnavailable("colength of F/M exceeds the truncation cap");
  const std::uint32_t sat = span.saturation();
  std::uint32_t precision = std::max(min_precision, sat + opts.presentation_margin);
  if (M.size() == M.rank()) {
    PresentationMatrix<K> P;
    P.generators = M;
    P.A = PolyMatrix<K>(M.size(), 0);
    P.precision = precision;
    for (std::size_t i = 0; i < M.size(); ++i) P.order.push_back(i);
    return P;
  }
  while (sat + precision <= opts.presentation_cap) {
    if (auto P = detail::presentation_at(M, sat, precision)) {
      check_presentation(*P);
      if (M.rank() == 1) {
        auto back = certified_minor_ideal(P->A, M.size() - 1, precision, opts);
        if (back && back->colength.value == span.colength()) return std::move(*P);
      } else {
        return std::move(*P);
      }
    }
    precision *= 2;
  }
  throw PresentationUnavailable("presentation did not stabilize below degree " + std::to_string(opts.presentation_cap));
}

// Runs fn on presentations of increasing precision until it returns a value.
template <Field K, class Fn>
auto with_presentation(const Module<K>& M, const Options& opts, Fn fn)
    -> typename std::invoke_result_t<Fn, const PresentationMatrix<K>&>::value_type {
  std::uint32_t precision = 0;
  for (;;) {
    auto P = presentation(M, opts, precision);
    if (auto v = fn(P)) return std::move(*v);
    precision = P.precision * 2;
    auto span = module_span(P.generators, opts);
    if (span.saturation() + precision > opts.presentation_cap)
      throw PresentationUnavailable("minor ideals of the presentation do not certify below the cap");
  }
}

// I_{n-r-1}(A), the Fitting ideal Fitt_{r+1}(M).
template <Field K>
CertifiedIdeal<K> fitt_r1(const Module<K>& M, const Options& opts = {}) {
  return with_presentation(M, opts, [&](const PresentationMatrix<K>& P) {
    const std::size_t n = P.generators.size(), r = P.generators.rank();
    if (n == r) throw PreconditionError("module is free");
    return certified_minor_ideal(P.A, n - r - 1, P.precision, opts);
  });
}

template <Field K>
struct ReductionPresentation {
  PresentationMatrix<K> full;
  // Rows r+2..n of the transformed presentation.
  PolyMatrix<K> B;
};

// Presentation for the generating set (N's generators, remaining unit vectors),
// obtained from one of the minimal generators by the constant change of basis.
template <Field K>
ReductionPresentation<K> reduction_first_presentation(const ReductionCertificate<K>& cert, const Options& opts = {},
                                                      std::uint32_t min_precision = 0) {
  const auto& M = cert.generators;
  const std::size_t n = M.size(), r = M.rank();
  auto P = presentation(M, opts, min_precision);
  if (P.generators.size() != n) throw PreconditionError("reduction refers to a non-minimal generating set");
  // G = [C | e_j ...] invertible; new generators are M * G, syzygies G^{-1} A.
  DenseMatrix<K> G(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k <= r; ++k) G(i, k) = cert.combination(i, k);
  std::size_t col = r + 1;
  {
    DenseMatrix<K> probe = G;
    for (std::size_t j = 0; j < n && col < n; ++j) {
      probe = G;
      probe(j, col) = K::one();
      DenseMatrix<K> sub(n, col + 1);
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k <= col; ++k) sub(i, k) = probe(i, k);
      if (rank_and_echelon(sub).rank == col + 1) {
        G = probe;
        ++col;
      }
    }
  }
  auto Ginv = inverse(G);
  if (!Ginv) throw GenericityError("combination matrix of the reduction is singular", cert.seeds);
  ReductionPresentation<K> out;
  out.full = P;
  out.full.A = (*Ginv * P.A).truncated(P.precision);
  out.full.generators = combine(M, G);
  out.B = out.full.A.row_slice(r + 1, n - r - 1);
  return out;
}

template <Field K>
struct KeyLemmaCheck {
  std::uint64_t lhs = 0;
  std::optional<std::uint64_t> rhs;
  std::optional<bool> equal;
};

// colength(M/N) directly, against colength of the maximal minors of B.
template <Field K>
KeyLemmaCheck<K> keylem_check(const ReductionCertificate<K>& cert, const Options& opts = {}) {
  KeyLemmaCheck<K> out;
  out.lhs = colength_FM(cert.N, opts).get() - colength_FM(cert.generators, opts).get();
  const std::size_t n = cert.generators.size(), r = cert.generators.rank();
  try {
    std::uint32_t precision = 0;
    for (;;) {
      auto RP = reduction_first_presentation(cert, opts, precision);
      auto c = certified_minor_ideal(RP.B, n - r - 1, RP.full.precision, opts);
      if (c) {
        out.rhs = c->colength.get();
        out.equal = out.lhs == *out.rhs;
        return out;
      }
      precision = RP.full.precision * 2;
      if (precision > opts.presentation_cap) throw PresentationUnavailable("B minors do not certify below the cap");
    }
  } catch (const PresentationUnavailable&) {
    return out;
  }
}

template <Field K>
struct AdjointResult {
  Ideal<K> ideal;
  std::uint64_t colength = 0;
  // Module case: the B-form, asserted equal to the A-form.
  std::optional<Ideal<K>> from_b;
};

// adj(I) = I_{n-2}(A) for an integrally closed ideal.
template <Field K>
AdjointResult<K> adjoint_via_presentation(const Ideal<K>& I, const Options& opts = {}) {
  auto s = I.staircase();
  if (!s || !s->is_m_primary() || !is_integrally_closed_mono(*s))
    throw PreconditionError("adjoint via presentation needs a certified integrally closed ideal");
  auto M = Module<K>::from_ideal(I);
  auto c = with_presentation(M, opts, [&](const PresentationMatrix<K>& P) {
    return certified_minor_ideal(P.A, P.generators.size() - 2 + (P.generators.size() < 2 ? 2 : 0), P.precision, opts);
  });
  return {c.ideal, c.colength.get(), std::nullopt};
}

// adj(I(M)) = I_{n-r-1}(A) = I_{n-r-1}(B) for an integrally closed module.
template <Field K>
AdjointResult<K> adjoint_via_presentation(const Module<K>& M, std::uint64_t seed = 1, const Options& opts = {}) {
  auto verdict = is_integrally_closed(M, seed, opts);
  if (verdict.status != ClosureStatus::Certified)
    throw PreconditionError("adjoint via presentation needs a certified integrally closed module");
  if (!M.in_maximal_ideal()) throw PreconditionError("module has free summands");
  auto cert = minimal_reduction(M, seed, opts);
  const std::size_t n = cert.generators.size(), r = cert.generators.rank();
  std::uint32_t precision = 0;
  for (;;) {
    auto RP = reduction_first_presentation(cert, opts, precision);
    auto P = presentation(cert.generators, opts, RP.full.precision);
    auto a = certified_minor_ideal(P.A, n - r - 1, P.precision, opts);
    auto b = certified_minor_ideal(RP.B, n - r - 1, RP.full.precision, opts);
    if (a && b) {
      if (!equals(a->ideal, b->ideal, opts)) throw Error("I_{n-r-1}(A) and I_{n-r-1}(B) differ");
      return {a->ideal, a->colength.get(), b->ideal};
    }
    precision = RP.full.precision * 2;
    if (precision > opts.presentation_cap) throw PresentationUnavailable("adjoint minors do not certify below the cap");
  }
}

// The module generated by the columns of A^T, certified equal to the true one.
template <Field K>
std::optional<Module<K>> transpose_module(const PresentationMatrix<K>& P, const Options& opts) {
  const std::size_t cols = P.A.cols();
  std::vector<PolyVector<K>> gens;
  for (std::size_t j = 0; j < P.A.rows(); ++j) {
    PolyVector<K> v(cols);
    for (std::size_t c = 0; c < cols; ++c) v[c] = P.A(j, c).truncated(P.precision);
    gens.push_back(std::move(v));
  }
  Module<K> K_(cols, std::move(gens));
  Options o = opts;
  o.trunc_cap = std::max(opts.trunc_cap, P.precision + 1);
  auto span = module_span(K_, o);
  if (!span.certified() || span.saturation() >= P.precision) return std::nullopt;
  return K_;
}

template <Field K>
struct PsiResult {
  Module<K> image;
  std::uint64_t mu_source = 0;
  bool ideal_matches = false;
  bool adjoint_matches = false;
  bool contracted = false;
};

template <Field K>
Ideal<K> adjoint_of(const Ideal<K>& I) {
  auto s = I.staircase();
  if (!s) throw PreconditionError("adjoint oracle needs a monomial ideal");
  return Ideal<K>::from_staircase(polyhedral_adjoint(*s));
}

// psi(M): columns of the transposed minimal presentation of M.
template <Field K>
PsiResult<K> psi(const Module<K>& M, std::uint64_t seed = 1, const Options& opts = {}) {
  const std::size_t r = M.rank();
  if (!M.in_maximal_ideal()) throw PreconditionError("M must lie in mF");
  if (is_integrally_closed(M, seed, opts).status != ClosureStatus::Certified)
    throw PreconditionError("M is not certified integrally closed");
  auto I = ideal_of_minors(M);
  if (order(I) != r) throw PreconditionError("ord(I(M)) must equal the rank");
  PsiResult<K> out;
  out.mu_source = min_gens(M, opts);
  if (out.mu_source != 2 * r) throw Error("mu(M) = " + std::to_string(out.mu_source) + ", expected 2r");
  out.image = with_presentation(M, opts, [&](const PresentationMatrix<K>& P) { return transpose_module(P, opts); });
  out.ideal_matches = equals(ideal_of_minors(out.image), I, opts);
  out.adjoint_matches = equals(fitting_ideal(out.image, r - 1), adjoint_of(I), opts);
  out.contracted = is_contracted(out.image, opts);
  return out;
}

template <Field K>
struct PsiInverseResult {
  Module<K> image;
  bool ideal_matches = false;
  // e(M) - colength(F/M) = colength(R/adj(I)).
  bool closed_by_length = false;
};

template <Field K>
PsiInverseResult<K> psi_inverse(const Module<K>& Kmod, std::uint64_t seed = 1, const Options& opts = {}) {
  const std::size_t r = Kmod.rank();
  if (!Kmod.in_maximal_ideal()) throw PreconditionError("K must lie in mF");
  if (!is_contracted(Kmod, opts)) throw PreconditionError("K is not contracted");
  auto I = ideal_of_minors(Kmod);
  auto adj = adjoint_of(I);
  if (!equals(fitting_ideal(Kmod, r - 1), adj, opts)) throw PreconditionError("I_{r-1}(K) differs from adj(I(K))");
  PsiInverseResult<K> out;
  out.image = with_presentation(Kmod, opts, [&](const PresentationMatrix<K>& P) { return transpose_module(P, opts); });
  out.ideal_matches = equals(ideal_of_minors(out.image), I, opts);
  auto e = br_multiplicity(out.image, seed, opts);
  auto len = colength_FM(out.image, opts).get();
  out.closed_by_length = e - len == colength(adj, opts).get();
  return out;
}

}  // namespace brim
