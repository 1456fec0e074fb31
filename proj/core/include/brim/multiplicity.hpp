#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "brim/errors.hpp"
#include "brim/ideal.hpp"
#include "brim/linalg.hpp"
#include "brim/module.hpp"
#include "brim/monomial.hpp"

namespace brim {

template <Field K>
struct ReductionCertificate {
  // Minimal generators of M that the combination refers to.
  Module<K> generators;
  // n x (r+1) scalar matrix; N = generators * combination.
  DenseMatrix<K> combination;
  Module<K> N;
  std::vector<std::uint64_t> seeds;
  bool parameter_module = false;
  bool reduction_verified = false;
};

template <Field K>
Module<K> combine(const Module<K>& M, const DenseMatrix<K>& c) {
  std::vector<PolyVector<K>> cols(c.cols(), PolyVector<K>(M.rank()));
  for (std::size_t k = 0; k < c.cols(); ++k)
    for (std::size_t j = 0; j < M.size(); ++j) {
      if (c(j, k).is_zero()) continue;
      for (std::size_t i = 0; i < M.rank(); ++i) cols[k][i] += M.column(j)[i].scaled(c(j, k));
    }
  return Module<K>(M.rank(), std::move(cols));
}

// Runs the parameter-module and reduction checks on N = gens * combination.
template <Field K>
ReductionCertificate<K> certify_reduction(const Module<K>& gens, DenseMatrix<K> combination, std::uint64_t seed,
                                          const Options& opts = {}) {
  ReductionCertificate<K> cert;
  cert.generators = gens;
  cert.combination = std::move(combination);
  cert.N = combine(gens, cert.combination);
  cert.seeds = {seed};
  const std::size_t r = gens.rank();
  auto fn = colength_FM(cert.N, opts);
  bool in_m = cert.N.in_maximal_ideal();
  cert.parameter_module = fn.finite() && in_m && cert.N.size() == r + 1 && min_gens(cert.N, opts) == r + 1;
  if (cert.parameter_module) {
    auto IM = ideal_of_minors(gens);
    auto IN = ideal_of_minors(cert.N);
    cert.reduction_verified = is_reduction(IN, IM, seed, opts);
  }
  return cert;
}

// N spanned by r+1 random combinations of the minimal generators of M.
template <Field K>
ReductionCertificate<K> minimal_reduction(const Module<K>& M, std::uint64_t seed, const Options& opts = {}) {
  if (!M.in_maximal_ideal()) throw PreconditionError("minimal reduction needs M inside mF; split free summands first");
  auto gens = minimal_generators(M, opts);
  const std::size_t n = gens.size(), r = gens.rank();
  if (n < r + 1) throw PreconditionError("module is free or has too few generators");
  std::vector<std::uint64_t> tried;
  for (int attempt = 0; attempt < 5; ++attempt) {
    std::uint64_t sd = seed + 0x51ED27FULL * static_cast<std::uint64_t>(attempt);
    tried.push_back(sd);
    DenseMatrix<K> c(n, r + 1);
    if (n == r + 1) {
      c = DenseMatrix<K>::identity(n);
    } else {
      Rng rng(sd);
      c = DenseMatrix<K>::random(n, r + 1, rng);
    }
    auto cert = certify_reduction(gens, std::move(c), sd, opts);
    if (cert.parameter_module && cert.reduction_verified) {
      cert.seeds = tried;
      return cert;
    }
  }
  throw GenericityError("no certified minimal reduction after 5 samples", tried);
}

// e(M) = colength(I(N)) for a certified minimal reduction N; two seeds must agree.
template <Field K>
std::uint64_t br_multiplicity(const Module<K>& M, std::uint64_t seed = 1, const Options& opts = {}) {
  auto split = split_free(M);
  const auto& Mp = split.reduced;
  if (Mp.rank() == 0) return 0;
  std::optional<std::uint64_t> value;
  std::vector<std::uint64_t> seeds;
  for (std::uint64_t sd : {seed, seed ^ std::uint64_t{0xA5A5A5A5}}) {
    seeds.push_back(sd);
    auto cert = minimal_reduction(Mp, sd, opts);
    auto e = colength(ideal_of_minors(cert.N), opts).get();
    auto fn = colength_FM(cert.N, opts).get();
    if (e != fn)
      throw GenericityError("colength(F/N) = " + std::to_string(fn) + " differs from colength(R/I(N)) = " +
                                std::to_string(e),
                            seeds);
    if (value && *value != e)
      throw GenericityError("reductions from different seeds disagree: " + std::to_string(*value) + " vs " +
                                std::to_string(e),
                            seeds);
    value = e;
  }
  return *value;
}

// Element of Sym^p F: coefficient per monomial T^alpha, |alpha| = p.
template <Field K>
using SymElement = std::map<std::vector<std::uint32_t>, Poly<K>>;

// Product with the linear form sum_i f_i T_i.
template <Field K>
SymElement<K> sym_multiply(const SymElement<K>& acc, const PolyVector<K>& f) {
  SymElement<K> next;
  for (const auto& [alpha, c] : acc) {
    for (std::size_t i = 0; i < f.size(); ++i) {
      if (f[i].is_zero()) continue;
      auto beta = alpha;
      ++beta[i];
      next[beta] += c * f[i];
    }
  }
  return next;
}

inline std::vector<std::vector<std::uint32_t>> sym_basis(std::size_t r, std::uint32_t p) {
  std::vector<std::vector<std::uint32_t>> out;
  std::vector<std::uint32_t> cur(r, 0);
  auto rec = [&](auto& self, std::size_t i, std::uint32_t left) -> void {
    if (i + 1 == r) {
      cur[i] = left;
      out.push_back(cur);
      return;
    }
    for (std::uint32_t k = left + 1; k-- > 0;) {
      cur[i] = k;
      self(self, i + 1, left - k);
    }
  };
  if (r == 0) return out;
  rec(rec, 0, p);
  return out;
}

inline std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  std::uint64_t r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

// Generators of the image of Sym^p(M) in Sym^p(F) as vectors over the basis sym_basis(r, p).
template <Field K>
std::vector<PolyVector<K>> sym_power_generators(const Module<K>& M, std::uint32_t p) {
  const std::size_t r = M.rank(), n = M.size();
  if (binomial(n + p - 1, p) > kMaxProductGenerators) throw ResourceError("too many generators for M^p");
  auto basis = sym_basis(r, p);
  std::map<std::vector<std::uint32_t>, std::size_t> index;
  for (std::size_t i = 0; i < basis.size(); ++i) index[basis[i]] = i;
  std::vector<PolyVector<K>> out;
  // Products of columns with non-decreasing indices, one factor at a time.
  auto rec = [&](auto& self, std::size_t start, const SymElement<K>& acc, std::uint32_t deg) -> void {
    if (deg == p) {
      PolyVector<K> v(basis.size());
      for (const auto& [alpha, c] : acc) v[index.at(alpha)] = c;
      out.push_back(std::move(v));
      return;
    }
    for (std::size_t j = start; j < n; ++j) self(self, j, sym_multiply(acc, M.column(j)), deg + 1);
  };
  SymElement<K> one;
  one[std::vector<std::uint32_t>(r, 0)] = Poly<K>(K::one());
  rec(rec, 0, one, 0);
  return out;
}

template <Field K>
ColengthResult sym_power_colength(const Module<K>& M, std::uint32_t p, const Options& opts = {}) {
  if (p == 0) {
    ColengthResult r;
    r.value = 0;
    return r;
  }
  auto gens = sym_power_generators(M, p);
  const std::size_t rank = binomial(p + M.rank() - 1, M.rank() - 1);
  return ModuleSpan<K>::build(gens, rank, opts.sym_trunc_cap).result();
}

template <Field K>
std::uint64_t sym_power_length(const Module<K>& M, std::uint32_t p, const Options& opts = {}) {
  if (p == 0) throw InputError("symmetric power index must be at least 1");
  return sym_power_colength(M, p, opts).get();
}

// (r+1)-st difference of p -> sym_power_length(M, p), equal on the last two windows.
template <Field K>
std::uint64_t br_limit_multiplicity(const Module<K>& M, std::uint32_t p_max, const Options& opts = {}) {
  const std::size_t r = M.rank();
  if (p_max < r + 3) throw InputError("pmax must be at least rank + 3");
  std::vector<std::int64_t> L(p_max + 1, 0);
  for (std::uint32_t p = 1; p <= p_max; ++p) L[p] = static_cast<std::int64_t>(sym_power_length(M, p, opts));
  auto diff = [&](std::size_t p) {
    std::int64_t acc = 0;
    for (std::size_t i = 0; i <= r + 1; ++i) {
      std::int64_t term = static_cast<std::int64_t>(binomial(r + 1, i)) * L[p + i];
      acc += ((r + 1 - i) % 2 == 0) ? term : -term;
    }
    return acc;
  };
  std::size_t last = p_max - (r + 1);
  auto a = diff(last - 1), b = diff(last);
  if (a != b)
    throw ResourceError("difference of symmetric power lengths not stable by pmax = " + std::to_string(p_max) + " (" +
                        std::to_string(a) + " vs " + std::to_string(b) + "); raise pmax");
  return static_cast<std::uint64_t>(b);
}

// f in the integral closure of M iff I(M) is a reduction of I(M + Rf).
template <Field K>
bool closure_member(const Module<K>& M, const PolyVector<K>& f, std::uint64_t seed = 1, const Options& opts = {}) {
  if (f.size() != M.rank()) throw InputError("element has the wrong number of components");
  auto I = ideal_of_minors(M);
  auto J = ideal_of_minors(M.with_column(f));
  if (auto s = I.staircase(), t = J.staircase(); opts.engine == Engine::Auto && s && t) {
    if (!t->contains(*s)) throw Error("I(M) is not contained in I(M + Rf)");
    if (!s->is_m_primary()) throw PreconditionError("I(M) is not m-primary");
    return newton_closure(*s).contains(*t);
  }
  return is_reduction(I, J, seed, opts);
}

enum class ClosureStatus { Certified, WitnessNotClosed, Unknown };

inline std::string to_string(ClosureStatus s) {
  switch (s) {
    case ClosureStatus::Certified:
      return "certified";
    case ClosureStatus::WitnessNotClosed:
      return "witness_not_closed";
    case ClosureStatus::Unknown:
      return "unknown";
  }
  return "unknown";
}

template <Field K>
struct ClosureApprox {
  Module<K> closure;
  // Certified: closure is exact. WitnessNotClosed: closure is strictly larger
  // but possibly not all of the integral closure.
  ClosureStatus exact = ClosureStatus::Unknown;
  std::vector<PolyVector<K>> added;
};

template <Field K>
ClosureApprox<K> closure_approx(const Module<K>& M, std::optional<std::uint32_t> degree_bound = std::nullopt,
                                std::uint64_t seed = 1, const Options& opts = {}) {
  ClosureApprox<K> out;
  if (M.is_monomial_direct_sum()) {
    std::vector<Staircase> parts;
    for (const auto& s : M.components()) {
      if (!s.is_m_primary()) throw PreconditionError("component ideal is not m-primary");
      auto c = newton_closure(s);
      for (auto e : c.corners())
        if (!s.contains(e)) {
          PolyVector<K> v(M.rank());
          v[parts.size()] = Poly<K>::monomial(e);
          out.added.push_back(std::move(v));
        }
      parts.push_back(c);
    }
    out.closure = out.added.empty() ? M : direct_sum<K>(parts);
    out.exact = ClosureStatus::Certified;
    return out;
  }
  auto span = module_span(M, opts);
  if (!span.certified()) throw ResourceError("colength of F/M exceeds the truncation cap");
  const std::uint32_t bound = degree_bound.value_or(span.saturation());
  std::vector<PolyVector<K>> cols = M.columns();
  auto consider = [&](PolyVector<K> f) {
    if (span.contains(f)) return;
    if (closure_member(M, f, seed, opts)) {
      out.added.push_back(f);
      cols.push_back(std::move(f));
    }
  };
  for (std::uint32_t d = 0; d <= bound; ++d)
    for (std::uint32_t b = 0; b <= d; ++b)
      for (std::size_t i = 0; i < M.rank(); ++i) {
        PolyVector<K> f(M.rank());
        f[i] = Poly<K>::monomial(Exponent{d - b, b});
        consider(std::move(f));
      }
  Rng rng(seed ^ 0xC105E5ULL);
  for (int k = 0; k < opts.closure_probes; ++k) {
    PolyVector<K> f(M.rank());
    for (auto& p : f) {
      p = random_poly<K>(rng, std::max<std::uint32_t>(bound, 1), 4);
      p -= Poly<K>(p.constant_term());
    }
    consider(std::move(f));
  }
  out.closure = Module<K>(M.rank(), std::move(cols));
  out.exact = out.added.empty() ? ClosureStatus::Unknown : ClosureStatus::WitnessNotClosed;
  return out;
}

template <Field K>
struct IntegralClosureVerdict {
  ClosureStatus status = ClosureStatus::Unknown;
  std::optional<PolyVector<K>> witness;
};

template <Field K>
IntegralClosureVerdict<K> is_integrally_closed(const Module<K>& M, std::uint64_t seed = 1, const Options& opts = {}) {
  auto approx = closure_approx(M, std::nullopt, seed, opts);
  IntegralClosureVerdict<K> v;
  if (!approx.added.empty()) {
    v.status = ClosureStatus::WitnessNotClosed;
    v.witness = approx.added.front();
  } else {
    v.status = approx.exact;
  }
  return v;
}

// M^(p+1) = N M^p inside Sym^(p+1) F, given N inside M.
template <Field K>
bool check_power_identity(const Module<K>& M, const Module<K>& N, std::uint32_t p, const Options& opts = {}) {
  if (p == 0) throw InputError("power must be at least 1");
  if (N.rank() != M.rank()) throw InputError("modules live in different free modules");
  auto mspan = module_span(M, opts);
  for (const auto& c : N.columns())
    if (!mspan.contains(c)) throw PreconditionError("N is not contained in M");
  const std::size_t r = M.rank();
  auto basis = sym_basis(r, p + 1);
  std::map<std::vector<std::uint32_t>, std::size_t> index;
  for (std::size_t i = 0; i < basis.size(); ++i) index[basis[i]] = i;
  auto basis_p = sym_basis(r, p);
  std::vector<PolyVector<K>> nm;
  for (const auto& g : sym_power_generators(M, p)) {
    SymElement<K> acc;
    for (std::size_t a = 0; a < basis_p.size(); ++a)
      if (!g[a].is_zero()) acc[basis_p[a]] = g[a];
    for (const auto& n : N.columns()) {
      PolyVector<K> v(basis.size());
      for (const auto& [alpha, c] : sym_multiply(acc, n)) v[index.at(alpha)] = c;
      nm.push_back(std::move(v));
    }
  }
  auto mp1 = sym_power_generators(M, p + 1);
  auto nspan = ModuleSpan<K>::build(nm, basis.size(), opts.sym_trunc_cap);
  if (!nspan.certified()) throw ResourceError("colength of N M^p exceeds the truncation cap");
  auto bigspan = ModuleSpan<K>::build(mp1, basis.size(), opts.sym_trunc_cap);
  if (!bigspan.certified()) throw ResourceError("colength of M^(p+1) exceeds the truncation cap");
  for (const auto& g : nm)
    if (!bigspan.contains(g)) throw Error("N M^p is not contained in M^(p+1)");
  for (const auto& g : mp1)
    if (!nspan.contains(g)) return false;
  return true;
}

}  // namespace brim
