#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "brim/errors.hpp"
#include "brim/monomial.hpp"
#include "brim/options.hpp"
#include "brim/poly.hpp"
#include "brim/span.hpp"

namespace brim {

constexpr std::size_t kMaxProductGenerators = 100000;

template <Field K>
class Ideal {
 public:
  explicit Ideal(PolyVector<K> gens) {
    for (auto& g : gens)
      if (!g.is_zero()) gens_.push_back(std::move(g));
    if (gens_.empty()) throw InputError("ideal needs a nonzero generator");
  }
  static Ideal parse(std::string_view text) { return Ideal(parse_poly_list<K>(text)); }
  static Ideal unit() { return Ideal({Poly<K>(K::one())}); }
  static Ideal maximal() { return Ideal({Poly<K>::monomial(1, 0), Poly<K>::monomial(0, 1)}); }
  static Ideal from_staircase(const Staircase& s) { return Ideal(monomial_generators<K>(s)); }

  const PolyVector<K>& gens() const noexcept { return gens_; }
  std::size_t size() const noexcept { return gens_.size(); }
  bool has_unit() const {
    return std::any_of(gens_.begin(), gens_.end(), [](const Poly<K>& g) { return g.is_unit(); });
  }
  // The staircase of the ideal when every generator is a monomial.
  std::optional<Staircase> staircase() const { return as_staircase<K>(gens_); }

  std::string to_string() const {
    std::string out;
    for (std::size_t i = 0; i < gens_.size(); ++i) out += (i ? ", " : "") + gens_[i].to_string();
    return out;
  }

 private:
  PolyVector<K> gens_;
};

template <Field K>
std::vector<PolyVector<K>> as_rank_one(const PolyVector<K>& gens) {
  std::vector<PolyVector<K>> out;
  for (const auto& g : gens) out.push_back({g});
  return out;
}

template <Field K>
ModuleSpan<K> ideal_span(const Ideal<K>& I, const Options& opts) {
  return ModuleSpan<K>::build(as_rank_one(I.gens()), 1, opts.trunc_cap);
}

template <Field K>
ColengthResult colength(const Ideal<K>& I, const Options& opts = {}) {
  if (opts.engine == Engine::Auto) {
    if (auto s = I.staircase()) {
      ColengthResult r;
      if (!s->is_m_primary()) return r;
      r.value = staircase_colength(*s);
      // The last missing monomials sit just inside consecutive corners.
      std::uint32_t sat = 0;
      const auto& c = s->corners();
      for (std::size_t i = 0; i + 1 < c.size(); ++i) sat = std::max(sat, c[i].a + c[i + 1].b - 1);
      r.saturation = sat;
      r.certified_at = sat + 1;
      return r;
    }
  }
  return ideal_span(I, opts).result();
}

template <Field K>
std::uint32_t order(const Ideal<K>& I) {
  return static_cast<std::uint32_t>(order(I.gens()));
}

template <Field K>
Ideal<K> product(const Ideal<K>& I, const Ideal<K>& J) {
  if (I.size() * J.size() > kMaxProductGenerators) throw ResourceError("product has too many generators");
  if (auto s = I.staircase(), t = J.staircase(); s && t) return Ideal<K>::from_staircase(product(*s, *t));
  PolyVector<K> out;
  for (const auto& f : I.gens())
    for (const auto& g : J.gens()) out.push_back(f * g);
  return Ideal<K>(std::move(out));
}

template <Field K>
Ideal<K> power(const Ideal<K>& I, std::uint32_t p) {
  if (p == 0) return Ideal<K>::unit();
  if (auto s = I.staircase()) return Ideal<K>::from_staircase(power(*s, p));
  // Degree-p monomials in the generators, built one factor at a time with
  // non-decreasing generator indices.
  std::vector<std::pair<Poly<K>, std::size_t>> layer;
  for (std::size_t i = 0; i < I.size(); ++i) layer.emplace_back(I.gens()[i], i);
  for (std::uint32_t k = 1; k < p; ++k) {
    std::vector<std::pair<Poly<K>, std::size_t>> next;
    for (const auto& [f, last] : layer) {
      for (std::size_t i = last; i < I.size(); ++i) {
        next.emplace_back(f * I.gens()[i], i);
        if (next.size() > kMaxProductGenerators) throw ResourceError("power has too many generators");
      }
    }
    layer = std::move(next);
  }
  PolyVector<K> out;
  for (auto& [f, last] : layer) out.push_back(std::move(f));
  return Ideal<K>(std::move(out));
}

template <Field K>
Ideal<K> sum(const Ideal<K>& I, const Ideal<K>& J) {
  PolyVector<K> g = I.gens();
  g.insert(g.end(), J.gens().begin(), J.gens().end());
  return Ideal<K>(std::move(g));
}

// Membership against a span built once; sound only when the span certifies.
template <Field K>
class IdealMembership {
 public:
  IdealMembership(const Ideal<K>& I, const Options& opts) {
    if (opts.engine == Engine::Auto) staircase_ = I.staircase();
    if (!staircase_) span_.emplace(ideal_span(I, opts));
  }
  bool contains(const Poly<K>& f) const {
    if (staircase_) {
      return std::all_of(f.terms().begin(), f.terms().end(),
                         [this](const auto& t) { return staircase_->contains(t.exp); });
    }
    return span_->contains({f});
  }

 private:
  std::optional<Staircase> staircase_;
  std::optional<ModuleSpan<K>> span_;
};

template <Field K>
bool contains(const Ideal<K>& I, const Poly<K>& f, const Options& opts = {}) {
  return IdealMembership<K>(I, opts).contains(f);
}

template <Field K>
bool contains(const Ideal<K>& I, const Ideal<K>& J, const Options& opts = {}) {
  IdealMembership<K> m(I, opts);
  return std::all_of(J.gens().begin(), J.gens().end(), [&m](const Poly<K>& g) { return m.contains(g); });
}

template <Field K>
bool equals(const Ideal<K>& I, const Ideal<K>& J, const Options& opts = {}) {
  if (auto s = I.staircase(), t = J.staircase(); opts.engine == Engine::Auto && s && t) return *s == *t;
  return contains(I, J, opts) && contains(J, I, opts);
}

// Second difference of p -> colength(I^p), once it repeats three times.
template <Field K>
std::uint64_t hs_multiplicity_by_powers(const Ideal<K>& I, const Options& opts) {
  std::vector<std::int64_t> len{0};
  std::vector<std::int64_t> diffs;
  for (std::uint32_t p = 1; p <= opts.pq_cap + 2; ++p) {
    len.push_back(static_cast<std::int64_t>(colength(power(I, p), opts).get()));
    if (p >= 2) diffs.push_back(len[p] - 2 * len[p - 1] + len[p - 2]);
    auto k = diffs.size();
    if (k >= 3 && diffs[k - 1] == diffs[k - 2] && diffs[k - 2] == diffs[k - 3])
      return static_cast<std::uint64_t>(diffs.back());
  }
  throw ResourceError("second difference of colength(I^p) did not stabilize");
}

template <Field K>
std::uint64_t hs_multiplicity_by_sampling(const Ideal<K>& I, std::uint64_t seed, const Options& opts) {
  Options trunc = opts;
  trunc.engine = Engine::Truncation;
  std::optional<std::uint64_t> best;
  std::vector<std::uint64_t> seeds;
  for (int s = 0; s < std::max(1, opts.hs_samples); ++s) {
    std::uint64_t sd = seed * 0x9E3779B97F4A7C15ULL + static_cast<std::uint64_t>(s) + 1;
    seeds.push_back(sd);
    Rng rng(sd);
    PolyVector<K> pair(2);
    for (auto& g : pair)
      for (const auto& f : I.gens()) g += f.scaled(K::random(rng));
    if (pair[0].is_zero() || pair[1].is_zero()) continue;
    auto r = colength(Ideal<K>(pair), trunc);
    if (r.finite()) best = best ? std::min(*best, *r.value) : *r.value;
  }
  if (!best) throw GenericityError("no sampled pair of generators had certified finite colength", seeds);
  return *best;
}

template <Field K>
std::uint64_t hs_multiplicity(const Ideal<K>& I, std::uint64_t seed = 1, const Options& opts = {}) {
  if (I.has_unit()) return 0;
  std::uint64_t e;
  auto s = I.staircase();
  if (opts.engine == Engine::Auto && s) {
    if (!s->is_m_primary()) throw PreconditionError("multiplicity needs an m-primary ideal");
    e = newton_multiplicity(*s);
  } else {
    if (!colength(I, opts).finite()) throw ResourceError("colength exceeds the truncation cap");
    e = hs_multiplicity_by_sampling(I, seed, opts);
  }
  if (opts.cross_check) {
    std::uint64_t other = (opts.engine == Engine::Auto && s) ? hs_multiplicity_by_sampling(I, seed, opts)
                                                             : hs_multiplicity_by_powers(I, opts);
    if (other != e)
      throw GenericityError("multiplicity routes disagree: " + std::to_string(e) + " vs " + std::to_string(other),
                            {seed});
  }
  return e;
}

// J inside I is a reduction iff e(J) = e(I).
template <Field K>
bool is_reduction(const Ideal<K>& J, const Ideal<K>& I, std::uint64_t seed = 1, const Options& opts = {}) {
  if (!contains(I, J, opts)) throw PreconditionError("the candidate reduction is not contained in the ideal");
  return hs_multiplicity(J, seed, opts) == hs_multiplicity(I, seed, opts);
}

// Stabilized value of the mixed second difference along the diagonal p = q.
template <Field K>
std::uint64_t mixed_multiplicity(const Ideal<K>& I, const Ideal<K>& J, const Options& opts = {}) {
  const std::uint32_t cap = opts.pq_cap;
  std::vector<std::vector<std::int64_t>> L(cap + 1, std::vector<std::int64_t>(cap + 1, -1));
  auto len = [&](std::uint32_t p, std::uint32_t q) {
    if (L[p][q] < 0) L[p][q] = static_cast<std::int64_t>(colength(product(power(I, p), power(J, q)), opts).get());
    return L[p][q];
  };
  std::vector<std::int64_t> d;
  for (std::uint32_t p = 0; p + 1 <= cap; ++p) {
    d.push_back(len(p + 1, p + 1) - len(p + 1, p) - len(p, p + 1) + len(p, p));
    auto k = d.size();
    if (k >= 3 && d[k - 1] == d[k - 2] && d[k - 2] == d[k - 3]) return static_cast<std::uint64_t>(d.back());
  }
  throw ResourceError("mixed multiplicity did not stabilize with p, q <= " + std::to_string(cap));
}

// Whether IJ = aJ + bI for the given a in I and b in J.
template <Field K>
bool is_joint_reduction_witness(const Ideal<K>& I, const Ideal<K>& J, const Poly<K>& a, const Poly<K>& b,
                                const Options& opts = {}) {
  if (!contains(I, a, opts) || !contains(J, b, opts)) throw PreconditionError("witness elements must lie in I and J");
  auto lhs = product(I, J);
  auto rhs = sum(product(Ideal<K>({a}), J), product(Ideal<K>({b}), I));
  return equals(lhs, rhs, opts);
}

}  // namespace brim
