#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "brim/errors.hpp"
#include "brim/poly.hpp"
#include "brim/polymatrix.hpp"

namespace brim {

// A monomial ideal by its minimal generators, sorted with x-exponents
// strictly decreasing and y-exponents strictly increasing.
class Staircase {
 public:
  Staircase() = default;
  // Minimalizes and sorts; an empty list is the zero ideal.
  static Staircase from_exponents(std::vector<Exponent> gens);
  // "[(6,0),(5,3),(4,4),(0,6)]"
  static Staircase parse(std::string_view text);
  static Staircase unit() { return from_exponents({{0, 0}}); }
  static Staircase maximal() { return from_exponents({{1, 0}, {0, 1}}); }

  const std::vector<Exponent>& corners() const noexcept { return corners_; }
  std::size_t size() const noexcept { return corners_.size(); }
  bool is_zero() const noexcept { return corners_.empty(); }
  bool is_unit() const noexcept { return corners_.size() == 1 && corners_[0] == Exponent{0, 0}; }
  bool is_m_primary() const noexcept {
    return !corners_.empty() && corners_.front().b == 0 && corners_.back().a == 0;
  }
  bool contains(Exponent e) const noexcept;
  bool contains(const Staircase& other) const noexcept;
  std::uint32_t order() const;
  std::string to_string() const;

  friend bool operator==(const Staircase&, const Staircase&) = default;

 private:
  std::vector<Exponent> corners_;
};

Staircase product(const Staircase& l, const Staircase& r);
Staircase power(const Staircase& s, std::uint32_t p);
Staircase sum(const Staircase& l, const Staircase& r);

std::uint64_t staircase_colength(const Staircase& s);

// Vertices of the lower boundary of the Newton polyhedron, x-exponent decreasing.
std::vector<Exponent> newton_vertices(const Staircase& s);
Staircase newton_closure(const Staircase& s);
bool is_integrally_closed_mono(const Staircase& s);
// Twice the area below the Newton boundary, i.e. the multiplicity.
std::uint64_t newton_multiplicity(const Staircase& s);
Staircase polyhedral_adjoint(const Staircase& s);

// Uniform over integrally closed staircases of order r with colength <= bound.
Staircase random_ic_ideal(std::uint32_t r, std::uint64_t bound, std::uint64_t seed);
// All staircases (m-primary, not unit) with colength <= bound.
std::vector<Staircase> staircases_up_to(std::uint64_t bound);

template <Field K>
PolyVector<K> monomial_generators(const Staircase& s) {
  PolyVector<K> out;
  for (auto e : s.corners()) out.push_back(Poly<K>::monomial(e));
  return out;
}

// Consecutive syzygies of the sorted generators; its maximal minors give s back.
template <Field K>
PolyMatrix<K> hilbert_burch(const Staircase& s) {
  if (!s.is_m_primary()) throw PreconditionError("Hilbert-Burch matrix needs an m-primary staircase");
  const auto& c = s.corners();
  const std::size_t n = c.size();
  PolyMatrix<K> m(n, n - 1);
  for (std::size_t i = 0; i + 1 < n; ++i) {
    m(i, i) = Poly<K>::monomial(Exponent{0, c[i + 1].b - c[i].b});
    m(i + 1, i) = Poly<K>::monomial(Exponent{c[i].a - c[i + 1].a, 0}, -K::one());
  }
  return m;
}

// Exponents of a list of monomials; empty optional when some entry is not a monomial.
template <Field K>
std::optional<Staircase> as_staircase(const PolyVector<K>& gens) {
  std::vector<Exponent> exps;
  for (const auto& g : gens) {
    if (g.is_zero()) continue;
    if (!g.is_monomial()) return std::nullopt;
    exps.push_back(g.terms().front().exp);
  }
  return Staircase::from_exponents(std::move(exps));
}

}  // namespace brim
