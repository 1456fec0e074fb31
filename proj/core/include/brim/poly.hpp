#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <limits>
#include <string>
#include <string_view>
#include <vector>

#include "brim/errors.hpp"
#include "brim/field.hpp"

namespace brim {

// Exponent pair (a, b) of the monomial x^a y^b.
struct Exponent {
  std::uint32_t a = 0;
  std::uint32_t b = 0;

  constexpr std::uint32_t degree() const noexcept { return a + b; }
  constexpr bool divides(Exponent o) const noexcept { return a <= o.a && b <= o.b; }
  friend constexpr Exponent operator+(Exponent l, Exponent r) noexcept { return {l.a + r.a, l.b + r.b}; }
  friend constexpr bool operator==(Exponent, Exponent) = default;
};

// Position of x^a y^b in the degree-graded order: all monomials of degree d
// precede those of degree d+1, and within a degree y-powers increase.
// Multiplication by a monomial preserves this order.
constexpr std::uint64_t graded_index(Exponent e) noexcept {
  std::uint64_t d = e.degree();
  return d * (d + 1) / 2 + e.b;
}

constexpr std::uint64_t monomials_below(std::uint64_t degree) noexcept {
  return degree * (degree + 1) / 2;
}

Exponent exponent_at(std::uint64_t graded);

struct GradedLess {
  constexpr bool operator()(Exponent l, Exponent r) const noexcept {
    return graded_index(l) < graded_index(r);
  }
};

constexpr int kInfiniteOrder = std::numeric_limits<int>::max();
constexpr std::uint32_t kMaxExponent = 10000;

// Text-level term: sign, decimal coefficient factors, exponent.
struct RawTerm {
  bool negative = false;
  std::vector<std::string> coefficient_factors;
  Exponent exp;
};

// Parses the polynomial grammar: signed integer coefficients, variables x and
// y, operators + - * ^; juxtaposition is rejected; whitespace is ignored.
std::vector<RawTerm> parse_raw_terms(std::string_view text);

// Splits a comma-separated list, rejecting empty items.
std::vector<std::string_view> split_list(std::string_view text);

template <Field K>
class Poly {
 public:
  struct Term {
    Exponent exp;
    K coef;
    friend bool operator==(const Term&, const Term&) = default;
  };

  Poly() = default;
  explicit Poly(K c) {
    if (!c.is_zero()) terms_.push_back({{0, 0}, std::move(c)});
  }
  static Poly constant(std::int64_t c) { return Poly(K(c)); }
  static Poly monomial(Exponent e, K c = K::one()) {
    Poly p;
    if (!c.is_zero()) p.terms_.push_back({e, std::move(c)});
    return p;
  }
  static Poly monomial(std::uint32_t a, std::uint32_t b, std::int64_t c = 1) {
    return monomial(Exponent{a, b}, K(c));
  }
  // Sorts, merges equal exponents and drops zero coefficients.
  static Poly from_terms(std::vector<Term> terms) {
    std::sort(terms.begin(), terms.end(),
              [](const Term& l, const Term& r) { return GradedLess{}(l.exp, r.exp); });
    Poly p;
    for (auto& t : terms) {
      if (!p.terms_.empty() && p.terms_.back().exp == t.exp) {
        p.terms_.back().coef += t.coef;
      } else {
        if (!p.terms_.empty() && p.terms_.back().coef.is_zero()) p.terms_.pop_back();
        p.terms_.push_back(std::move(t));
      }
    }
    if (!p.terms_.empty() && p.terms_.back().coef.is_zero()) p.terms_.pop_back();
    return p;
  }

  const std::vector<Term>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_monomial() const noexcept { return terms_.size() == 1; }
  std::size_t size() const noexcept { return terms_.size(); }

  // m-adic order; kInfiniteOrder for the zero polynomial.
  int order() const noexcept {
    return terms_.empty() ? kInfiniteOrder : static_cast<int>(terms_.front().exp.degree());
  }
  std::uint32_t degree() const noexcept {
    return terms_.empty() ? 0 : terms_.back().exp.degree();
  }
  bool is_unit() const { return order() == 0; }

  K coefficient(Exponent e) const {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), e,
                               [](const Term& t, Exponent v) { return GradedLess{}(t.exp, v); });
    return (it != terms_.end() && it->exp == e) ? it->coef : K::zero();
  }
  K constant_term() const { return coefficient({0, 0}); }

  Poly truncated(std::uint32_t n) const {
    Poly p;
    for (const auto& t : terms_) {
      if (t.exp.degree() >= n) break;
      p.terms_.push_back(t);
    }
    return p;
  }
  Poly shifted(Exponent e) const {
    Poly p = *this;
    for (auto& t : p.terms_) t.exp = t.exp + e;
    return p;
  }
  Poly scaled(const K& c) const {
    if (c.is_zero()) return {};
    Poly p = *this;
    for (auto& t : p.terms_) t.coef *= c;
    return p;
  }
  K evaluate(const K& x, const K& y) const {
    K acc = K::zero();
    for (const auto& t : terms_) {
      K v = t.coef;
      for (std::uint32_t i = 0; i < t.exp.a; ++i) v *= x;
      for (std::uint32_t i = 0; i < t.exp.b; ++i) v *= y;
      acc += v;
    }
    return acc;
  }

  friend Poly operator+(const Poly& l, const Poly& r) { return merge(l, r, false); }
  friend Poly operator-(const Poly& l, const Poly& r) { return merge(l, r, true); }
  Poly operator-() const {
    Poly p = *this;
    for (auto& t : p.terms_) t.coef = -t.coef;
    return p;
  }
  friend Poly operator*(const Poly& l, const Poly& r) { return multiply(l, r, std::numeric_limits<std::uint32_t>::max()); }
  Poly& operator+=(const Poly& o) { return *this = *this + o; }
  Poly& operator-=(const Poly& o) { return *this = *this - o; }
  Poly& operator*=(const Poly& o) { return *this = *this * o; }
  friend bool operator==(const Poly&, const Poly&) = default;

  // Product with every term of degree >= n dropped.
  static Poly multiply(const Poly& l, const Poly& r, std::uint32_t n) {
    if (l.is_zero() || r.is_zero()) return {};
    std::vector<Term> out;
    out.reserve(l.size() * r.size());
    for (const auto& s : l.terms_) {
      for (const auto& t : r.terms_) {
        Exponent e = s.exp + t.exp;
        if (e.degree() >= n) break;
        out.push_back({e, s.coef * t.coef});
      }
    }
    return from_terms(std::move(out));
  }

  // Highest degree first; within a degree, higher x-power first.
  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::vector<const Term*> order;
    for (const auto& t : terms_) order.push_back(&t);
    std::sort(order.begin(), order.end(), [](const Term* l, const Term* r) {
      if (l->exp.degree() != r->exp.degree()) return l->exp.degree() > r->exp.degree();
      return l->exp.a > r->exp.a;
    });
    std::string out;
    bool first = true;
    for (const Term* t : order) {
      std::string c = t->coef.to_string();
      bool negative = !c.empty() && c.front() == '-';
      if (negative) c.erase(0, 1);
      if (first) {
        if (negative) out += "-";
      } else {
        out += negative ? " - " : " + ";
      }
      first = false;
      std::string mono;
      auto var = [&mono](char v, std::uint32_t e) {
        if (e == 0) return;
        if (!mono.empty()) mono += "*";
        mono += v;
        if (e > 1) mono += "^" + std::to_string(e);
      };
      var('x', t->exp.a);
      var('y', t->exp.b);
      if (mono.empty()) {
        out += c;
      } else if (c == "1") {
        out += mono;
      } else {
        out += c + "*" + mono;
      }
    }
    return out;
  }

 private:
  static Poly merge(const Poly& l, const Poly& r, bool subtract) {
    Poly p;
    p.terms_.reserve(l.size() + r.size());
    auto i = l.terms_.begin(), j = r.terms_.begin();
    while (i != l.terms_.end() || j != r.terms_.end()) {
      if (j == r.terms_.end() || (i != l.terms_.end() && GradedLess{}(i->exp, j->exp))) {
        p.terms_.push_back(*i++);
      } else if (i == l.terms_.end() || GradedLess{}(j->exp, i->exp)) {
        p.terms_.push_back({j->exp, subtract ? -j->coef : j->coef});
        ++j;
      } else {
        K c = subtract ? i->coef - j->coef : i->coef + j->coef;
        if (!c.is_zero()) p.terms_.push_back({i->exp, std::move(c)});
        ++i;
        ++j;
      }
    }
    return p;
  }

  std::vector<Term> terms_;
};

template <Field K>
using PolyVector = std::vector<Poly<K>>;

template <Field K>
Poly<K> parse_poly(std::string_view text) {
  std::vector<typename Poly<K>::Term> terms;
  for (auto& raw : parse_raw_terms(text)) {
    K c = K::one();
    for (const auto& f : raw.coefficient_factors) c *= K::from_decimal(f);
    if (raw.negative) c = -c;
    terms.push_back({raw.exp, std::move(c)});
  }
  return Poly<K>::from_terms(std::move(terms));
}

template <Field K>
std::vector<Poly<K>> parse_poly_list(std::string_view text) {
  std::vector<Poly<K>> out;
  for (auto item : split_list(text)) out.push_back(parse_poly<K>(item));
  return out;
}

template <Field K>
int order(const PolyVector<K>& v) {
  int o = kInfiniteOrder;
  for (const auto& p : v) o = std::min(o, p.order());
  return o;
}

template <Field K>
bool is_zero(const PolyVector<K>& v) {
  return std::all_of(v.begin(), v.end(), [](const Poly<K>& p) { return p.is_zero(); });
}

template <Field K>
Poly<K> random_poly(Rng& rng, std::uint32_t max_degree, std::size_t terms) {
  std::vector<typename Poly<K>::Term> out;
  std::uniform_int_distribution<std::uint32_t> deg(0, max_degree);
  for (std::size_t i = 0; i < terms; ++i) {
    std::uint32_t d = deg(rng);
    std::uniform_int_distribution<std::uint32_t> split(0, d);
    std::uint32_t a = split(rng);
    out.push_back({{a, d - a}, K::random(rng)});
  }
  return Poly<K>::from_terms(std::move(out));
}

}  // namespace brim
