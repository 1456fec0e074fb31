#include "brim/monomial.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <random>
#include <regex>

namespace brim {

Staircase Staircase::from_exponents(std::vector<Exponent> gens) {
  std::sort(gens.begin(), gens.end(), [](Exponent l, Exponent r) { return l.b != r.b ? l.b < r.b : l.a < r.a; });
  Staircase s;
  // With b increasing, a generator is minimal iff its a is below every earlier a.
  for (auto e : gens) {
    if (!s.corners_.empty() && s.corners_.back().a <= e.a) continue;
    s.corners_.push_back(e);
  }
  return s;
}

Staircase Staircase::parse(std::string_view text) {
  std::string s(text);
  static const std::regex pair(R"(\(\s*(\d+)\s*,\s*(\d+)\s*\))");
  static const std::regex shape(R"(^\s*\[\s*(\(\s*\d+\s*,\s*\d+\s*\)\s*(,\s*\(\s*\d+\s*,\s*\d+\s*\)\s*)*)?\]\s*$)");
  if (!std::regex_match(s, shape)) throw ParseError("expected a list like [(2,0),(0,2)]", 0);
  std::vector<Exponent> exps;
  for (auto it = std::sregex_iterator(s.begin(), s.end(), pair); it != std::sregex_iterator(); ++it) {
    auto a = std::stoull((*it)[1]);
    auto b = std::stoull((*it)[2]);
    if (a > kMaxExponent || b > kMaxExponent)
      throw ParseError("exponent exceeds 10000", static_cast<std::size_t>(it->position()));
    exps.push_back({static_cast<std::uint32_t>(a), static_cast<std::uint32_t>(b)});
  }
  return from_exponents(std::move(exps));
}

bool Staircase::contains(Exponent e) const noexcept {
  return std::any_of(corners_.begin(), corners_.end(), [e](Exponent c) { return c.divides(e); });
}

bool Staircase::contains(const Staircase& other) const noexcept {
  return std::all_of(other.corners_.begin(), other.corners_.end(), [this](Exponent c) { return contains(c); });
}

std::uint32_t Staircase::order() const {
  if (corners_.empty()) throw InputError("order of the zero ideal");
  std::uint32_t o = corners_.front().degree();
  for (auto c : corners_) o = std::min(o, c.degree());
  return o;
}

std::string Staircase::to_string() const {
  std::string out = "[";
  for (std::size_t i = 0; i < corners_.size(); ++i) {
    if (i) out += ",";
    out += "(" + std::to_string(corners_[i].a) + "," + std::to_string(corners_[i].b) + ")";
  }
  return out + "]";
}

Staircase product(const Staircase& l, const Staircase& r) {
  std::vector<Exponent> exps;
  for (auto a : l.corners())
    for (auto b : r.corners()) exps.push_back(a + b);
  return Staircase::from_exponents(std::move(exps));
}

Staircase power(const Staircase& s, std::uint32_t p) {
  Staircase acc = Staircase::unit();
  Staircase base = s;
  while (p > 0) {
    if (p & 1) acc = product(acc, base);
    p >>= 1;
    if (p) base = product(base, base);
  }
  return acc;
}

Staircase sum(const Staircase& l, const Staircase& r) {
  auto exps = l.corners();
  exps.insert(exps.end(), r.corners().begin(), r.corners().end());
  return Staircase::from_exponents(std::move(exps));
}

std::uint64_t staircase_colength(const Staircase& s) {
  if (!s.is_m_primary()) throw PreconditionError("staircase is not m-primary: " + s.to_string());
  const auto& c = s.corners();
  std::uint64_t total = 0;
  for (std::size_t i = 0; i + 1 < c.size(); ++i) total += static_cast<std::uint64_t>(c[i].a) * (c[i + 1].b - c[i].b);
  return total;
}

namespace {

struct Edge {
  // alpha*u + beta*v >= gamma on the polyhedron, alpha, beta > 0.
  std::int64_t alpha, beta, gamma;
};

std::vector<Edge> edges_of(const std::vector<Exponent>& v) {
  std::vector<Edge> out;
  for (std::size_t i = 0; i + 1 < v.size(); ++i) {
    std::int64_t u1 = v[i].a, v1 = v[i].b, u2 = v[i + 1].a, v2 = v[i + 1].b;
    Edge e{v2 - v1, u1 - u2, 0};
    e.gamma = e.alpha * u1 + e.beta * v1;
    out.push_back(e);
  }
  return out;
}

std::int64_t floor_div(std::int64_t n, std::int64_t d) {
  std::int64_t q = n / d;
  if ((n % d != 0) && ((n < 0) != (d < 0))) --q;
  return q;
}

std::int64_t ceil_div(std::int64_t n, std::int64_t d) { return -floor_div(-n, d); }

}  // namespace

std::vector<Exponent> newton_vertices(const Staircase& s) {
  if (!s.is_m_primary()) throw PreconditionError("staircase is not m-primary: " + s.to_string());
  std::vector<Exponent> hull;
  for (auto p : s.corners()) {
    while (hull.size() >= 2) {
      Exponent a = hull[hull.size() - 2], q = hull.back();
      std::int64_t alpha = static_cast<std::int64_t>(p.b) - a.b, beta = static_cast<std::int64_t>(a.a) - p.a;
      std::int64_t gamma = alpha * a.a + beta * a.b;
      // Keep q only if it lies strictly below the segment from a to p.
      if (alpha * q.a + beta * q.b < gamma) break;
      hull.pop_back();
    }
    hull.push_back(p);
  }
  return hull;
}

Staircase newton_closure(const Staircase& s) {
  auto edges = edges_of(newton_vertices(s));
  std::vector<Exponent> exps;
  const std::uint32_t top = s.corners().back().b;
  for (std::uint32_t v = 0; v <= top; ++v) {
    std::int64_t u = 0;
    for (const auto& e : edges) u = std::max(u, ceil_div(e.gamma - e.beta * v, e.alpha));
    exps.push_back({static_cast<std::uint32_t>(u), v});
  }
  return Staircase::from_exponents(std::move(exps));
}

bool is_integrally_closed_mono(const Staircase& s) { return newton_closure(s) == s; }

std::uint64_t newton_multiplicity(const Staircase& s) {
  auto v = newton_vertices(s);
  std::uint64_t total = 0;
  for (std::size_t i = 0; i + 1 < v.size(); ++i)
    total += static_cast<std::uint64_t>(v[i + 1].b - v[i].b) * (v[i].a + v[i + 1].a);
  return total;
}

Staircase polyhedral_adjoint(const Staircase& s) {
  auto edges = edges_of(newton_vertices(s));
  std::vector<Exponent> exps;
  for (std::int64_t u = 0;; ++u) {
    std::int64_t v = 0;
    for (const auto& e : edges) v = std::max(v, floor_div(e.gamma - e.alpha * (u + 1), e.beta));
    exps.push_back({static_cast<std::uint32_t>(u), static_cast<std::uint32_t>(v)});
    if (v == 0) break;
  }
  return Staircase::from_exponents(std::move(exps));
}

namespace {

// Staircases are in bijection with partitions: h[u] = number of v with x^u y^v outside.
void enumerate(std::vector<std::uint32_t>& heights, std::uint64_t remaining, std::uint32_t max_height,
               std::vector<Staircase>& out) {
  if (!heights.empty()) {
    std::vector<Exponent> exps{{static_cast<std::uint32_t>(heights.size()), 0}, {0, heights[0]}};
    for (std::size_t u = 1; u < heights.size(); ++u)
      if (heights[u] < heights[u - 1]) exps.push_back({static_cast<std::uint32_t>(u), heights[u]});
    out.push_back(Staircase::from_exponents(std::move(exps)));
  }
  for (std::uint32_t h = 1; h <= std::min<std::uint64_t>(max_height, remaining); ++h) {
    heights.push_back(h);
    enumerate(heights, remaining - h, h, out);
    heights.pop_back();
  }
}

}  // namespace

std::vector<Staircase> staircases_up_to(std::uint64_t bound) {
  if (bound > 40) throw InputError("colength bound too large for exhaustive enumeration (max 40)");
  static std::mutex mu;
  static std::map<std::uint64_t, std::vector<Staircase>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(bound);
  if (it != cache.end()) return it->second;
  std::vector<Staircase> out;
  std::vector<std::uint32_t> heights;
  enumerate(heights, bound, static_cast<std::uint32_t>(bound), out);
  return cache.emplace(bound, std::move(out)).first->second;
}

Staircase random_ic_ideal(std::uint32_t r, std::uint64_t bound, std::uint64_t seed) {
  if (r == 0) throw InputError("order must be at least 1");
  std::vector<Staircase> pool;
  for (auto& s : staircases_up_to(bound))
    if (s.order() == r && is_integrally_closed_mono(s)) pool.push_back(s);
  if (pool.empty()) throw InputError("no integrally closed staircase of order " + std::to_string(r) +
                                     " with colength <= " + std::to_string(bound));
  Rng rng(seed);
  std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
  return pool[pick(rng)];
}

}  // namespace brim
