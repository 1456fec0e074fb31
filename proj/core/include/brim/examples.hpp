#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "brim/corpus.hpp"

namespace brim {

struct ExampleCheck {
  std::string section;
  std::string name;
  bool passed = false;
  std::string detail;
};

struct ExampleBundle {
  std::vector<ExampleCheck> checks;

  bool ok() const {
    for (const auto& c : checks)
      if (!c.passed) return false;
    return true;
  }
  std::size_t count(const std::string& section) const {
    std::size_t n = 0;
    for (const auto& c : checks) n += c.section == section;
    return n;
  }
  bool section_ok(const std::string& section) const {
    for (const auto& c : checks)
      if (c.section == section && !c.passed) return false;
    return count(section) > 0;
  }
  void append(ExampleBundle other) {
    for (auto& c : other.checks) checks.push_back(std::move(c));
  }
  void add(std::string section, std::string name, bool passed, std::string detail = {}) {
    checks.push_back({std::move(section), std::move(name), passed, std::move(detail)});
  }
};

nlohmann::json to_json(const ExampleBundle& b);

namespace detail {

template <class F>
void guarded(ExampleBundle& out, const std::string& section, const std::string& name, F&& body) {
  try {
    body();
  } catch (const std::exception& e) {
    out.add(section, name, false, std::string("error: ") + e.what());
  }
}

inline std::string mabc_name(int a, int b, int c) {
  return "M(" + std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(c) + ")";
}

}  // namespace detail

struct MabcNumbers {
  std::int64_t e_I = 0, len_R_I = 0, e_M = 0, len_F_M = 0;
};

template <Field K>
MabcNumbers mabc_numbers(int a, int b, int c, std::uint64_t seed = 1, const Options& opts = {}) {
  auto M = family_Mabc<K>(a, b, c);
  auto I = ideal_of_minors(M);
  MabcNumbers n;
  n.e_I = static_cast<std::int64_t>(hs_multiplicity(I, seed, opts));
  n.len_R_I = static_cast<std::int64_t>(colength(I, opts).get());
  n.e_M = static_cast<std::int64_t>(br_multiplicity(M, seed, opts));
  n.len_F_M = static_cast<std::int64_t>(colength_FM(M, opts).get());
  return n;
}

// Closed forms over the whole admissible grid with a + b <= max_sum.
template <Field K>
ExampleBundle mabc_grid_checks(int max_sum = 8, std::uint64_t seed = 1, const Options& opts = {}) {
  ExampleBundle out;
  for (int a = 1; a <= max_sum; ++a)
    for (int c = a; c <= max_sum; ++c)
      for (int b = c + 1; b <= a + c && a + b <= max_sum; ++b) {
        const auto name = detail::mabc_name(a, b, c);
        detail::guarded(out, "grid", name, [&] {
          auto n = mabc_numbers<K>(a, b, c, seed, opts);
          const std::int64_t ideal_side = n.e_I - n.len_R_I, module_side = n.e_M - n.len_F_M;
          const std::int64_t want_ideal = a * a + (b - c) * (b - c), want_module = a * (b - c) + (b - c) * (b - c);
          const bool ok = ideal_side == want_ideal && module_side == want_module &&
                          ((ideal_side == module_side) == (a == b - c));
          out.add("grid", name, ok,
                  "e(I)-len(R/I)=" + std::to_string(ideal_side) + " (closed form " + std::to_string(want_ideal) +
                      "), e(M)-len(F/M)=" + std::to_string(module_side) + " (closed form " +
                      std::to_string(want_module) + ")");
        });
      }
  return out;
}

template <Field K>
ExampleBundle mabc_pinpoint_checks(std::uint64_t seed = 1, const Options& opts = {}) {
  ExampleBundle out;
  detail::guarded(out, "pinpoint", "M(2,4,3) values", [&] {
    auto n = mabc_numbers<K>(2, 4, 3, seed, opts);
    out.add("pinpoint", "M(2,4,3) values", n.e_I == 36 && n.len_R_I == 31 && n.e_M == 32 && n.len_F_M == 29,
            "e(I)=" + std::to_string(n.e_I) + " len(R/I)=" + std::to_string(n.len_R_I) +
                " e(M)=" + std::to_string(n.e_M) + " len(F/M)=" + std::to_string(n.len_F_M));
    const auto lhs = n.e_I - n.e_M, rhs = n.len_R_I - n.len_F_M;
    out.add("pinpoint", "M(2,4,3) length-multiplicity identity fails", lhs == 4 && rhs == 2 && lhs != rhs,
            std::to_string(lhs) + " vs " + std::to_string(rhs));
  });
  detail::guarded(out, "pinpoint", "M(2,4,3) M^2 = NM", [&] {
    bool eq = check_power_identity(family_Mabc<K>(2, 4, 3), family_Mabc_reduction<K>(2, 4, 3), 1, opts);
    out.add("pinpoint", "M(2,4,3) M^2 = NM", eq);
  });
  detail::guarded(out, "pinpoint", "M(2,4,3) designated reduction", [&] {
    auto M = family_Mabc<K>(2, 4, 3);
    auto N = family_Mabc_reduction<K>(2, 4, 3);
    bool red = is_reduction(ideal_of_minors(N), ideal_of_minors(M), seed, opts);
    out.add("pinpoint", "M(2,4,3) designated reduction", red && colength_FM(N, opts).get() == 32,
            "len(F/N)=" + std::to_string(colength_FM(N, opts).get()));
  });
  return out;
}

// The subgrid a + b <= 2c where M^2 = NM for the designated N.
template <Field K>
ExampleBundle power_identity_checks(int max_sum = 8, const Options& opts = {}) {
  ExampleBundle out;
  for (int a = 1; a <= max_sum; ++a)
    for (int c = a; c <= max_sum; ++c)
      for (int b = c + 1; b <= a + c && a + b <= max_sum; ++b) {
        if (a + b > 2 * c) continue;
        const auto name = detail::mabc_name(a, b, c);
        detail::guarded(out, "power_identity", name, [&] {
          out.add("power_identity", name,
                  check_power_identity(family_Mabc<K>(a, b, c), family_Mabc_reduction<K>(a, b, c), 1, opts));
        });
      }
  return out;
}

// I = (x, y^6), J = (x^3, x y^4, y^6).
template <Field K>
ExampleBundle product_pair_checks(std::uint64_t seed = 1, const Options& opts = {}) {
  ExampleBundle out;
  const std::string sec = "product_pair";
  auto I = Ideal<K>::parse("x, y^6");
  auto J = Ideal<K>::parse("x^3, x*y^4, y^6");
  auto x = parse_poly<K>("x"), y6 = parse_poly<K>("y^6");
  detail::guarded(out, sec, "IJ = xJ + y^6 I", [&] {
    out.add(sec, "IJ = xJ + y^6 I", is_joint_reduction_witness(I, J, x, y6, opts));
  });
  detail::guarded(out, sec, "IJ = xJ + y^6 J (printed reading, recorded)", [&] {
    bool holds = equals(product(I, J), sum(product(Ideal<K>({x}), J), product(Ideal<K>({y6}), J)), opts);
    out.add(sec, "IJ = xJ + y^6 J (printed reading, recorded)", true, holds ? "holds" : "does not hold");
  });
  detail::guarded(out, sec, "J^2 != (x^3, y^6) J", [&] {
    auto JM = Module<K>::from_ideal(J);
    auto NM = Module<K>::from_ideal(Ideal<K>::parse("x^3, y^6"));
    out.add(sec, "J^2 != (x^3, y^6) J", !check_power_identity(JM, NM, 1, opts));
  });
  detail::guarded(out, sec, "I+J length-multiplicity identity", [&] {
    auto M = direct_sum(Module<K>::from_ideal(I), Module<K>::from_ideal(J));
    auto IM = ideal_of_minors(M);
    auto lhs = static_cast<std::int64_t>(hs_multiplicity(IM, seed, opts)) -
               static_cast<std::int64_t>(br_multiplicity(M, seed, opts));
    auto rhs = static_cast<std::int64_t>(colength(IM, opts).get()) -
               static_cast<std::int64_t>(colength_FM(M, opts).get());
    out.add(sec, "I+J length-multiplicity identity", lhs == rhs, std::to_string(lhs) + " vs " + std::to_string(rhs));
  });
  return out;
}

struct InvariantVector {
  std::uint64_t len_F = 0;
  std::vector<std::uint64_t> fitting;
  std::uint64_t mu = 0;
  std::uint64_t e = 0;

  friend bool operator==(const InvariantVector&, const InvariantVector&) = default;
};

template <Field K>
InvariantVector invariant_vector(const Module<K>& M, std::uint64_t seed = 1, const Options& opts = {}) {
  InvariantVector v;
  v.len_F = colength_FM(M, opts).get();
  for (std::size_t k = 1; k <= M.rank(); ++k) v.fitting.push_back(colength(fitting_ideal(M, k), opts).get());
  v.mu = min_gens(M, opts);
  v.e = br_multiplicity(M, seed, opts);
  return v;
}

// Integrally closed monomial direct sum whose ideal of minors has order equal to the rank.
template <Field K>
Module<K> psi_source(std::size_t r, std::uint64_t bound, std::uint64_t seed) {
  return random_ic_direct_sum<K>(std::vector<std::uint32_t>(r, 1), bound, seed);
}

template <Field K>
ExampleBundle psi_checks(std::size_t count, std::uint64_t seed = 1, const Options& opts = {}) {
  ExampleBundle out;
  const std::string sec = "psi";
  for (std::size_t i = 0; i < count; ++i) {
    const std::size_t r = 1 + i % 3;
    const auto name = "psi#" + std::to_string(i) + " (rank " + std::to_string(r) + ")";
    detail::guarded(out, sec, name, [&] {
      auto M = psi_source<K>(r, 10, item_seed(seed, 21, i));
      auto I = ideal_of_minors(M);
      auto p = psi(M, seed, opts);
      const auto& Kmod = p.image;
      auto adj = polyhedral_adjoint(*I.staircase());
      auto eK = br_multiplicity(Kmod, seed, opts);
      auto eI = hs_multiplicity(I, seed, opts);
      const bool transpose_formula = eK + staircase_colength(adj) == eI;
      auto back = psi_inverse(Kmod, seed, opts);
      const bool same = invariant_vector(back.image, seed, opts) == invariant_vector(M, seed, opts);
      const bool ok = p.ideal_matches && p.adjoint_matches && p.contracted && Kmod.rank() == r && transpose_formula &&
                      back.ideal_matches && back.closed_by_length && same;
      out.add(sec, name, ok,
              "I(K)=I " + std::to_string(p.ideal_matches) + ", I_{r-1}(K)=adj " + std::to_string(p.adjoint_matches) +
                  ", contracted " + std::to_string(p.contracted) + ", e(K)=" + std::to_string(eK) + " e(I)=" +
                  std::to_string(eI) + " len(R/adj)=" + std::to_string(staircase_colength(adj)) +
                  ", inverse invariants match " + std::to_string(same));
    });
  }
  return out;
}

// A staircase drawn uniformly from all m-primary staircases of bounded colength.
inline Staircase random_staircase(std::uint64_t bound, std::uint64_t seed) {
  const auto& all = staircases_up_to(bound);
  Rng rng(seed);
  return all[std::uniform_int_distribution<std::size_t>(0, all.size() - 1)(rng)];
}

struct MixedData {
  std::int64_t e1 = 0, lhs = 0, e_I = 0, e_J = 0, e_M = 0, e_IJ = 0;
};

template <Field K>
MixedData mixed_data(const Staircase& s, const Staircase& t, std::uint64_t seed, const Options& opts) {
  auto I = Ideal<K>::from_staircase(s), J = Ideal<K>::from_staircase(t);
  MixedData d;
  d.e1 = static_cast<std::int64_t>(mixed_multiplicity(I, J, opts));
  d.lhs = static_cast<std::int64_t>(colength(product(I, J), opts).get()) -
          static_cast<std::int64_t>(colength(I, opts).get()) - static_cast<std::int64_t>(colength(J, opts).get());
  d.e_I = static_cast<std::int64_t>(hs_multiplicity(I, seed, opts));
  d.e_J = static_cast<std::int64_t>(hs_multiplicity(J, seed, opts));
  d.e_IJ = static_cast<std::int64_t>(hs_multiplicity(product(I, J), seed, opts));
  d.e_M = static_cast<std::int64_t>(br_multiplicity(direct_sum<K>({s, t}), seed, opts));
  return d;
}

// Sampled a in I, b in J with IJ = aJ + bI; found witnesses force equality in the mixed inequality.
template <Field K>
bool find_joint_witness(const Staircase& s, const Staircase& t, int tries, std::uint64_t seed, const Options& opts) {
  auto I = Ideal<K>::from_staircase(s), J = Ideal<K>::from_staircase(t);
  Rng rng(seed);
  for (int k = 0; k < tries; ++k) {
    Poly<K> a, b;
    for (const auto& g : I.gens()) a += g.scaled(K::random(rng));
    for (const auto& g : J.gens()) b += g.scaled(K::random(rng));
    if (a.is_zero() || b.is_zero()) continue;
    if (is_joint_reduction_witness(I, J, a, b, opts)) return true;
  }
  return false;
}

template <Field K>
ExampleBundle mixed_checks(std::size_t ic_pairs, std::size_t general_pairs, std::uint64_t seed = 1,
                           const Options& opts = {}) {
  ExampleBundle out;
  for (std::size_t i = 0; i < ic_pairs; ++i) {
    const auto name = "ic_pair#" + std::to_string(i);
    detail::guarded(out, "mixed_formula", name, [&] {
      Rng rng(item_seed(seed, 31, i));
      auto o1 = std::uniform_int_distribution<std::uint32_t>(1, 3)(rng);
      auto o2 = std::uniform_int_distribution<std::uint32_t>(1, 3)(rng);
      auto s = random_ic_ideal(o1, 12, item_seed(seed, 32, i));
      auto t = random_ic_ideal(o2, 12, item_seed(seed, 33, i));
      auto d = mixed_data<K>(s, t, seed, opts);
      const auto pair = s.to_string() + " | " + t.to_string();
      out.add("mixed_formula", name, d.e1 == d.lhs, pair + ": e1=" + std::to_string(d.e1) + " rhs=" + std::to_string(d.lhs));
      out.add("direct_sum_mixed", name, d.e_M == d.e_I + d.e1 + d.e_J && d.e_IJ == d.e_I + 2 * d.e1 + d.e_J,
              pair + ": e(M)=" + std::to_string(d.e_M) + " e(IJ)=" + std::to_string(d.e_IJ) +
                  " e(I)=" + std::to_string(d.e_I) + " e(J)=" + std::to_string(d.e_J) + " e1=" + std::to_string(d.e1));
    });
  }
  for (std::size_t i = 0; i < general_pairs; ++i) {
    const auto name = "pair#" + std::to_string(i);
    detail::guarded(out, "mixed_inequality", name, [&] {
      auto s = random_staircase(12, item_seed(seed, 34, i));
      auto t = random_staircase(12, item_seed(seed, 35, i));
      auto d = mixed_data<K>(s, t, seed, opts);
      const bool witnessed = find_joint_witness<K>(s, t, 2, item_seed(seed, 36, i), opts);
      const auto pair = s.to_string() + " | " + t.to_string();
      out.add("mixed_inequality", name, d.e1 >= d.lhs && (!witnessed || d.e1 == d.lhs),
              pair + ": e1=" + std::to_string(d.e1) + " rhs=" + std::to_string(d.lhs) +
                  (witnessed ? " (witnessed)" : " (no witness found)"));
      out.add("direct_sum_mixed", name, d.e_M == d.e_I + d.e1 + d.e_J && d.e_IJ == d.e_I + 2 * d.e1 + d.e_J,
              pair + ": e(M)=" + std::to_string(d.e_M) + " e(IJ)=" + std::to_string(d.e_IJ));
    });
  }
  return out;
}

struct ExampleConfig {
  int grid_max_sum = 8;
  std::size_t psi_count = 10;
  std::size_t ic_pairs = 15;
  std::size_t general_pairs = 30;
  std::uint64_t seed = 1;
};

template <Field K>
ExampleBundle example_suite(const ExampleConfig& cfg = {}, const Options& opts = {}) {
  ExampleBundle out;
  out.append(mabc_grid_checks<K>(cfg.grid_max_sum, cfg.seed, opts));
  out.append(mabc_pinpoint_checks<K>(cfg.seed, opts));
  out.append(power_identity_checks<K>(cfg.grid_max_sum, opts));
  out.append(product_pair_checks<K>(cfg.seed, opts));
  out.append(psi_checks<K>(cfg.psi_count, cfg.seed, opts));
  out.append(mixed_checks<K>(cfg.ic_pairs, cfg.general_pairs, cfg.seed, opts));
  return out;
}

}  // namespace brim
