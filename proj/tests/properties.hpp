#pragma once

// Randomized property checks shared by the gtest suites and the acceptance binary.

#include <string>

#include "gen.hpp"

namespace props {

struct Outcome {
  std::size_t cases = 0;
  std::size_t failures = 0;
  std::string first_failure;

  bool ok() const { return failures == 0 && cases > 0; }
  void record(bool passed, const std::string& what) {
    ++cases;
    if (passed) return;
    if (failures++ == 0) first_failure = what;
  }
};

// Truncation engine against the staircase count and the brute-force oracle,
// with the ideal presented through disguised (non-monomial) generators.
template <brim::Field K>
Outcome colength_dual_engine(std::size_t count, std::uint64_t seed) {
  Outcome out;
  brim::Rng rng(seed);
  brim::Options trunc_only;
  trunc_only.engine = brim::Engine::Truncation;
  for (std::size_t i = 0; i < count; ++i) {
    auto s = gen::staircase(rng);
    const auto expected = oracle::colength(gen::points(s));
    const auto fast = brim::staircase_colength(s);
    auto slow = brim::colength(brim::Ideal<K>::from_staircase(s), trunc_only);
    out.record(fast == static_cast<std::uint64_t>(expected) && slow.finite() && *slow.value == fast,
               s.to_string() + " oracle=" + std::to_string(expected));
  }
  return out;
}

// Whenever the truncation engine certifies a value, it matches the staircase
// count; uncertified results are allowed only beyond the cap.
template <brim::Field K>
Outcome nakayama_consistency(std::size_t count, std::uint64_t seed) {
  Outcome out;
  brim::Rng rng(seed);
  brim::Options o;
  o.engine = brim::Engine::Truncation;
  for (std::size_t i = 0; i < count; ++i) {
    auto s = gen::staircase(rng);
    auto I = gen::disguised<K>(s, rng);
    auto c = brim::colength(I, o);
    const bool consistent = !c.finite() || *c.value == brim::staircase_colength(s);
    const bool certified_in_time = c.finite() || s.order() + 8 >= o.trunc_cap;
    out.record(consistent && certified_in_time, s.to_string());
  }
  return out;
}

template <brim::Field K>
Outcome order_valuation(std::size_t count, std::uint64_t seed) {
  Outcome out;
  brim::Rng rng(seed);
  for (std::size_t i = 0; i < count; ++i) {
    auto f = gen::poly<K>(rng), g = gen::poly<K>(rng);
    if (f.is_zero() || g.is_zero()) {
      out.record(true, "");
      continue;
    }
    const bool mult = (f * g).order() == f.order() + g.order();
    const auto s = f + g;
    const bool add = s.is_zero() || s.order() >= std::min(f.order(), g.order());
    auto I = brim::Ideal<K>({f, gen::poly<K>(rng)}), J = brim::Ideal<K>({g});
    const bool ideals = brim::order(brim::product(I, J)) == brim::order(I) + brim::order(J);
    out.record(mult && add && ideals, f.to_string() + " ; " + g.to_string());
  }
  return out;
}

// Fitting ideals of every index are unchanged by constant basis changes and
// elementary polynomial column operations.
template <brim::Field K>
Outcome fitting_invariance(const std::vector<brim::Module<K>>& modules, std::size_t transforms, std::uint64_t seed) {
  Outcome out;
  brim::Rng rng(seed);
  for (std::size_t m = 0; m < modules.size(); ++m) {
    const auto& M = modules[m];
    std::vector<brim::Ideal<K>> base;
    for (std::size_t k = 0; k <= M.rank(); ++k) base.push_back(brim::fitting_ideal(M, k));
    for (std::size_t t = 0; t < transforms; ++t) {
      auto T = gen::transformed(M, rng);
      bool same = true;
      for (std::size_t k = 0; k <= M.rank() && same; ++k) same = brim::equals(brim::fitting_ideal(T, k), base[k]);
      out.record(same, "module " + std::to_string(m) + " transform " + std::to_string(t));
    }
  }
  return out;
}

template <brim::Field K>
std::vector<brim::Module<K>> fitting_sample(std::uint64_t seed) {
  std::vector<brim::Module<K>> out;
  out.push_back(brim::family_Mabc<K>(2, 4, 3));
  out.push_back(brim::direct_sum<K>({brim::Staircase::maximal(), brim::Staircase::parse("[(2,0),(1,1),(0,3)]")}));
  for (std::uint64_t i = 0; i < 3; ++i) out.push_back(brim::random_bigraded_module<K>(2 + i % 2, 20, brim::item_seed(seed, 9, i)));
  return out;
}

}  // namespace props
