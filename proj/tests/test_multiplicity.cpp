#include <gtest/gtest.h>

#include "gen.hpp"

using namespace brim;
using P = Poly<Fp>;
using M = Module<Fp>;

namespace {

DenseMatrix<Fp> first_columns(std::size_t n, std::size_t k) {
  DenseMatrix<Fp> c(n, k);
  for (std::size_t i = 0; i < k; ++i) c(i, i) = Fp(1);
  return c;
}

std::uint64_t limit_with_escalation(const M& mod) {
  for (std::uint32_t p = static_cast<std::uint32_t>(mod.rank()) + 3;; ++p) {
    try {
      return br_limit_multiplicity(mod, p);
    } catch (const ResourceError&) {
      if (p >= mod.rank() + 6) throw;
    }
  }
}

}  // namespace

TEST(BrMultiplicity, Examples) {
  EXPECT_EQ(br_multiplicity(family_Mabc<Fp>(2, 4, 3)), 32u);
  EXPECT_EQ(br_multiplicity(direct_sum<Fp>({Staircase::maximal(), Staircase::maximal()})), 3u);
  EXPECT_EQ(br_multiplicity(M::from_ideal(Ideal<Fp>::maximal())), 1u);
  // Rank one: the Hilbert-Samuel multiplicity of the ideal.
  auto I = Ideal<Fp>::parse("x^3, x*y^2, y^5");
  EXPECT_EQ(br_multiplicity(M::from_ideal(I)), hs_multiplicity(I));
  EXPECT_EQ(br_multiplicity(M::from_ideal(I)), static_cast<std::uint64_t>(oracle::multiplicity({{3, 0}, {1, 2}, {0, 5}})));
}

TEST(BrMultiplicity, FreeSummandsIgnored) {
  auto base = family_Mabc<Fp>(2, 4, 3);
  std::vector<PolyVector<Fp>> cols;
  for (auto c : base.columns()) {
    c.push_back(P());
    cols.push_back(c);
  }
  cols.push_back({P(), P(), P(Fp(1))});
  EXPECT_EQ(br_multiplicity(M(3, cols)), 32u);
}

TEST(Reduction, MabcDesignatedN) {
  for (const auto& item : mabc_grid<Fp>()) {
    auto cert = certify_reduction(item.module, first_columns(4, 3), 1);
    EXPECT_TRUE(cert.parameter_module) << item.label;
    EXPECT_TRUE(cert.reduction_verified) << item.label;
    for (std::size_t j = 0; j < 3; ++j) EXPECT_EQ(cert.N.column(j), item.module.column(j));
  }
}

TEST(Reduction, ParameterModuleIsItsOwnReduction) {
  auto N = family_Mabc_reduction<Fp>(2, 4, 3);
  auto cert = minimal_reduction(N, 5);
  EXPECT_TRUE(cert.reduction_verified);
  EXPECT_TRUE(inverse(cert.combination).has_value());
  EXPECT_EQ(colength_FM(cert.N).get(), colength_FM(N).get());
}

TEST(Reduction, Deterministic) {
  auto Mod = family_Mabc<Fp>(2, 4, 3);
  auto a = minimal_reduction(Mod, 9), b = minimal_reduction(Mod, 9);
  EXPECT_EQ(a.N, b.N);
  EXPECT_EQ(a.combination, b.combination);
  EXPECT_TRUE(a.reduction_verified);
  EXPECT_THROW(minimal_reduction(M(1, {{P(Fp(1))}}), 1), PreconditionError);
}

TEST(SymPower, Examples) {
  auto Mod = family_Mabc<Fp>(2, 4, 3);
  EXPECT_EQ(sym_power_length(Mod, 1), colength_FM(Mod).get());
  EXPECT_EQ(sym_power_length(M::from_ideal(Ideal<Fp>::maximal()), 2), 3u);
  // Rank one: Sym^p of an ideal module is its p-th power.
  auto s = Staircase::parse("[(3,0),(1,1),(0,2)]");
  for (std::uint32_t p = 1; p <= 4; ++p)
    EXPECT_EQ(sym_power_length(M::from_ideal(Ideal<Fp>::from_staircase(s)), p),
              static_cast<std::uint64_t>(oracle::colength(oracle::power(gen::points(s), static_cast<int>(p)))));
  // For rank 2 the length is a cubic in p with leading coefficient e/6.
  std::vector<std::int64_t> len;
  for (std::uint32_t p = 1; p <= 5; ++p) len.push_back(static_cast<std::int64_t>(sym_power_length(Mod, p)));
  EXPECT_EQ(len[4] - 3 * len[3] + 3 * len[2] - len[1], 32);
  EXPECT_EQ(len[3] - 3 * len[2] + 3 * len[1] - len[0], 32);
}

TEST(BrLimit, Examples) {
  EXPECT_EQ(br_limit_multiplicity(family_Mabc<Fp>(2, 4, 3), 6), 32u);
  EXPECT_EQ(br_limit_multiplicity(direct_sum<Fp>({Staircase::maximal(), Staircase::maximal()}), 6), 3u);
}

TEST(BrLimit, DualRouteOnSmallModules) {
  std::size_t checked = 0;
  for (std::uint64_t i = 0; checked < 10 && i < 40; ++i) {
    const std::size_t r = 1 + i % 2;
    auto Mod = random_bigraded_module<Fp>(r, 15, item_seed(21, 1, i));
    auto e = br_multiplicity(Mod, i + 1);
    if (e > 20) continue;
    auto reduced = split_free(Mod).reduced;
    if (reduced.rank() == 0) continue;
    EXPECT_EQ(limit_with_escalation(reduced), e) << module_to_json(Mod).dump();
    ++checked;
  }
  EXPECT_EQ(checked, 10u);
}

TEST(Closure, Membership) {
  auto Mod = family_Mabc<Fp>(2, 4, 3);
  EXPECT_TRUE(closure_member(Mod, Mod.column(2)));
  auto sq = M::from_ideal(Ideal<Fp>::parse("x^2, y^2"));
  EXPECT_TRUE(closure_member(sq, {P::monomial(1, 1)}));
  EXPECT_FALSE(closure_member(sq, {P::monomial(1, 0)}));
  EXPECT_FALSE(closure_member(M::from_ideal(Ideal<Fp>::maximal()), {P(Fp(1))}));
  Options o;
  o.engine = Engine::Truncation;
  EXPECT_TRUE(closure_member(sq, {P::monomial(1, 1)}, 1, o));
  EXPECT_FALSE(closure_member(sq, {P::monomial(1, 0)}, 1, o));
}

TEST(Closure, DirectSumIsCertified) {
  auto Mod = direct_sum<Fp>({Staircase::parse("[(2,0),(0,2)]"), Staircase::maximal()});
  auto c = closure_approx(Mod);
  EXPECT_EQ(c.exact, ClosureStatus::Certified);
  EXPECT_EQ(c.closure.components(), (std::vector<Staircase>{Staircase::parse("[(2,0),(1,1),(0,2)]"), Staircase::maximal()}));
  auto mm = direct_sum<Fp>({Staircase::maximal(), Staircase::maximal()});
  EXPECT_EQ(is_integrally_closed(mm).status, ClosureStatus::Certified);
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    auto D = random_ic_direct_sum<Fp>({1, 2, 2}, 10, seed);
    auto v = closure_approx(D);
    EXPECT_EQ(v.exact, ClosureStatus::Certified);
    EXPECT_TRUE(v.added.empty());
    EXPECT_EQ(v.closure, D);
  }
}

TEST(Closure, MabcHasWitness) {
  auto Mod = family_Mabc<Fp>(2, 4, 3);
  auto v = is_integrally_closed(Mod);
  ASSERT_EQ(v.status, ClosureStatus::WitnessNotClosed);
  ASSERT_TRUE(v.witness);
  // The witness is outside M and leaves the multiplicity unchanged.
  auto span = module_span(Mod, Options{});
  EXPECT_FALSE(span.contains(*v.witness));
  EXPECT_EQ(br_multiplicity(Mod.with_column(*v.witness)), 32u);
  EXPECT_LT(colength_FM(Mod.with_column(*v.witness)).get(), 29u);
}

TEST(PowerIdentity, Examples) {
  auto Mod = family_Mabc<Fp>(2, 4, 3);
  EXPECT_TRUE(check_power_identity(Mod, family_Mabc_reduction<Fp>(2, 4, 3), 1));
  auto J = M::from_ideal(Ideal<Fp>::parse("x^3, x*y^4, y^6"));
  auto N = M::from_ideal(Ideal<Fp>::parse("x^3, y^6"));
  EXPECT_FALSE(check_power_identity(J, N, 1));
  EXPECT_TRUE(check_power_identity(J, N, 2));
  EXPECT_TRUE(check_power_identity(Mod, Mod, 1));
  EXPECT_THROW(check_power_identity(N, J, 1), PreconditionError);
  EXPECT_THROW(check_power_identity(Mod, Mod, 0), InputError);
}
