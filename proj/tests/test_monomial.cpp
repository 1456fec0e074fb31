#include <gtest/gtest.h>

#include "gen.hpp"

using namespace brim;

TEST(Staircase, ParseAndPrint) {
  auto s = Staircase::parse("[(6,0),(5,3),(4,4),(0,6)]");
  EXPECT_EQ(s.size(), 4u);
  EXPECT_EQ(Staircase::parse(s.to_string()), s);
  EXPECT_EQ(Staircase::from_exponents({{0, 6}, {4, 4}, {5, 5}, {6, 0}, {5, 3}}), s);
  EXPECT_TRUE(s.is_m_primary());
  EXPECT_EQ(s.order(), 6u);
  EXPECT_THROW(Staircase::parse("[(1,0)"), ParseError);
}

TEST(Staircase, ColengthExamples) {
  EXPECT_EQ(staircase_colength(Staircase::maximal()), 1u);
  EXPECT_EQ(staircase_colength(Staircase::parse("[(6,0),(5,3),(4,4),(0,6)]")), 31u);
  EXPECT_EQ(staircase_colength(Staircase::parse("[(6,0),(4,4),(0,6)]")), 32u);
}

TEST(Staircase, ColengthOracle) {
  Rng rng(1);
  for (int i = 0; i < 100; ++i) {
    auto s = gen::staircase(rng, 9);
    EXPECT_EQ(staircase_colength(s), static_cast<std::uint64_t>(oracle::colength(gen::points(s)))) << s.to_string();
  }
}

TEST(Newton, ClosureExamples) {
  EXPECT_EQ(newton_closure(Staircase::parse("[(2,0),(0,2)]")), Staircase::parse("[(2,0),(1,1),(0,2)]"));
  EXPECT_EQ(newton_closure(Staircase::maximal()), Staircase::maximal());
  EXPECT_TRUE(is_integrally_closed_mono(Staircase::parse("[(2,0),(1,1),(0,2)]")));
  EXPECT_FALSE(is_integrally_closed_mono(Staircase::parse("[(2,0),(0,2)]")));
  for (auto [a, b, c] : {std::tuple{2, 4, 3}, std::tuple{1, 2, 1}, std::tuple{3, 5, 4}}) {
    auto I = ideal_of_minors(family_Mabc<Fp>(a, b, c)).staircase();
    auto J = Staircase::from_exponents({{static_cast<std::uint32_t>(a + b), 0}, {0, static_cast<std::uint32_t>(a + b)}});
    auto reduction = Staircase::from_exponents(
        {{static_cast<std::uint32_t>(a + b), 0}, {static_cast<std::uint32_t>(b), static_cast<std::uint32_t>(b)},
         {0, static_cast<std::uint32_t>(a + b)}});
    ASSERT_TRUE(I);
    EXPECT_TRUE(newton_closure(reduction).contains(*I));
    EXPECT_TRUE(I->contains(J));
    EXPECT_TRUE(newton_closure(J).contains(*I));
  }
}

TEST(Newton, ClosureOracle) {
  Rng rng(2);
  for (int i = 0; i < 100; ++i) {
    auto s = gen::staircase(rng, 9);
    auto expected = gen::from_points(oracle::closure(gen::points(s)));
    auto c = newton_closure(s);
    EXPECT_EQ(c, expected) << s.to_string();
    EXPECT_EQ(newton_closure(c), c);
    EXPECT_TRUE(c.contains(s));
    EXPECT_EQ(is_integrally_closed_mono(s), c == s);
  }
}

TEST(Newton, MultiplicityOracle) {
  Rng rng(3);
  for (int i = 0; i < 40; ++i) {
    auto s = gen::staircase(rng, 5);
    EXPECT_EQ(newton_multiplicity(s), static_cast<std::uint64_t>(oracle::multiplicity(gen::points(s)))) << s.to_string();
    EXPECT_EQ(newton_multiplicity(s), newton_multiplicity(newton_closure(s)));
  }
}

TEST(Adjoint, Examples) {
  EXPECT_TRUE(polyhedral_adjoint(Staircase::maximal()).is_unit());
  EXPECT_EQ(polyhedral_adjoint(Staircase::parse("[(2,0),(1,1),(0,2)]")), Staircase::maximal());
  // e - colength of m^k is k^2 - k(k+1)/2.
  for (std::uint32_t k = 1; k <= 6; ++k) {
    auto mk = power(Staircase::maximal(), k);
    EXPECT_EQ(staircase_colength(polyhedral_adjoint(mk)), k * k - k * (k + 1) / 2);
  }
}

TEST(Adjoint, OracleAndLengthIdentity) {
  Rng rng(4);
  for (int i = 0; i < 100; ++i) {
    auto s = gen::staircase(rng, 9);
    auto adj = polyhedral_adjoint(s);
    EXPECT_EQ(adj, gen::from_points(oracle::adjoint(gen::points(s)))) << s.to_string();
    EXPECT_EQ(adj, polyhedral_adjoint(newton_closure(s)));
    auto c = newton_closure(s);
    EXPECT_EQ(staircase_colength(adj), newton_multiplicity(c) - staircase_colength(c)) << s.to_string();
  }
}

TEST(HilbertBurch, Examples) {
  auto m = hilbert_burch<Fp>(Staircase::maximal());
  ASSERT_EQ(m.rows(), 2u);
  ASSERT_EQ(m.cols(), 1u);
  auto minors1 = Ideal<Fp>(minors(m, 1));
  EXPECT_TRUE(equals(minors1, Ideal<Fp>::maximal()));
  auto m2 = hilbert_burch<Fp>(Staircase::parse("[(2,0),(1,1),(0,2)]"));
  ASSERT_EQ(m2.rows(), 3u);
  ASSERT_EQ(m2.cols(), 2u);
  EXPECT_TRUE(equals(Ideal<Fp>(minors(m2, 2)), Ideal<Fp>::parse("x^2, x*y, y^2")));
}

TEST(HilbertBurch, RoundTripAndAdjoint) {
  Rng rng(5);
  for (int i = 0; i < 40; ++i) {
    auto s = gen::staircase(rng, 7);
    if (s.size() < 2) continue;
    auto hb = hilbert_burch<Fp>(s);
    const std::size_t n = s.size();
    // Maximal minors recover the ideal and the matrix annihilates the generators.
    EXPECT_TRUE(equals(Ideal<Fp>(minors(hb, n - 1)), Ideal<Fp>::from_staircase(s)));
    auto gens = monomial_generators<Fp>(s);
    for (std::size_t j = 0; j < hb.cols(); ++j) {
      Poly<Fp> acc;
      for (std::size_t k = 0; k < n; ++k) acc += gens[k] * hb(k, j);
      EXPECT_TRUE(acc.is_zero());
    }
    auto c = newton_closure(s);
    if (c.size() >= 2) {
      auto hc = hilbert_burch<Fp>(c);
      auto adj = c.size() == 2 ? Ideal<Fp>::unit() : Ideal<Fp>(minors(hc, c.size() - 2));
      EXPECT_TRUE(equals(adj, Ideal<Fp>::from_staircase(polyhedral_adjoint(c)))) << c.to_string();
    }
  }
}

TEST(RandomIc, Contract) {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    for (std::uint32_t r = 1; r <= 3; ++r) {
      auto s = random_ic_ideal(r, 20, seed);
      EXPECT_EQ(s, random_ic_ideal(r, 20, seed));
      EXPECT_EQ(s.order(), r);
      EXPECT_TRUE(is_integrally_closed_mono(s));
      EXPECT_EQ(gen::from_points(oracle::closure(gen::points(s))), s);
      EXPECT_LE(staircase_colength(s), 20u);
    }
    // Order one and closed forces (x, y^b) or (x^a, y).
    auto one = random_ic_ideal(1, 12, seed);
    ASSERT_EQ(one.size(), 2u);
    EXPECT_TRUE(one.corners()[0] == (Exponent{1, 0}) || one.corners()[1] == (Exponent{0, 1}));
  }
  EXPECT_THROW(random_ic_ideal(5, 3, 1), InputError);
}

TEST(Enumeration, StaircasesUpTo) {
  const auto& all = staircases_up_to(6);
  std::set<std::string> seen;
  for (const auto& s : all) {
    EXPECT_TRUE(s.is_m_primary());
    EXPECT_GE(staircase_colength(s), 1u);
    EXPECT_LE(staircase_colength(s), 6u);
    seen.insert(s.to_string());
  }
  EXPECT_EQ(seen.size(), all.size());
  // Monomial ideals of colength n correspond to partitions of n.
  std::size_t partitions_total = 1 + 2 + 3 + 5 + 7 + 11;
  EXPECT_EQ(all.size(), partitions_total);
}
