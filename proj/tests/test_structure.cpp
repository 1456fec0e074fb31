#include <gtest/gtest.h>

#include "gen.hpp"

using namespace brim;
using P = Poly<Fp>;
using M = Module<Fp>;

namespace {

P mono(int a, int b, int c = 1) { return P::monomial(static_cast<std::uint32_t>(a), static_cast<std::uint32_t>(b), c); }

PolyMatrix<Fp> reference_presentation(int a, int b, int c) {
  PolyMatrix<Fp> A(4, 2);
  A(0, 1) = mono(c, b);
  A(1, 0) = mono(0, c, -1);
  A(2, 1) = mono(a + c, 0, -1);
  A(3, 0) = mono(b - c, 0);
  A(3, 1) = mono(0, a + b - c, -1);
  return A;
}

Ideal<Fp> minor_ideal(const PolyMatrix<Fp>& A, std::size_t k) {
  if (k == 0) return Ideal<Fp>::unit();
  return Ideal<Fp>(minors(A, k));
}

ReductionCertificate<Fp> designated(int a, int b, int c) {
  DenseMatrix<Fp> comb(4, 3);
  for (std::size_t i = 0; i < 3; ++i) comb(i, i) = Fp(1);
  return certify_reduction(family_Mabc<Fp>(a, b, c), comb, 1);
}

void expect_annihilates(const PresentationMatrix<Fp>& pm) {
  const auto& g = pm.generators;
  for (std::size_t j = 0; j < pm.A.cols(); ++j)
    for (std::size_t i = 0; i < g.rank(); ++i) {
      P acc;
      for (std::size_t k = 0; k < g.size(); ++k) acc += g.column(k)[i] * pm.A(k, j);
      EXPECT_TRUE(acc.truncated(pm.precision).is_zero());
    }
}

}  // namespace

TEST(Presentation, SmallIdeals) {
  auto Pm = presentation(M::from_ideal(Ideal<Fp>::maximal()));
  EXPECT_EQ(Pm.A.rows(), 2u);
  EXPECT_EQ(Pm.A.cols(), 1u);
  EXPECT_TRUE(equals(minor_ideal(Pm.A, 1), Ideal<Fp>::maximal()));
  auto P2 = presentation(M::from_ideal(Ideal<Fp>::parse("x^2, x*y, y^2")));
  EXPECT_EQ(P2.A.rows(), 3u);
  EXPECT_EQ(P2.A.cols(), 2u);
  EXPECT_TRUE(equals(minor_ideal(P2.A, 2), Ideal<Fp>::parse("x^2, x*y, y^2")));
  EXPECT_TRUE(equals(minor_ideal(P2.A, 1), Ideal<Fp>::maximal()));
  expect_annihilates(P2);
}

TEST(Presentation, MatchesHilbertBurch) {
  Rng rng(1);
  for (int i = 0; i < 25; ++i) {
    auto s = gen::staircase(rng, 6);
    auto Pr = presentation(M::from_ideal(Ideal<Fp>::from_staircase(s)));
    auto hb = hilbert_burch<Fp>(s);
    ASSERT_EQ(Pr.A.rows(), s.size());
    ASSERT_EQ(Pr.A.cols(), s.size() - 1);
    expect_annihilates(Pr);
    for (std::size_t k = 1; k < s.size(); ++k) {
      auto c = certified_minor_ideal(Pr.A, k, Pr.precision, Options{});
      ASSERT_TRUE(c) << s.to_string() << " k=" << k;
      EXPECT_TRUE(equals(c->ideal, minor_ideal(hb, k))) << s.to_string() << " k=" << k;
    }
  }
}

TEST(Presentation, MabcReferenceMatrix) {
  for (const auto& item : mabc_grid<Fp>()) {
    int a = 0, b = 0, c = 0;
    std::sscanf(item.label.c_str(), "M(%d,%d,%d)", &a, &b, &c);
    auto reference = reference_presentation(a, b, c);
    // The displayed matrix is a syzygy matrix of the four columns.
    for (std::size_t j = 0; j < 2; ++j)
      for (std::size_t i = 0; i < 2; ++i) {
        P acc;
        for (std::size_t k = 0; k < 4; ++k) acc += item.module.column(k)[i] * reference(k, j);
        EXPECT_TRUE(acc.is_zero());
      }
    auto Pr = presentation(item.module);
    EXPECT_EQ(Pr.A.rows(), 4u);
    EXPECT_EQ(Pr.A.cols(), 2u);
    expect_annihilates(Pr);
    for (std::size_t k = 1; k <= 2; ++k) {
      auto cert = certified_minor_ideal(Pr.A, k, Pr.precision, Options{});
      ASSERT_TRUE(cert) << item.label;
      EXPECT_TRUE(equals(cert->ideal, minor_ideal(reference, k))) << item.label << " k=" << k;
    }
  }
}

TEST(ReductionPresentation, MabcB) {
  for (const auto& item : mabc_grid<Fp>()) {
    int a = 0, b = 0, c = 0;
    std::sscanf(item.label.c_str(), "M(%d,%d,%d)", &a, &b, &c);
    auto cert = designated(a, b, c);
    ASSERT_TRUE(cert.reduction_verified) << item.label;
    auto RP = reduction_first_presentation(cert);
    ASSERT_EQ(RP.B.rows(), 1u);
    ASSERT_EQ(RP.B.cols(), 2u);
    EXPECT_TRUE(RP.B.all_in_maximal_ideal());
    EXPECT_TRUE(equals(Ideal<Fp>({RP.B(0, 0), RP.B(0, 1)}), Ideal<Fp>({mono(b - c, 0), mono(0, a + b - c)})))
        << item.label;
    for (std::size_t j = 0; j < 3; ++j) EXPECT_EQ(RP.full.generators.column(j), item.module.column(j));
  }
}

TEST(KeyLemma, MabcPinpoint) {
  auto k = keylem_check(designated(2, 4, 3));
  EXPECT_EQ(k.lhs, 3u);
  ASSERT_TRUE(k.rhs);
  EXPECT_EQ(*k.rhs, 3u);
  EXPECT_EQ(k.equal, std::optional<bool>(true));
  EXPECT_EQ(staircase_colength(Staircase::parse("[(1,0),(0,3)]")), 3u);
}

TEST(KeyLemma, SelfReduction) {
  auto N = family_Mabc_reduction<Fp>(2, 4, 3);
  auto cert = certify_reduction(N, DenseMatrix<Fp>::identity(3), 1);
  ASSERT_TRUE(cert.reduction_verified);
  auto k = keylem_check(cert);
  EXPECT_EQ(k.lhs, 0u);
  EXPECT_EQ(k.rhs, std::optional<std::uint64_t>(0));
  EXPECT_EQ(k.equal, std::optional<bool>(true));
}

TEST(KeyLemma, CorpusSample) {
  CorpusConfig cfg;
  cfg.random_count = 8;
  cfg.direct_sum_count = 4;
  cfg.include_grid = false;
  std::size_t checked = 0;
  for (const auto& item : make_corpus<Fp>(cfg)) {
    auto reduced = split_free(item.module).reduced;
    if (reduced.rank() == 0 || min_gens(reduced) <= reduced.rank()) continue;
    auto k = keylem_check(minimal_reduction(reduced, 3));
    ASSERT_TRUE(k.equal) << item.label;
    EXPECT_TRUE(*k.equal) << item.label << " lhs=" << k.lhs << " rhs=" << *k.rhs;
    // Also the multiplicity route: e(M) - colength(F/M) = colength(M/N).
    EXPECT_EQ(br_multiplicity(reduced) - colength_FM(reduced).get(), k.lhs) << item.label;
    ++checked;
  }
  EXPECT_GE(checked, 10u);
}

TEST(Adjoint, IdealsAgainstPolyhedral) {
  EXPECT_TRUE(equals(adjoint_via_presentation(Ideal<Fp>::parse("x^2, x*y, y^2")).ideal, Ideal<Fp>::maximal()));
  EXPECT_TRUE(adjoint_via_presentation(Ideal<Fp>::maximal()).ideal.has_unit());
  for (std::uint64_t seed = 0; seed < 15; ++seed) {
    auto s = random_ic_ideal(1 + static_cast<std::uint32_t>(seed % 4), 30, seed);
    auto adj = adjoint_via_presentation(Ideal<Fp>::from_staircase(s));
    EXPECT_TRUE(equals(adj.ideal, Ideal<Fp>::from_staircase(polyhedral_adjoint(s)))) << s.to_string();
    EXPECT_EQ(adj.colength, staircase_colength(gen::from_points(oracle::adjoint(gen::points(s)))));
  }
  EXPECT_THROW(adjoint_via_presentation(Ideal<Fp>::parse("x^2, y^2")), PreconditionError);
  EXPECT_THROW(adjoint_via_presentation(Ideal<Fp>::parse("x^2 + y^3, x*y")), PreconditionError);
}

TEST(Adjoint, ModulesBothForms) {
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    auto s = random_ic_ideal(1 + static_cast<std::uint32_t>(seed % 2), 10, 2 * seed);
    auto t = random_ic_ideal(2, 10, 2 * seed + 1);
    auto D = direct_sum<Fp>({s, t});
    auto adj = adjoint_via_presentation(D, seed + 1);
    ASSERT_TRUE(adj.from_b);
    EXPECT_TRUE(equals(adj.ideal, *adj.from_b));
    EXPECT_TRUE(equals(adj.ideal, Ideal<Fp>::from_staircase(polyhedral_adjoint(product(s, t)))))
        << s.to_string() << " + " << t.to_string();
  }
  EXPECT_THROW(adjoint_via_presentation(family_Mabc<Fp>(2, 4, 3)), PreconditionError);
}

TEST(FittR1, Examples) {
  auto f = fitt_r1(family_Mabc<Fp>(2, 4, 3));
  EXPECT_TRUE(equals(f.ideal, Ideal<Fp>::parse("x, y^3")));
  EXPECT_EQ(f.colength.get(), 3u);
  // Rank one: the (n-2)-minors of the presentation, the adjoint for closed ideals.
  auto s = Staircase::parse("[(3,0),(1,1),(0,3)]");
  ASSERT_TRUE(is_integrally_closed_mono(s));
  auto g = fitt_r1(M::from_ideal(Ideal<Fp>::from_staircase(s)));
  EXPECT_TRUE(equals(g.ideal, Ideal<Fp>::from_staircase(polyhedral_adjoint(s))));
}

TEST(Psi, PostconditionsAndRoundTrip) {
  for (std::uint64_t i = 0; i < 6; ++i) {
    const std::size_t r = 1 + i % 3;
    auto Msrc = psi_source<Fp>(r, 8, item_seed(4, 1, i));
    auto res = psi(Msrc, 1);
    EXPECT_EQ(res.mu_source, 2 * r);
    EXPECT_TRUE(res.ideal_matches);
    EXPECT_TRUE(res.adjoint_matches);
    EXPECT_TRUE(res.contracted);
    auto I = ideal_of_minors(Msrc);
    auto adj_len = staircase_colength(polyhedral_adjoint(*I.staircase()));
    EXPECT_EQ(br_multiplicity(res.image), hs_multiplicity(I) - adj_len);
    auto back = psi_inverse(res.image, 1);
    EXPECT_TRUE(back.ideal_matches);
    EXPECT_TRUE(back.closed_by_length);
    EXPECT_EQ(invariant_vector(back.image), invariant_vector(Msrc));
  }
}

TEST(Psi, Refusals) {
  EXPECT_THROW(psi(family_Mabc<Fp>(2, 4, 3)), PreconditionError);
  // Closed, but ord(I) = 2 > rank 1.
  EXPECT_THROW(psi(M::from_ideal(Ideal<Fp>::parse("x^2, x*y, y^2"))), PreconditionError);
}
