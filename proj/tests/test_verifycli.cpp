#include <gtest/gtest.h>

#include "gen.hpp"

using namespace brim;
using M = Module<Fp>;

TEST(Report, MabcPinpoint) {
  auto r = report(family_Mabc<Fp>(2, 4, 3));
  EXPECT_EQ(r.e_I, 36u);
  EXPECT_EQ(r.len_R_I, 31u);
  EXPECT_EQ(r.e_M, 32u);
  EXPECT_EQ(r.len_F_M, 29u);
  EXPECT_EQ(r.mu, 4u);
  EXPECT_EQ(r.len_R_fitt_r1, 3u);
  EXPECT_EQ(r.ic_status, ClosureStatus::WitnessNotClosed);
  EXPECT_EQ(r.verdicts.gap_inequality, std::optional<bool>(true));
  EXPECT_NE(*r.e_I - *r.e_M, *r.len_R_I - *r.len_F_M);
  EXPECT_EQ(r.verdicts.upper_equality, std::optional<bool>(false));
  EXPECT_EQ(r.verdicts.upper_equality_consistent, std::optional<bool>(true));
  EXPECT_TRUE(violations(r.verdicts).empty());
  EXPECT_TRUE(r.errors.empty());
}

TEST(Report, MaximalSquared) {
  auto r = report(direct_sum<Fp>({Staircase::maximal(), Staircase::maximal()}), 1, {}, {true, 0});
  EXPECT_EQ(r.e_M, 3u);
  EXPECT_EQ(r.len_F_M, 2u);
  EXPECT_EQ(r.len_R_adj, 1u);
  EXPECT_EQ(r.e_M_limit, 3u);
  EXPECT_EQ(r.ic_status, ClosureStatus::Certified);
  EXPECT_EQ(r.verdicts.upper_equality, std::optional<bool>(true));
  EXPECT_EQ(r.verdicts.routes_agree, std::optional<bool>(true));
  EXPECT_EQ(r.verdicts.gap_identity_consistent, std::optional<bool>(true));
}

TEST(Report, EqualityCaseOfFamily) {
  auto r = report(family_Mabc<Fp>(1, 2, 1));
  ASSERT_TRUE(r.e_I && r.e_M && r.len_R_I && r.len_F_M);
  EXPECT_EQ(*r.e_I - *r.len_R_I, 2u);
  EXPECT_EQ(*r.e_M - *r.len_F_M, 2u);
  EXPECT_EQ(*r.e_I - *r.e_M, *r.len_R_I - *r.len_F_M);
  EXPECT_TRUE(violations(r.verdicts).empty());
}

TEST(Report, JsonRoundTrip) {
  CorpusConfig cfg;
  cfg.random_count = 6;
  cfg.direct_sum_count = 3;
  cfg.include_grid = false;
  cfg.dense_count = 2;
  for (const auto& item : make_corpus<Fp>(cfg)) {
    auto r = report(item.module, 2);
    auto j = to_json(r);
    EXPECT_EQ(report_from_json(j), r) << item.label;
    EXPECT_EQ(report_from_json(nlohmann::json::parse(j.dump())), r) << item.label;
    EXPECT_TRUE(j["verdicts"].is_object());
    EXPECT_TRUE(j["ic_status"].is_string());
    EXPECT_FALSE(to_text(r).empty());
  }
}

TEST(Report, MissingFieldsLeaveVerdictsEmpty) {
  InvariantReport r;
  r.rank = 1;
  r.e_M = 5;
  auto v = derive_verdicts(r);
  EXPECT_FALSE(v.lower_bound);
  EXPECT_FALSE(v.upper_equality);
  EXPECT_TRUE(violations(v).empty());
  r.len_F_M = 1;
  r.len_R_adj = 2;
  v = derive_verdicts(r);
  ASSERT_TRUE(v.upper_bound);
  EXPECT_FALSE(*v.upper_bound);
  EXPECT_EQ(violations(v), std::vector<std::string>{"upper_bound"});
}

TEST(Corpus, Empty) {
  CorpusConfig cfg;
  cfg.random_count = 0;
  cfg.direct_sum_count = 0;
  cfg.include_grid = false;
  auto s = verify_corpus<Fp>(cfg);
  EXPECT_TRUE(s.entries.empty());
  EXPECT_TRUE(s.ok());
  EXPECT_EQ(to_json(s)["items"], 0);
}

TEST(Corpus, DeterministicAcrossThreadCounts) {
  CorpusConfig cfg;
  cfg.random_count = 6;
  cfg.direct_sum_count = 4;
  cfg.include_grid = false;
  cfg.seed = 5;
  cfg.threads = 1;
  auto a = to_json(verify_corpus<Fp>(cfg));
  cfg.threads = 3;
  auto b = to_json(verify_corpus<Fp>(cfg));
  EXPECT_EQ(a, b);
  EXPECT_EQ(a["violations"], 0);
}

TEST(Corpus, Eq1ConsistentOnDirectSums) {
  CorpusConfig cfg;
  cfg.random_count = 0;
  cfg.direct_sum_count = 10;
  cfg.include_grid = false;
  auto s = verify_corpus<Fp>(cfg);
  ASSERT_EQ(s.entries.size(), 10u);
  for (const auto& e : s.entries) {
    ASSERT_TRUE(e.report) << e.label << ": " << e.error;
    EXPECT_EQ(e.report->ic_status, ClosureStatus::Certified) << e.label;
    EXPECT_EQ(e.report->verdicts.upper_equality, std::optional<bool>(true)) << e.label;
    EXPECT_EQ(e.report->verdicts.upper_equality_consistent, std::optional<bool>(true)) << e.label;
    EXPECT_EQ(e.report->verdicts.gap_identity_consistent, std::optional<bool>(true)) << e.label;
  }
}

TEST(Corpus, ParallelMapKeepsOrder) {
  auto out = parallel_map<std::size_t>(50, 4, [](std::size_t i) { return i * i; });
  for (std::size_t i = 0; i < 50; ++i) EXPECT_EQ(out[i], i * i);
  EXPECT_TRUE(parallel_map<int>(0, 4, [](std::size_t) { return 1; }).empty());
}

TEST(Corpus, GeneratedModulesRespectConfig) {
  CorpusConfig cfg;
  cfg.random_count = 9;
  cfg.direct_sum_count = 6;
  auto items = make_corpus<Fp>(cfg);
  EXPECT_EQ(items.size(), 9u + 6u + 16u);
  for (const auto& item : items) {
    EXPECT_GE(item.module.rank(), 1u);
    EXPECT_LE(item.module.rank(), 3u);
    if (item.kind == CorpusKind::RandomMonomial) {
      EXPECT_LE(colength_FM(item.module).get(), 25u);
      EXPECT_TRUE(ideal_of_minors(item.module).staircase().has_value());
    }
    if (item.kind == CorpusKind::DirectSum) EXPECT_EQ(is_integrally_closed(item.module).status, ClosureStatus::Certified);
  }
}

TEST(ModuleJson, ParseAndRoundTrip) {
  auto Mod = parse_module<Fp>(R"({"rank": 2, "generators": [["y^2","x^2"],["x^4","0"],["0","y^4"],["x^3*y^3","0"]]})");
  EXPECT_EQ(Mod, family_Mabc<Fp>(2, 4, 3));
  EXPECT_EQ(parse_module<Fp>(module_to_json(Mod).dump()), Mod);
  EXPECT_EQ(parse_module<Rational>(module_to_json(family_Mabc<Rational>(1, 2, 1)).dump()), family_Mabc<Rational>(1, 2, 1));
}

TEST(ModuleJson, Errors) {
  EXPECT_THROW(parse_module<Fp>("{\"rank\": 1,"), ParseError);
  EXPECT_THROW(parse_module<Fp>(R"({"generators": [["x"]]})"), InputError);
  EXPECT_THROW(parse_module<Fp>(R"({"rank": -1, "generators": [["x"]]})"), InputError);
  EXPECT_THROW(parse_module<Fp>(R"({"rank": 1, "generators": [[1]]})"), InputError);
  EXPECT_THROW(parse_module<Fp>(R"({"rank": 1, "generators": [["x y"]]})"), ParseError);
  EXPECT_THROW(parse_module<Fp>(R"({"rank": 2, "generators": [["x","y"]]})"), InputError);
  EXPECT_THROW(parse_module<Fp>(R"({"rank": 1, "generators": [["x^2"]]})"), InputError);
}

TEST(Examples, SmallSuite) {
  ExampleConfig cfg;
  cfg.grid_max_sum = 5;
  cfg.psi_count = 2;
  cfg.ic_pairs = 3;
  cfg.general_pairs = 3;
  auto b = example_suite<Fp>(cfg);
  for (const auto& c : b.checks) EXPECT_TRUE(c.passed) << c.section << "/" << c.name << ": " << c.detail;
  for (const char* sec : {"grid", "pinpoint", "power_identity", "product_pair", "psi", "mixed_formula", "direct_sum_mixed",
                          "mixed_inequality"})
    EXPECT_TRUE(b.section_ok(sec)) << sec;
  EXPECT_EQ(to_json(b)["checks"].size(), b.checks.size());
}

TEST(Examples, SectionFourPair) {
  auto b = product_pair_checks<Fp>();
  EXPECT_TRUE(b.ok());
  auto I = Ideal<Fp>::parse("x, y^6"), J = Ideal<Fp>::parse("x^3, x*y^4, y^6");
  auto x = parse_poly<Fp>("x"), y6 = parse_poly<Fp>("y^6");
  auto IJ = product(I, J);
  auto xJ = product(Ideal<Fp>({x}), J);
  EXPECT_TRUE(equals(IJ, sum(xJ, product(Ideal<Fp>({y6}), I))));
  EXPECT_TRUE(equals(IJ, sum(xJ, product(Ideal<Fp>({y6}), J))));
  EXPECT_FALSE(equals(power(J, 2), product(Ideal<Fp>::parse("x^3, y^6"), J)));
}
