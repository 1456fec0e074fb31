#include <benchmark/benchmark.h>

#include "brim/brim.hpp"

using namespace brim;

namespace {

void BM_ColengthTruncation(benchmark::State& state) {
  const auto n = static_cast<std::uint32_t>(state.range(0));
  auto I = power(Ideal<Fp>::parse("x^6, x^5*y^3, x^4*y^4, y^6"), n);
  Options o;
  o.engine = Engine::Truncation;
  for (auto _ : state) benchmark::DoNotOptimize(colength(I, o).get());
}
BENCHMARK(BM_ColengthTruncation)->Arg(1)->Arg(2)->Arg(3);

void BM_ColengthStaircase(benchmark::State& state) {
  auto I = power(Ideal<Fp>::parse("x^6, x^5*y^3, x^4*y^4, y^6"), static_cast<std::uint32_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(colength(I).get());
}
BENCHMARK(BM_ColengthStaircase)->Arg(1)->Arg(2)->Arg(3);

void BM_Presentation(benchmark::State& state) {
  auto M = family_Mabc<Fp>(2, 4, 3);
  for (auto _ : state) benchmark::DoNotOptimize(presentation(M).A.rows());
}
BENCHMARK(BM_Presentation);

void BM_BrMultiplicity(benchmark::State& state) {
  auto M = random_bigraded_module<Fp>(static_cast<std::size_t>(state.range(0)), 20, 7);
  for (auto _ : state) benchmark::DoNotOptimize(br_multiplicity(M));
}
BENCHMARK(BM_BrMultiplicity)->Arg(1)->Arg(2)->Arg(3);

void BM_Corpus(benchmark::State& state) {
  CorpusConfig cfg;
  cfg.random_count = static_cast<std::size_t>(state.range(0));
  cfg.direct_sum_count = 5;
  cfg.include_grid = false;
  cfg.threads = 1;
  for (auto _ : state) benchmark::DoNotOptimize(verify_corpus<Fp>(cfg).violation_count);
}
BENCHMARK(BM_Corpus)->Arg(10)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
