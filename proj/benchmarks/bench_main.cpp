#include <random>

#include <benchmark/benchmark.h>

#include "cfhom/chain_complex.hpp"
#include "cfhom/modpr.hpp"
#include "cfhom/smith.hpp"
#include "cfhom/transfer.hpp"
#include "support/oracles.hpp"

namespace {

void BM_SmithNormalForm(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  std::mt19937_64 rng(1);
  const auto a = oracle::random_matrix(rng, n, n, 50);
  for (auto _ : state) benchmark::DoNotOptimize(cfhom::smith_normal_form(a));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_SmithNormalForm)->RangeMultiplier(2)->Range(4, 32)->Complexity();

cfhom::ChainComplex bench_complex(std::size_t rank) {
  cfhom::RandomComplexParams params;
  params.degrees = 5;
  params.max_rank = rank;
  params.torsion_primes = {2, 3};
  return cfhom::random_complex(params, 42);
}

void BM_IntegralHomology(benchmark::State& state) {
  const auto c = bench_complex(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(cfhom::integral_homology(c));
}
BENCHMARK(BM_IntegralHomology)->Arg(4)->Arg(8)->Arg(16);

void BM_ModQCardinalities(benchmark::State& state) {
  const auto c = bench_complex(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(cfhom::mod_q_cardinalities(c, 8));
}
BENCHMARK(BM_ModQCardinalities)->Arg(4)->Arg(8)->Arg(16);

void BM_ReconstructModPr(benchmark::State& state) {
  const auto table = cfhom::cardinality_table(bench_complex(8), 2, static_cast<unsigned>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(cfhom::reconstruct_mod_pr(table));
}
BENCHMARK(BM_ReconstructModPr)->DenseRange(1, 4);

void BM_DoldSweep(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(cfhom::dold_sweep(4, 5));
}
BENCHMARK(BM_DoldSweep)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
