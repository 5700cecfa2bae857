// Microbenchmarks for the hot paths: Smith normal form, move application,
// chain/homology extraction, reduction, and isomorphism checking.

#include <random>

#include <benchmark/benchmark.h>

#include "flowcat/chain.hpp"
#include "flowcat/examples.hpp"
#include "flowcat/generate.hpp"
#include "flowcat/homology.hpp"
#include "flowcat/iso.hpp"
#include "flowcat/moves.hpp"
#include "flowcat/reduce.hpp"
#include "flowcat/smith.hpp"

namespace {

using namespace flowcat;

IntMatrix random_matrix(std::size_t n, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> val(-9, 9);
  IntMatrix m(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) m.at(r, c) = val(rng);
  return m;
}

void BM_smith(benchmark::State& state) {
  std::mt19937_64 rng(7);
  IntMatrix m = random_matrix(static_cast<std::size_t>(state.range(0)), rng);
  for (auto _ : state) benchmark::DoNotOptimize(smith_normal_form(m));
}
BENCHMARK(BM_smith)->Arg(4)->Arg(8)->Arg(16);

void BM_slide(benchmark::State& state) {
  FlowCategory c1 = examples::category("trefoil3-q21-c1");
  for (auto _ : state)
    benchmark::DoNotOptimize(handle_slide(c1, "223", "232", -1));
}
BENCHMARK(BM_slide);

void BM_cancel(benchmark::State& state) {
  FlowCategory c1 = examples::category("trefoil3-q21-c1");
  FlowCategory mid = intermediate_category(c1, "223", "232", -1);
  for (auto _ : state) benchmark::DoNotOptimize(handle_cancel(mid, "f", "e"));
}
BENCHMARK(BM_cancel);

void BM_chain_complex(benchmark::State& state) {
  FlowCategory c1 = examples::category("trefoil3-q21-c1");
  for (auto _ : state) benchmark::DoNotOptimize(chain_complex(c1));
}
BENCHMARK(BM_chain_complex);

void BM_homology(benchmark::State& state) {
  ChainComplex cc = chain_complex(examples::category("trefoil3-q21-c1"));
  for (auto _ : state) benchmark::DoNotOptimize(homology_Z(cc));
}
BENCHMARK(BM_homology);

void BM_reduce(benchmark::State& state) {
  FlowCategory c1 = examples::category("trefoil3-q21-c1");
  for (auto _ : state) benchmark::DoNotOptimize(snf_reduce(c1));
}
BENCHMARK(BM_reduce);

void BM_primary_reduce_random(benchmark::State& state) {
  FlowCategory cat = random_category(static_cast<std::uint64_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(primary_snf_reduce(cat));
}
BENCHMARK(BM_primary_reduce_random)->Arg(1)->Arg(17)->Arg(42);

void BM_iso_check(benchmark::State& state) {
  FlowCategory c1 = examples::category("trefoil3-q21-c1");
  for (auto _ : state) benchmark::DoNotOptimize(iso_check(c1, c1));
}
BENCHMARK(BM_iso_check);

}  // namespace

BENCHMARK_MAIN();
