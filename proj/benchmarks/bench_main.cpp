#include <benchmark/benchmark.h>

#include "centext/artin_schreier.hpp"
#include "centext/cohomology.hpp"
#include "centext/root_data.hpp"
#include "centext/smith.hpp"
#include "centext/true_commutator.hpp"

using namespace centext;

static void BM_H2Dihedral(benchmark::State& state) {
  auto g = dihedral(std::size_t(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(second_cohomology(g, FiniteAbelian({2, 2})).order());
}
BENCHMARK(BM_H2Dihedral)->Arg(4)->Arg(6)->Arg(8)->Unit(benchmark::kMillisecond);

static void BM_SchurA5(benchmark::State& state) {
  auto g = alternating(5);
  for (auto _ : state) benchmark::DoNotOptimize(schur_multiplier(g).order());
}
BENCHMARK(BM_SchurA5)->Unit(benchmark::kMillisecond);

static void BM_TrueCommutator(benchmark::State& state) {
  auto g = state.range(0) == 0 ? quaternion8() : alternating(5);
  for (auto _ : state) benchmark::DoNotOptimize(true_commutator(g).cover.has_value());
}
BENCHMARK(BM_TrueCommutator)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

static void BM_RootData(benchmark::State& state) {
  for (auto _ : state)
    for (std::size_t n = 4; n <= 8; ++n) benchmark::DoNotOptimize(fundamental_group_ss('D', n).order());
}
BENCHMARK(BM_RootData);

static void BM_ClassifyPrimitive(benchmark::State& state) {
  auto k = Fq::create(std::uint32_t(state.range(0)), std::uint32_t(state.range(1)));
  for (auto _ : state) benchmark::DoNotOptimize(classify_primitive(k, 7).size());
}
BENCHMARK(BM_ClassifyPrimitive)->Args({2, 2})->Args({3, 2})->Args({5, 1})->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
