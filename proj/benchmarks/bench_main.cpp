#include <benchmark/benchmark.h>

#include "spweyl/characters.hpp"
#include "spweyl/oracle.hpp"
#include "spweyl/patterns.hpp"
#include "spweyl/pops.hpp"

using namespace spweyl;

namespace {

// args: rank, multiplicity of omega_1, multiplicity added on omega_r
DominantWeight weight_of(const benchmark::State& st) {
  const int r = static_cast<int>(st.range(0));
  std::vector<std::int64_t> m(r, 0);
  m[0] = st.range(1);
  m[r - 1] += st.range(2);
  return DominantWeight::from_omegas(m);
}

void BM_CountPatterns(benchmark::State& st) {
  const auto lam = weight_of(st);
  for (auto _ : st) benchmark::DoNotOptimize(count_patterns(lam));
}

void BM_CountPops(benchmark::State& st) {
  const auto lam = weight_of(st);
  for (auto _ : st) benchmark::DoNotOptimize(count_pops(lam));
}

void BM_CharacterDirect(benchmark::State& st) {
  const auto lam = weight_of(st);
  for (auto _ : st) benchmark::DoNotOptimize(character_direct(lam));
}

void BM_CharacterFermionic(benchmark::State& st) {
  const auto lam = weight_of(st);
  for (auto _ : st) benchmark::DoNotOptimize(character_fermionic(lam));
}

void BM_Freudenthal(benchmark::State& st) {
  const auto lam = weight_of(st);
  for (auto _ : st) benchmark::DoNotOptimize(freudenthal_character(lam));
}

void shapes(benchmark::internal::Benchmark* b) {
  b->Args({2, 1, 1})->Args({2, 2, 1})->Args({3, 1, 1})->Args({3, 2, 0})->Args({3, 1, 2});
}

}  // namespace

BENCHMARK(BM_CountPatterns)->Apply(shapes);
BENCHMARK(BM_CountPops)->Apply(shapes);
BENCHMARK(BM_CharacterDirect)->Apply(shapes)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CharacterFermionic)->Apply(shapes)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Freudenthal)->Apply(shapes);
BENCHMARK_MAIN();
