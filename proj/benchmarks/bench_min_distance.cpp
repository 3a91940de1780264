#include <benchmark/benchmark.h>

#include <random>

#include "gcodes/graph_code.hpp"
#include "gcodes/linear_code.hpp"

using namespace gcodes;

static void BM_ExhaustiveK333(benchmark::State& state) {
  const auto code = fixture_k333();
  const auto& flat = code.as_linear_code();  // [27, 19]
  for (auto _ : state) {
    benchmark::DoNotOptimize(min_distance_exhaustive(flat));
  }
}
BENCHMARK(BM_ExhaustiveK333);

static void BM_InformationSetK777(benchmark::State& state) {
  const auto code = fixture_k777();
  const auto& flat = code.as_linear_code();  // [147, 48]
  DistanceOptions opts;
  opts.workers = unsigned(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(min_distance_bz(flat, opts));
  }
}
BENCHMARK(BM_InformationSetK777)->Arg(1)->Arg(4);

static void BM_BuildK777(benchmark::State& state) {
  for (auto _ : state) {
    auto code = fixture_k777();
    benchmark::DoNotOptimize(code.global_parity().rows());
  }
}
BENCHMARK(BM_BuildK777);

static void BM_RandomCodeCrossCheck(benchmark::State& state) {
  std::mt19937_64 rng(3);
  auto gf2 = FieldSpec::prime_field(2);
  GFMatrix g(gf2, 12, 24);
  for (;;) {
    std::uniform_int_distribution<int> bit(0, 1);
    for (std::size_t i = 0; i < g.rows(); ++i)
      for (std::size_t j = 0; j < g.cols(); ++j) g.set(i, j, std::uint16_t(bit(rng)));
    if (rank(g) == g.rows()) break;
  }
  const auto code = LinearCode::from_generator(std::move(g));
  for (auto _ : state) {
    benchmark::DoNotOptimize(min_distance_bz(code));
    benchmark::DoNotOptimize(min_distance_exhaustive(code));
  }
}
BENCHMARK(BM_RandomCodeCrossCheck);

BENCHMARK_MAIN();
