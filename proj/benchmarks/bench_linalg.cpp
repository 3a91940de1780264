#include <benchmark/benchmark.h>

#include <random>

#include "gcodes/eigen_sym.hpp"
#include "gcodes/gf_matrix.hpp"
#include "gcodes/graph_code.hpp"

using namespace gcodes;

namespace {

GFMatrix random_gf2(std::size_t rows, std::size_t cols, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  GFMatrix m(FieldSpec::prime_field(2), rows, cols);
  std::uniform_int_distribution<int> bit(0, 1);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m.set(i, j, std::uint16_t(bit(rng)));
  return m;
}

}  // namespace

static void BM_Gf2Rref(benchmark::State& state) {
  const auto size = std::size_t(state.range(0));
  const auto m = random_gf2(size, 2 * size, 1);
  for (auto _ : state) {
    auto result = rref(m);
    benchmark::DoNotOptimize(result.pivot_columns.data());
  }
}
BENCHMARK(BM_Gf2Rref)->Arg(64)->Arg(128)->Arg(256);

static void BM_GlobalParityRank(benchmark::State& state) {
  const auto code = fixture_k777();
  for (auto _ : state) {
    benchmark::DoNotOptimize(rank(code.global_parity()));
  }
}
BENCHMARK(BM_GlobalParityRank);

static void BM_JacobiEigen(benchmark::State& state) {
  const auto order = std::size_t(state.range(0));
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> entry(-10.0, 10.0);
  RealSymMatrix p(order);
  for (std::size_t i = 0; i < order; ++i)
    for (std::size_t j = i; j < order; ++j) p.set(i, j, entry(rng));
  for (auto _ : state) {
    auto eig = symmetric_eigensystem(p);
    benchmark::DoNotOptimize(eig.values.data());
  }
}
BENCHMARK(BM_JacobiEigen)->Arg(16)->Arg(32)->Arg(64);
