#include <benchmark/benchmark.h>

#include <random>

#include "orthocurrent/oracle.hpp"
#include "orthocurrent/structure.hpp"

using namespace orthocurrent;

namespace {

Matrix random_matrix(const Field& f, std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  Matrix m(f, n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = random_element(f, rng);
  return m;
}

Field field_for(int index) {
  switch (index) {
    case 0: return Field::rationals();
    case 1: return Field::prime(7);
    default: return Field::rational_functions(2);
  }
}

void BM_Rref(benchmark::State& state) {
  const Field f = field_for(static_cast<int>(state.range(0)));
  const Matrix m = random_matrix(f, static_cast<std::size_t>(state.range(1)), 1);
  for (auto _ : state) benchmark::DoNotOptimize(rref(m).rank);
  state.SetLabel(f.to_string());
}
BENCHMARK(BM_Rref)->ArgsProduct({{0, 1, 2}, {8, 16}});

void BM_VerifyTheorem(benchmark::State& state) {
  const Field f = field_for(static_cast<int>(state.range(0)));
  std::mt19937_64 rng(3);
  const DiagonalEntries e{random_nonzero(f, rng), random_nonzero(f, rng), random_nonzero(f, rng),
                          random_nonzero(f, rng)};
  std::uint64_t seed = 0;
  for (auto _ : state) benchmark::DoNotOptimize(verify_theorem(f, e, seed++).equal);
  state.SetLabel(f.to_string());
}
BENCHMARK(BM_VerifyTheorem)->DenseRange(0, 2)->Unit(benchmark::kMillisecond);

void BM_Classify(benchmark::State& state) {
  const Field f = Field::rationals();
  const DiagonalEntries e{f.from_int(1), f.from_int(2), f.from_int(3), f.from_int(4)};
  for (auto _ : state) benchmark::DoNotOptimize(classify(f, e).checks.size());
}
BENCHMARK(BM_Classify)->Unit(benchmark::kMillisecond);

void BM_CountSubspaces(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(count_subspaces(3, 6, 3));
}
BENCHMARK(BM_CountSubspaces)->Unit(benchmark::kMillisecond);

void BM_EnumerateIdealsF3(benchmark::State& state) {
  const Field f = Field::prime(3);
  const DiagonalEntries e{f.one(), f.one(), f.one(), f.from_int(2)};
  const LieAlgebra m = build_orthogonal_algebra(f, e).m;
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_ideals(m, static_cast<unsigned>(state.range(0))).size());
}
BENCHMARK(BM_EnumerateIdealsF3)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
