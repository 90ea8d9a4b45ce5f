#include <benchmark/benchmark.h>

#include <random>

#include "coxcoh/linalg.hpp"

namespace {

coxcoh::ExactMatrix random_rational(std::size_t n, std::size_t rank, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> v(-5, 5);
  coxcoh::ExactMatrix a(coxcoh::rationals(), n, rank), b(coxcoh::rationals(), rank, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < rank; ++j) {
      a.set(i, j, v(rng));
      b.set(j, i, v(rng));
    }
  return a * b;
}

void BM_ExactRank(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto m = random_rational(n, n / 2, 1);
  for (auto _ : state) benchmark::DoNotOptimize(coxcoh::exact_rank(m));
}
BENCHMARK(BM_ExactRank)->Arg(16)->Arg(32)->Arg(64);

void BM_SparseExactRank(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const coxcoh::SparseMatrix m(random_rational(n, n / 2, 1));
  for (auto _ : state) benchmark::DoNotOptimize(coxcoh::exact_rank(m));
}
BENCHMARK(BM_SparseExactRank)->Arg(16)->Arg(32)->Arg(64);

void BM_ModularRank(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto m = random_rational(n, n / 2, 1);
  for (auto _ : state) benchmark::DoNotOptimize(coxcoh::modular_rank(m, 0).rank);
}
BENCHMARK(BM_ModularRank)->Arg(16)->Arg(32)->Arg(64)->Arg(128);

void BM_GoldenKernel(benchmark::State& state) {
  const coxcoh::FieldSpec& f = coxcoh::field_for(5);
  const auto n = static_cast<std::size_t>(state.range(0));
  coxcoh::ExactMatrix m(f, n, n);
  const auto y = coxcoh::FieldElement::generator(f);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m.set(i, j, y.pow(static_cast<unsigned>((i * j) % 7)));
  for (auto _ : state) benchmark::DoNotOptimize(coxcoh::kernel_basis(m));
}
BENCHMARK(BM_GoldenKernel)->Arg(8)->Arg(16)->Arg(32);

}  // namespace
