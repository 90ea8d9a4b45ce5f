#include <benchmark/benchmark.h>

#include "coxcoh/configspace.hpp"
#include "coxcoh/tor.hpp"

namespace {

void BM_ReflectionComplex(benchmark::State& state, const char* group) {
  const auto g = coxcoh::parse_graph(group);
  const auto rep = coxcoh::reflection_rep(g);
  for (auto _ : state) {
    const auto x = coxcoh::build_coxeter_complex(rep);
    benchmark::DoNotOptimize(coxcoh::coxeter_cohomology(x).h_dims);
  }
}
BENCHMARK_CAPTURE(BM_ReflectionComplex, A8, "A8");
BENCHMARK_CAPTURE(BM_ReflectionComplex, E8, "E8");
BENCHMARK_CAPTURE(BM_ReflectionComplex, H4, "H4");

void BM_RegularComplex(benchmark::State& state, coxcoh::RankMode mode) {
  const auto rep = coxcoh::regular_rep(coxcoh::type_a(4));
  for (auto _ : state) {
    const auto x = coxcoh::build_coxeter_complex(rep);
    benchmark::DoNotOptimize(coxcoh::coxeter_cohomology(x, {mode}).h_dims);
  }
}
BENCHMARK_CAPTURE(BM_RegularComplex, exact, coxcoh::RankMode::exact)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_RegularComplex, modular, coxcoh::RankMode::modular)->Unit(benchmark::kMillisecond);

void BM_RelativeComplex(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(coxcoh::relative_complex(n, false).cells.size());
}
BENCHMARK(BM_RelativeComplex)->DenseRange(3, 6)->Unit(benchmark::kMillisecond);

void BM_TorHomology(benchmark::State& state) {
  const int i_max = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(coxcoh::tor_complex(2, i_max).homology());
}
BENCHMARK(BM_TorHomology)->DenseRange(2, 4)->Unit(benchmark::kMillisecond);

}  // namespace
