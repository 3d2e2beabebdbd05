#include <benchmark/benchmark.h>

#include "sugawara/gaudin.hpp"
#include "sugawara/nc_matrix.hpp"
#include "sugawara/segal_sugawara.hpp"
#include "sugawara/serialize.hpp"
#include "sugawara/w_algebra.hpp"

using namespace sugawara;

namespace {

// Cold cache: a fresh Algebra per iteration, so memoization is measured too.
void BM_CdetTauMatrix(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    Algebra alg(n);
    benchmark::DoNotOptimize(cdet(alg, build_tau_matrix(n)));
  }
}
BENCHMARK(BM_CdetTauMatrix)->DenseRange(2, 4)->Unit(benchmark::kMillisecond);

void BM_TracePower(benchmark::State& state) {
  const int k = static_cast<int>(state.range(0));
  for (auto _ : state) {
    Algebra alg(3);
    benchmark::DoNotOptimize(segal_sugawara_trace(alg, k));
  }
}
BENCHMARK(BM_TracePower)->DenseRange(1, 4)->Unit(benchmark::kMillisecond);

void BM_NewtonIdentity(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    Algebra alg(n);
    benchmark::DoNotOptimize(newton_identity_check(alg, n + 3));
  }
}
BENCHMARK(BM_NewtonIdentity)->DenseRange(2, 3)->Unit(benchmark::kMillisecond);

void BM_Manin(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  Algebra alg(n);
  const NcMatrix m = build_tau_matrix(n);
  for (auto _ : state) benchmark::DoNotOptimize(is_manin(alg, m));
}
BENCHMARK(BM_Manin)->DenseRange(2, 4);

void BM_Centrality(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(verify_centrality(n));
}
BENCHMARK(BM_Centrality)->DenseRange(2, 3)->Unit(benchmark::kMillisecond);

void BM_Commutativity(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(verify_commutativity(n, 2));
}
BENCHMARK(BM_Commutativity)->DenseRange(2, 3)->Unit(benchmark::kMillisecond);

void BM_RhoMap(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    const RhoMap rho(n);
    benchmark::DoNotOptimize(rho.generator_images());
  }
}
BENCHMARK(BM_RhoMap)->DenseRange(2, 3)->Unit(benchmark::kMillisecond);

void BM_TraceImages(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(verify_trace_images(n, 4));
}
BENCHMARK(BM_TraceImages)->DenseRange(2, 3)->Unit(benchmark::kMillisecond);

void BM_Gaudin(benchmark::State& state) {
  SiteConfig cfg;
  cfg.n = static_cast<int>(state.range(0));
  for (int a = 0; a < state.range(1); ++a) cfg.points.emplace_back(a);
  for (auto _ : state) benchmark::DoNotOptimize(verify_gaudin_commutativity(cfg));
  state.counters["dim"] = static_cast<double>(cfg.dimension());
}
BENCHMARK(BM_Gaudin)->Args({2, 2})->Args({2, 3})->Args({3, 2})->Args({2, 4})->Unit(benchmark::kMillisecond);

void BM_SerializeRoundTrip(benchmark::State& state) {
  Algebra alg(3);
  const NcElement t33 = segal_sugawara_trace(alg, 3).back();
  for (auto _ : state) benchmark::DoNotOptimize(parse_nc_element(serialize(t33)));
  state.counters["terms"] = static_cast<double>(t33.size());
}
BENCHMARK(BM_SerializeRoundTrip);

}  // namespace

BENCHMARK_MAIN();
