#include <benchmark/benchmark.h>

#include <random>

#include "extspec/boundary.hpp"
#include "extspec/extfinite.hpp"
#include "extspec/spectral11.hpp"
#include "extspec/specfun.hpp"

using namespace extspec;

static void BM_G(benchmark::State& state) {
  double lam = -7.3;
  for (auto _ : state) {
    benchmark::DoNotOptimize(G(lam));
    lam += 1e-7;
  }
}
BENCHMARK(BM_G);

static void BM_Eigenvalue(benchmark::State& state) {
  const auto p = ExtensionParameter::make(0.7);
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(eigenvalue(p, n));
}
BENCHMARK(BM_Eigenvalue)->Arg(0)->Arg(10)->Arg(1000);

static void BM_Spectrum(benchmark::State& state) {
  const auto p = ExtensionParameter::make(-1.2);
  for (auto _ : state) benchmark::DoNotOptimize(spectrum(p, static_cast<int>(state.range(0))));
}
BENCHMARK(BM_Spectrum)->Arg(100);

static void BM_HurwitzZ(benchmark::State& state) {
  double x = 0.123;
  for (auto _ : state) {
    benchmark::DoNotOptimize(hurwitz_Z(x));
    x += 1e-6;
  }
}
BENCHMARK(BM_HurwitzZ);

static void BM_Gram(benchmark::State& state) {
  std::vector<double> a;
  for (int j = 0; j < state.range(0); ++j) a.push_back(0.9 * j / state.range(0));
  const BoundarySet F = BoundarySet::make(a);
  for (auto _ : state) benchmark::DoNotOptimize(gram(F));
}
BENCHMARK(BM_Gram)->Arg(2)->Arg(8)->Arg(32);

static void BM_ExtensionSpectrum(benchmark::State& state) {
  const GramKernel g = gram(BoundarySet::make({0.0, 0.21, 0.5, 0.77}));
  const IsometryMatrix M = sample_GF(g, 42);
  const auto strategy = state.range(0) == 0 ? PsiStrategy::hermitian_count : PsiStrategy::determinant_scan;
  for (auto _ : state) benchmark::DoNotOptimize(extension_spectrum(g, M.M, 20, strategy));
}
BENCHMARK(BM_ExtensionSpectrum)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

static void BM_AdjointApply(benchmark::State& state) {
  const BoundarySet F = BoundarySet::make({0.0, 0.5});
  DomainElement f;
  f.g.taylor = {1.0, 0.0, -1.0};  // 1 - z^2 vanishes at +-1
  f.a = {cplx(0.3, 0.1), cplx(-0.2, 0.0)};
  f.b = {cplx(0.0, 1.0), cplx(0.5, -0.5)};
  const auto N = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(adjoint_apply(f, F, N));
}
BENCHMARK(BM_AdjointApply)->Arg(256)->Arg(4096);

static void BM_AdjointApplyPointwise(benchmark::State& state) {
  const BoundarySet F = BoundarySet::make({0.0, 0.5});
  DomainElement f;
  f.g.taylor = {1.0, 0.0, -1.0};
  f.a = {cplx(0.3, 0.1), cplx(-0.2, 0.0)};
  f.b = {cplx(0.0, 1.0), cplx(0.5, -0.5)};
  const cplx z(0.3, -0.4);
  for (auto _ : state) benchmark::DoNotOptimize(adjoint_apply_cp(f, F, z));
}
BENCHMARK(BM_AdjointApplyPointwise);
BENCHMARK_MAIN();
