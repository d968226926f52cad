#include <benchmark/benchmark.h>

#include "epcx/cauchy.hpp"
#include "epcx/ivp.hpp"
#include "epcx/random.hpp"
#include "epcx/stencil.hpp"

namespace {

using namespace epcx;

const AlgebraParams kParams{2.0, 1.0};

void BM_Mul(benchmark::State& state) {
  Rng rng(1);
  GC acc{1.0, 0.0};
  const GC z{rng.uniform(-1, 1), rng.uniform(-1, 1)};
  for (auto _ : state) {
    acc = mul(acc, z, kParams);
    benchmark::DoNotOptimize(acc);
  }
}
BENCHMARK(BM_Mul);

void BM_CauchyEval(benchmark::State& state) {
  const HoloPoly Z = HoloPoly::generator(kParams);
  const HoloPoly f = mul_poly(mul_poly(Z, Z), Z);
  const Contour c{0.0, 0.0, 1.0, static_cast<std::size_t>(state.range(0))};
  for (auto _ : state) benchmark::DoNotOptimize(cauchy_eval(f, c, GC{0.3, -0.2}));
}
BENCHMARK(BM_CauchyEval)->RangeMultiplier(4)->Range(64, 4096);

void BM_DZbar(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const GridSpec g{-1.0, -1.0, n, n, 2.0 / static_cast<double>(n - 1)};
  const ComplexField f = to_field(mul_poly(HoloPoly::generator(kParams), HoloPoly::generator(kParams)), g);
  for (auto _ : state) benchmark::DoNotOptimize(d_zbar(f));
  state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations() * g.size()));
}
BENCHMARK(BM_DZbar)->Arg(65)->Arg(129)->Arg(257);

void BM_IvpStep(benchmark::State& state) {
  IvpConfig cfg;
  cfg.params = kParams;
  cfg.domain = Rect{-1, -1, 1, 1};
  cfg.grid = grid_for(cfg.domain, 1.0 / static_cast<double>(state.range(0)));
  cfg.dt = 1e-3;
  cfg.t_end = 1e-2;
  cfg.keep_fields = false;
  const RealCoeffs rc = synthesize(FreeCoeffs{}, HoloPoly::constant(kParams, kOne), HoloPoly(kParams, {}),
                                   HoloPoly(kParams, {}), kParams);
  const HoloPoly w0 = HoloPoly::generator(kParams);
  for (auto _ : state) benchmark::DoNotOptimize(solve(cfg, rc, w0));
  state.SetItemsProcessed(state.iterations() * 10);
}
BENCHMARK(BM_IvpStep)->Arg(32)->Arg(64);

}  // namespace

BENCHMARK_MAIN();
