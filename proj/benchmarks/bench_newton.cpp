#include <benchmark/benchmark.h>

#include <complex>

#include "hnewton/hnewton.hpp"

using namespace hnewton;

namespace {

void bm_step_harmonic(benchmark::State& state) {
  const HarmonicMap f = make_mpw(3, 0.6);
  cplx z(0.9, 0.4);
  for (auto _ : state) {
    benchmark::DoNotOptimize(z = step_harmonic(f, z));
    z = cplx(0.9, 0.4) + 1e-12 * z;  // keep the input from collapsing
  }
}
BENCHMARK(bm_step_harmonic);

void bm_step_linsys(benchmark::State& state) {
  const HarmonicMap f = make_mpw(3, 0.6);
  cplx z(0.9, 0.4);
  for (auto _ : state) {
    benchmark::DoNotOptimize(z = step_linsys(f, z));
    z = cplx(0.9, 0.4) + 1e-12 * z;
  }
}
BENCHMARK(bm_step_linsys);

void bm_iterate(benchmark::State& state) {
  const HarmonicMap f = make_mpw(3, 0.6);
  for (auto _ : state)
    benchmark::DoNotOptimize(iterate(f, cplx(1.5, 1.5)));
}
BENCHMARK(bm_iterate);

void bm_find_zeros(benchmark::State& state) {
  const HarmonicMap f = make_mpw(3, 0.6);
  GridSpec spec;
  spec.mesh = 4.0 / double(state.range(0));
  for (auto _ : state)
    benchmark::DoNotOptimize(find_zeros(f, spec));
  state.SetItemsProcessed(state.iterations() *
                          int64_t(state.range(0) + 1) * (state.range(0) + 1));
}
BENCHMARK(bm_find_zeros)->Arg(40)->Arg(80);

void bm_laurent(benchmark::State& state) {
  const HarmonicMap f = make_mpw(3, 0.6);
  QuadratureConfig qc;
  qc.center = cplx(0.6);
  qc.radius = 0.25;
  qc.nodes = int(state.range(0));
  for (auto _ : state)
    benchmark::DoNotOptimize(laurent_coefficients(f.eval_h, qc));
}
BENCHMARK(bm_laurent)->Arg(256)->Arg(1024);

void bm_render_phase(benchmark::State& state) {
  const HarmonicMap f = make_mpw(3, 0.6);
  const int n = int(state.range(0));
  for (auto _ : state)
    benchmark::DoNotOptimize(render_phase(f, n, n, {-2.0, 2.0, -2.0, 2.0}));
  state.SetItemsProcessed(state.iterations() * n * n);
}
BENCHMARK(bm_render_phase)->Arg(200);

}  // namespace

BENCHMARK_MAIN();
