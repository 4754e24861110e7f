#include <benchmark/benchmark.h>

#include <cmath>

#include "hk/harness.hpp"

using namespace hk;

namespace {

SampledField field(int xy_count, int t_count) {
  Grid g = Grid::uniform(1, 2, xy_count, 8, t_count);
  return SampledField::sample(g, [](const GroupPoint& p) {
    return std::exp(-z_norm2(p) - p.t * p.t / 8) * std::polar(1.0, p.z[0].real() + p.t);
  });
}

void BM_L_parallel(benchmark::State& s) {
  auto f = field(static_cast<int>(s.range(0)), 128);
  for (auto _ : s) benchmark::DoNotOptimize(apply_L(f, {4, ExecPolicy::Parallel}));
}

void BM_L_serial(benchmark::State& s) {
  auto f = field(static_cast<int>(s.range(0)), 128);
  for (auto _ : s) benchmark::DoNotOptimize(apply_L(f, {4, ExecPolicy::Serial}));
}

void BM_L_reference(benchmark::State& s) {
  auto f = field(static_cast<int>(s.range(0)), 128);
  for (auto _ : s) benchmark::DoNotOptimize(reference::apply_L(f, 4));
}

void BM_absT_parallel(benchmark::State& s) {
  auto f = field(33, static_cast<int>(s.range(0)));
  for (auto _ : s) benchmark::DoNotOptimize(apply_absT(f, ExecPolicy::Parallel));
}

void BM_absT_serial(benchmark::State& s) {
  auto f = field(33, static_cast<int>(s.range(0)));
  for (auto _ : s) benchmark::DoNotOptimize(apply_absT(f, ExecPolicy::Serial));
}

void BM_absT_reference(benchmark::State& s) {
  auto f = field(33, static_cast<int>(s.range(0)));
  for (auto _ : s) benchmark::DoNotOptimize(reference::apply_absT(f));
}

void BM_spectral_parallel(benchmark::State& s) {
  QuadratureSpec q;
  auto f = gallery("G1");
  for (auto _ : s) benchmark::DoNotOptimize(pair_spectral({1, 0.5}, f, q, 1, ExecPolicy::Parallel));
}

void BM_spectral_serial(benchmark::State& s) {
  QuadratureSpec q;
  auto f = gallery("G1");
  for (auto _ : s) benchmark::DoNotOptimize(pair_spectral({1, 0.5}, f, q, 1, ExecPolicy::Serial));
}

void BM_convolve_lines(benchmark::State& s) {
  QuadratureSpec q;
  auto f = gallery("G1");
  Axis t{-4, 0.25, 32};
  std::vector<std::vector<cplx>> zs{{cplx(0.5, 0)}, {cplx(1, 0)}};
  const auto policy = s.range(0) ? ExecPolicy::Parallel : ExecPolicy::Serial;
  for (auto _ : s) benchmark::DoNotOptimize(convolve_lines(f, {1, 0.5}, q, zs, t, 1, policy));
}

}  // namespace

BENCHMARK(BM_L_parallel)->Arg(33)->Arg(65);
BENCHMARK(BM_L_serial)->Arg(33)->Arg(65);
BENCHMARK(BM_L_reference)->Arg(33)->Arg(65);
BENCHMARK(BM_absT_parallel)->Arg(64)->Arg(256);
BENCHMARK(BM_absT_serial)->Arg(64)->Arg(256);
BENCHMARK(BM_absT_reference)->Arg(64)->Arg(256);
BENCHMARK(BM_spectral_parallel)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_spectral_serial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_convolve_lines)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
