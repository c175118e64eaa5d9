#include <benchmark/benchmark.h>

#include <cmath>
#include <random>

#include "sipkit/dist.hpp"
#include "sipkit/filter.hpp"
#include "sipkit/fixtures.hpp"
#include "sipkit/morph.hpp"
#include "sipkit/pipeline.hpp"
#include "sipkit/seg.hpp"
#include "sipkit/spectral.hpp"

namespace {

using namespace sipkit;

RealImage noise(int n) {
  std::mt19937 rng(1);
  RealImage img(n, n);
  for (auto& v : img.samples()) v = (rng() >> 8) * 0x1.0p-24;
  return img;
}

void BM_EdtSquared(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const BinaryImage m = fixtures::random_mask(n, n, 0.9, 3);
  for (auto _ : state) benchmark::DoNotOptimize(edt_squared(m));
  state.SetItemsProcessed(state.iterations() * n * n);
}
BENCHMARK(BM_EdtSquared)->Arg(128)->Arg(512)->Arg(1024);

void BM_GaussianBlur(benchmark::State& state) {
  const RealImage img = noise(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(gaussian_blur(img, 2.0));
}
BENCHMARK(BM_GaussianBlur)->Arg(128)->Arg(512);

void BM_Median(benchmark::State& state) {
  const RealImage img = noise(256);
  for (auto _ : state) benchmark::DoNotOptimize(median_filter(img, static_cast<int>(state.range(0))));
}
BENCHMARK(BM_Median)->Arg(1)->Arg(2)->Arg(4);

void BM_Watershed(benchmark::State& state) {
  const RealImage img = gaussian_blur(noise(static_cast<int>(state.range(0))), 2.0);
  for (auto _ : state) benchmark::DoNotOptimize(watershed(img));
}
BENCHMARK(BM_Watershed)->Arg(128)->Arg(512);

void BM_Skeleton(benchmark::State& state) {
  const BinaryImage glyph = run_ocr(fixtures::glyph_a()).binary;
  for (auto _ : state) benchmark::DoNotOptimize(skeleton(glyph));
}
BENCHMARK(BM_Skeleton);

void BM_Fft(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  ComplexVector x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = {std::cos(0.1 * i), 0.0};
  for (auto _ : state) benchmark::DoNotOptimize(fft(x, FftSign::forward));
}
BENCHMARK(BM_Fft)->RangeMultiplier(8)->Range(32, 1 << 15);

void BM_CellsPipeline(benchmark::State& state) {
  const RealImage img = fixtures::two_cells();
  for (auto _ : state) benchmark::DoNotOptimize(run_cells(img));
}
BENCHMARK(BM_CellsPipeline);

}  // namespace

BENCHMARK_MAIN();
