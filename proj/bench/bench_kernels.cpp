#include <benchmark/benchmark.h>

#include <vector>

#include "dyckmax/kernels.hpp"

using namespace dyckmax;

static void BM_bounded_serial(benchmark::State& st) {
  for (auto _ : st) benchmark::DoNotOptimize(kernels::bounded_excursions_serial(st.range(0), st.range(1)));
}
static void BM_bounded_omp(benchmark::State& st) {
  for (auto _ : st) benchmark::DoNotOptimize(kernels::bounded_excursions_omp(st.range(0), st.range(1)));
}
BENCHMARK(BM_bounded_serial)->Args({1000, 60})->Args({5000, 200})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_bounded_omp)->Args({1000, 60})->Args({5000, 200})->Unit(benchmark::kMillisecond);

static void BM_series_serial(benchmark::State& st) {
  for (auto _ : st) benchmark::DoNotOptimize(kernels::bounded_excursion_series_serial(st.range(0), st.range(1)));
}
static void BM_series_omp(benchmark::State& st) {
  for (auto _ : st) benchmark::DoNotOptimize(kernels::bounded_excursion_series_omp(st.range(0), st.range(1)));
}
BENCHMARK(BM_series_serial)->Args({300, 60})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_series_omp)->Args({300, 60})->Unit(benchmark::kMillisecond);

static void BM_spectral_serial(benchmark::State& st) {
  std::vector<double> out(static_cast<std::size_t>(st.range(1)));
  for (auto _ : st) {
    kernels::log_spectral_terms_serial(st.range(0), st.range(1), out);
    benchmark::DoNotOptimize(out.data());
  }
}
static void BM_spectral_omp(benchmark::State& st) {
  std::vector<double> out(static_cast<std::size_t>(st.range(1)));
  for (auto _ : st) {
    kernels::log_spectral_terms_omp(st.range(0), st.range(1), out);
    benchmark::DoNotOptimize(out.data());
  }
}
BENCHMARK(BM_spectral_serial)->Args({100000, 100000})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_spectral_omp)->Args({100000, 100000})->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
