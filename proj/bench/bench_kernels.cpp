#include "prudent/asymptotics.hpp"
#include "prudent/kernels.hpp"
#include "prudent/oracle.hpp"

#include <benchmark/benchmark.h>

using namespace prudent;

namespace {

std::vector<BigInt> big_operand(std::size_t n) {
  std::vector<BigInt> v(n + 1);
  BigInt x = 1;
  for (std::size_t i = 0; i <= n; ++i, x *= 3) v[i] = x + BigInt(static_cast<long>(i));
  return v;
}

void BM_ConvolveSerial(benchmark::State& st) {
  auto a = big_operand(st.range(0)), b = big_operand(st.range(0));
  for (auto _ : st) benchmark::DoNotOptimize(kernels::convolve_serial(a, b, st.range(0)));
}
BENCHMARK(BM_ConvolveSerial)->Arg(256)->Arg(1024)->Unit(benchmark::kMillisecond);

void BM_ConvolveParallel(benchmark::State& st) {
  auto a = big_operand(st.range(0)), b = big_operand(st.range(0));
  for (auto _ : st) benchmark::DoNotOptimize(kernels::convolve_parallel(a, b, st.range(0)));
}
BENCHMARK(BM_ConvolveParallel)->Arg(256)->Arg(1024)->Unit(benchmark::kMillisecond);

void BM_Oracle(benchmark::State& st) {
  OracleOptions o;
  o.parallel = st.range(1) != 0;
  for (auto _ : st) benchmark::DoNotOptimize(enumerate_prudent_polygons(4, st.range(0), o));
}
BENCHMARK(BM_Oracle)->Args({6, 0})->Args({6, 1})->Unit(benchmark::kMillisecond);

void BM_ResidualRows(benchmark::State& st) {
  NumericContext ctx;
  PrecisionScope scope(ctx.precision);
  FloatSeries1 x = pa3_float_series(512, ctx.precision);
  AsymptoticModel m = asymptotic_model(ctx);
  for (auto _ : st) benchmark::DoNotOptimize(residual_rows(x, 5, m, st.range(0) != 0));
}
BENCHMARK(BM_ResidualRows)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_Pa3ExplicitSum(benchmark::State& st) {
  for (auto _ : st) benchmark::DoNotOptimize(pa3_series(st.range(0)));
}
BENCHMARK(BM_Pa3ExplicitSum)->Arg(200)->Arg(800)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
