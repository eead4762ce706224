#include <benchmark/benchmark.h>

#include "mukaistab/certify.hpp"
#include "mukaistab/charges.hpp"
#include "mukaistab/walls.hpp"

using namespace mukaistab;

namespace {

void BM_Pairing(benchmark::State& state) {
  const SurfaceContext ctx(25);
  MukaiVector a{3, -2, 17}, b{5, 4, 16};
  for (auto _ : state) {
    benchmark::DoNotOptimize(pairing(a, b, ctx));
    benchmark::ClobberMemory();
  }
}
BENCHMARK(BM_Pairing);

void BM_CentralCharge(benchmark::State& state) {
  const SurfaceContext ctx(7);
  const StabilityPoint pt(Rational(-13, 29), Rational(41, 17));
  for (auto _ : state) benchmark::DoNotOptimize(central_charge({4, 3, 16}, pt, ctx));
}
BENCHMARK(BM_CentralCharge);

void BM_PhaseKey(benchmark::State& state) {
  const SurfaceContext ctx(7);
  const auto z = central_charge({4, 3, 16}, StabilityPoint(Rational(-13, 29), Rational(41, 17)), ctx);
  for (auto _ : state) benchmark::DoNotOptimize(phase_key(z));
}
BENCHMARK(BM_PhaseKey);

void BM_WallBetween(benchmark::State& state) {
  const SurfaceContext ctx(12);
  for (auto _ : state) benchmark::DoNotOptimize(wall_between({1, 0, 1}, {3, 1, 4}, ctx));
}
BENCHMARK(BM_WallBetween);

void BM_PhaseInequalityCertify(benchmark::State& state) {
  const SurfaceContext ctx(4);
  SamplingOptions opts;
  opts.samples = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(lemma46_certify({2, 1, 2}, {1, 0, 1}, ctx, LemmaCase::One, opts));
}
BENCHMARK(BM_PhaseInequalityCertify)->Arg(0)->Arg(50);

void BM_InV(benchmark::State& state) {
  const SurfaceContext ctx(10);
  const StabilityPoint pt(Rational(3, 7), Rational(1, 490));
  for (auto _ : state) benchmark::DoNotOptimize(in_V(pt, ctx));
}
BENCHMARK(BM_InV);

void BM_FmPartners(benchmark::State& state) {
  const SurfaceContext ctx(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(fm_partners(ctx));
}
BENCHMARK(BM_FmPartners)->Arg(10000)->Arg(1000000);

void BM_HNTwistedSkyscraper(benchmark::State& state) {
  const SurfaceContext ctx(16);
  const StabilityPoint pt(Rational(5, 2), Rational(1, 2));
  for (auto _ : state) {
    benchmark::DoNotOptimize(hn_twisted_skyscraper({1, 1, 17}, static_cast<Integer>(state.range(0)), pt, ctx));
  }
}
BENCHMARK(BM_HNTwistedSkyscraper)->Arg(1)->Arg(5);

}  // namespace

BENCHMARK_MAIN();
