#include <benchmark/benchmark.h>

#include "braidcalc/braided.hpp"
#include "braidcalc/rewrite.hpp"
#include "braidcalc/weyl.hpp"
#include "braidcalc/witt.hpp"

using namespace braidcalc;

namespace {

void BM_ScalarRationalFunction(benchmark::State& state) {
  const Scalar q = Scalar::z();
  for (auto _ : state) {
    Scalar acc;
    for (int k = 1; k <= state.range(0); ++k) acc += (q.pow(k) - 1) / (q - 1) * q.inverse();
    benchmark::DoNotOptimize(acc);
  }
}
BENCHMARK(BM_ScalarRationalFunction)->Arg(8)->Arg(32);

void BM_HeckeBraidRelation(benchmark::State& state) {
  Braiding b = standard_hecke(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(check_braid(b));
}
BENCHMARK(BM_HeckeBraidRelation)->Arg(2)->Arg(3);

void BM_SkewInverse(benchmark::State& state) {
  Braiding b = standard_hecke(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(skew_inverse(b));
}
BENCHMARK(BM_SkewInverse)->Arg(2)->Arg(3);

void BM_MrePbw(benchmark::State& state) {
  AlgebraPresentation p = mre_presentation(standard_hecke(2), 1);
  for (auto _ : state) benchmark::DoNotOptimize(pbw_check(p, static_cast<int>(state.range(0))));
}
BENCHMARK(BM_MrePbw)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);

void BM_QWittPP(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(witt_pp_check(1, 2, 4));
}
BENCHMARK(BM_QWittPP);

void BM_U2NormalOrder(benchmark::State& state) {
  WeylPresentation w = u2_weyl(Scalar::z());
  Word mixed = {5, 6, 7};
  for (int i = 0; i < state.range(0); ++i) mixed.push_back(1 + i % 3);
  for (auto _ : state) {
    WeylEngine e(w);
    benchmark::DoNotOptimize(e.normal_order(mixed));
  }
}
BENCHMARK(BM_U2NormalOrder)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
