#include <benchmark/benchmark.h>

#include "frey13/elimination.hpp"
#include "frey13/exactalg.hpp"
#include "frey13/frey.hpp"
#include "frey13/localred.hpp"
#include "frey13/traces.hpp"

using namespace frey13;

namespace {

QuadCurve family_curve(long a, long b) {
  FreyCoeffs c = frey_at(BigInt(a), BigInt(b));
  return QuadCurve{QuadElt{}, QuadElt{}, QuadElt{}, c.a4, c.a6};
}

void BM_Resultant(benchmark::State& state) {
  std::vector<BigInt> cyc(13, BigInt(0));
  cyc[0] = -1;
  cyc[12] = 1;
  IntPoly p(std::move(cyc));
  IntPoly q = IntPoly::from_ints({3, -2, 1});
  for (auto _ : state) benchmark::DoNotOptimize(resultant(p, q));
}
BENCHMARK(BM_Resultant);

void BM_FactorizePastSieve(benchmark::State& state) {
  // semiprime with both factors above the trial-division bound
  BigInt n = BigInt(1000003) * BigInt(1000033);
  for (auto _ : state) benchmark::DoNotOptimize(factorize(n));
}
BENCHMARK(BM_FactorizePastSieve)->Unit(benchmark::kMillisecond);

void BM_TateEvenPrime(benchmark::State& state) {
  QuadCurve E = family_curve(1, 3);
  const QuadPrime& L = prime_by_name("L2");
  for (auto _ : state) benchmark::DoNotOptimize(tate_local(E, L));
}
BENCHMARK(BM_TateEvenPrime);

void BM_TateRamifiedPrime(benchmark::State& state) {
  QuadCurve E = family_curve(1, 12);
  const QuadPrime& L = prime_by_name("L13");
  for (auto _ : state) benchmark::DoNotOptimize(tate_local(E, L));
}
BENCHMARK(BM_TateRamifiedPrime);

void BM_CountPointsLargestField(benchmark::State& state) {
  ResidueField k(prime_by_name("L11"));
  FFElt a4 = k.from_int(3), a6 = k.from_int(7);
  for (auto _ : state) benchmark::DoNotOptimize(count_points_short(k, a4, a6));
}
BENCHMARK(BM_CountPointsLargestField);

void BM_TraceSetFastPath(benchmark::State& state) {
  const QuadPrime& L = prime_by_name("L5");
  TraceOptions opt;
  for (auto _ : state) benchmark::DoNotOptimize(trace_set(L, opt));
}
BENCHMARK(BM_TraceSetFastPath)->Unit(benchmark::kMillisecond);

void BM_TraceSetTatePath(benchmark::State& state) {
  // residue characteristic 3 classifies a curve per class instead of
  // evaluating the short model directly
  const QuadPrime& L = prime_by_name("L3_0");
  TraceOptions opt;
  for (auto _ : state) benchmark::DoNotOptimize(trace_set(L, opt));
}
BENCHMARK(BM_TraceSetTatePath)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
