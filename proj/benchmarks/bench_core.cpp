#include <benchmark/benchmark.h>

#include "hopfcyc/oracles.hpp"
#include "hopfcyc/smash.hpp"

using namespace hopfcyc;

namespace {

const Field Q = Field::rational();

void BM_CoinvariantChains(benchmark::State& state) {
  HopfAlgebra s = sweedler_algebra(Q);
  SparseMatrix delta = covector(Q, {Scalar::one(Q), Scalar::from_int(Q, -1), Scalar::zero(Q), Scalar::zero(Q)});
  HopfTriple t = self_triple(s, character_module(s, delta, "k_delta"), s.unit);
  for (auto _ : state) benchmark::DoNotOptimize(coinvariant_chain_module(t, static_cast<int>(state.range(0))));
}
BENCHMARK(BM_CoinvariantChains)->DenseRange(2, 4)->Unit(benchmark::kMillisecond);

void BM_CyclicHomologyS3(benchmark::State& state) {
  HopfAlgebra s3 = symmetric_group_s3(Q);
  CyclicModuleData r = reduced_model(s3, trivial_module(s3), s3.unit, static_cast<int>(state.range(0)));
  certify(r);
  for (auto _ : state) benchmark::DoNotOptimize(cyclic_homology(r));
}
BENCHMARK(BM_CyclicHomologyS3)->DenseRange(2, 4)->Unit(benchmark::kMillisecond);

void BM_HopfHomologyF2(benchmark::State& state) {
  HopfAlgebra z2 = cyclic_group_algebra(2, Field::prime(2));
  for (auto _ : state) benchmark::DoNotOptimize(hopf_homology(z2, trivial_module(z2), static_cast<int>(state.range(0))));
}
BENCHMARK(BM_HopfHomologyF2)->RangeMultiplier(2)->Range(4, 8)->Unit(benchmark::kMillisecond);

void BM_Cylindrical(benchmark::State& state) {
  HopfAlgebra z2 = cyclic_group_algebra(2, Q);
  SmashProduct a = build_smash(z2, dual_numbers_sign(z2));
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(build_cylindrical(a, trivial_module(z2), z2.unit, n, n));
}
BENCHMARK(BM_Cylindrical)->DenseRange(1, 2)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
