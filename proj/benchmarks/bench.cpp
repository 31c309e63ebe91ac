#include <random>

#include <benchmark/benchmark.h>

#include "kac/catalog.hpp"
#include "kac/census.hpp"
#include "kac/descent.hpp"
#include "kac/morphisms.hpp"

using namespace kac;

namespace {

ScalarDomain field(std::int64_t p) {
  return p == 0 ? ScalarDomain::rational() : ScalarDomain::prime_field(p);
}

void BM_Multiply(benchmark::State& state) {
  SuperAlgebra k = kac_k10(field(state.range(0)));
  std::mt19937_64 rng(1);
  auto random_vector = [&] {
    Vector v;
    for (std::size_t i = 0; i < k.dim(); ++i)
      v.emplace_back(k.domain(), static_cast<long>(rng() % 11) - 5);
    return v;
  };
  Vector x = random_vector(), y = random_vector();
  for (auto _ : state) benchmark::DoNotOptimize(k.multiply(x, y));
}
BENCHMARK(BM_Multiply)->Arg(0)->Arg(5);

void BM_JordanSuper(benchmark::State& state) {
  SuperAlgebra k = kac_k10(field(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(is_jordan_super(k));
}
BENCHMARK(BM_JordanSuper)->Arg(0)->Arg(5)->Unit(benchmark::kMillisecond);

void BM_IsSimple(benchmark::State& state) {
  SuperAlgebra k = kac_k10(field(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(is_simple(k));
}
BENCHMARK(BM_IsSimple)->Arg(3)->Arg(5)->Unit(benchmark::kMillisecond);

void BM_Derivations(benchmark::State& state) {
  SuperAlgebra k = kac_k10(field(0));
  for (auto _ : state) benchmark::DoNotOptimize(derivations(k, MapParity::Even));
}
BENCHMARK(BM_Derivations)->Unit(benchmark::kMillisecond);

void BM_Z2Census(benchmark::State& state) {
  SuperAlgebra a = state.range(0) ? kac_k10(field(3)) : k3xk3(field(3));
  for (auto _ : state) benchmark::DoNotOptimize(z2_census(a));
}
BENCHMARK(BM_Z2Census)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_EvenIdempotents(benchmark::State& state) {
  SuperAlgebra k = kac_k10(field(5));
  for (auto _ : state) benchmark::DoNotOptimize(idempotent_census(k, true));
}
BENCHMARK(BM_EvenIdempotents)->Unit(benchmark::kMillisecond);

void BM_Twist(benchmark::State& state) {
  ScalarDomain q = field(0);
  SuperAlgebra k = kac_k10(q);
  DescentDatum datum(tau_auto(k), QuadraticEtale(q, Scalar(q, -1)));
  for (auto _ : state) benchmark::DoNotOptimize(twist(datum));
}
BENCHMARK(BM_Twist)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
