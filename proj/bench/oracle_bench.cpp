// Serial reference oracles against the OpenMP kernels on the same inputs.
// Thread count comes from OMP_NUM_THREADS.

#include <benchmark/benchmark.h>

#include <numeric>

#include "novikov/constructions.hpp"
#include "novikov/oracle.hpp"

using namespace novikov;

namespace {

const oracle::Budget kBudget{1024};

// GD(tF[t]/(t^5), t d/dt) over GF(p), dim 4
AlgebraTable gd_euler(std::uint32_t p) {
  const FieldSpec f = FieldSpec::prime(p);
  const AlgebraTable b = truncated_poly(5, false, f);
  std::vector<long> w(b.dim());
  std::iota(w.begin(), w.end(), 1L);
  return gd_construct(b, weighted_euler_derivation(b, w));
}

AlgebraTable mixed(std::uint32_t p) {
  const FieldSpec f = FieldSpec::prime(p);
  return direct_sum(running_example(f), truncated_poly(2, true, f));
}

AlgebraTable input(const benchmark::State& state) {
  const auto p = static_cast<std::uint32_t>(state.range(0));
  return state.range(1) == 0 ? gd_euler(p) : mixed(p);
}

void BM_Nilpotents_Serial(benchmark::State& state) {
  const AlgebraTable a = input(state);
  for (auto _ : state) benchmark::DoNotOptimize(oracle::reference::bruteforce_nilpotents(a, kBudget));
}

void BM_Nilpotents_Parallel(benchmark::State& state) {
  const AlgebraTable a = input(state);
  for (auto _ : state) benchmark::DoNotOptimize(oracle::bruteforce_nilpotents(a, kBudget));
}

void BM_TrivialIdeals_Serial(benchmark::State& state) {
  const AlgebraTable a = input(state);
  for (auto _ : state) benchmark::DoNotOptimize(oracle::reference::sum_of_trivial_ideals(a, kBudget));
}

void BM_TrivialIdeals_Parallel(benchmark::State& state) {
  const AlgebraTable a = input(state);
  for (auto _ : state) benchmark::DoNotOptimize(oracle::sum_of_trivial_ideals(a, kBudget));
}

void BM_DomainIntersection_Serial(benchmark::State& state) {
  const AlgebraTable a = input(state);
  for (auto _ : state)
    benchmark::DoNotOptimize(
        oracle::reference::quotient_intersection(a, oracle::QuotientKind::Domain, kBudget));
}

void BM_DomainIntersection_Parallel(benchmark::State& state) {
  const AlgebraTable a = input(state);
  for (auto _ : state)
    benchmark::DoNotOptimize(oracle::quotient_intersection(a, oracle::QuotientKind::Domain, kBudget));
}

// {p, algebra}: 0 = GD Euler, 1 = A2 + F[t]/(t^2)
void inputs(benchmark::internal::Benchmark* b) {
  b->Args({3, 0})->Args({5, 0})->Args({3, 1})->Args({5, 1})->Unit(benchmark::kMillisecond);
}

}  // namespace

BENCHMARK(BM_Nilpotents_Serial)->Apply(inputs);
BENCHMARK(BM_Nilpotents_Parallel)->Apply(inputs);
BENCHMARK(BM_TrivialIdeals_Serial)->Apply(inputs);
BENCHMARK(BM_TrivialIdeals_Parallel)->Apply(inputs);
BENCHMARK(BM_DomainIntersection_Serial)->Apply(inputs);
BENCHMARK(BM_DomainIntersection_Parallel)->Apply(inputs);

BENCHMARK_MAIN();
