#include <random>

#include <benchmark/benchmark.h>

#include "breuil/adjoints.hpp"
#include "breuil/duality.hpp"
#include "breuil/fiber_lattice.hpp"
#include "breuil/hom.hpp"
#include "breuil/simples.hpp"

using namespace breuil;

namespace {

RingParams params(std::uint32_t p, int f, int e, int r) { return RingParams::make(FiniteField::make(p, f), e, r); }

// Sum of rank one standard objects S(0) + ... + S(r), rank r + 1.
Object standard_sum(const RingParams& P, int copies) {
  Object acc = standard_object(P, 0);
  for (int i = 1; i < copies; ++i) acc = direct_sum(acc, standard_object(P, i % (P.r + 1)));
  return acc;
}

}  // namespace

static void BM_HomBasis(benchmark::State& state) {
  auto P = params(5, 1, static_cast<int>(state.range(0)), 2);
  auto X = standard_sum(P, static_cast<int>(state.range(1)));
  for (auto _ : state) benchmark::DoNotOptimize(hom_basis(X, X).dim());
  state.SetLabel("e=" + std::to_string(state.range(0)) + " rank=" + std::to_string(state.range(1)));
}
BENCHMARK(BM_HomBasis)->Args({1, 1})->Args({1, 3})->Args({2, 3})->Args({2, 4})->Unit(benchmark::kMillisecond);

static void BM_Dualize(benchmark::State& state) {
  auto P = params(5, 2, 2, 3);
  auto X = standard_sum(P, static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(dualize(X));
}
BENCHMARK(BM_Dualize)->Arg(1)->Arg(3)->Unit(benchmark::kMicrosecond);

static void BM_GenClosure(benchmark::State& state) {
  auto P = params(3, 1, 2, 1);
  auto X = standard_sum(P, static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(gen_closure(X).steps());
}
BENCHMARK(BM_GenClosure)->Arg(1)->Arg(4)->Unit(benchmark::kMicrosecond);

static void BM_IdentifySimple(benchmark::State& state) {
  auto P = params(3, 4, 2, 1);
  auto cls = canonicalize_digits(3, {0, 1, 1, 0}, 1);
  auto X = build_simple(cls, P);
  for (auto _ : state) benchmark::DoNotOptimize(identify_simple(X).match.has_value());
}
BENCHMARK(BM_IdentifySimple)->Unit(benchmark::kMillisecond);

static void BM_LatticeEnumeration(benchmark::State& state) {
  auto P = params(3, 1, 2, 1);
  auto m = build_simple(canonicalize_digits(3, {1}, 1), P);
  auto X = direct_sum(m, m);
  for (auto _ : state) benchmark::DoNotOptimize(generated_substructures(*X).size());
}
BENCHMARK(BM_LatticeEnumeration)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
