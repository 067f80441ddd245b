#include <benchmark/benchmark.h>

#include <random>

#include "artinian/binomial.hpp"
#include "artinian/constructor.hpp"
#include "artinian/inverse_system.hpp"
#include "artinian/socle_bounds.hpp"

using namespace artinian;

static void BM_ThmABound(benchmark::State& state) {
  const auto d = make_socle(4, {0, 0, 0, 0, 22, 3, 0, 1});
  for (auto _ : state) benchmark::DoNotOptimize(thm_a_bound(d));
}
BENCHMARK(BM_ThmABound);

static void BM_Classify(benchmark::State& state) {
  const auto d = make_socle(3, {0, 0, 0, 8, 0, 1, 0, 0, 1});
  for (auto _ : state) benchmark::DoNotOptimize(classify(d));
}
BENCHMARK(BM_Classify);

static void BM_MacaulayGrowth(benchmark::State& state) {
  const Integer h = state.range(0);
  for (auto _ : state) benchmark::DoNotOptimize(macaulay_growth(h, 8));
}
BENCHMARK(BM_MacaulayGrowth)->Arg(100)->Arg(10000)->Arg(1000000);

// h-vector of one random form: rank work grows with ring_dim(r, d).
static void BM_HVectorRandomForm(benchmark::State& state) {
  const int r = static_cast<int>(state.range(0));
  const int d = static_cast<int>(state.range(1));
  std::mt19937_64 rng(1);
  const InverseSystemModule M(r, {{d, random_form(r, d, rng)}});
  for (auto _ : state) benchmark::DoNotOptimize(h_vector(M));
}
BENCHMARK(BM_HVectorRandomForm)->Args({3, 6})->Args({3, 9})->Args({4, 7})->Args({4, 9})->Unit(benchmark::kMillisecond);

static void BM_DerivativeSpaceDim(benchmark::State& state) {
  std::mt19937_64 rng(2);
  Form F(4, 7);
  for (const auto& L : random_linear_forms(4, 10, rng)) F += power_of_linear(L, 7);
  for (auto _ : state) benchmark::DoNotOptimize(derivative_space_dim({F}, 4));
}
BENCHMARK(BM_DerivativeSpaceDim)->Unit(benchmark::kMillisecond);

static void BM_CertifiedConstruct(benchmark::State& state) {
  const auto d = state.range(0) == 0 ? make_socle(3, {0, 0, 0, 0, 0, 3, 3, 1, 2})
                                     : make_socle(4, {0, 0, 0, 0, 4, 3, 0, 1});
  std::uint64_t seed = 0;
  for (auto _ : state) benchmark::DoNotOptimize(certified_construct(d, seed++));
}
BENCHMARK(BM_CertifiedConstruct)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
