#include <benchmark/benchmark.h>

#include <random>

#include "seqnorm/combinators.hpp"
#include "seqnorm/davis.hpp"
#include "seqnorm/expression.hpp"
#include "seqnorm/norm.hpp"
#include "seqnorm/tail.hpp"
#include "seqnorm/tsirelson.hpp"

namespace {

using namespace seqnorm;

FiniteVector random_vector(std::size_t support, std::uint64_t seed = 1) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> coef(-1.0, 1.0);
  std::vector<double> values(support);
  for (double& v : values) v = coef(rng);
  return FiniteVector::from_dense(values);
}

void BM_Day(benchmark::State& state) {
  const FiniteVector v = random_vector(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(eval_day(v));
}
BENCHMARK(BM_Day)->Range(8, 4096);

void BM_Tsirelson(benchmark::State& state) {
  const FiniteVector v = random_vector(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(eval_tsirelson(v));
}
BENCHMARK(BM_Tsirelson)->RangeMultiplier(2)->Range(4, 64);

void BM_DavisSupL1(benchmark::State& state) {
  const FiniteVector v = random_vector(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(davis_interpolation(NormDescriptor::sup(), NormDescriptor::l1(), 4.0, v));
  }
}
BENCHMARK(BM_DavisSupL1)->RangeMultiplier(4)->Range(4, 256);

void BM_DavisGeneral(benchmark::State& state) {
  const FiniteVector v = random_vector(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(davis_interpolation(NormDescriptor::lp(2), NormDescriptor::lorentz(), 3.0, v));
  }
}
BENCHMARK(BM_DavisGeneral)->RangeMultiplier(2)->Range(4, 32);

void BM_EvalTailed(benchmark::State& state) {
  const TailedVector h = hat_transform(random_vector(16));
  const Index m = static_cast<Index>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(eval_tailed(NormDescriptor::lp(2), h, m));
}
BENCHMARK(BM_EvalTailed)->RangeMultiplier(4)->Range(64, 65536);

void BM_Symmetric2R(benchmark::State& state) {
  const FiniteVector v = random_vector(12);
  const NormDescriptor n = parse_space("sym2R(dayAug(lp(2)))");
  for (auto _ : state) benchmark::DoNotOptimize(enclose(n, v));
}
BENCHMARK(BM_Symmetric2R);

void BM_YSpace(benchmark::State& state) {
  const FiniteVector v = random_vector(12);
  for (auto _ : state) {
    benchmark::DoNotOptimize(y_space_norm(NormDescriptor::sup(), NormDescriptor::l1(), NormDescriptor::tsirelson(),
                                          {}, v, static_cast<std::size_t>(state.range(0))));
  }
}
BENCHMARK(BM_YSpace)->Arg(8)->Arg(24);

void BM_SummedShiftedNorm(benchmark::State& state) {
  const FiniteVector v = random_vector(4);
  const EquivClassEnumeration en{static_cast<std::size_t>(state.range(0)), 0.5, 1e-300};
  for (auto _ : state) benchmark::DoNotOptimize(os_unconditional_2r(NormDescriptor::lp(2), en, v));
}
BENCHMARK(BM_SummedShiftedNorm)->DenseRange(1, 3);

}  // namespace

BENCHMARK_MAIN();
