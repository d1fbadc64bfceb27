// Copyright 2026 The randmax Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include <benchmark/benchmark.h>

#include <vector>

#include "randmax/extremal_proc.hpp"
#include "randmax/lt_families.hpp"
#include "randmax/nmid_compose.hpp"
#include "randmax/rng.hpp"

namespace {

using namespace randmax;

void BM_LaplaceEval(benchmark::State& state) {
  const LaplaceFamily family = state.range(0) == 0   ? LaplaceFamily::geometric()
                               : state.range(0) == 1 ? LaplaceFamily::mittag_leffler(0.5)
                                                     : LaplaceFamily::degenerate();
  double s = 0.1;
  for (auto _ : state) {
    benchmark::DoNotOptimize(family.laplace(s));
    s = s < 10.0 ? s + 0.01 : 0.1;
  }
  state.SetLabel(family.name());
}
BENCHMARK(BM_LaplaceEval)->Arg(0)->Arg(1)->Arg(2);

void BM_PositiveStable(benchmark::State& state) {
  Stream rng(1);
  for (auto _ : state) benchmark::DoNotOptimize(sample_positive_stable(0.5, rng));
}
BENCHMARK(BM_PositiveStable);

void BM_MixtureCdf(benchmark::State& state) {
  const NMaxStableLaw law(LaplaceFamily::geometric(),
                          MaxStableLaw::univariate(Marginal::frechet(1.0)));
  const double x = 1.5;
  const auto nodes = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(mixture_cdf(law, std::span<const double>(&x, 1), nodes));
  }
}
BENCHMARK(BM_MixtureCdf)->Arg(64)->Arg(256)->Arg(1024);

void BM_RandomMax(benchmark::State& state) {
  const CountScheme scheme(LaplaceFamily::geometric(), 1.0 / static_cast<double>(state.range(0)));
  const ProductBase base(BaseDistribution::pareto(1.0));
  Stream rng(2);
  double out = 0.0;
  for (auto _ : state) {
    sample_random_max(scheme, base, rng, std::span<double>(&out, 1));
    benchmark::DoNotOptimize(out);
  }
}
BENCHMARK(BM_RandomMax)->Arg(10)->Arg(100)->Arg(1000);

void BM_RandomMaxBatch(benchmark::State& state) {
  const CountScheme scheme(LaplaceFamily::geometric(), 0.01);
  const ProductBase base(BaseDistribution::pareto(1.0));
  const auto threads = static_cast<unsigned>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(sample_random_max_batch(scheme, base, 1 << 16, 3, threads));
  }
}
BENCHMARK(BM_RandomMaxBatch)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond);

void BM_ExtremalPath(benchmark::State& state) {
  const auto law = MaxStableLaw::univariate(Marginal::frechet(1.0));
  const double floor = default_floor(law, 1.0);
  Stream rng(4);
  for (auto _ : state) benchmark::DoNotOptimize(simulate_path(law, 1.0, floor, rng));
}
BENCHMARK(BM_ExtremalPath);

}  // namespace

BENCHMARK_MAIN();
