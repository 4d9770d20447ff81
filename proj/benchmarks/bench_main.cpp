// Copyright 2026 The mixkit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <benchmark/benchmark.h>

#include <numeric>
#include <random>

#include "mixkit/bent.hpp"
#include "mixkit/cyclo.hpp"
#include "mixkit/mixing.hpp"
#include "mixkit/search.hpp"
#include "mixkit/spectrum.hpp"
#include "mixkit/timefinder.hpp"

namespace {

using namespace mixkit;

// Random sums of N-th roots of unity with `terms` summands.
void BM_CycIntIsZero(benchmark::State& state) {
  const auto n = state.range(0);
  std::mt19937_64 rng(7);
  std::vector<CycInt> values;
  for (int i = 0; i < 64; ++i) {
    CycInt z(n);
    for (int k = 0; k < 256; ++k) z.add_root(static_cast<std::int64_t>(rng() % n));
    values.push_back(z);
  }
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(is_zero(values[i++ % values.size()]));
  }
}
BENCHMARK(BM_CycIntIsZero)->Arg(8)->Arg(72)->Arg(210)->Arg(1024);

void BM_Wht(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  std::mt19937_64 rng(11);
  std::vector<std::uint8_t> t(std::size_t{1} << n);
  for (auto& b : t) b = rng() & 1;
  const BooleanFunction f(n, t);
  for (auto _ : state) benchmark::DoNotOptimize(wht(f));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(t.size()));
}
BENCHMARK(BM_Wht)->DenseRange(8, 20, 4);

void BM_ExactMixing(benchmark::State& state) {
  const int k = static_cast<int>(state.range(0));
  std::vector<std::uint32_t> perm(std::size_t{1} << k);
  std::iota(perm.begin(), perm.end(), 0u);
  const BooleanFunction f = maiorana_mcfarland(k, perm, BooleanFunction::zero(k));
  const SpectrumTable t = eigenvalues(support(f));
  const RationalTime time(1, std::int64_t{1} << (k + 1));
  for (auto _ : state) benchmark::DoNotOptimize(is_uniform_mixing(t, time));
}
BENCHMARK(BM_ExactMixing)->DenseRange(2, 5)->Unit(benchmark::kMillisecond);

void BM_CandidateTimes(benchmark::State& state) {
  const SpectrumTable t = eigenvalues(parse_connection_set("orbits: (1,0); (0,1)", GroupSpec({5, 3})));
  for (auto _ : state) benchmark::DoNotOptimize(candidate_times(t));
}
BENCHMARK(BM_CandidateTimes)->Unit(benchmark::kMicrosecond);

void BM_Search(benchmark::State& state) {
  const GroupSpec g = state.range(0) == 0 ? GroupSpec({2, 2, 2, 2}) : GroupSpec({4, 4});
  SearchOptions options;
  options.threads = 1;
  for (auto _ : state) benchmark::DoNotOptimize(exhaustive_search(g, options));
}
BENCHMARK(BM_Search)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
