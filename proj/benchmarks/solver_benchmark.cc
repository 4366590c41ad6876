// Copyright 2026 The secgame Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <random>
#include <vector>

#include <benchmark/benchmark.h>

#include "secgame/analysis.h"
#include "secgame/equilibria.h"
#include "secgame/minimax.h"
#include "secgame/scenario.h"

namespace secgame {
namespace {

ZeroSumGame RandomGame(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> dist(0.0, 100.0);
  std::vector<std::vector<double>> payoff(n, std::vector<double>(n));
  for (auto& row : payoff) {
    for (double& v : row) v = dist(rng);
  }
  return ZeroSumGame::FromMatrix(std::move(payoff));
}

const ScenarioTable& Bundled() {
  static const ScenarioTable table = LoadTable({SECGAME_BENCH_DATA_DIR});
  return table;
}

void BM_SolveMinimax(benchmark::State& state) {
  const ZeroSumGame game = RandomGame(static_cast<std::size_t>(state.range(0)), 1);
  for (auto _ : state) benchmark::DoNotOptimize(SolveMinimax(game).value);
}
BENCHMARK(BM_SolveMinimax)->RangeMultiplier(2)->Range(2, 64);

void BM_Solve2x2ClosedForm(benchmark::State& state) {
  const ZeroSumGame game = RandomGame(2, 2);
  for (auto _ : state) benchmark::DoNotOptimize(Solve2x2ClosedForm(game).value);
}
BENCHMARK(BM_Solve2x2ClosedForm);

void BM_EnumerateEquilibria(benchmark::State& state) {
  const ZeroSumGame game = RandomGame(static_cast<std::size_t>(state.range(0)), 3);
  for (auto _ : state) benchmark::DoNotOptimize(EnumerateEquilibria(game).size());
}
BENCHMARK(BM_EnumerateEquilibria)->DenseRange(2, 8, 2);

void BM_FictitiousPlay(benchmark::State& state) {
  const ZeroSumGame game = BuildAttackSurrogateGame(Bundled(), "imagenet");
  const auto iterations = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(FictitiousPlay(game, iterations, 0).empirical_value);
  state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations() * iterations));
}
BENCHMARK(BM_FictitiousPlay)->Arg(10000)->Arg(100000)->Unit(benchmark::kMillisecond);

void BM_TransparencyReport(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(MakeTransparencyReport(Bundled(), "imagenet").worse_off_count);
  }
}
BENCHMARK(BM_TransparencyReport);

void BM_MixingReport(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(MakeMixingReport(Bundled(), "cifar10").entries.size());
  }
}
BENCHMARK(BM_MixingReport);

void BM_UnderestimationReport(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(MakeUnderestimationReport(Bundled(), "cifar10").factor);
  }
}
BENCHMARK(BM_UnderestimationReport);

}  // namespace
}  // namespace secgame

BENCHMARK_MAIN();
