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

#include "secgame/analysis.h"

#include <algorithm>
#include <cmath>
#include <limits>

#include "secgame/errors.h"
#include "secgame/minimax.h"

namespace secgame {
namespace {

constexpr double kDegenerateDenominator = 1e-12;

bool HasMixedEquilibrium(const ZeroSumGame& game) {
  const auto equilibria = EnumerateEquilibria(game);
  return std::any_of(equilibria.begin(), equilibria.end(), [](const auto& e) {
    return e.kind == SolutionKind::kMixed;
  });
}

bool MixedOnAnyDataset(const ScenarioTable& table, const std::string& attack,
                       SurrogateClass defended_surrogate) {
  for (const auto& dataset : table.datasets()) {
    const auto& attacks = table.attacks(dataset);
    if (std::find(attacks.begin(), attacks.end(), attack) == attacks.end()) continue;
    if (HasMixedEquilibrium(
            BuildSurrogateGame(table, dataset, attack, defended_surrogate))) {
      return true;
    }
  }
  return false;
}

}  // namespace

double RoundHalfUp(double value, int digits) {
  const double scale = std::pow(10.0, digits);
  const double scaled = value * scale;
  // The nudge absorbs binary representation error at exact halves.
  return std::floor(scaled + 0.5 + 1e-9 * std::max(1.0, std::abs(scaled))) / scale;
}

TransparencyReport MakeTransparencyReport(const ScenarioTable& table,
                                          std::string_view dataset,
                                          SurrogateClass defended_surrogate) {
  TransparencyReport report;
  report.dataset = std::string(dataset);
  report.defended_surrogate = defended_surrogate;
  // Throws LookupError for unknown datasets before the loop.
  BuildAttackSurrogateGame(table, dataset, defended_surrogate);
  double nonzero_sum = 0.0;
  for (const auto& attack : table.attacks(dataset)) {
    const ZeroSumGame game =
        BuildSurrogateGame(table, dataset, attack, defended_surrogate);
    TransparencyEntry entry;
    entry.attack = attack;
    entry.nash_value = SolveMinimax(game).value;
    entry.stackelberg_value = SolveStackelbergPure(game).value;
    entry.cost = std::max(0.0, TransparencyCost(game));
    if (RoundHalfUp(entry.cost) > 0.0) {
      ++report.worse_off_count;
      nonzero_sum += entry.cost;
    }
    report.entries.push_back(std::move(entry));
  }
  if (report.worse_off_count > 0) {
    report.mean_nonzero_cost =
        nonzero_sum / static_cast<double>(report.worse_off_count);
  }
  return report;
}

MixingReport MakeMixingReport(const ScenarioTable& table, std::string_view dataset,
                              const AttackFilter& include,
                              SurrogateClass defended_surrogate) {
  MixingReport report;
  report.dataset = std::string(dataset);
  report.defended_surrogate = defended_surrogate;
  BuildAttackSurrogateGame(table, dataset, defended_surrogate);
  const auto& attacks = table.attacks(dataset);
  if (include.mode == AttackFilter::Mode::kNamed) {
    for (const auto& name : include.names) {
      if (std::find(attacks.begin(), attacks.end(), name) == attacks.end()) {
        throw LookupError("unknown attack '" + name + "' for dataset '" +
                              report.dataset + "'",
                          attacks);
      }
    }
  }
  for (const auto& attack : attacks) {
    bool keep = true;
    switch (include.mode) {
      case AttackFilter::Mode::kAll:
        break;
      case AttackFilter::Mode::kNamed:
        keep = std::find(include.names.begin(), include.names.end(), attack) !=
               include.names.end();
        break;
      case AttackFilter::Mode::kMixedOnAnyDataset:
        keep = MixedOnAnyDataset(table, attack, defended_surrogate);
        break;
    }
    if (!keep) continue;
    const ZeroSumGame game =
        BuildSurrogateGame(table, dataset, attack, defended_surrogate);
    const MinimaxResult solved = SolveMinimax(game);
    const EquilibriumSolution eq = ToEquilibrium(game, solved, "simplex");
    report.entries.push_back({attack, kPercentScale * eq.attacker[0],
                              kPercentScale * eq.defender[0], eq.kind});
  }
  return report;
}

UnderestimationReport MakeUnderestimationReport(const ScenarioTable& table,
                                                std::string_view dataset,
                                                SurrogateClass defended_surrogate) {
  UnderestimationReport report;
  report.dataset = std::string(dataset);
  report.v_attack_surrogate =
      SolveMinimax(BuildAttackSurrogateGame(table, dataset, defended_surrogate)).value;
  report.v_attack_only = SolveMinimax(BuildAttackGame(table, dataset)).value;
  report.baseline_defended =
      BaselineDegradation(table, dataset, TargetClass::kDefended);
  report.difference = report.v_attack_surrogate - report.v_attack_only;
  const double numerator = report.v_attack_surrogate - report.baseline_defended;
  const double denominator = report.v_attack_only - report.baseline_defended;
  if (std::abs(denominator) > kDegenerateDenominator) {
    report.factor = numerator / denominator;
  } else {
    // Attack game no better than the baseline: the ratio is 1 when the A&S
    // game is not either, unbounded otherwise.
    report.factor = std::abs(numerator) <= kDegenerateDenominator
                        ? 1.0
                        : std::numeric_limits<double>::infinity();
  }
  return report;
}

GameSummary SummarizeGame(ZeroSumGame game) {
  const MinimaxResult solved = SolveMinimax(game);
  GameSummary summary{game, ToEquilibrium(game, solved, "simplex"),
                      SolveStackelbergPure(game), 0.0};
  summary.transparency_cost =
      std::max(0.0, summary.stackelberg.value - solved.value);
  summary.game = std::move(game);
  return summary;
}

GameSummary MakeAttackSurrogateSummary(const ScenarioTable& table,
                                       std::string_view dataset,
                                       SurrogateClass defended_surrogate) {
  return SummarizeGame(BuildAttackSurrogateGame(table, dataset, defended_surrogate));
}

}  // namespace secgame
