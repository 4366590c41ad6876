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

#ifndef SECGAME_ANALYSIS_H_
#define SECGAME_ANALYSIS_H_

#include <string>
#include <string_view>
#include <vector>

#include "secgame/equilibria.h"
#include "secgame/game.h"
#include "secgame/scenario.h"

namespace secgame {

inline constexpr std::string_view kTransparencyFormula =
    "cost = stackelberg_value - nash_value (clamped at 0)";
inline constexpr std::string_view kMixingFormula =
    "p_undefended = 100 * equilibrium probability of the undefended action";
inline constexpr std::string_view kUnderestimationFormula =
    "difference = v_attack_surrogate - v_attack_only; "
    "factor = (v_attack_surrogate - baseline_defended) / "
    "(v_attack_only - baseline_defended)";

// Half-up rounding to `digits` decimals, as printed in result tables.
double RoundHalfUp(double value, int digits = 2);

struct TransparencyEntry {
  std::string attack;
  double nash_value = 0.0;
  double stackelberg_value = 0.0;
  double cost = 0.0;  // clamped at 0
};

struct TransparencyReport {
  std::string dataset;
  SurrogateClass defended_surrogate = SurrogateClass::kMedianDef;
  std::vector<TransparencyEntry> entries;
  // Entries whose cost is nonzero after 2-decimal rounding.
  std::size_t worse_off_count = 0;
  // Mean unrounded cost over exactly those entries; 0 if there are none.
  double mean_nonzero_cost = 0.0;
};

TransparencyReport MakeTransparencyReport(
    const ScenarioTable& table, std::string_view dataset,
    SurrogateClass defended_surrogate = SurrogateClass::kMedianDef);

struct MixingEntry {
  std::string attack;
  double attacker_p_undefended = 0.0;  // percent
  double defender_p_undefended = 0.0;  // percent
  SolutionKind kind = SolutionKind::kPure;
};

struct MixingReport {
  std::string dataset;
  SurrogateClass defended_surrogate = SurrogateClass::kMedianDef;
  std::vector<MixingEntry> entries;
};

// Which attacks a MixingReport lists.
struct AttackFilter {
  enum class Mode {
    // Attacks whose Surrogate game has a mixed equilibrium on at least one
    // dataset of the table.
    kMixedOnAnyDataset,
    kAll,
    kNamed,
  };
  Mode mode = Mode::kMixedOnAnyDataset;
  std::vector<std::string> names;  // used by kNamed
};

MixingReport MakeMixingReport(
    const ScenarioTable& table, std::string_view dataset,
    const AttackFilter& include = {},
    SurrogateClass defended_surrogate = SurrogateClass::kMedianDef);

struct UnderestimationReport {
  std::string dataset;
  double v_attack_surrogate = 0.0;
  double v_attack_only = 0.0;
  double difference = 0.0;
  double factor = 0.0;
  double baseline_defended = 0.0;
};

UnderestimationReport MakeUnderestimationReport(
    const ScenarioTable& table, std::string_view dataset,
    SurrogateClass defended_surrogate = SurrogateClass::kMedianDef);

// Nash and Stackelberg solutions of a game, with labels.
struct GameSummary {
  ZeroSumGame game;
  EquilibriumSolution nash;
  StackelbergSolution stackelberg;
  double transparency_cost = 0.0;  // clamped at 0
};

GameSummary SummarizeGame(ZeroSumGame game);

GameSummary MakeAttackSurrogateSummary(
    const ScenarioTable& table, std::string_view dataset,
    SurrogateClass defended_surrogate = SurrogateClass::kMedianDef);

}  // namespace secgame

#endif  // SECGAME_ANALYSIS_H_
