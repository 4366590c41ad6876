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

#ifndef SECGAME_MINIMAX_H_
#define SECGAME_MINIMAX_H_

#include <cstddef>

#include "secgame/game.h"

namespace secgame {

enum class SolveStatus { kOptimal, kNumericallyDegenerate };

// Slack allowed on the reported guarantees, percent scale.
inline constexpr double kGuaranteeSlack = 1e-7;

// Pivot cap for the simplex; far above what 20x20 games need.
inline constexpr std::size_t kMaxPivots = 10000;

struct MinimaxResult {
  double value = 0.0;
  MixedStrategy row_strategy;
  MixedStrategy col_strategy;
  std::size_t iterations = 0;
  SolveStatus status = SolveStatus::kOptimal;
  // Guarantees actually achieved by the strategies:
  //   lower_bound = min_j (x^T A)_j,  upper_bound = max_i (A y)_i.
  // They bracket the game value; for kOptimal they agree within
  // kGuaranteeSlack.
  double lower_bound = 0.0;
  double upper_bound = 0.0;
};

// Solves the zero-sum game by primal simplex with Bland's rule on
//
//   max sum(w)  s.t.  (A - s) w <= 1,  w >= 0
//
// where the shift s makes every entry strictly positive. The column strategy
// is w / sum(w), the row strategy comes from the optimal duals, and the value
// is 1 / sum(w) + s. Output is deterministic for identical input.
MinimaxResult SolveMinimax(const ZeroSumGame& game);

// Closed-form solution of a 2x2 game: the pure saddle point if one exists,
// else the unique interior equilibrium. A constant matrix returns uniform
// strategies. Throws InvalidInputError unless the game is 2x2.
MinimaxResult Solve2x2ClosedForm(const ZeroSumGame& game);

EquilibriumSolution ToEquilibrium(const ZeroSumGame& game,
                                  const MinimaxResult& result,
                                  std::string method);

}  // namespace secgame

#endif  // SECGAME_MINIMAX_H_
