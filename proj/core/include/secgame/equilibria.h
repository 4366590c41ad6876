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

#ifndef SECGAME_EQUILIBRIA_H_
#define SECGAME_EQUILIBRIA_H_

#include <cstddef>
#include <cstdint>
#include <vector>

#include "secgame/game.h"

namespace secgame {

// Largest axis accepted by EnumerateEquilibria. The work grows like
// C(m+n, m), so the practical limit is far smaller for square games.
inline constexpr std::size_t kMaxEnumerationAxis = 20;

// Every extreme Nash equilibrium of the game. Each player's extreme optimal
// strategies are found by solving one square indifference system per
// (support, tight-set) pair of equal size and keeping the feasible
// solutions; the result is their cross product. Strictly dominated actions
// are removed first. Ordered by attacker strategy, then defender strategy,
// each by descending probability vector.
//
// Throws InvalidInputError if either axis exceeds kMaxEnumerationAxis.
std::vector<EquilibriumSolution> EnumerateEquilibria(const ZeroSumGame& game);

// Defender (leader) commits to a pure column; attacker best-responds.
struct StackelbergSolution {
  std::size_t committed_col = 0;
  std::vector<std::size_t> follower_rows;  // all attacker best responses
  double value = 0.0;                      // attacker payoff
  std::vector<std::size_t> leader_ties;    // all columns attaining `value`
};

// committed_col = argmin_j max_i payoff(i, j), lowest index on ties.
StackelbergSolution SolveStackelbergPure(const ZeroSumGame& game);

// Stackelberg value minus minimax value. Mathematically >= 0; may be a hair
// negative from floating point.
double TransparencyCost(const ZeroSumGame& game);

struct FictitiousPlayTrace {
  struct Sample {
    std::size_t iteration = 0;
    double value = 0.0;
  };

  std::size_t iterations = 0;
  MixedStrategy empirical_attacker;
  MixedStrategy empirical_defender;
  // Expected payoff of the two empirical mixtures.
  double empirical_value = 0.0;
  // max_i (A ybar)_i and min_j (xbar^T A)_j; they bracket the game value.
  double upper_bound = 0.0;
  double lower_bound = 0.0;
  std::vector<Sample> value_history;
};

// Simultaneous fictitious play starting from row 0 / column 0. Each step both
// players best-respond to the opponent's empirical mixture; ties are broken
// uniformly at random from a generator seeded with `seed`.
//
// Throws InvalidInputError if iterations == 0.
FictitiousPlayTrace FictitiousPlay(const ZeroSumGame& game,
                                   std::size_t iterations, std::uint64_t seed);

}  // namespace secgame

#endif  // SECGAME_EQUILIBRIA_H_
