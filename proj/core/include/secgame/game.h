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

#ifndef SECGAME_GAME_H_
#define SECGAME_GAME_H_

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace secgame {

// Payoffs live on the 0-100 percent scale throughout the library.
inline constexpr double kPercentScale = 100.0;

// Tie tolerance for best responses and strategy purity, percent scale.
inline constexpr double kTieTolerance = 1e-9;

// Probability vector over one player's actions.
class MixedStrategy {
 public:
  MixedStrategy() = default;
  // Throws InvalidInputError unless entries are finite, non-negative and sum
  // to 1 within 1e-9.
  explicit MixedStrategy(std::vector<double> probs);

  static MixedStrategy Pure(std::size_t size, std::size_t action);
  static MixedStrategy Uniform(std::size_t size);
  // Clips tiny negatives and renormalizes; for solver output.
  static MixedStrategy FromWeights(std::span<const double> weights);

  std::size_t size() const { return probs_.size(); }
  double operator[](std::size_t i) const { return probs_[i]; }
  std::span<const double> probs() const { return probs_; }

  // Index of the single action with probability 1, or size() if mixed.
  std::size_t PureAction() const;
  bool IsPure() const { return PureAction() != size(); }
  std::vector<std::size_t> Support(double tol = kTieTolerance) const;

 private:
  std::vector<double> probs_;
};

// Attacker-payoff matrix of a two-player zero-sum game. Rows are attacker
// actions, columns defender actions. The defender's utility is the percent
// complement (100 - payoff) and is never stored.
class ZeroSumGame {
 public:
  // Throws InvalidInputError on empty axes, ragged rows, non-finite entries or
  // duplicate labels.
  ZeroSumGame(std::vector<std::string> row_labels,
              std::vector<std::string> col_labels,
              std::vector<std::vector<double>> payoff);

  // Unlabeled game; rows are named r0, r1, ... and columns c0, c1, ...
  static ZeroSumGame FromMatrix(std::vector<std::vector<double>> payoff);

  std::size_t rows() const { return row_labels_.size(); }
  std::size_t cols() const { return col_labels_.size(); }
  double operator()(std::size_t i, std::size_t j) const {
    return payoff_[i * cols() + j];
  }
  double attacker_payoff(std::size_t i, std::size_t j) const {
    return (*this)(i, j);
  }
  double defender_payoff(std::size_t i, std::size_t j) const {
    return kPercentScale - (*this)(i, j);
  }

  const std::vector<std::string>& row_labels() const { return row_labels_; }
  const std::vector<std::string>& col_labels() const { return col_labels_; }
  std::size_t RowIndex(std::string_view label) const;  // rows() if absent
  std::size_t ColIndex(std::string_view label) const;  // cols() if absent

  double MinEntry() const;
  double MaxEntry() const;

  // a * payoff + b, labels kept.
  ZeroSumGame Affine(double a, double b) const;
  ZeroSumGame SelectRows(std::span<const std::size_t> rows) const;
  ZeroSumGame SelectCols(std::span<const std::size_t> cols) const;
  // Swaps roles: the result's rows are this game's columns and its payoffs
  // are negated, so the new row player is again the maximizer.
  ZeroSumGame NegatedTranspose() const;

  // (payoff * y)_i for every row.
  std::vector<double> RowPayoffs(const MixedStrategy& y) const;
  // (x^T payoff)_j for every column.
  std::vector<double> ColPayoffs(const MixedStrategy& x) const;

  friend bool operator==(const ZeroSumGame&, const ZeroSumGame&) = default;

 private:
  std::vector<std::string> row_labels_;
  std::vector<std::string> col_labels_;
  std::vector<double> payoff_;  // row-major
};

enum class SolutionKind { kPure, kMixed };

std::string_view ToString(SolutionKind kind);

// One equilibrium strategy pair with its value and the solver that found it.
struct EquilibriumSolution {
  MixedStrategy attacker;
  MixedStrategy defender;
  double value = 0.0;
  SolutionKind kind = SolutionKind::kMixed;
  std::string method;
};

// Builds an EquilibriumSolution whose value and kind are derived from the
// strategies, so both invariants hold by construction.
EquilibriumSolution MakeEquilibrium(const ZeroSumGame& game,
                                    MixedStrategy attacker,
                                    MixedStrategy defender,
                                    std::string method);

// sum_ij x_i * payoff_ij * y_j. Throws InvalidInputError on size mismatch.
double ExpectedPayoff(const ZeroSumGame& game, const MixedStrategy& x,
                      const MixedStrategy& y);

// All rows maximizing payoff * y (within kTieTolerance), ascending.
std::vector<std::size_t> BestResponseRows(const ZeroSumGame& game,
                                          const MixedStrategy& y);

// All columns minimizing x^T payoff (within kTieTolerance), ascending.
std::vector<std::size_t> BestResponseCols(const ZeroSumGame& game,
                                          const MixedStrategy& x);

struct PrunedGame {
  ZeroSumGame game;
  std::vector<std::size_t> kept_rows;     // indices into the original game
  std::vector<std::size_t> removed_rows;  // ascending
};

// Iteratively removes rows strictly dominated (every column) by a surviving
// row. Strictly dominated rows carry no weight in any equilibrium, so the
// game value is unchanged.
PrunedGame PruneStrictlyDominatedRows(const ZeroSumGame& game);

}  // namespace secgame

#endif  // SECGAME_GAME_H_
