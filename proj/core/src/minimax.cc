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

#include "secgame/minimax.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>
#include <vector>

#include "secgame/errors.h"

namespace secgame {
namespace {

constexpr double kPivotEpsilon = 1e-12;

// Dense simplex tableau for  max 1^T w  s.t.  B w <= 1, w >= 0  with B > 0.
// Columns [0, n) are w, [n, n+m) are slacks, column n+m is the RHS. The last
// row holds the objective (z - 1^T w = 0).
class Tableau {
 public:
  Tableau(const ZeroSumGame& game, double shift)
      : m_(game.rows()), n_(game.cols()), width_(n_ + m_ + 1),
        cells_((m_ + 1) * width_, 0.0), basis_(m_) {
    for (std::size_t i = 0; i < m_; ++i) {
      for (std::size_t j = 0; j < n_; ++j) at(i, j) = game(i, j) - shift;
      at(i, n_ + i) = 1.0;
      at(i, rhs()) = 1.0;
      basis_[i] = n_ + i;
    }
    for (std::size_t j = 0; j < n_; ++j) at(m_, j) = -1.0;
  }

  // Runs Bland's rule until optimal or the pivot cap. Returns pivot count and
  // whether optimality was reached.
  std::pair<std::size_t, bool> Run() {
    std::size_t pivots = 0;
    while (true) {
      const std::size_t entering = EnteringColumn();
      if (entering == kNone) return {pivots, true};
      if (pivots == kMaxPivots) return {pivots, false};
      const std::size_t leaving = LeavingRow(entering);
      // B > 0 keeps the problem bounded, so a ratio row always exists.
      if (leaving == kNone) return {pivots, false};
      Pivot(leaving, entering);
      ++pivots;
    }
  }

  std::vector<double> PrimalWeights() const {
    std::vector<double> w(n_, 0.0);
    for (std::size_t i = 0; i < m_; ++i) {
      if (basis_[i] < n_) w[basis_[i]] = at(i, rhs());
    }
    return w;
  }

  // Optimal duals are the objective-row coefficients of the slack columns.
  std::vector<double> DualWeights() const {
    std::vector<double> u(m_);
    for (std::size_t i = 0; i < m_; ++i) u[i] = at(m_, n_ + i);
    return u;
  }

  double Objective() const { return at(m_, rhs()); }

 private:
  static constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();

  std::size_t rhs() const { return width_ - 1; }
  double& at(std::size_t r, std::size_t c) { return cells_[r * width_ + c]; }
  double at(std::size_t r, std::size_t c) const { return cells_[r * width_ + c]; }

  std::size_t EnteringColumn() const {
    for (std::size_t c = 0; c + 1 < width_; ++c) {
      if (at(m_, c) < -kPivotEpsilon) return c;
    }
    return kNone;
  }

  std::size_t LeavingRow(std::size_t entering) const {
    std::size_t best = kNone;
    double best_ratio = 0.0;
    for (std::size_t r = 0; r < m_; ++r) {
      const double a = at(r, entering);
      if (a <= kPivotEpsilon) continue;
      const double ratio = at(r, rhs()) / a;
      if (best == kNone || ratio < best_ratio ||
          (ratio == best_ratio && basis_[r] < basis_[best])) {
        best = r;
        best_ratio = ratio;
      }
    }
    return best;
  }

  void Pivot(std::size_t row, std::size_t col) {
    const double p = at(row, col);
    for (std::size_t c = 0; c < width_; ++c) at(row, c) /= p;
    at(row, col) = 1.0;
    for (std::size_t r = 0; r <= m_; ++r) {
      if (r == row) continue;
      const double f = at(r, col);
      if (f == 0.0) continue;
      for (std::size_t c = 0; c < width_; ++c) at(r, c) -= f * at(row, c);
      at(r, col) = 0.0;
    }
    basis_[row] = col;
  }

  std::size_t m_;
  std::size_t n_;
  std::size_t width_;
  std::vector<double> cells_;
  std::vector<std::size_t> basis_;
};

MixedStrategy StrategyOrUniform(const std::vector<double>& weights) {
  double sum = 0.0;
  for (double w : weights) sum += std::max(w, 0.0);
  if (!(sum > 0.0)) return MixedStrategy::Uniform(weights.size());
  return MixedStrategy::FromWeights(weights);
}

void FillBounds(const ZeroSumGame& game, MinimaxResult& result) {
  const auto col_payoffs = game.ColPayoffs(result.row_strategy);
  const auto row_payoffs = game.RowPayoffs(result.col_strategy);
  result.lower_bound = *std::min_element(col_payoffs.begin(), col_payoffs.end());
  result.upper_bound = *std::max_element(row_payoffs.begin(), row_payoffs.end());
}

// The entry at a pure saddle point, if the game has one: there the value is
// known exactly and need not carry the simplex's rounding.
std::optional<double> PureSaddleValue(const ZeroSumGame& game) {
  double maximin = -std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < game.rows(); ++i) {
    double row_min = std::numeric_limits<double>::infinity();
    for (std::size_t j = 0; j < game.cols(); ++j) row_min = std::min(row_min, game(i, j));
    maximin = std::max(maximin, row_min);
  }
  double minimax = std::numeric_limits<double>::infinity();
  for (std::size_t j = 0; j < game.cols(); ++j) {
    double col_max = -std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < game.rows(); ++i) col_max = std::max(col_max, game(i, j));
    minimax = std::min(minimax, col_max);
  }
  if (maximin == minimax) return maximin;
  return std::nullopt;
}

}  // namespace

MinimaxResult SolveMinimax(const ZeroSumGame& game) {
  // Shift so every entry is at least 1.
  const double shift = game.MinEntry() - 1.0;
  Tableau tableau(game, shift);
  const auto [pivots, optimal] = tableau.Run();

  MinimaxResult result;
  result.iterations = pivots;
  result.col_strategy = StrategyOrUniform(tableau.PrimalWeights());
  result.row_strategy = StrategyOrUniform(tableau.DualWeights());
  FillBounds(game, result);

  const double total = tableau.Objective();
  if (optimal && total > 0.0) {
    result.value = PureSaddleValue(game).value_or(1.0 / total + shift);
    result.status = result.upper_bound - result.lower_bound <= kGuaranteeSlack
                        ? SolveStatus::kOptimal
                        : SolveStatus::kNumericallyDegenerate;
  } else {
    result.value = 0.5 * (result.lower_bound + result.upper_bound);
    result.status = SolveStatus::kNumericallyDegenerate;
  }
  return result;
}

MinimaxResult Solve2x2ClosedForm(const ZeroSumGame& game) {
  if (game.rows() != 2 || game.cols() != 2) {
    throw InvalidInputError("closed-form solver requires a 2x2 game");
  }
  const double a11 = game(0, 0), a12 = game(0, 1);
  const double a21 = game(1, 0), a22 = game(1, 1);

  MinimaxResult result;
  if (game.MaxEntry() - game.MinEntry() <= kTieTolerance) {
    result.value = a11;
    result.row_strategy = MixedStrategy::Uniform(2);
    result.col_strategy = MixedStrategy::Uniform(2);
    result.lower_bound = result.upper_bound = a11;
    return result;
  }

  const double row0_floor = std::min(a11, a12);
  const double row1_floor = std::min(a21, a22);
  const double col0_ceiling = std::max(a11, a21);
  const double col1_ceiling = std::max(a12, a22);
  const double maximin = std::max(row0_floor, row1_floor);
  const double minimax = std::min(col0_ceiling, col1_ceiling);

  if (minimax - maximin <= kTieTolerance) {
    const std::size_t row = row0_floor >= maximin ? 0 : 1;
    const std::size_t col = col0_ceiling <= minimax ? 0 : 1;
    result.row_strategy = MixedStrategy::Pure(2, row);
    result.col_strategy = MixedStrategy::Pure(2, col);
    result.value = game(row, col);
  } else {
    // No saddle point implies D != 0 and an interior equilibrium.
    const double d = a11 + a22 - a12 - a21;
    const double x1 = (a22 - a21) / d;
    const double y1 = (a22 - a12) / d;
    result.row_strategy = MixedStrategy::FromWeights(std::vector{x1, 1.0 - x1});
    result.col_strategy = MixedStrategy::FromWeights(std::vector{y1, 1.0 - y1});
    result.value = (a11 * a22 - a12 * a21) / d;
  }
  FillBounds(game, result);
  return result;
}

EquilibriumSolution ToEquilibrium(const ZeroSumGame& game,
                                  const MinimaxResult& result,
                                  std::string method) {
  return MakeEquilibrium(game, result.row_strategy, result.col_strategy,
                         std::move(method));
}

}  // namespace secgame
