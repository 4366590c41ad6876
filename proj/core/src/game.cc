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

#include "secgame/game.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <unordered_set>

#include <fmt/format.h>

#include "secgame/errors.h"

namespace secgame {
namespace {

constexpr double kProbabilitySumTolerance = 1e-9;

void CheckUnique(const std::vector<std::string>& labels, const char* axis) {
  std::unordered_set<std::string_view> seen;
  for (const auto& label : labels) {
    if (!seen.insert(label).second) {
      throw InvalidInputError(
          fmt::format("duplicate {} label '{}'", axis, label));
    }
  }
}

std::vector<std::string> DefaultLabels(char prefix, std::size_t n) {
  std::vector<std::string> labels;
  labels.reserve(n);
  for (std::size_t i = 0; i < n; ++i) labels.push_back(fmt::format("{}{}", prefix, i));
  return labels;
}

}  // namespace

MixedStrategy::MixedStrategy(std::vector<double> probs)
    : probs_(std::move(probs)) {
  if (probs_.empty()) throw InvalidInputError("empty mixed strategy");
  double sum = 0.0;
  for (double p : probs_) {
    if (!std::isfinite(p) || p < 0.0) {
      throw InvalidInputError(
          fmt::format("invalid probability {} in mixed strategy", p));
    }
    sum += p;
  }
  if (std::abs(sum - 1.0) > kProbabilitySumTolerance) {
    throw InvalidInputError(
        fmt::format("mixed strategy sums to {:.12g}, expected 1", sum));
  }
}

MixedStrategy MixedStrategy::Pure(std::size_t size, std::size_t action) {
  if (action >= size) throw InvalidInputError("pure action out of range");
  std::vector<double> probs(size, 0.0);
  probs[action] = 1.0;
  return MixedStrategy(std::move(probs));
}

MixedStrategy MixedStrategy::Uniform(std::size_t size) {
  if (size == 0) throw InvalidInputError("empty mixed strategy");
  return MixedStrategy(std::vector<double>(size, 1.0 / static_cast<double>(size)));
}

MixedStrategy MixedStrategy::FromWeights(std::span<const double> weights) {
  std::vector<double> probs(weights.begin(), weights.end());
  double sum = 0.0;
  for (double& p : probs) {
    if (!std::isfinite(p)) throw InvalidInputError("non-finite weight");
    p = std::max(p, 0.0);
    sum += p;
  }
  if (!(sum > 0.0)) throw InvalidInputError("weights sum to zero");
  for (double& p : probs) p /= sum;
  // Snap values a rounding error away from 0 or 1 so purity checks are exact.
  for (double& p : probs) {
    if (p < 1e-15) p = 0.0;
  }
  sum = std::accumulate(probs.begin(), probs.end(), 0.0);
  for (double& p : probs) p /= sum;
  return MixedStrategy(std::move(probs));
}

std::size_t MixedStrategy::PureAction() const {
  for (std::size_t i = 0; i < probs_.size(); ++i) {
    if (std::abs(probs_[i] - 1.0) <= kTieTolerance) return i;
  }
  return probs_.size();
}

std::vector<std::size_t> MixedStrategy::Support(double tol) const {
  std::vector<std::size_t> support;
  for (std::size_t i = 0; i < probs_.size(); ++i) {
    if (probs_[i] > tol) support.push_back(i);
  }
  return support;
}

ZeroSumGame::ZeroSumGame(std::vector<std::string> row_labels,
                         std::vector<std::string> col_labels,
                         std::vector<std::vector<double>> payoff)
    : row_labels_(std::move(row_labels)), col_labels_(std::move(col_labels)) {
  if (row_labels_.empty() || col_labels_.empty()) {
    throw InvalidInputError("a game needs at least one row and one column");
  }
  if (payoff.size() != row_labels_.size()) {
    throw InvalidInputError(fmt::format("payoff has {} rows, expected {}",
                                        payoff.size(), row_labels_.size()));
  }
  CheckUnique(row_labels_, "row");
  CheckUnique(col_labels_, "column");
  payoff_.reserve(rows() * cols());
  for (std::size_t i = 0; i < payoff.size(); ++i) {
    if (payoff[i].size() != cols()) {
      throw InvalidInputError(fmt::format("payoff row {} has {} entries, expected {}",
                                          i, payoff[i].size(), cols()));
    }
    for (double v : payoff[i]) {
      if (!std::isfinite(v)) {
        throw InvalidInputError(fmt::format("non-finite payoff in row {}", i));
      }
      payoff_.push_back(v);
    }
  }
}

ZeroSumGame ZeroSumGame::FromMatrix(std::vector<std::vector<double>> payoff) {
  const std::size_t m = payoff.size();
  const std::size_t n = m == 0 ? 0 : payoff.front().size();
  return ZeroSumGame(DefaultLabels('r', m), DefaultLabels('c', n),
                     std::move(payoff));
}

std::size_t ZeroSumGame::RowIndex(std::string_view label) const {
  auto it = std::find(row_labels_.begin(), row_labels_.end(), label);
  return static_cast<std::size_t>(it - row_labels_.begin());
}

std::size_t ZeroSumGame::ColIndex(std::string_view label) const {
  auto it = std::find(col_labels_.begin(), col_labels_.end(), label);
  return static_cast<std::size_t>(it - col_labels_.begin());
}

double ZeroSumGame::MinEntry() const {
  return *std::min_element(payoff_.begin(), payoff_.end());
}

double ZeroSumGame::MaxEntry() const {
  return *std::max_element(payoff_.begin(), payoff_.end());
}

ZeroSumGame ZeroSumGame::Affine(double a, double b) const {
  ZeroSumGame out = *this;
  for (double& v : out.payoff_) v = a * v + b;
  return out;
}

ZeroSumGame ZeroSumGame::SelectRows(std::span<const std::size_t> rows) const {
  std::vector<std::string> labels;
  std::vector<std::vector<double>> payoff;
  for (std::size_t i : rows) {
    if (i >= this->rows()) throw InvalidInputError("row index out of range");
    labels.push_back(row_labels_[i]);
    payoff.emplace_back(payoff_.begin() + static_cast<std::ptrdiff_t>(i * cols()),
                        payoff_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols()));
  }
  return ZeroSumGame(std::move(labels), col_labels_, std::move(payoff));
}

ZeroSumGame ZeroSumGame::SelectCols(std::span<const std::size_t> cols) const {
  std::vector<std::string> labels;
  for (std::size_t j : cols) {
    if (j >= this->cols()) throw InvalidInputError("column index out of range");
    labels.push_back(col_labels_[j]);
  }
  std::vector<std::vector<double>> payoff(rows());
  for (std::size_t i = 0; i < rows(); ++i) {
    for (std::size_t j : cols) payoff[i].push_back((*this)(i, j));
  }
  return ZeroSumGame(row_labels_, std::move(labels), std::move(payoff));
}

ZeroSumGame ZeroSumGame::NegatedTranspose() const {
  std::vector<std::vector<double>> payoff(cols(), std::vector<double>(rows()));
  for (std::size_t i = 0; i < rows(); ++i) {
    for (std::size_t j = 0; j < cols(); ++j) payoff[j][i] = -(*this)(i, j);
  }
  return ZeroSumGame(col_labels_, row_labels_, std::move(payoff));
}

std::vector<double> ZeroSumGame::RowPayoffs(const MixedStrategy& y) const {
  if (y.size() != cols()) {
    throw InvalidInputError(fmt::format(
        "defender strategy has {} entries, game has {} columns", y.size(), cols()));
  }
  std::vector<double> out(rows(), 0.0);
  for (std::size_t i = 0; i < rows(); ++i) {
    for (std::size_t j = 0; j < cols(); ++j) out[i] += (*this)(i, j) * y[j];
  }
  return out;
}

std::vector<double> ZeroSumGame::ColPayoffs(const MixedStrategy& x) const {
  if (x.size() != rows()) {
    throw InvalidInputError(fmt::format(
        "attacker strategy has {} entries, game has {} rows", x.size(), rows()));
  }
  std::vector<double> out(cols(), 0.0);
  for (std::size_t i = 0; i < rows(); ++i) {
    for (std::size_t j = 0; j < cols(); ++j) out[j] += x[i] * (*this)(i, j);
  }
  return out;
}

std::string_view ToString(SolutionKind kind) {
  return kind == SolutionKind::kPure ? "pure" : "mixed";
}

EquilibriumSolution MakeEquilibrium(const ZeroSumGame& game,
                                    MixedStrategy attacker,
                                    MixedStrategy defender,
                                    std::string method) {
  EquilibriumSolution s;
  s.value = ExpectedPayoff(game, attacker, defender);
  s.kind = attacker.IsPure() && defender.IsPure() ? SolutionKind::kPure
                                                  : SolutionKind::kMixed;
  s.attacker = std::move(attacker);
  s.defender = std::move(defender);
  s.method = std::move(method);
  return s;
}

double ExpectedPayoff(const ZeroSumGame& game, const MixedStrategy& x,
                      const MixedStrategy& y) {
  const std::vector<double> row_payoffs = game.RowPayoffs(y);
  if (x.size() != game.rows()) {
    throw InvalidInputError(fmt::format(
        "attacker strategy has {} entries, game has {} rows", x.size(), game.rows()));
  }
  double total = 0.0;
  for (std::size_t i = 0; i < game.rows(); ++i) total += x[i] * row_payoffs[i];
  return total;
}

std::vector<std::size_t> BestResponseRows(const ZeroSumGame& game,
                                          const MixedStrategy& y) {
  const std::vector<double> payoffs = game.RowPayoffs(y);
  const double best = *std::max_element(payoffs.begin(), payoffs.end());
  std::vector<std::size_t> rows;
  for (std::size_t i = 0; i < payoffs.size(); ++i) {
    if (payoffs[i] >= best - kTieTolerance) rows.push_back(i);
  }
  return rows;
}

std::vector<std::size_t> BestResponseCols(const ZeroSumGame& game,
                                          const MixedStrategy& x) {
  const std::vector<double> payoffs = game.ColPayoffs(x);
  const double best = *std::min_element(payoffs.begin(), payoffs.end());
  std::vector<std::size_t> cols;
  for (std::size_t j = 0; j < payoffs.size(); ++j) {
    if (payoffs[j] <= best + kTieTolerance) cols.push_back(j);
  }
  return cols;
}

PrunedGame PruneStrictlyDominatedRows(const ZeroSumGame& game) {
  const std::size_t m = game.rows();
  const std::size_t n = game.cols();
  auto dominates = [&](std::size_t k, std::size_t i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (!(game(k, j) > game(i, j))) return false;
    }
    return true;
  };
  // Strict dominance is transitive, so a row dominated by anything is also
  // dominated by some undominated row; one pass suffices.
  PrunedGame out{game, {}, {}};
  for (std::size_t i = 0; i < m; ++i) {
    bool dominated = false;
    for (std::size_t k = 0; k < m && !dominated; ++k) {
      dominated = k != i && dominates(k, i);
    }
    (dominated ? out.removed_rows : out.kept_rows).push_back(i);
  }
  if (!out.removed_rows.empty()) out.game = game.SelectRows(out.kept_rows);
  return out;
}

}  // namespace secgame
