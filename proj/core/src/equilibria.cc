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

#include "secgame/equilibria.h"

#include <algorithm>
#include <cmath>
#include <random>

#include <Eigen/Dense>
#include <fmt/format.h>

#include "secgame/errors.h"
#include "secgame/minimax.h"

namespace secgame {
namespace {

constexpr double kFeasibilityTolerance = 1e-9;
constexpr double kDuplicateTolerance = 1e-9;

struct Vertex {
  std::vector<double> probs;
  double value;
};

// Calls fn(subset) for every k-subset of {0..n-1} in lexicographic order.
template <typename Fn>
void ForEachSubset(std::size_t n, std::size_t k, Fn&& fn) {
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    fn(idx);
    std::size_t pos = k;
    while (pos > 0 && idx[pos - 1] == n - k + pos - 1) --pos;
    if (pos == 0) return;
    ++idx[pos - 1];
    for (std::size_t i = pos; i < k; ++i) idx[i] = idx[i - 1] + 1;
  }
}

// Vertices of {(x, v) : x >= 0, sum(x) = 1, x^T A >= v} for the maximizing
// row player. Each vertex has a nonsingular square subsystem made of the
// simplex constraint, the zero rows outside a support I, and |I| tight
// columns S.
std::vector<Vertex> MaximizerVertices(const ZeroSumGame& game) {
  const std::size_t m = game.rows();
  const std::size_t n = game.cols();
  std::vector<Vertex> out;
  for (std::size_t k = 1; k <= std::min(m, n); ++k) {
    Eigen::MatrixXd system(k + 1, k + 1);
    Eigen::VectorXd rhs = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(k + 1));
    rhs(static_cast<Eigen::Index>(k)) = 1.0;
    ForEachSubset(m, k, [&](const std::vector<std::size_t>& support) {
      ForEachSubset(n, k, [&](const std::vector<std::size_t>& tight) {
        const auto ek = static_cast<Eigen::Index>(k);
        for (Eigen::Index r = 0; r < ek; ++r) {
          for (Eigen::Index c = 0; c < ek; ++c) {
            system(r, c) = game(support[static_cast<std::size_t>(c)],
                                tight[static_cast<std::size_t>(r)]);
          }
          system(r, ek) = -1.0;
        }
        for (Eigen::Index c = 0; c < ek; ++c) system(ek, c) = 1.0;
        system(ek, ek) = 0.0;

        Eigen::FullPivLU<Eigen::MatrixXd> lu(system);
        lu.setThreshold(1e-10);
        if (lu.rank() != ek + 1) return;
        const Eigen::VectorXd sol = lu.solve(rhs);

        std::vector<double> probs(m, 0.0);
        for (std::size_t c = 0; c < k; ++c) {
          const double p = sol(static_cast<Eigen::Index>(c));
          if (!std::isfinite(p) || p < -kFeasibilityTolerance) return;
          probs[support[c]] = std::max(p, 0.0);
        }
        const double v = sol(ek);
        for (std::size_t j = 0; j < n; ++j) {
          double payoff = 0.0;
          for (std::size_t i : support) payoff += probs[i] * game(i, j);
          if (payoff < v - kFeasibilityTolerance) return;
        }
        out.push_back({std::move(probs), v});
      });
    });
  }
  return out;
}

bool SameProbs(const std::vector<double>& a, const std::vector<double>& b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (std::abs(a[i] - b[i]) > kDuplicateTolerance) return false;
  }
  return true;
}

// Keeps the vertices attaining the best value, deduplicated and sorted by
// descending probability vector.
std::vector<std::vector<double>> OptimalVertices(std::vector<Vertex> vertices,
                                                 double* best_value) {
  double best = -std::numeric_limits<double>::infinity();
  for (const auto& v : vertices) best = std::max(best, v.value);
  *best_value = best;
  std::vector<std::vector<double>> out;
  for (auto& v : vertices) {
    if (v.value < best - kGuaranteeSlack) continue;
    const bool seen = std::any_of(out.begin(), out.end(), [&](const auto& o) {
      return SameProbs(o, v.probs);
    });
    if (!seen) out.push_back(std::move(v.probs));
  }
  std::sort(out.begin(), out.end(), std::greater<>());
  return out;
}

std::vector<double> Expand(const std::vector<double>& reduced,
                           const std::vector<std::size_t>& kept,
                           std::size_t full_size) {
  std::vector<double> full(full_size, 0.0);
  for (std::size_t i = 0; i < kept.size(); ++i) full[kept[i]] = reduced[i];
  return full;
}

}  // namespace

std::vector<EquilibriumSolution> EnumerateEquilibria(const ZeroSumGame& game) {
  if (game.rows() > kMaxEnumerationAxis || game.cols() > kMaxEnumerationAxis) {
    throw InvalidInputError(fmt::format(
        "enumeration supports at most {} actions per player, got {}x{}",
        kMaxEnumerationAxis, game.rows(), game.cols()));
  }

  // Iterated elimination of strictly dominated rows and columns.
  std::vector<std::size_t> rows(game.rows()), cols(game.cols());
  for (std::size_t i = 0; i < rows.size(); ++i) rows[i] = i;
  for (std::size_t j = 0; j < cols.size(); ++j) cols[j] = j;
  ZeroSumGame reduced = game;
  while (true) {
    PrunedGame by_row = PruneStrictlyDominatedRows(reduced);
    PrunedGame by_col = PruneStrictlyDominatedRows(by_row.game.NegatedTranspose());
    if (by_row.removed_rows.empty() && by_col.removed_rows.empty()) break;
    std::vector<std::size_t> next_rows, next_cols;
    for (std::size_t i : by_row.kept_rows) next_rows.push_back(rows[i]);
    for (std::size_t j : by_col.kept_rows) next_cols.push_back(cols[j]);
    rows = std::move(next_rows);
    cols = std::move(next_cols);
    reduced = by_col.game.NegatedTranspose();
  }

  double row_value = 0.0;
  double neg_col_value = 0.0;
  const auto xs = OptimalVertices(MaximizerVertices(reduced), &row_value);
  const auto ys = OptimalVertices(
      MaximizerVertices(reduced.NegatedTranspose()), &neg_col_value);
  if (std::abs(row_value + neg_col_value) > kGuaranteeSlack) {
    throw std::logic_error(fmt::format(
        "equilibrium enumeration lost duality: {} vs {}", row_value,
        -neg_col_value));
  }

  std::vector<EquilibriumSolution> out;
  out.reserve(xs.size() * ys.size());
  for (const auto& x : xs) {
    for (const auto& y : ys) {
      out.push_back(MakeEquilibrium(
          game, MixedStrategy::FromWeights(Expand(x, rows, game.rows())),
          MixedStrategy::FromWeights(Expand(y, cols, game.cols())),
          "support-enumeration"));
    }
  }
  return out;
}

StackelbergSolution SolveStackelbergPure(const ZeroSumGame& game) {
  std::vector<double> ceilings(game.cols());
  for (std::size_t j = 0; j < game.cols(); ++j) {
    double best = game(0, j);
    for (std::size_t i = 1; i < game.rows(); ++i) best = std::max(best, game(i, j));
    ceilings[j] = best;
  }
  StackelbergSolution s;
  s.committed_col = static_cast<std::size_t>(
      std::min_element(ceilings.begin(), ceilings.end()) - ceilings.begin());
  s.value = ceilings[s.committed_col];
  for (std::size_t j = 0; j < game.cols(); ++j) {
    if (ceilings[j] <= s.value + kTieTolerance) s.leader_ties.push_back(j);
  }
  for (std::size_t i = 0; i < game.rows(); ++i) {
    if (game(i, s.committed_col) >= s.value - kTieTolerance) {
      s.follower_rows.push_back(i);
    }
  }
  return s;
}

double TransparencyCost(const ZeroSumGame& game) {
  return SolveStackelbergPure(game).value - SolveMinimax(game).value;
}

namespace {

// Index of a maximal (sign = +1) or minimal (sign = -1) entry; ties within
// `tol` are broken uniformly at random.
std::size_t PickBest(const std::vector<double>& totals, double sign, double tol,
                     std::mt19937_64& rng, std::vector<std::size_t>& scratch) {
  double best = sign * totals[0];
  for (double t : totals) best = std::max(best, sign * t);
  scratch.clear();
  for (std::size_t i = 0; i < totals.size(); ++i) {
    if (sign * totals[i] >= best - tol) scratch.push_back(i);
  }
  if (scratch.size() == 1) return scratch.front();
  std::uniform_int_distribution<std::size_t> pick(0, scratch.size() - 1);
  return scratch[pick(rng)];
}

bool IsSampleIteration(std::size_t t) {
  // 1, 2, 5, 10, 20, 50, ...
  while (t % 10 == 0) t /= 10;
  return t == 1 || t == 2 || t == 5;
}

}  // namespace

FictitiousPlayTrace FictitiousPlay(const ZeroSumGame& game,
                                   std::size_t iterations, std::uint64_t seed) {
  if (iterations == 0) {
    throw InvalidInputError("fictitious play needs at least one iteration");
  }
  const std::size_t m = game.rows();
  const std::size_t n = game.cols();
  std::mt19937_64 rng(seed);
  std::vector<std::size_t> scratch;

  std::vector<double> row_counts(m, 0.0), col_counts(n, 0.0);
  // Cumulative payoff of each pure action against the opponent's history.
  std::vector<double> row_totals(m, 0.0), col_totals(n, 0.0);

  FictitiousPlayTrace trace;
  auto empirical_value = [&](double t) {
    double total = 0.0;
    for (std::size_t i = 0; i < m; ++i) total += row_counts[i] * row_totals[i];
    return total / (t * t);
  };

  std::size_t row = 0;
  std::size_t col = 0;
  for (std::size_t t = 1; t <= iterations; ++t) {
    if (t > 1) {
      const double tol = kTieTolerance * static_cast<double>(t - 1);
      const std::size_t next_row = PickBest(row_totals, 1.0, tol, rng, scratch);
      col = PickBest(col_totals, -1.0, tol, rng, scratch);
      row = next_row;
    }
    row_counts[row] += 1.0;
    col_counts[col] += 1.0;
    for (std::size_t i = 0; i < m; ++i) row_totals[i] += game(i, col);
    for (std::size_t j = 0; j < n; ++j) col_totals[j] += game(row, j);
    if (IsSampleIteration(t) || t == iterations) {
      trace.value_history.push_back({t, empirical_value(static_cast<double>(t))});
    }
  }

  const double total = static_cast<double>(iterations);
  trace.iterations = iterations;
  trace.empirical_attacker = MixedStrategy::FromWeights(row_counts);
  trace.empirical_defender = MixedStrategy::FromWeights(col_counts);
  trace.empirical_value = empirical_value(total);
  trace.upper_bound =
      *std::max_element(row_totals.begin(), row_totals.end()) / total;
  trace.lower_bound =
      *std::min_element(col_totals.begin(), col_totals.end()) / total;
  return trace;
}

}  // namespace secgame
