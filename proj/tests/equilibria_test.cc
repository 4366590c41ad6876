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

#include <random>

#include <gtest/gtest.h>

#include "secgame/errors.h"
#include "secgame/minimax.h"
#include "test_util.h"

namespace secgame {
namespace {

const ZeroSumGame kCifarVni = ZeroSumGame::FromMatrix({{85.55, 15.68}, {29.82, 29.47}});
const ZeroSumGame kImagenetVni = ZeroSumGame::FromMatrix({{58.16, 30.01}, {34.84, 36.41}});

void ExpectNoProfitableDeviation(const ZeroSumGame& g, const EquilibriumSolution& e) {
  for (double v : g.RowPayoffs(e.defender)) EXPECT_LE(v, e.value + 1e-7);
  for (double v : g.ColPayoffs(e.attacker)) EXPECT_GE(v, e.value - 1e-7);
}

TEST(EnumerateEquilibriaTest, CifarVniHasOnePureEquilibrium) {
  const auto eqs = EnumerateEquilibria(kCifarVni);
  ASSERT_EQ(eqs.size(), 1u);
  EXPECT_EQ(eqs[0].kind, SolutionKind::kPure);
  EXPECT_EQ(eqs[0].attacker.PureAction(), 1u);
  EXPECT_EQ(eqs[0].defender.PureAction(), 1u);
  EXPECT_NEAR(eqs[0].value, 29.47, 1e-9);
}

TEST(EnumerateEquilibriaTest, ImagenetVniHasOneMixedEquilibrium) {
  const auto eqs = EnumerateEquilibria(kImagenetVni);
  ASSERT_EQ(eqs.size(), 1u);
  EXPECT_EQ(eqs[0].kind, SolutionKind::kMixed);
  EXPECT_NEAR(eqs[0].attacker[0], 0.0528, 0.001);
  EXPECT_NEAR(eqs[0].defender[0], 0.2153, 0.001);
  EXPECT_NEAR(eqs[0].value, 36.07, 0.02);
  EXPECT_EQ(eqs[0].method, "support-enumeration");
}

TEST(EnumerateEquilibriaTest, ConstantGameEveryVertexShareValue) {
  const auto eqs = EnumerateEquilibria(ZeroSumGame::FromMatrix({{3, 3}, {3, 3}}));
  EXPECT_EQ(eqs.size(), 4u);  // every pure pair
  for (const auto& e : eqs) EXPECT_DOUBLE_EQ(e.value, 3.0);
}

TEST(EnumerateEquilibriaTest, DegenerateGameReportsBothDefenderVertices) {
  // x = (1, 0) is optimal; the defender's optimal set is y0 in [1/2, 1], whose
  // vertex (1/2, 1/2) has a larger support than the attacker's.
  const auto eqs = EnumerateEquilibria(ZeroSumGame::FromMatrix({{2, 2}, {1, 3}}));
  ASSERT_EQ(eqs.size(), 2u);
  EXPECT_NEAR(eqs[0].defender[0], 1.0, 1e-12);
  EXPECT_NEAR(eqs[1].defender[0], 0.5, 1e-12);
  for (const auto& e : eqs) EXPECT_NEAR(e.value, 2.0, 1e-12);
}

TEST(EnumerateEquilibriaTest, RejectsOversizedGames) {
  std::vector<std::vector<double>> p(kMaxEnumerationAxis + 1, std::vector<double>(2, 1.0));
  EXPECT_THROW(EnumerateEquilibria(ZeroSumGame::FromMatrix(p)), InvalidInputError);
}

TEST(EnumerateEquilibriaTest, BundledAttackSurrogateGames) {
  const auto& table = testing::BundledTable();
  for (const auto& dataset : table.datasets()) {
    const ZeroSumGame g = BuildAttackSurrogateGame(table, dataset);
    const auto eqs = EnumerateEquilibria(g);
    ASSERT_FALSE(eqs.empty());
    for (const auto& e : eqs) {
      EXPECT_NEAR(e.value, SolveMinimax(g).value, 1e-7);
      ExpectNoProfitableDeviation(g, e);
    }
  }
}

TEST(EquilibriaPropertyTest, AgreesWithSimplexOnRandomGames) {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 1000; ++trial) {
    // Alternate continuous and two-decimal payoffs; the latter hit ties.
    const ZeroSumGame g = testing::RandomShapeGame(rng, 6, trial % 2 == 1);
    const double v = SolveMinimax(g).value;
    const auto eqs = EnumerateEquilibria(g);
    ASSERT_FALSE(eqs.empty());
    for (const auto& e : eqs) {
      ASSERT_NEAR(e.value, v, 1e-6);
      ASSERT_NEAR(e.value, eqs.front().value, 1e-7);
      ExpectNoProfitableDeviation(g, e);
    }
  }
}

TEST(EquilibriaPropertyTest, SmallIntegerGamesWithManyTies) {
  std::mt19937_64 rng(22);
  std::uniform_int_distribution<int> entry(0, 3);
  for (int trial = 0; trial < 300; ++trial) {
    std::vector<std::vector<double>> p(3, std::vector<double>(3));
    for (auto& row : p) for (double& v : row) v = entry(rng);
    const ZeroSumGame g = ZeroSumGame::FromMatrix(p);
    const double v = SolveMinimax(g).value;
    for (const auto& e : EnumerateEquilibria(g)) {
      ASSERT_NEAR(e.value, v, 1e-7);
      ExpectNoProfitableDeviation(g, e);
    }
  }
}

TEST(StackelbergTest, ImagenetVniCommitsDefended) {
  const StackelbergSolution s = SolveStackelbergPure(kImagenetVni);
  EXPECT_EQ(s.committed_col, 1u);
  EXPECT_DOUBLE_EQ(s.value, 36.41);
  EXPECT_EQ(s.follower_rows, (std::vector<std::size_t>{1}));
  EXPECT_NEAR(TransparencyCost(kImagenetVni), 0.34, 0.02);
}

TEST(StackelbergTest, CifarVniCostsNothing) {
  const StackelbergSolution s = SolveStackelbergPure(kCifarVni);
  EXPECT_EQ(s.committed_col, 1u);
  EXPECT_DOUBLE_EQ(s.value, 29.47);
  EXPECT_NEAR(TransparencyCost(kCifarVni), 0.0, 1e-9);
}

TEST(StackelbergTest, DiagonalTiesRecorded) {
  const StackelbergSolution s = SolveStackelbergPure(ZeroSumGame::FromMatrix({{1, 0}, {0, 1}}));
  EXPECT_EQ(s.committed_col, 0u);
  EXPECT_EQ(s.leader_ties, (std::vector<std::size_t>{0, 1}));
  EXPECT_DOUBLE_EQ(s.value, 1.0);
  EXPECT_EQ(s.follower_rows, (std::vector<std::size_t>{0}));
}

TEST(StackelbergTest, FollowerTiesRecorded) {
  const StackelbergSolution s = SolveStackelbergPure(ZeroSumGame::FromMatrix({{5, 9}, {5, 1}}));
  EXPECT_EQ(s.committed_col, 0u);
  EXPECT_EQ(s.follower_rows, (std::vector<std::size_t>{0, 1}));
}

TEST(TransparencyCostTest, BundledSurrogateGames) {
  const auto& table = testing::BundledTable();
  EXPECT_NEAR(TransparencyCost(BuildSurrogateGame(table, "cifar10", "autoattack")), 1.04, 0.02);
  EXPECT_NEAR(TransparencyCost(BuildSurrogateGame(table, "imagenet", "cdtp")), 0.02, 0.02);
}

TEST(TransparencyCostTest, PureSaddleMeansZeroCost) {
  std::mt19937_64 rng(23);
  int saddles = 0;
  for (int trial = 0; trial < 2000; ++trial) {
    const ZeroSumGame g = testing::RandomShapeGame(rng, 4);
    const auto eqs = EnumerateEquilibria(g);
    const bool pure = std::any_of(eqs.begin(), eqs.end(), [](const auto& e) {
      return e.kind == SolutionKind::kPure;
    });
    if (!pure) continue;
    ++saddles;
    EXPECT_NEAR(TransparencyCost(g), 0.0, 1e-7);
  }
  EXPECT_GT(saddles, 100);
}

TEST(TransparencyCostTest, StackelbergNeverBelowNash) {
  std::mt19937_64 rng(24);
  for (int trial = 0; trial < 1000; ++trial) {
    const ZeroSumGame g = testing::RandomShapeGame(rng, 12);
    EXPECT_GE(TransparencyCost(g), -1e-7);
  }
}

TEST(FictitiousPlayTest, ImagenetVniConvergesToValue) {
  const auto trace = FictitiousPlay(kImagenetVni, 100000, 0);
  EXPECT_NEAR(trace.empirical_value, SolveMinimax(kImagenetVni).value, 0.1);
  EXPECT_LE(trace.lower_bound, SolveMinimax(kImagenetVni).value + 1e-9);
  EXPECT_GE(trace.upper_bound, SolveMinimax(kImagenetVni).value - 1e-9);
}

TEST(FictitiousPlayTest, ConstantGameIsExactFromTheStart) {
  const ZeroSumGame g = ZeroSumGame::FromMatrix({{12.5, 12.5}, {12.5, 12.5}});
  for (std::size_t iterations : {1u, 2u, 50u}) {
    const auto trace = FictitiousPlay(g, iterations, 3);
    EXPECT_DOUBLE_EQ(trace.empirical_value, 12.5);
    EXPECT_DOUBLE_EQ(trace.value_history.front().value, 12.5);
  }
}

TEST(FictitiousPlayTest, SaddleAbsorbsPlay) {
  const auto trace = FictitiousPlay(kCifarVni, 1000, 0);
  EXPECT_GE(trace.empirical_attacker[1], 0.99);
  EXPECT_GE(trace.empirical_defender[1], 0.99);
}

TEST(FictitiousPlayTest, DeterministicUnderSeedAndCountsNormalized) {
  // Ties everywhere, so the seed drives every choice.
  const ZeroSumGame g = ZeroSumGame::FromMatrix({{1, 0, 1}, {0, 1, 1}, {1, 1, 0}});
  const auto a = FictitiousPlay(g, 5000, 42);
  const auto b = FictitiousPlay(g, 5000, 42);
  EXPECT_EQ(a.empirical_value, b.empirical_value);
  ASSERT_EQ(a.value_history.size(), b.value_history.size());
  for (std::size_t i = 0; i < a.value_history.size(); ++i) {
    EXPECT_EQ(a.value_history[i].value, b.value_history[i].value);
  }
  double sum = 0.0;
  for (double p : a.empirical_attacker.probs()) {
    // Counts out of 5000 rounds.
    EXPECT_NEAR(p * 5000, std::round(p * 5000), 1e-6);
    sum += p;
  }
  EXPECT_NEAR(sum, 1.0, 1e-12);
}

TEST(FictitiousPlayTest, GapShrinksWithIterations) {
  const double v = SolveMinimax(kImagenetVni).value;
  const double early = std::abs(FictitiousPlay(kImagenetVni, 100, 1).empirical_value - v);
  const double late = std::abs(FictitiousPlay(kImagenetVni, 100000, 1).empirical_value - v);
  EXPECT_LT(late, early);
}

TEST(FictitiousPlayTest, HistorySampledOnOneTwoFiveGrid) {
  const auto trace = FictitiousPlay(kImagenetVni, 120, 0);
  std::vector<std::size_t> its;
  for (const auto& s : trace.value_history) its.push_back(s.iteration);
  EXPECT_EQ(its, (std::vector<std::size_t>{1, 2, 5, 10, 20, 50, 100, 120}));
}

TEST(FictitiousPlayTest, RejectsZeroIterations) {
  EXPECT_THROW(FictitiousPlay(kCifarVni, 0, 0), InvalidInputError);
}

}  // namespace
}  // namespace secgame
