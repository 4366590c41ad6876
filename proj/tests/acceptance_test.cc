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

// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any
// failure. Every check runs against the bundled tables or seeded random games.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <fmt/format.h>

#include "secgame/analysis.h"
#include "secgame/equilibria.h"
#include "secgame/errors.h"
#include "secgame/minimax.h"
#include "secgame/scenario.h"
#include "test_util.h"

namespace secgame {
namespace {

using testing::BundledTable;

// Collects the failures of one criterion.
class Checker {
 public:
  void Expect(bool ok, const std::string& what) {
    ++checks_;
    if (!ok && failures_.size() < 8) failures_.push_back(what);
    failed_ |= !ok;
  }
  void Near(double actual, double expected, double tol, const std::string& what) {
    Expect(std::abs(actual - expected) <= tol,
           fmt::format("{}: got {:.6f}, expected {} +/- {}", what, actual, expected, tol));
  }
  bool failed() const { return failed_; }
  std::size_t checks() const { return checks_; }
  const std::vector<std::string>& failures() const { return failures_; }

 private:
  bool failed_ = false;
  std::size_t checks_ = 0;
  std::vector<std::string> failures_;
};

std::vector<ZeroSumGame> BundledGames(const ScenarioTable& t) {
  std::vector<ZeroSumGame> games;
  for (const auto& dataset : t.datasets()) {
    for (const auto& attack : t.attacks(dataset)) {
      games.push_back(BuildSurrogateGame(t, dataset, attack));
    }
    games.push_back(BuildAttackSurrogateGame(t, dataset));
    games.push_back(BuildAttackGame(t, dataset));
  }
  return games;
}

// Max gain from a unilateral deviation by either player.
double DeviationGain(const ZeroSumGame& g, const MixedStrategy& x, const MixedStrategy& y) {
  const double v = ExpectedPayoff(g, x, y);
  double best_row = -1e300, best_col = 1e300;
  for (double p : g.RowPayoffs(y)) best_row = std::max(best_row, p);
  for (double p : g.ColPayoffs(x)) best_col = std::min(best_col, p);
  return std::max(best_row - v, v - best_col);
}

void SurrogateReproduction(Checker& c) {
  const auto& t = BundledTable();
  const GameSummary cifar = SummarizeGame(BuildSurrogateGame(t, "cifar10", "vni-fgsm"));
  c.Near(cifar.nash.value, 29.47, 1e-9, "cifar10 value");
  c.Expect(cifar.nash.kind == SolutionKind::kPure, "cifar10 equilibrium is pure");
  c.Expect(cifar.nash.attacker.PureAction() == 1 && cifar.nash.defender.PureAction() == 1,
           "cifar10 equilibrium at (defended, defended)");
  const GameSummary imagenet = SummarizeGame(BuildSurrogateGame(t, "imagenet", "vni-fgsm"));
  c.Near(imagenet.nash.value, 36.07, 0.02, "imagenet value");
  c.Near(imagenet.nash.attacker[0], 0.0528, 0.001, "imagenet attacker p(undefended)");
  c.Near(imagenet.nash.attacker[1], 0.9472, 0.001, "imagenet attacker p(defended)");
  c.Near(imagenet.nash.defender[0], 0.2153, 0.001, "imagenet defender p(undefended)");
  c.Near(imagenet.nash.defender[1], 0.7847, 0.001, "imagenet defender p(defended)");
}

void TransparencyReproduction(Checker& c) {
  const std::map<std::string, std::map<std::string, double>> printed = {
      {"cifar10",
       {{"admix", 0.28}, {"autoattack", 1.04}, {"bia", 0.0}, {"cdtp", 0.05}, {"lgv", 0.0},
        {"ops", 0.49}, {"pgn", 0.42}, {"ssah", 0.0}, {"vni-fgsm", 0.0}}},
      {"imagenet",
       {{"admix", 0.32}, {"autoattack", 0.64}, {"bia", 0.0}, {"cdtp", 0.02}, {"lgv", 0.0},
        {"ops", 0.29}, {"pgn", 0.35}, {"ssah", 0.0}, {"vni-fgsm", 0.34}}}};
  const std::map<std::string, std::pair<std::size_t, double>> summary = {
      {"cifar10", {5, 0.46}}, {"imagenet", {6, 0.33}}};
  for (const auto& [dataset, costs] : printed) {
    const auto report = MakeTransparencyReport(BundledTable(), dataset);
    c.Expect(report.entries.size() == costs.size(), dataset + ": 9 attacks");
    for (const auto& e : report.entries) {
      const auto it = costs.find(e.attack);
      c.Expect(it != costs.end(), dataset + ": unexpected attack " + e.attack);
      if (it != costs.end()) c.Near(e.cost, it->second, 0.02, dataset + " " + e.attack);
    }
    c.Expect(report.worse_off_count == summary.at(dataset).first,
             fmt::format("{}: worse off {} / 9", dataset, report.worse_off_count));
    c.Near(report.mean_nonzero_cost, summary.at(dataset).second, 0.02, dataset + " mean");
  }
}

void MixingReproduction(Checker& c) {
  const std::map<std::string, std::map<std::string, std::pair<double, double>>> printed = {
      {"cifar10",
       {{"admix", {2.45, 13.84}}, {"autoattack", {9.32, 12.26}}, {"cdtp", {8.49, 0.83}},
        {"ops", {8.86, 7.10}}, {"pgn", {3.41, 14.94}}, {"vni-fgsm", {0.00, 0.00}}}},
      {"imagenet",
       {{"admix", {5.87, 12.66}}, {"autoattack", {16.72, 14.52}}, {"cdtp", {9.60, 0.56}},
        {"ops", {9.22, 7.83}}, {"pgn", {5.99, 15.33}}, {"vni-fgsm", {5.28, 21.53}}}}};
  for (const auto& [dataset, rows] : printed) {
    const auto report = MakeMixingReport(BundledTable(), dataset);
    c.Expect(report.entries.size() == rows.size(), dataset + ": 6 rows");
    for (const auto& e : report.entries) {
      const auto it = rows.find(e.attack);
      c.Expect(it != rows.end(), dataset + ": unexpected row " + e.attack);
      if (it == rows.end()) continue;
      c.Near(e.attacker_p_undefended, it->second.first, 0.05, dataset + " attacker " + e.attack);
      c.Near(e.defender_p_undefended, it->second.second, 0.05, dataset + " defender " + e.attack);
    }
  }
}

void AttackSurrogateReproduction(Checker& c) {
  const GameSummary imagenet = MakeAttackSurrogateSummary(BundledTable(), "imagenet");
  const auto& g = imagenet.game;
  c.Near(imagenet.transparency_cost, 0.18, 0.02, "imagenet cost");
  const std::size_t ops = g.RowIndex("ops/undefended");
  const std::size_t vni = g.RowIndex("vni-fgsm/defended");
  c.Expect(imagenet.nash.attacker.Support() == std::vector<std::size_t>{ops, vni},
           "imagenet attacker support {(ops, undefended), (vni-fgsm, defended)}");
  c.Near(100 * imagenet.nash.attacker[ops], 4.18, 0.1, "imagenet weight (ops, undefended)");
  c.Near(100 * imagenet.nash.attacker[vni], 95.82, 0.1, "imagenet weight (vni-fgsm, defended)");
  c.Near(100 * imagenet.nash.defender[0], 11.73, 0.1, "imagenet defender p(undefended)");

  const GameSummary cifar = MakeAttackSurrogateSummary(BundledTable(), "cifar10");
  c.Expect(cifar.nash.kind == SolutionKind::kPure, "cifar10 equilibrium is pure");
  c.Expect(cifar.nash.attacker.PureAction() == cifar.game.RowIndex("vni-fgsm/defended"),
           "cifar10 attacker plays (vni-fgsm, defended)");
  c.Expect(cifar.nash.defender.PureAction() == 1, "cifar10 defender plays defended");
  c.Near(cifar.transparency_cost, 0.0, 1e-9, "cifar10 cost");
}

void UnderestimationReproduction(Checker& c) {
  const auto cifar = MakeUnderestimationReport(BundledTable(), "cifar10");
  c.Near(cifar.difference, 12.58, 0.05, "cifar10 difference");
  c.Near(cifar.factor, 3.73, 0.02, "cifar10 factor");
  const auto imagenet = MakeUnderestimationReport(BundledTable(), "imagenet");
  c.Near(imagenet.difference, 4.22, 0.05, "imagenet difference");
  c.Near(imagenet.factor, 2.15, 0.02, "imagenet factor");
}

void SolverProperties(Checker& c) {
  std::mt19937_64 rng(20260101);
  // Strong duality, checked from the returned strategies alone.
  for (int i = 0; i < 1000; ++i) {
    const ZeroSumGame g = testing::RandomShapeGame(rng, 20, i % 2 == 0);
    const MinimaxResult r = SolveMinimax(g);
    const MixedStrategy x(r.row_strategy), y(r.col_strategy);
    double upper = -1e300, lower = 1e300;
    for (double p : g.RowPayoffs(y)) upper = std::max(upper, p);
    for (double p : g.ColPayoffs(x)) lower = std::min(lower, p);
    c.Expect(r.status == SolveStatus::kOptimal, fmt::format("duality game {} status", i));
    c.Expect(upper - lower <= 1e-7 && lower - 1e-7 <= r.value && r.value <= upper + 1e-7,
             fmt::format("duality game {}: gap {:.3g}", i, upper - lower));
  }
  // Closed form against the LP.
  for (int i = 0; i < 10000; ++i) {
    const ZeroSumGame g = testing::RandomGame(rng, 2, 2, 0.0, 100.0, i % 3 == 0);
    const MinimaxResult lp = SolveMinimax(g);
    const MinimaxResult cf = Solve2x2ClosedForm(g);
    const bool ok = std::abs(lp.value - cf.value) <= 1e-7 &&
                    DeviationGain(g, MixedStrategy(cf.row_strategy),
                                  MixedStrategy(cf.col_strategy)) <= 1e-7;
    c.Expect(ok, fmt::format("2x2 game {}: lp {} closed form {}", i, lp.value, cf.value));
  }
  // Enumeration: one value, no profitable deviation, agreement with the LP.
  for (int i = 0; i < 500; ++i) {
    const ZeroSumGame g = testing::RandomShapeGame(rng, 6, i % 2 == 0);
    const double v = SolveMinimax(g).value;
    const auto all = EnumerateEquilibria(g);
    c.Expect(!all.empty(), fmt::format("enumeration game {} found nothing", i));
    for (const auto& e : all) {
      c.Expect(std::abs(e.value - v) <= 1e-7,
               fmt::format("enumeration game {}: value {} vs {}", i, e.value, v));
      c.Expect(DeviationGain(g, e.attacker, e.defender) <= 1e-7,
               fmt::format("enumeration game {}: profitable deviation", i));
    }
    const EquilibriumSolution lp = ToEquilibrium(g, SolveMinimax(g), "minimax-lp");
    c.Expect(DeviationGain(g, lp.attacker, lp.defender) <= 1e-7,
             fmt::format("LP game {}: profitable deviation", i));
  }
  // Degenerate games with many equilibria.
  for (int i = 0; i < 200; ++i) {
    std::uniform_int_distribution<int> small(0, 3);
    std::vector<std::vector<double>> m(4, std::vector<double>(4));
    for (auto& row : m) {
      for (double& v : row) v = small(rng);
    }
    const ZeroSumGame g = ZeroSumGame::FromMatrix(m);
    const double v = SolveMinimax(g).value;
    for (const auto& e : EnumerateEquilibria(g)) {
      c.Expect(std::abs(e.value - v) <= 1e-7 && DeviationGain(g, e.attacker, e.defender) <= 1e-7,
               fmt::format("degenerate game {}", i));
    }
  }
  // Commitment never helps the defender beyond the Nash value.
  std::vector<ZeroSumGame> games = BundledGames(BundledTable());
  for (int i = 0; i < 1000; ++i) games.push_back(testing::RandomShapeGame(rng, 12));
  for (const auto& g : games) {
    const double nash = SolveMinimax(g).value;
    const double stackelberg = SolveStackelbergPure(g).value;
    c.Expect(stackelberg >= nash - 1e-9,
             fmt::format("stackelberg {} below nash {}", stackelberg, nash));
  }
  // Affine equivariance.
  std::uniform_real_distribution<double> scale(0.1, 5.0), shift(-100.0, 100.0);
  for (int i = 0; i < 1000; ++i) {
    const ZeroSumGame g = testing::RandomShapeGame(rng, 10);
    const double a = scale(rng), b = shift(rng);
    const double v = SolveMinimax(g).value;
    const double w = SolveMinimax(g.Affine(a, b)).value;
    c.Expect(std::abs(w - (a * v + b)) <= 1e-9,
             fmt::format("affine game {}: {} vs {}", i, w, a * v + b));
  }
}

void FictitiousPlayOracle(Checker& c) {
  const auto games = BundledGames(BundledTable());
  for (std::size_t i = 0; i < games.size(); ++i) {
    const auto& g = games[i];
    const FictitiousPlayTrace trace = FictitiousPlay(g, 100000, 7);
    const double v = SolveMinimax(g).value;
    c.Near(trace.empirical_value, v, 0.1, fmt::format("bundled game {} ({})", i, g.row_labels()[0]));
    const FictitiousPlayTrace again = FictitiousPlay(g, 100000, 7);
    c.Expect(again.empirical_value == trace.empirical_value &&
                 std::ranges::equal(again.empirical_attacker.probs(), trace.empirical_attacker.probs()) &&
                 std::ranges::equal(again.empirical_defender.probs(), trace.empirical_defender.probs()),
             fmt::format("bundled game {} not deterministic", i));
  }
}

bool Mentions(const DataError& e, const std::string& needle) {
  return std::string(e.what()).find(needle) != std::string::npos;
}

void DataIntegrity(Checker& c) {
  const ScenarioTable table = LoadTable({testing::DataDir()});
  c.Expect(table.size() == 148, fmt::format("bundled record count {}", table.size()));
  c.Expect(table.datasets() == std::vector<std::string>{"cifar10", "imagenet"},
           "bundled datasets");
  const std::string text = SerializeTable(table);
  const ScenarioTable reparsed = testing::ParseString(text);
  c.Expect(reparsed == table, "parse(serialize(table)) == table");
  c.Expect(SerializeTable(reparsed) == text, "serialize is stable");

  // Drop one attack cell and one baseline; both must be reported at once.
  std::string broken;
  std::istringstream in(testing::ReadFile(testing::DataDir() / "imagenet.csv"));
  for (std::string line; std::getline(in, line);) {
    if (line.rfind("imagenet,pgn,worst-def,defended,", 0) == 0) continue;
    if (line.rfind("imagenet,no-attack,none,undefended,", 0) == 0) continue;
    broken += line + "\n";
  }
  try {
    testing::ParseString(broken);
    c.Expect(false, "incomplete table accepted");
  } catch (const ValidationError& e) {
    c.Expect(e.diagnostics().size() == 2,
             fmt::format("expected 2 diagnostics, got {}", e.diagnostics().size()));
    c.Expect(Mentions(e, "missing cell (imagenet, pgn, worst-def, defended)"),
             "missing cell reported");
    c.Expect(Mentions(e, "missing no-attack baseline (imagenet, no-attack, none, undefended)"),
             std::string("missing baseline reported: ") + e.what());
  }
  // A ninth cell for an attack (duplicate key) is rejected too.
  try {
    testing::ParseString(testing::ReadFile(testing::DataDir() / "cifar10.csv") +
                         "cifar10,ops,best-def,defended,22.92\n");
    c.Expect(false, "duplicate cell accepted");
  } catch (const ValidationError& e) {
    c.Expect(Mentions(e, "duplicate key"), std::string("duplicate reported: ") + e.what());
  }
}

struct Criterion {
  const char* name;
  std::function<void(Checker&)> run;
};

}  // namespace
}  // namespace secgame

int main() {
  using secgame::Checker;
  const std::vector<secgame::Criterion> criteria = {
      {"1 surrogate game (vni-fgsm)", secgame::SurrogateReproduction},
      {"2 transparency costs", secgame::TransparencyReproduction},
      {"3 mixing probabilities", secgame::MixingReproduction},
      {"4 attack-and-surrogate game", secgame::AttackSurrogateReproduction},
      {"5 underestimation", secgame::UnderestimationReproduction},
      {"6 solver properties", secgame::SolverProperties},
      {"7 fictitious play", secgame::FictitiousPlayOracle},
      {"8 data integrity", secgame::DataIntegrity},
  };
  const auto start = std::chrono::steady_clock::now();
  int failed = 0;
  for (const auto& criterion : criteria) {
    Checker checker;
    std::string error;
    try {
      criterion.run(checker);
    } catch (const std::exception& e) {
      error = e.what();
    }
    const bool ok = !checker.failed() && error.empty();
    failed += !ok;
    std::cout << fmt::format("{} criterion {} ({} checks)\n", ok ? "PASS" : "FAIL",
                             criterion.name, checker.checks());
    for (const auto& f : checker.failures()) std::cout << "    " << f << "\n";
    if (!error.empty()) std::cout << "    exception: " << error << "\n";
  }
  const double seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::cout << fmt::format("{} of {} criteria passed in {:.1f}s\n", criteria.size() - failed,
                           criteria.size(), seconds);
  return failed == 0 ? 0 : 1;
}
