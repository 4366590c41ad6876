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

#include "secgame/report_format.h"

#include <algorithm>
#include <cmath>

#include <fmt/format.h>
#include <json.hpp>

#include "secgame/minimax.h"

namespace secgame {
namespace {

using nlohmann::ordered_json;

std::string Pct(double value) {
  if (!std::isfinite(value)) return value > 0 ? "inf" : "nan";
  double r = RoundHalfUp(value, 2);
  if (r == 0.0) r = 0.0;  // no "-0.00"
  return fmt::format("{:.2f}", r);
}

std::string Ratio(double value) { return Pct(value); }

std::string Dump(const ordered_json& j) { return j.dump(2) + "\n"; }

// Aligned text table; first column left-aligned, the rest right-aligned.
std::string AlignedTable(const std::vector<std::string>& header,
                         const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> width(header.size());
  for (std::size_t c = 0; c < header.size(); ++c) width[c] = header[c].size();
  for (const auto& row : rows) {
    for (std::size_t c = 0; c < row.size(); ++c) width[c] = std::max(width[c], row[c].size());
  }
  auto line = [&](const std::vector<std::string>& cells) {
    std::string out;
    for (std::size_t c = 0; c < cells.size(); ++c) {
      if (c == 0) {
        out += fmt::format("{:<{}}", cells[c], width[c]);
      } else {
        out += fmt::format("  {:>{}}", cells[c], width[c]);
      }
    }
    return out + "\n";
  };
  std::string out = line(header);
  for (const auto& row : rows) out += line(row);
  return out;
}

std::string StrategyText(std::span<const double> probs,
                         const std::vector<std::string>& labels) {
  std::vector<std::vector<std::string>> rows;
  for (std::size_t i = 0; i < probs.size(); ++i) {
    if (probs[i] <= kTieTolerance) continue;
    rows.push_back({"  " + labels[i], Pct(kPercentScale * probs[i]) + "%"});
  }
  return AlignedTable({"  action", "probability"}, rows);
}

ordered_json StrategyJson(std::span<const double> probs,
                          const std::vector<std::string>& labels) {
  ordered_json out = ordered_json::object();
  for (std::size_t i = 0; i < probs.size(); ++i) out[labels[i]] = probs[i];
  return out;
}

std::vector<std::string> Select(const std::vector<std::string>& labels,
                                const std::vector<std::size_t>& idx) {
  std::vector<std::string> out;
  for (std::size_t i : idx) out.push_back(labels[i]);
  return out;
}

std::string NormalFormText(const ZeroSumGame& game) {
  std::vector<std::string> header{"attacker \\ defender"};
  header.insert(header.end(), game.col_labels().begin(), game.col_labels().end());
  std::vector<std::vector<std::string>> rows;
  for (std::size_t i = 0; i < game.rows(); ++i) {
    std::vector<std::string> row{game.row_labels()[i]};
    for (std::size_t j = 0; j < game.cols(); ++j) row.push_back(Pct(game(i, j)));
    rows.push_back(std::move(row));
  }
  return AlignedTable(header, rows);
}

}  // namespace

std::optional<OutputFormat> ParseOutputFormat(std::string_view token) {
  if (token == "text") return OutputFormat::kText;
  if (token == "csv") return OutputFormat::kCsv;
  if (token == "tree" || token == "json") return OutputFormat::kTree;
  return std::nullopt;
}

std::string_view ToString(OutputFormat format) {
  switch (format) {
    case OutputFormat::kText: return "text";
    case OutputFormat::kCsv: return "csv";
    case OutputFormat::kTree: return "tree";
  }
  return "?";
}

std::string FormatReport(const TransparencyReport& report, OutputFormat format) {
  const std::size_t total = report.entries.size();
  switch (format) {
    case OutputFormat::kText: {
      std::vector<std::vector<std::string>> rows;
      for (const auto& e : report.entries) {
        rows.push_back({e.attack, Pct(e.nash_value), Pct(e.stackelberg_value), Pct(e.cost)});
      }
      std::string out = fmt::format(
          "Transparency cost, Surrogate game ({}, defended surrogate {})\n",
          report.dataset, ToString(report.defended_surrogate));
      out += AlignedTable({"attack", "nash", "stackelberg", "cost"}, rows);
      out += fmt::format("worse off: {} / {}\n", report.worse_off_count, total);
      out += fmt::format("mean nonzero cost: {}\n", Pct(report.mean_nonzero_cost));
      out += fmt::format("formula: {}\n", kTransparencyFormula);
      return out;
    }
    case OutputFormat::kCsv: {
      std::string out = fmt::format("# formula: {}\n", kTransparencyFormula);
      out += fmt::format("# dataset={},defended_surrogate={},worse_off_count={},"
                         "attack_count={},mean_nonzero_cost={}\n",
                         report.dataset, ToString(report.defended_surrogate),
                         report.worse_off_count, total, Pct(report.mean_nonzero_cost));
      out += "dataset,attack,nash_value,stackelberg_value,cost\n";
      for (const auto& e : report.entries) {
        out += fmt::format("{},{},{},{},{}\n", report.dataset, e.attack,
                           Pct(e.nash_value), Pct(e.stackelberg_value), Pct(e.cost));
      }
      return out;
    }
    case OutputFormat::kTree: {
      ordered_json j;
      j["report"] = "transparency";
      j["dataset"] = report.dataset;
      j["defended_surrogate"] = ToString(report.defended_surrogate);
      j["formula"] = kTransparencyFormula;
      j["entries"] = ordered_json::array();
      for (const auto& e : report.entries) {
        j["entries"].push_back({{"attack", e.attack},
                                {"nash_value", e.nash_value},
                                {"stackelberg_value", e.stackelberg_value},
                                {"cost", e.cost}});
      }
      j["worse_off_count"] = report.worse_off_count;
      j["attack_count"] = total;
      j["mean_nonzero_cost"] = report.mean_nonzero_cost;
      return Dump(j);
    }
  }
  return {};
}

std::string FormatReport(const MixingReport& report, OutputFormat format) {
  switch (format) {
    case OutputFormat::kText: {
      std::vector<std::vector<std::string>> rows;
      for (const auto& e : report.entries) {
        rows.push_back({e.attack, Pct(e.attacker_p_undefended),
                        Pct(e.defender_p_undefended), std::string(ToString(e.kind))});
      }
      std::string out = fmt::format(
          "Probability (%) of the undefended action, Surrogate game ({}, "
          "defended surrogate {})\n",
          report.dataset, ToString(report.defended_surrogate));
      out += AlignedTable({"attack", "surrogate", "target", "kind"}, rows);
      out += fmt::format("formula: {}\n", kMixingFormula);
      return out;
    }
    case OutputFormat::kCsv: {
      std::string out = fmt::format("# formula: {}\n", kMixingFormula);
      out += fmt::format("# dataset={},defended_surrogate={}\n", report.dataset,
                         ToString(report.defended_surrogate));
      out += "dataset,attack,attacker_p_undefended,defender_p_undefended,kind\n";
      for (const auto& e : report.entries) {
        out += fmt::format("{},{},{},{},{}\n", report.dataset, e.attack,
                           Pct(e.attacker_p_undefended),
                           Pct(e.defender_p_undefended), ToString(e.kind));
      }
      return out;
    }
    case OutputFormat::kTree: {
      ordered_json j;
      j["report"] = "mixing";
      j["dataset"] = report.dataset;
      j["defended_surrogate"] = ToString(report.defended_surrogate);
      j["formula"] = kMixingFormula;
      j["entries"] = ordered_json::array();
      for (const auto& e : report.entries) {
        j["entries"].push_back({{"attack", e.attack},
                                {"attacker_p_undefended", e.attacker_p_undefended},
                                {"defender_p_undefended", e.defender_p_undefended},
                                {"kind", ToString(e.kind)}});
      }
      return Dump(j);
    }
  }
  return {};
}

std::string FormatReport(const UnderestimationReport& report, OutputFormat format) {
  switch (format) {
    case OutputFormat::kText: {
      std::string out = fmt::format(
          "Underestimation of transferable attacks ({})\n", report.dataset);
      out += AlignedTable(
          {"quantity", "value"},
          {{"A&S game value", Pct(report.v_attack_surrogate)},
           {"Attack game value", Pct(report.v_attack_only)},
           {"difference", Pct(report.difference)},
           {"no-attack baseline (defended)", Pct(report.baseline_defended)},
           {"factor", Ratio(report.factor) + "x"}});
      out += fmt::format("formula: {}\n", kUnderestimationFormula);
      return out;
    }
    case OutputFormat::kCsv: {
      std::string out = fmt::format("# formula: {}\n", kUnderestimationFormula);
      out += "dataset,v_attack_surrogate,v_attack_only,difference,"
             "baseline_defended,factor\n";
      out += fmt::format("{},{},{},{},{},{}\n", report.dataset,
                         Pct(report.v_attack_surrogate), Pct(report.v_attack_only),
                         Pct(report.difference), Pct(report.baseline_defended),
                         Ratio(report.factor));
      return out;
    }
    case OutputFormat::kTree: {
      ordered_json j;
      j["report"] = "underestimation";
      j["dataset"] = report.dataset;
      j["formula"] = kUnderestimationFormula;
      j["v_attack_surrogate"] = report.v_attack_surrogate;
      j["v_attack_only"] = report.v_attack_only;
      j["difference"] = report.difference;
      j["baseline_defended"] = report.baseline_defended;
      j["factor"] = report.factor;
      return Dump(j);
    }
  }
  return {};
}

std::string FormatReport(const GameSummary& s, OutputFormat format) {
  const ZeroSumGame& g = s.game;
  const auto commit = g.col_labels()[s.stackelberg.committed_col];
  const auto followers = Select(g.row_labels(), s.stackelberg.follower_rows);
  const auto ties = Select(g.col_labels(), s.stackelberg.leader_ties);
  switch (format) {
    case OutputFormat::kText: {
      std::string out = "Normal form (attacker payoff, %)\n";
      out += NormalFormText(g);
      out += fmt::format("\nNash equilibrium ({}, {}): value {}\n",
                         ToString(s.nash.kind), s.nash.method, Pct(s.nash.value));
      out += "attacker\n" + StrategyText(s.nash.attacker.probs(), g.row_labels());
      out += "defender\n" + StrategyText(s.nash.defender.probs(), g.col_labels());
      out += fmt::format("\nStackelberg (defender commits to a pure action): value {}\n",
                         Pct(s.stackelberg.value));
      out += fmt::format("commitment: {}\n", commit);
      out += fmt::format("follower best responses: {}\n", fmt::join(followers, ", "));
      out += fmt::format("leader ties: {}\n", fmt::join(ties, ", "));
      out += fmt::format("\ntransparency cost: {}\n", Pct(s.transparency_cost));
      out += fmt::format("formula: {}\n", kTransparencyFormula);
      return out;
    }
    case OutputFormat::kCsv: {
      std::string out = fmt::format("# formula: {}\n", kTransparencyFormula);
      out += "field,key,value\n";
      for (std::size_t i = 0; i < g.rows(); ++i) {
        for (std::size_t j = 0; j < g.cols(); ++j) {
          out += fmt::format("payoff,{}|{},{}\n", g.row_labels()[i],
                             g.col_labels()[j], Pct(g(i, j)));
        }
      }
      out += fmt::format("nash_value,,{}\n", Pct(s.nash.value));
      out += fmt::format("nash_kind,,{}\n", ToString(s.nash.kind));
      for (std::size_t i = 0; i < g.rows(); ++i) {
        out += fmt::format("attacker_probability,{},{}\n", g.row_labels()[i],
                           Pct(kPercentScale * s.nash.attacker[i]));
      }
      for (std::size_t j = 0; j < g.cols(); ++j) {
        out += fmt::format("defender_probability,{},{}\n", g.col_labels()[j],
                           Pct(kPercentScale * s.nash.defender[j]));
      }
      out += fmt::format("stackelberg_value,,{}\n", Pct(s.stackelberg.value));
      out += fmt::format("stackelberg_commitment,,{}\n", commit);
      for (const auto& f : followers) out += fmt::format("follower_row,,{}\n", f);
      for (const auto& t : ties) out += fmt::format("leader_tie,,{}\n", t);
      out += fmt::format("transparency_cost,,{}\n", Pct(s.transparency_cost));
      return out;
    }
    case OutputFormat::kTree: {
      ordered_json j;
      j["formula"] = kTransparencyFormula;
      j["rows"] = g.row_labels();
      j["cols"] = g.col_labels();
      ordered_json payoff = ordered_json::array();
      for (std::size_t i = 0; i < g.rows(); ++i) {
        ordered_json row = ordered_json::array();
        for (std::size_t c = 0; c < g.cols(); ++c) row.push_back(g(i, c));
        payoff.push_back(row);
      }
      j["payoff"] = payoff;
      j["nash"] = {{"value", s.nash.value},
                   {"kind", ToString(s.nash.kind)},
                   {"method", s.nash.method},
                   {"attacker", StrategyJson(s.nash.attacker.probs(), g.row_labels())},
                   {"defender", StrategyJson(s.nash.defender.probs(), g.col_labels())}};
      j["stackelberg"] = {{"value", s.stackelberg.value},
                          {"commitment", commit},
                          {"follower_rows", followers},
                          {"leader_ties", ties}};
      j["transparency_cost"] = s.transparency_cost;
      return Dump(j);
    }
  }
  return {};
}

std::string FormatReport(const SimulationSummary& s, OutputFormat format) {
  const auto& t = s.trace;
  switch (format) {
    case OutputFormat::kText: {
      std::string out = fmt::format("Fictitious play: {} iterations, seed {}\n",
                                    t.iterations, s.seed);
      out += AlignedTable({"quantity", "value"},
                          {{"empirical value", fmt::format("{:.4f}", t.empirical_value)},
                           {"LP value", fmt::format("{:.4f}", s.lp_value)},
                           {"gap", fmt::format("{:.4f}", s.gap)},
                           {"lower bound", fmt::format("{:.4f}", t.lower_bound)},
                           {"upper bound", fmt::format("{:.4f}", t.upper_bound)}});
      out += "empirical attacker\n" +
             StrategyText(t.empirical_attacker.probs(), s.game.row_labels());
      out += "empirical defender\n" +
             StrategyText(t.empirical_defender.probs(), s.game.col_labels());
      std::vector<std::vector<std::string>> rows;
      for (const auto& sample : t.value_history) {
        rows.push_back({fmt::format("{}", sample.iteration),
                        fmt::format("{:.4f}", sample.value),
                        fmt::format("{:.4f}", std::abs(sample.value - s.lp_value))});
      }
      out += "history\n" + AlignedTable({"iteration", "value", "gap"}, rows);
      return out;
    }
    case OutputFormat::kCsv: {
      std::string out = fmt::format(
          "# iterations={},seed={},empirical_value={:.6f},lp_value={:.6f},"
          "gap={:.6f}\n",
          t.iterations, s.seed, t.empirical_value, s.lp_value, s.gap);
      out += "iteration,value,gap\n";
      for (const auto& sample : t.value_history) {
        out += fmt::format("{},{:.6f},{:.6f}\n", sample.iteration, sample.value,
                           std::abs(sample.value - s.lp_value));
      }
      return out;
    }
    case OutputFormat::kTree: {
      ordered_json j;
      j["iterations"] = t.iterations;
      j["seed"] = s.seed;
      j["empirical_value"] = t.empirical_value;
      j["lp_value"] = s.lp_value;
      j["gap"] = s.gap;
      j["lower_bound"] = t.lower_bound;
      j["upper_bound"] = t.upper_bound;
      j["empirical_attacker"] =
          StrategyJson(t.empirical_attacker.probs(), s.game.row_labels());
      j["empirical_defender"] =
          StrategyJson(t.empirical_defender.probs(), s.game.col_labels());
      ordered_json history = ordered_json::array();
      for (const auto& sample : t.value_history) {
        history.push_back({{"iteration", sample.iteration}, {"value", sample.value}});
      }
      j["value_history"] = history;
      return Dump(j);
    }
  }
  return {};
}

}  // namespace secgame
