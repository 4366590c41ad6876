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

#include "cli.h"

#include <map>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>
#include <fmt/format.h>
#include <fmt/ostream.h>

#include "secgame/analysis.h"
#include "secgame/equilibria.h"
#include "secgame/errors.h"
#include "secgame/minimax.h"

namespace secgame::cli {
namespace {

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

const std::map<std::string, SurrogateClass> kDefendedSurrogates = {
    {"worst-def", SurrogateClass::kWorstDef},
    {"median-def", SurrogateClass::kMedianDef},
    {"best-def", SurrogateClass::kBestDef},
};

const std::map<std::string, OutputFormat> kFormats = {
    {"text", OutputFormat::kText},
    {"csv", OutputFormat::kCsv},
    {"tree", OutputFormat::kTree},
    {"json", OutputFormat::kTree},
};

enum class GameKind { kSurrogate, kAttackSurrogate, kAttack };

const std::map<std::string, GameKind> kGameKinds = {
    {"surrogate", GameKind::kSurrogate},
    {"attack-surrogate", GameKind::kAttackSurrogate},
    {"attack", GameKind::kAttack},
};

enum class ReportKind { kTransparency, kMixing, kUnderestimation };

const std::map<std::string, ReportKind> kReportKinds = {
    {"transparency", ReportKind::kTransparency},
    {"mixing", ReportKind::kMixing},
    {"underestimation", ReportKind::kUnderestimation},
};

ScenarioTable Load(const CliConfig& config) {
  const std::filesystem::path path =
      config.data_path.empty() ? BundledDataDir() : std::filesystem::path(config.data_path);
  std::error_code ec;
  if (!std::filesystem::exists(path, ec)) {
    throw IoError(fmt::format("no such file or directory: '{}'", path.string()));
  }
  return LoadTable({path});
}

// Datasets a command runs over, in table order.
std::vector<std::string> Datasets(const CliConfig& config, const ScenarioTable& table,
                                  bool default_all) {
  if (config.all_datasets || (config.dataset.empty() && default_all)) {
    return table.datasets();
  }
  if (config.dataset.empty()) {
    if (table.datasets().size() == 1) return table.datasets();
    throw UsageError(fmt::format("--dataset is required (one of: {})",
                                 fmt::join(table.datasets(), ", ")));
  }
  return {config.dataset};
}

ZeroSumGame BuildGame(const ScenarioTable& table, const std::string& dataset,
                      GameKind kind, const std::string& attack,
                      SurrogateClass surrogate) {
  switch (kind) {
    case GameKind::kSurrogate:
      return BuildSurrogateGame(table, dataset, attack, surrogate);
    case GameKind::kAttackSurrogate:
      return BuildAttackSurrogateGame(table, dataset, surrogate);
    case GameKind::kAttack:
      return BuildAttackGame(table, dataset);
  }
  throw UsageError("unknown game kind");
}

void RequireAttackFor(GameKind kind, const std::string& attack) {
  if (kind == GameKind::kSurrogate && attack.empty()) {
    throw UsageError("--game surrogate requires --attack");
  }
}

int Validate(const CliConfig& config, std::ostream& out) {
  const ScenarioTable table = Load(config);
  std::size_t attacks = 0;
  for (const auto& d : table.datasets()) attacks += table.attacks(d).size();
  fmt::print(out, "ok: {} records, {} dataset(s) ({}), {} attack(s)\n", table.size(),
             table.datasets().size(), fmt::join(table.datasets(), ", "), attacks);
  return kOk;
}

struct Block {
  std::string dataset;
  std::string body;
};

// Writes one formatted block per dataset. Text blocks are separated by blank
// lines. CSV blocks whose rows carry a dataset column merge into one table;
// others get a "# dataset=" comment. Tree blocks become a JSON array when
// `as_list` is set, each element tagged with its dataset.
void Emit(const std::vector<Block>& blocks, OutputFormat format, bool as_list,
          std::ostream& out) {
  switch (format) {
    case OutputFormat::kText: {
      bool first = true;
      for (const auto& b : blocks) {
        if (!first) out << "\n";
        first = false;
        out << b.body;
      }
      return;
    }
    case OutputFormat::kCsv: {
      std::string header;
      bool started = false;
      for (const auto& b : blocks) {
        std::istringstream in(b.body);
        std::string line;
        bool has_dataset_column = false;
        std::vector<std::string> lines;
        while (std::getline(in, line)) lines.push_back(line);
        for (const auto& l : lines) {
          if (!l.empty() && l[0] != '#') {
            has_dataset_column = l.rfind("dataset,", 0) == 0;
            break;
          }
        }
        if (blocks.size() > 1 && !has_dataset_column) {
          if (started) out << "\n";
          started = true;
          fmt::print(out, "# dataset={}\n{}", b.dataset, b.body);
          continue;
        }
        started = true;
        for (const auto& l : lines) {
          const bool is_comment = !l.empty() && l[0] == '#';
          if (!header.empty() && l.rfind("# formula:", 0) == 0) continue;
          if (!is_comment) {
            if (header.empty()) {
              header = l;
            } else if (l == header) {
              continue;
            }
          }
          out << l << "\n";
        }
      }
      return;
    }
    case OutputFormat::kTree: {
      if (!as_list) {
        for (const auto& b : blocks) out << b.body;
        return;
      }
      auto list = nlohmann::ordered_json::array();
      for (const auto& b : blocks) {
        auto doc = nlohmann::ordered_json::parse(b.body);
        if (!doc.contains("dataset")) {
          nlohmann::ordered_json tagged = {{"dataset", b.dataset}};
          tagged.update(doc);
          doc = std::move(tagged);
        }
        list.push_back(std::move(doc));
      }
      out << list.dump(2) << "\n";
      return;
    }
  }
}

int Solve(const CliConfig& config, GameKind kind, const std::string& attack,
          std::ostream& out) {
  RequireAttackFor(kind, attack);
  const ScenarioTable table = Load(config);
  std::vector<Block> blocks;
  for (const auto& dataset : Datasets(config, table, false)) {
    std::string body = config.output_format == OutputFormat::kText
                           ? fmt::format("dataset: {}\n", dataset)
                           : std::string();
    body += FormatReport(
        SummarizeGame(BuildGame(table, dataset, kind, attack, config.defended_surrogate)),
        config.output_format);
    blocks.push_back({dataset, std::move(body)});
  }
  Emit(blocks, config.output_format, config.all_datasets, out);
  return kOk;
}

int Report(const CliConfig& config, ReportKind kind, const AttackFilter& filter,
           std::ostream& out) {
  const ScenarioTable table = Load(config);
  std::vector<Block> blocks;
  for (const auto& dataset : Datasets(config, table, true)) {
    std::string body;
    switch (kind) {
      case ReportKind::kTransparency:
        body = FormatReport(MakeTransparencyReport(table, dataset, config.defended_surrogate),
                            config.output_format);
        break;
      case ReportKind::kMixing:
        body = FormatReport(
            MakeMixingReport(table, dataset, filter, config.defended_surrogate),
            config.output_format);
        break;
      case ReportKind::kUnderestimation:
        body = FormatReport(
            MakeUnderestimationReport(table, dataset, config.defended_surrogate),
            config.output_format);
        break;
    }
    blocks.push_back({dataset, std::move(body)});
  }
  Emit(blocks, config.output_format, true, out);
  return kOk;
}

int Simulate(const CliConfig& config, GameKind kind, const std::string& attack,
             std::ostream& out) {
  RequireAttackFor(kind, attack);
  const ScenarioTable table = Load(config);
  std::vector<Block> blocks;
  for (const auto& dataset : Datasets(config, table, false)) {
    ZeroSumGame game = BuildGame(table, dataset, kind, attack, config.defended_surrogate);
    SimulationSummary summary{game, FictitiousPlay(game, config.iterations, config.seed),
                              config.seed, SolveMinimax(game).value, 0.0};
    summary.gap = std::abs(summary.trace.empirical_value - summary.lp_value);
    std::string body = config.output_format == OutputFormat::kText
                           ? fmt::format("dataset: {}\n", dataset)
                           : std::string();
    body += FormatReport(summary, config.output_format);
    blocks.push_back({dataset, std::move(body)});
  }
  Emit(blocks, config.output_format, config.all_datasets, out);
  return kOk;
}

}  // namespace

int Run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Nash and Stackelberg analysis of transferable-attack security games",
               "secgame"};
  app.require_subcommand(1);
  app.fallthrough();

  CliConfig config;
  app.add_option("--data", config.data_path,
                 "Scenario file or directory (default: bundled data; "
                 "$SECGAME_DATA_DIR overrides)");
  app.add_option("--dataset", config.dataset, "Dataset identifier, e.g. cifar10");
  app.add_option("--format", config.output_format, "Output format: text, csv or tree")
      ->transform(CLI::CheckedTransformer(kFormats, CLI::ignore_case).description(""))
      ->option_text("{text,csv,tree}");
  app.add_option("--surrogate", config.defended_surrogate,
                 "Defended surrogate row used in the games")
      ->transform(CLI::CheckedTransformer(kDefendedSurrogates, CLI::ignore_case).description(""))
      ->option_text("{worst-def,median-def,best-def}");
  app.add_flag("--all-datasets", config.all_datasets,
               "Run over every dataset in table order");

  auto* validate = app.add_subcommand("validate", "Check a scenario table");

  GameKind solve_kind = GameKind::kSurrogate;
  std::string attack;
  auto* solve = app.add_subcommand("solve", "Solve one game: Nash, Stackelberg, cost");
  solve->add_option("--game", solve_kind, "surrogate, attack-surrogate or attack")
      ->transform(CLI::CheckedTransformer(kGameKinds).description(""))
      ->option_text("{surrogate,attack-surrogate,attack}")
      ->required();
  solve->add_option("--attack", attack, "Attack name (surrogate game)");

  ReportKind report_kind = ReportKind::kTransparency;
  std::vector<std::string> named_attacks;
  bool all_attacks = false;
  auto* report = app.add_subcommand("report", "Batch analyses over a dataset");
  report->add_option("kind", report_kind, "transparency, mixing or underestimation")
      ->transform(CLI::CheckedTransformer(kReportKinds).description(""))
      ->option_text("{transparency,mixing,underestimation}")
      ->required();
  auto* attacks_opt =
      report->add_option("--attacks", named_attacks, "Mixing report: list these attacks")
          ->delimiter(',');
  report->add_flag("--all-attacks", all_attacks, "Mixing report: list every attack")
      ->excludes(attacks_opt);

  GameKind sim_kind = GameKind::kSurrogate;
  auto* simulate = app.add_subcommand("simulate", "Fictitious play against the LP value");
  simulate->add_option("--game", sim_kind, "surrogate, attack-surrogate or attack")
      ->transform(CLI::CheckedTransformer(kGameKinds).description(""))
      ->option_text("{surrogate,attack-surrogate,attack}")
      ->required();
  simulate->add_option("--attack", attack, "Attack name (surrogate game)");
  simulate->add_option("--iterations", config.iterations, "Fictitious-play rounds")
      ->check(CLI::PositiveNumber);
  simulate->add_option("--seed", config.seed, "Tie-breaking seed");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  if (!reversed.empty()) reversed.pop_back();  // program name
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (validate->parsed()) return Validate(config, out);
    if (solve->parsed()) return Solve(config, solve_kind, attack, out);
    if (report->parsed()) {
      AttackFilter filter;
      if (all_attacks) filter.mode = AttackFilter::Mode::kAll;
      if (!named_attacks.empty()) {
        filter.mode = AttackFilter::Mode::kNamed;
        filter.names = named_attacks;
      }
      return Report(config, report_kind, filter, out);
    }
    if (simulate->parsed()) return Simulate(config, sim_kind, attack, out);
  } catch (const UsageError& e) {
    fmt::print(err, "usage error: {}\n", e.what());
    return kUsage;
  } catch (const IoError& e) {
    fmt::print(err, "I/O error: {}\n", e.what());
    return kIoError;
  } catch (const DataError& e) {
    fmt::print(err, "invalid scenario data: {}\n", e.what());
    return kDataError;
  } catch (const LookupError& e) {
    fmt::print(err, "error: {}\n", e.what());
    if (!e.candidates().empty()) {
      fmt::print(err, "candidates: {}\n", fmt::join(e.candidates(), ", "));
    }
    return kDataError;
  } catch (const InvalidInputError& e) {
    fmt::print(err, "error: {}\n", e.what());
    return kDataError;
  } catch (const BuildError& e) {
    fmt::print(err, "error: {}\n", e.what());
    return kDataError;
  }
  return kUsage;
}

}  // namespace secgame::cli
