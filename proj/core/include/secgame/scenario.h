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

#ifndef SECGAME_SCENARIO_H_
#define SECGAME_SCENARIO_H_

#include <array>
#include <compare>
#include <filesystem>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "secgame/game.h"

namespace secgame {

// Reserved attack name for benign baselines.
inline constexpr std::string_view kNoAttack = "no-attack";

enum class SurrogateClass { kUndefended, kWorstDef, kMedianDef, kBestDef, kNone };
enum class TargetClass { kUndefended, kDefended };

inline constexpr std::array<SurrogateClass, 4> kAttackSurrogates = {
    SurrogateClass::kUndefended, SurrogateClass::kWorstDef,
    SurrogateClass::kMedianDef, SurrogateClass::kBestDef};
inline constexpr std::array<TargetClass, 2> kTargets = {
    TargetClass::kUndefended, TargetClass::kDefended};

std::string_view ToString(SurrogateClass s);
std::string_view ToString(TargetClass t);
std::optional<SurrogateClass> ParseSurrogateClass(std::string_view token);
std::optional<TargetClass> ParseTargetClass(std::string_view token);
bool IsDefendedSurrogate(SurrogateClass s);

struct CellKey {
  std::string dataset;
  std::string attack;
  SurrogateClass surrogate = SurrogateClass::kNone;
  TargetClass target = TargetClass::kUndefended;

  // Canonical order: dataset, then no-attack before named attacks, then
  // attack name, surrogate class, target class.
  std::strong_ordering operator<=>(const CellKey& other) const;
  bool operator==(const CellKey& other) const = default;
  std::string ToString() const;
};

struct SourceLocation {
  std::string source;
  int line = 0;  // 1-based; 0 when not line-addressable
};

struct PayoffRecord {
  CellKey key;
  double degradation = 0.0;  // percent
};

// Validated, immutable set of payoff records.
class ScenarioTable {
 public:
  ScenarioTable() = default;

  // Validates and indexes. Throws ValidationError listing every violation.
  // `origins`, when given, is parallel to `records` and locates each one in
  // its source for diagnostics.
  static ScenarioTable FromRecords(std::vector<PayoffRecord> records,
                                   std::vector<SourceLocation> origins = {});

  const std::vector<std::string>& datasets() const { return datasets_; }
  // Named attacks (no-attack excluded), canonical order.
  const std::vector<std::string>& attacks(std::string_view dataset) const;
  bool HasDataset(std::string_view dataset) const;

  // Throws LookupError if absent.
  double Degradation(const CellKey& key) const;
  std::optional<double> Find(const CellKey& key) const;

  // Records in canonical order.
  std::vector<PayoffRecord> records() const;
  std::size_t size() const { return cells_.size(); }

  friend bool operator==(const ScenarioTable&, const ScenarioTable&) = default;

 private:
  std::map<CellKey, double> cells_;
  std::vector<std::string> datasets_;
  std::map<std::string, std::vector<std::string>, std::less<>> attacks_;
};

// Reads the documented tabular format (header
// `dataset,attack,surrogate,target,degradation`, `#` comments) or, when the
// first significant character is `{` or `[`, the JSON tree variant with the
// same field names. Throws ParseError for malformed input and ValidationError
// for invariant violations, each listing all problems found.
ScenarioTable ParseTable(std::istream& in, std::string_view source = "<input>");

// Parses and merges several files into one table. A directory argument
// expands to its *.csv and *.json files in name order. Throws IoError when a
// path cannot be read; data problems across all files are reported together.
ScenarioTable LoadTable(const std::vector<std::filesystem::path>& paths);

// Canonical CSV serialization; ParseTable(SerializeTable(t)) == t.
std::string SerializeTable(const ScenarioTable& table);

// Directory holding the bundled tables: $SECGAME_DATA_DIR if set, else the
// source-tree data/ directory when present, else the installed share path.
std::filesystem::path BundledDataDir();

// 2x2 Surrogate game for one attack: rows (attack/undefended,
// attack/defended), columns (undefended, defended).
ZeroSumGame BuildSurrogateGame(
    const ScenarioTable& table, std::string_view dataset,
    std::string_view attack,
    SurrogateClass defended_surrogate = SurrogateClass::kMedianDef);

// 2K x 2 Attack-and-Surrogate game: the Surrogate games of every attack,
// stacked in canonical attack order.
ZeroSumGame BuildAttackSurrogateGame(
    const ScenarioTable& table, std::string_view dataset,
    SurrogateClass defended_surrogate = SurrogateClass::kMedianDef);

// K x 2 Attack game: undefended-surrogate rows only, labeled by attack.
ZeroSumGame BuildAttackGame(const ScenarioTable& table,
                            std::string_view dataset);

// No-attack degradation for a target class.
double BaselineDegradation(const ScenarioTable& table, std::string_view dataset,
                           TargetClass target);

// Row labels used by the game builders.
std::string SurrogateRowLabel(std::string_view attack, bool defended);

}  // namespace secgame

#endif  // SECGAME_SCENARIO_H_
