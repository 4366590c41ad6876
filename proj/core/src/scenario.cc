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

#include "secgame/scenario.h"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <istream>
#include <iterator>
#include <set>
#include <sstream>

#include <fmt/format.h>
#include <json.hpp>

#include "secgame/errors.h"

namespace secgame {
namespace {

constexpr std::array<std::string_view, 5> kHeader = {
    "dataset", "attack", "surrogate", "target", "degradation"};
constexpr int kMaxFractionDigits = 4;

std::string_view Trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> Split(std::string_view line, char delim) {
  std::vector<std::string_view> fields;
  std::size_t start = 0;
  while (true) {
    const std::size_t pos = line.find(delim, start);
    fields.push_back(Trim(line.substr(start, pos - start)));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return fields;
}

char DetectDelimiter(std::string_view header) {
  if (header.find('\t') != std::string_view::npos) return '\t';
  if (header.find(',') == std::string_view::npos &&
      header.find(';') != std::string_view::npos) {
    return ';';
  }
  return ',';
}

// Decimal with at most four fraction digits, optional leading minus.
std::optional<double> ParseDecimal(std::string_view text) {
  std::string_view body = text;
  if (!body.empty() && body.front() == '-') body.remove_prefix(1);
  const std::size_t dot = body.find('.');
  const std::string_view whole = body.substr(0, dot);
  const std::string_view frac =
      dot == std::string_view::npos ? std::string_view{} : body.substr(dot + 1);
  auto all_digits = [](std::string_view s) {
    return std::all_of(s.begin(), s.end(),
                       [](char c) { return c >= '0' && c <= '9'; });
  };
  if (whole.empty() || !all_digits(whole) || !all_digits(frac)) return std::nullopt;
  if (dot != std::string_view::npos &&
      (frac.empty() || frac.size() > kMaxFractionDigits)) {
    return std::nullopt;
  }
  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size()) return std::nullopt;
  return value;
}

bool IsLowercaseToken(std::string_view s) {
  return !s.empty() && std::none_of(s.begin(), s.end(), [](char c) {
    return std::isupper(static_cast<unsigned char>(c)) ||
           std::isspace(static_cast<unsigned char>(c));
  });
}

// Records read from one or more sources, before table validation.
struct RawRecords {
  std::vector<PayoffRecord> records;
  std::vector<SourceLocation> origins;
  std::vector<Diagnostic> parse_errors;
  std::vector<Diagnostic> validation_errors;
};

// Token-level checks shared by the CSV and JSON readers.
void AddRecord(RawRecords& raw, const SourceLocation& where,
               std::string_view dataset, std::string_view attack,
               std::string_view surrogate, std::string_view target,
               double degradation) {
  const std::size_t before = raw.validation_errors.size();
  auto fail = [&](std::string message) {
    raw.validation_errors.push_back({where.source, where.line, std::move(message)});
  };
  if (!IsLowercaseToken(dataset)) fail(fmt::format("invalid dataset token '{}'", dataset));
  if (!IsLowercaseToken(attack)) fail(fmt::format("invalid attack token '{}'", attack));
  const auto s = ParseSurrogateClass(surrogate);
  if (!s) fail(fmt::format("unknown surrogate class '{}'", surrogate));
  const auto t = ParseTargetClass(target);
  if (!t) fail(fmt::format("unknown target class '{}'", target));
  if (raw.validation_errors.size() != before) return;
  raw.records.push_back({{std::string(dataset), std::string(attack), *s, *t}, degradation});
  raw.origins.push_back(where);
}

void ReadCsv(std::istream& in, std::string_view source, RawRecords& raw) {
  std::string line;
  int line_no = 0;
  bool have_header = false;
  char delim = ',';
  while (std::getline(in, line)) {
    ++line_no;
    const std::string_view view = Trim(line);
    if (view.empty() || view.front() == '#') continue;
    const SourceLocation where{std::string(source), line_no};
    if (!have_header) {
      delim = DetectDelimiter(view);
      const auto fields = Split(view, delim);
      if (!std::equal(fields.begin(), fields.end(), kHeader.begin(), kHeader.end())) {
        raw.parse_errors.push_back(
            {where.source, line_no,
             "expected header 'dataset,attack,surrogate,target,degradation'"});
        return;
      }
      have_header = true;
      continue;
    }
    const auto fields = Split(view, delim);
    if (fields.size() != kHeader.size()) {
      raw.parse_errors.push_back(
          {where.source, line_no,
           fmt::format("expected {} fields, found {}", kHeader.size(), fields.size())});
      continue;
    }
    const auto degradation = ParseDecimal(fields[4]);
    if (!degradation) {
      raw.parse_errors.push_back(
          {where.source, line_no,
           fmt::format("malformed degradation '{}' (decimal with up to {} "
                       "fraction digits)",
                       fields[4], kMaxFractionDigits)});
      continue;
    }
    AddRecord(raw, where, fields[0], fields[1], fields[2], fields[3], *degradation);
  }
}

void ReadJson(std::istream& in, std::string_view source, RawRecords& raw) {
  using nlohmann::json;
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::parse_error& e) {
    raw.parse_errors.push_back({std::string(source), 0, e.what()});
    return;
  }
  const json* list = &doc;
  if (doc.is_object()) {
    if (!doc.contains("records") || !doc["records"].is_array()) {
      raw.parse_errors.push_back(
          {std::string(source), 0, "tree input needs a 'records' array"});
      return;
    }
    list = &doc["records"];
  } else if (!doc.is_array()) {
    raw.parse_errors.push_back(
        {std::string(source), 0, "tree input must be an object or an array"});
    return;
  }
  int index = 0;
  for (const json& item : *list) {
    ++index;
    const SourceLocation where{fmt::format("{} record {}", source, index), 0};
    std::vector<std::string> missing;
    for (std::size_t f = 0; f < 4; ++f) {
      const std::string field(kHeader[f]);
      if (!item.is_object() || !item.contains(field) || !item[field].is_string()) {
        missing.push_back(field);
      }
    }
    if (!item.is_object() || !item.contains("degradation") ||
        !item["degradation"].is_number()) {
      missing.emplace_back("degradation");
    }
    if (!missing.empty()) {
      raw.parse_errors.push_back(
          {where.source, 0,
           fmt::format("missing or mistyped field(s): {}", fmt::join(missing, ", "))});
      continue;
    }
    AddRecord(raw, where, item["dataset"].get<std::string>(),
              item["attack"].get<std::string>(),
              item["surrogate"].get<std::string>(),
              item["target"].get<std::string>(),
              item["degradation"].get<double>());
  }
}

void ReadAny(std::istream& in, std::string_view source, RawRecords& raw) {
  std::string text{std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
  // Skip a UTF-8 byte order mark.
  if (text.rfind("\xEF\xBB\xBF", 0) == 0) text.erase(0, 3);
  const auto first = text.find_first_not_of(" \t\r\n");
  std::istringstream stream(text);
  if (first != std::string::npos && (text[first] == '{' || text[first] == '[')) {
    ReadJson(stream, source, raw);
  } else {
    ReadCsv(stream, source, raw);
  }
}

std::string Locate(const SourceLocation& where) {
  if (where.line > 0) return fmt::format("{}:{}", where.source, where.line);
  return where.source;
}

std::vector<Diagnostic> Validate(const std::vector<PayoffRecord>& records,
                                 const std::vector<SourceLocation>& origins,
                                 std::map<CellKey, double>& cells) {
  std::vector<Diagnostic> diags;
  std::map<CellKey, std::size_t> first_seen;
  auto origin = [&](std::size_t i) {
    return i < origins.size() ? origins[i] : SourceLocation{"<records>", 0};
  };
  for (std::size_t i = 0; i < records.size(); ++i) {
    const auto& r = records[i];
    const auto where = origin(i);
    auto fail = [&](std::string message) {
      diags.push_back({where.source, where.line, std::move(message)});
    };
    const bool baseline = r.key.attack == kNoAttack;
    if (baseline != (r.key.surrogate == SurrogateClass::kNone)) {
      fail(fmt::format("surrogate 'none' is reserved for '{}' rows and required "
                       "by them: {}",
                       kNoAttack, r.key.ToString()));
    }
    if (!std::isfinite(r.degradation) || r.degradation < 0.0 ||
        r.degradation > kPercentScale) {
      fail(fmt::format("degradation {} outside [0, 100] for {}", r.degradation,
                       r.key.ToString()));
    }
    const auto [it, inserted] = first_seen.emplace(r.key, i);
    if (!inserted) {
      fail(fmt::format("duplicate key {} (first defined at {})", r.key.ToString(),
                       Locate(origin(it->second))));
      continue;
    }
    cells.emplace(r.key, r.degradation);
  }

  if (first_seen.empty()) {
    diags.push_back({"", 0, "no datasets: the table has no records"});
    return diags;
  }

  std::set<std::string> datasets;
  std::set<std::pair<std::string, std::string>> attacks;
  for (const auto& [key, index] : first_seen) {
    datasets.insert(key.dataset);
    if (key.attack != kNoAttack) attacks.emplace(key.dataset, key.attack);
  }
  for (const auto& dataset : datasets) {
    for (TargetClass t : kTargets) {
      const CellKey key{dataset, std::string(kNoAttack), SurrogateClass::kNone, t};
      if (!first_seen.contains(key)) {
        diags.push_back({"", 0, fmt::format("missing no-attack baseline {}", key.ToString())});
      }
    }
  }
  for (const auto& [dataset, attack] : attacks) {
    for (TargetClass t : kTargets) {
      for (SurrogateClass s : kAttackSurrogates) {
        const CellKey key{dataset, attack, s, t};
        if (!first_seen.contains(key)) {
          diags.push_back({"", 0, fmt::format("missing cell {}", key.ToString())});
        }
      }
    }
  }
  return diags;
}

ScenarioTable Finish(RawRecords raw) {
  if (!raw.parse_errors.empty()) {
    throw ParseError(fmt::format("{} malformed entr{}", raw.parse_errors.size(),
                                 raw.parse_errors.size() == 1 ? "y" : "ies"),
                     std::move(raw.parse_errors));
  }
  if (!raw.validation_errors.empty()) {
    // Still run table-level checks so every problem is reported at once.
    std::map<CellKey, double> scratch;
    auto more = Validate(raw.records, raw.origins, scratch);
    raw.validation_errors.insert(raw.validation_errors.end(), more.begin(), more.end());
    throw ValidationError(
        fmt::format("{} validation error(s)", raw.validation_errors.size()),
        std::move(raw.validation_errors));
  }
  return ScenarioTable::FromRecords(std::move(raw.records), std::move(raw.origins));
}

const std::vector<std::string>& NoAttacks() {
  static const std::vector<std::string> empty;
  return empty;
}

void RequireDataset(const ScenarioTable& table, std::string_view dataset) {
  if (!table.HasDataset(dataset)) {
    throw LookupError(fmt::format("unknown dataset '{}'", dataset), table.datasets());
  }
}

void RequireAttack(const ScenarioTable& table, std::string_view dataset,
                   std::string_view attack) {
  RequireDataset(table, dataset);
  const auto& attacks = table.attacks(dataset);
  if (std::find(attacks.begin(), attacks.end(), attack) == attacks.end()) {
    throw LookupError(
        fmt::format("unknown attack '{}' for dataset '{}'", attack, dataset), attacks);
  }
}

void RequireDefendedSurrogate(SurrogateClass s) {
  if (!IsDefendedSurrogate(s)) {
    throw InvalidInputError(fmt::format(
        "'{}' is not a defended surrogate class (worst-def, median-def, best-def)",
        ToString(s)));
  }
}

double Cell(const ScenarioTable& table, CellKey key) {
  const auto value = table.Find(key);
  if (!value) throw BuildError(fmt::format("missing cell {}", key.ToString()));
  return *value;
}

std::vector<double> SurrogateRow(const ScenarioTable& table, std::string_view dataset,
                                  std::string_view attack, SurrogateClass s) {
  std::vector<double> row;
  for (TargetClass t : kTargets) {
    row.push_back(Cell(table, {std::string(dataset), std::string(attack), s, t}));
  }
  return row;
}

std::vector<std::string> TargetLabels() {
  return {std::string(ToString(TargetClass::kUndefended)),
          std::string(ToString(TargetClass::kDefended))};
}

}  // namespace

std::string_view ToString(SurrogateClass s) {
  switch (s) {
    case SurrogateClass::kUndefended: return "undefended";
    case SurrogateClass::kWorstDef: return "worst-def";
    case SurrogateClass::kMedianDef: return "median-def";
    case SurrogateClass::kBestDef: return "best-def";
    case SurrogateClass::kNone: return "none";
  }
  return "?";
}

std::string_view ToString(TargetClass t) {
  return t == TargetClass::kUndefended ? "undefended" : "defended";
}

std::optional<SurrogateClass> ParseSurrogateClass(std::string_view token) {
  for (SurrogateClass s : {SurrogateClass::kUndefended, SurrogateClass::kWorstDef,
                           SurrogateClass::kMedianDef, SurrogateClass::kBestDef,
                           SurrogateClass::kNone}) {
    if (token == ToString(s)) return s;
  }
  return std::nullopt;
}

std::optional<TargetClass> ParseTargetClass(std::string_view token) {
  for (TargetClass t : kTargets) {
    if (token == ToString(t)) return t;
  }
  return std::nullopt;
}

bool IsDefendedSurrogate(SurrogateClass s) {
  return s == SurrogateClass::kWorstDef || s == SurrogateClass::kMedianDef ||
         s == SurrogateClass::kBestDef;
}

std::strong_ordering CellKey::operator<=>(const CellKey& other) const {
  if (auto c = dataset <=> other.dataset; c != 0) return c;
  const bool named = attack != kNoAttack;
  const bool other_named = other.attack != kNoAttack;
  if (auto c = named <=> other_named; c != 0) return c;
  if (auto c = attack <=> other.attack; c != 0) return c;
  if (auto c = surrogate <=> other.surrogate; c != 0) return c;
  return target <=> other.target;
}

std::string CellKey::ToString() const {
  return fmt::format("({}, {}, {}, {})", dataset, attack,
                     secgame::ToString(surrogate), secgame::ToString(target));
}

ScenarioTable ScenarioTable::FromRecords(std::vector<PayoffRecord> records,
                                         std::vector<SourceLocation> origins) {
  ScenarioTable table;
  auto diags = Validate(records, origins, table.cells_);
  if (!diags.empty()) {
    throw ValidationError(fmt::format("{} validation error(s)", diags.size()),
                          std::move(diags));
  }
  for (const auto& [key, value] : table.cells_) {
    if (table.datasets_.empty() || table.datasets_.back() != key.dataset) {
      table.datasets_.push_back(key.dataset);
      table.attacks_[key.dataset];
    }
    auto& attacks = table.attacks_[key.dataset];
    if (key.attack != kNoAttack && (attacks.empty() || attacks.back() != key.attack)) {
      attacks.push_back(key.attack);
    }
  }
  return table;
}

const std::vector<std::string>& ScenarioTable::attacks(std::string_view dataset) const {
  const auto it = attacks_.find(dataset);
  return it == attacks_.end() ? NoAttacks() : it->second;
}

bool ScenarioTable::HasDataset(std::string_view dataset) const {
  return attacks_.find(dataset) != attacks_.end();
}

std::optional<double> ScenarioTable::Find(const CellKey& key) const {
  const auto it = cells_.find(key);
  if (it == cells_.end()) return std::nullopt;
  return it->second;
}

double ScenarioTable::Degradation(const CellKey& key) const {
  const auto value = Find(key);
  if (!value) throw LookupError(fmt::format("no entry {}", key.ToString()), {});
  return *value;
}

std::vector<PayoffRecord> ScenarioTable::records() const {
  std::vector<PayoffRecord> out;
  out.reserve(cells_.size());
  for (const auto& [key, value] : cells_) out.push_back({key, value});
  return out;
}

ScenarioTable ParseTable(std::istream& in, std::string_view source) {
  RawRecords raw;
  ReadAny(in, source, raw);
  return Finish(std::move(raw));
}

ScenarioTable LoadTable(const std::vector<std::filesystem::path>& paths) {
  namespace fs = std::filesystem;
  std::vector<fs::path> files;
  for (const auto& path : paths) {
    std::error_code ec;
    if (fs::is_directory(path, ec)) {
      std::vector<fs::path> found;
      for (const auto& entry : fs::directory_iterator(path, ec)) {
        const auto ext = entry.path().extension();
        if (entry.is_regular_file() && (ext == ".csv" || ext == ".json")) {
          found.push_back(entry.path());
        }
      }
      if (ec) throw IoError(fmt::format("cannot list '{}': {}", path.string(), ec.message()));
      std::sort(found.begin(), found.end());
      files.insert(files.end(), found.begin(), found.end());
    } else {
      files.push_back(path);
    }
  }
  RawRecords raw;
  for (const auto& file : files) {
    std::ifstream in(file, std::ios::binary);
    if (!in) throw IoError(fmt::format("cannot read '{}'", file.string()));
    ReadAny(in, file.string(), raw);
  }
  return Finish(std::move(raw));
}

std::string SerializeTable(const ScenarioTable& table) {
  std::string out = fmt::format("{}\n", fmt::join(kHeader, ","));
  for (const auto& r : table.records()) {
    char buf[64];
    const auto [end, ec] =
        std::to_chars(buf, buf + sizeof(buf), r.degradation, std::chars_format::fixed);
    out += fmt::format("{},{},{},{},{}\n", r.key.dataset, r.key.attack,
                       ToString(r.key.surrogate), ToString(r.key.target),
                       std::string_view(buf, static_cast<std::size_t>(end - buf)));
  }
  return out;
}

std::filesystem::path BundledDataDir() {
  if (const char* env = std::getenv("SECGAME_DATA_DIR"); env && *env) return env;
  std::error_code ec;
  if (std::filesystem::is_directory(SECGAME_SOURCE_DATA_DIR, ec)) {
    return SECGAME_SOURCE_DATA_DIR;
  }
  return SECGAME_INSTALL_DATA_DIR;
}

std::string SurrogateRowLabel(std::string_view attack, bool defended) {
  return fmt::format("{}/{}", attack, defended ? "defended" : "undefended");
}

ZeroSumGame BuildSurrogateGame(const ScenarioTable& table, std::string_view dataset,
                               std::string_view attack,
                               SurrogateClass defended_surrogate) {
  RequireDefendedSurrogate(defended_surrogate);
  RequireAttack(table, dataset, attack);
  return ZeroSumGame(
      {SurrogateRowLabel(attack, false), SurrogateRowLabel(attack, true)},
      TargetLabels(),
      {SurrogateRow(table, dataset, attack, SurrogateClass::kUndefended),
       SurrogateRow(table, dataset, attack, defended_surrogate)});
}

ZeroSumGame BuildAttackSurrogateGame(const ScenarioTable& table,
                                     std::string_view dataset,
                                     SurrogateClass defended_surrogate) {
  RequireDefendedSurrogate(defended_surrogate);
  RequireDataset(table, dataset);
  std::vector<std::string> labels;
  std::vector<std::vector<double>> payoff;
  for (const auto& attack : table.attacks(dataset)) {
    labels.push_back(SurrogateRowLabel(attack, false));
    payoff.push_back(SurrogateRow(table, dataset, attack, SurrogateClass::kUndefended));
    labels.push_back(SurrogateRowLabel(attack, true));
    payoff.push_back(SurrogateRow(table, dataset, attack, defended_surrogate));
  }
  if (payoff.empty()) {
    throw BuildError(fmt::format("dataset '{}' has no attacks", dataset));
  }
  return ZeroSumGame(std::move(labels), TargetLabels(), std::move(payoff));
}

ZeroSumGame BuildAttackGame(const ScenarioTable& table, std::string_view dataset) {
  RequireDataset(table, dataset);
  std::vector<std::string> labels;
  std::vector<std::vector<double>> payoff;
  for (const auto& attack : table.attacks(dataset)) {
    labels.push_back(attack);
    payoff.push_back(SurrogateRow(table, dataset, attack, SurrogateClass::kUndefended));
  }
  if (payoff.empty()) {
    throw BuildError(fmt::format("dataset '{}' has no attacks", dataset));
  }
  return ZeroSumGame(std::move(labels), TargetLabels(), std::move(payoff));
}

double BaselineDegradation(const ScenarioTable& table, std::string_view dataset,
                           TargetClass target) {
  RequireDataset(table, dataset);
  const CellKey key{std::string(dataset), std::string(kNoAttack),
                    SurrogateClass::kNone, target};
  const auto value = table.Find(key);
  if (!value) throw LookupError(fmt::format("missing baseline {}", key.ToString()), {});
  return *value;
}

}  // namespace secgame
