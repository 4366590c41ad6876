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

#ifndef SECGAME_REPORT_FORMAT_H_
#define SECGAME_REPORT_FORMAT_H_

#include <optional>
#include <string>
#include <string_view>

#include "secgame/analysis.h"
#include "secgame/equilibria.h"

namespace secgame {

// text: aligned columns for people; csv: one header line then rows;
// tree: JSON.
enum class OutputFormat { kText, kCsv, kTree };

std::optional<OutputFormat> ParseOutputFormat(std::string_view token);
std::string_view ToString(OutputFormat format);

// Percent values are printed with two decimals, half-up. All serializations
// end with a newline and are byte-stable for identical input.
std::string FormatReport(const TransparencyReport& report, OutputFormat format);
std::string FormatReport(const MixingReport& report, OutputFormat format);
std::string FormatReport(const UnderestimationReport& report,
                         OutputFormat format);
std::string FormatReport(const GameSummary& summary, OutputFormat format);

struct SimulationSummary {
  ZeroSumGame game;
  FictitiousPlayTrace trace;
  std::uint64_t seed = 0;
  double lp_value = 0.0;
  double gap = 0.0;  // |empirical_value - lp_value|
};

std::string FormatReport(const SimulationSummary& summary, OutputFormat format);

}  // namespace secgame

#endif  // SECGAME_REPORT_FORMAT_H_
