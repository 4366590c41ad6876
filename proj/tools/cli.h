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

#ifndef SECGAME_TOOLS_CLI_H_
#define SECGAME_TOOLS_CLI_H_

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "secgame/report_format.h"
#include "secgame/scenario.h"

namespace secgame::cli {

// Process exit codes; stable for scripting.
enum ExitCode : int {
  kOk = 0,
  kUsage = 1,
  kDataError = 2,
  kIoError = 3,
};

struct CliConfig {
  std::string data_path;  // empty: bundled datasets
  std::string dataset;    // empty: every dataset (reports) or the only one
  OutputFormat output_format = OutputFormat::kText;
  SurrogateClass defended_surrogate = SurrogateClass::kMedianDef;
  std::uint64_t seed = 0;
  std::size_t iterations = 100000;
  bool all_datasets = false;
};

// Runs the tool on argv-style arguments (args[0] is the program name).
// Everything is written to `out` / `err`; the return value is an ExitCode.
int Run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace secgame::cli

#endif  // SECGAME_TOOLS_CLI_H_
