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

#include "secgame/errors.h"

#include <fmt/format.h>

namespace secgame {

std::string Diagnostic::ToString() const {
  if (line > 0) return fmt::format("{}:{}: {}", source, line, message);
  if (!source.empty()) return fmt::format("{}: {}", source, message);
  return message;
}

DataError::DataError(const std::string& what,
                     std::vector<Diagnostic> diagnostics)
    : std::runtime_error([&] {
        std::string text = what;
        for (const auto& d : diagnostics) text += "\n  " + d.ToString();
        return text;
      }()),
      diagnostics_(std::move(diagnostics)) {}

}  // namespace secgame
