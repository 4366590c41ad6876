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

#ifndef SECGAME_ERRORS_H_
#define SECGAME_ERRORS_H_

#include <stdexcept>
#include <string>
#include <vector>

namespace secgame {

// Caller passed something that violates an operation's precondition
// (dimension mismatch, wrong game shape, size above an enumeration bound).
class InvalidInputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// One located problem in a scenario source. `line` is 1-based; 0 means the
// problem is not tied to a single line (e.g. a missing cell).
struct Diagnostic {
  std::string source;
  int line = 0;
  std::string message;

  std::string ToString() const;
};

// Base for everything wrong with scenario data. Carries every diagnostic
// found, not only the first.
class DataError : public std::runtime_error {
 public:
  DataError(const std::string& what, std::vector<Diagnostic> diagnostics);
  const std::vector<Diagnostic>& diagnostics() const { return diagnostics_; }

 private:
  std::vector<Diagnostic> diagnostics_;
};

// Structurally malformed input: bad header, wrong field count, bad number.
class ParseError : public DataError {
 public:
  using DataError::DataError;
};

// Well-formed rows that break table invariants: duplicate keys, missing
// cells or baselines, unknown tokens, out-of-range values.
class ValidationError : public DataError {
 public:
  using DataError::DataError;
};

// A game could not be assembled because a required cell is absent.
class BuildError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Unknown dataset/attack/baseline. `candidates` lists the valid names.
class LookupError : public std::runtime_error {
 public:
  LookupError(const std::string& what, std::vector<std::string> candidates)
      : std::runtime_error(what), candidates_(std::move(candidates)) {}
  const std::vector<std::string>& candidates() const { return candidates_; }

 private:
  std::vector<std::string> candidates_;
};

// A scenario file or directory could not be read.
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace secgame

#endif  // SECGAME_ERRORS_H_
