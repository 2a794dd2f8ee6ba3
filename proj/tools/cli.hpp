// Copyright 2026 The qmeasure Authors
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

#pragma once

#include <cstddef>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "qmeasure/measures.hpp"

namespace qmeasure::cli {

inline constexpr int kExitSuccess = 0;
inline constexpr int kExitCheckFailure = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitValidation = 3;

/// Largest accepted deviation of a document state's squared norm from one.
inline constexpr double kDocumentNormTolerance = 1e-6;

/// Malformed JSON. Line and column are 1-based.
class DocumentError : public std::runtime_error {
 public:
  DocumentError(const std::string& message, std::size_t line, std::size_t column);
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

/// Well-formed JSON that does not describe a valid state set.
class ValidationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct ParsedStateSet {
  StateSet set;
  /// Labels of the kept states; generated as "#i" when the document has none.
  std::vector<std::string> labels;
  /// One line per merged duplicate ray.
  std::vector<std::string> diagnostics;
};

/// Parses a StateSetDocument:
///   {"dim": 2, "states": [[[re, im], [re, im]], ...], "labels": ["a", ...]}
/// States within kDocumentNormTolerance of unit norm are rescaled exactly to
/// unit norm; anything further off is rejected with the state's index.
ParsedStateSet parse_state_set(std::string_view document);

/// Runs the command line (args excludes the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qmeasure::cli
