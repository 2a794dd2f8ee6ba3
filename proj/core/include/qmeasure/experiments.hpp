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

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

namespace qmeasure {

/// A table cell. Infinite measures are stored as the string "inf".
using Cell = std::variant<double, std::int64_t, std::string>;

/// Ordered (column, value) pairs; every row of a result shares the same columns.
using Row = std::vector<std::pair<std::string, Cell>>;

/// How a check compares observed against expected.
enum class Relation {
  kEqual,    // |observed - expected| <= tolerance
  kAtMost,   // observed <= expected + tolerance
  kAtLeast,  // observed >= expected - tolerance
};

std::string_view to_string(Relation relation);

struct Check {
  std::string description;
  Relation relation = Relation::kEqual;
  bool passed = false;
  double observed = 0.0;
  double expected = 0.0;
  double tolerance = 0.0;
  /// Serialized offending input when the check failed; empty otherwise.
  std::string input;
};

/// Builds a check and evaluates it. NaN observations always fail.
Check make_check(std::string description, Relation relation, double observed, double expected,
                 double tolerance, std::string input = {});

struct ExperimentResult {
  std::string name;
  std::vector<Row> rows;
  std::vector<Check> checks;
  std::uint64_t seed = 0;
  /// Wall-clock time; the only field that varies between identical runs.
  std::int64_t runtime_ms = 0;

  bool all_passed() const;
  std::vector<std::string> columns() const;
};

/// Published default seed for every shipped experiment.
inline constexpr std::uint64_t kDefaultSeed = 42;

ExperimentResult run_three_measures_table();
ExperimentResult run_overlap_sweep(int steps);
ExperimentResult run_nonmonotonicity_demo();
ExperimentResult run_context_additivity(int dim, int trials, std::uint64_t seed);
ExperimentResult run_property_suite(int trials, std::uint64_t seed);

struct ExperimentOptions {
  std::uint64_t seed = kDefaultSeed;
  int steps = 101;
  int trials = 50;
  int dim = 4;
};

/// Names accepted by run_experiment, in listing order.
const std::vector<std::string>& experiment_names();

/// Throws std::invalid_argument for an unknown name.
ExperimentResult run_experiment(std::string_view name, const ExperimentOptions& options = {});

}  // namespace qmeasure
