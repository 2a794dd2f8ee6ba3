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

#include <string>
#include <string_view>
#include <vector>

#include "qmeasure/experiments.hpp"
#include "qmeasure/measures.hpp"

namespace qmeasure {

/// Shortest decimal string that parses back to the same double; "inf",
/// "-inf" and "nan" for non-finite values.
std::string format_number(double x);

std::string format_cell(const Cell& cell);

/// RFC 4180 field quoting: quoted only when the field holds a comma, quote or line break.
std::string csv_field(std::string_view field);

/// Header line followed by one line per row. Lines end in CRLF-free "\n".
std::string rows_to_csv(const ExperimentResult& result);
std::string checks_to_csv(const ExperimentResult& result);

/// Compact JSON of the whole result except runtime_ms. Non-finite numbers
/// are written as strings ("inf"). Re-parsing and re-emitting is byte-identical.
std::string to_json(const ExperimentResult& result);

/// Re-emits a JSON document in the canonical form used by to_json.
std::string canonicalize_json(std::string_view document);

/// StateSetDocument for a set, suitable for `qmeasure measure --states`.
std::string to_state_set_document(const StateSet& set);
std::string to_state_set_document(const std::vector<PureState>& states);

}  // namespace qmeasure
