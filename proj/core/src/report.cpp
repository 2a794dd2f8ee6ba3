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

#include "qmeasure/report.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <sstream>

#include "json.hpp"

namespace qmeasure {

namespace {

using Json = nlohmann::ordered_json;

Json json_number(double x) {
  if (std::isfinite(x)) return Json(x);
  return Json(format_number(x));
}

Json json_cell(const Cell& cell) {
  struct Visitor {
    Json operator()(double x) const { return json_number(x); }
    Json operator()(std::int64_t x) const { return Json(x); }
    Json operator()(const std::string& s) const { return Json(s); }
  };
  return std::visit(Visitor{}, cell);
}

}  // namespace

std::string format_number(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  std::array<char, 64> buf{};
  const auto [end, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), x);
  if (ec != std::errc()) throw std::runtime_error("format_number: conversion failed");
  return std::string(buf.data(), end);
}

std::string format_cell(const Cell& cell) {
  struct Visitor {
    std::string operator()(double x) const { return format_number(x); }
    std::string operator()(std::int64_t x) const { return std::to_string(x); }
    std::string operator()(const std::string& s) const { return s; }
  };
  return std::visit(Visitor{}, cell);
}

std::string csv_field(std::string_view field) {
  if (field.find_first_of(",\"\r\n") == std::string_view::npos) return std::string(field);
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

std::string rows_to_csv(const ExperimentResult& result) {
  std::ostringstream out;
  const auto columns = result.columns();
  for (std::size_t i = 0; i < columns.size(); ++i) {
    if (i) out << ',';
    out << csv_field(columns[i]);
  }
  out << '\n';
  for (const auto& row : result.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) out << ',';
      out << csv_field(format_cell(row[i].second));
    }
    out << '\n';
  }
  return out.str();
}

std::string checks_to_csv(const ExperimentResult& result) {
  std::ostringstream out;
  out << "description,relation,passed,observed,expected,tolerance,input\n";
  for (const auto& c : result.checks) {
    out << csv_field(c.description) << ',' << to_string(c.relation) << ',' << (c.passed ? "pass" : "fail")
        << ',' << format_number(c.observed) << ',' << format_number(c.expected) << ','
        << format_number(c.tolerance) << ',' << csv_field(c.input) << '\n';
  }
  return out.str();
}

std::string to_json(const ExperimentResult& result) {
  Json doc;
  doc["name"] = result.name;
  doc["seed"] = result.seed;
  doc["columns"] = result.columns();
  Json rows = Json::array();
  for (const auto& row : result.rows) {
    Json r = Json::object();
    for (const auto& [column, cell] : row) r[column] = json_cell(cell);
    rows.push_back(std::move(r));
  }
  doc["rows"] = std::move(rows);
  Json checks = Json::array();
  for (const auto& c : result.checks) {
    Json j;
    j["description"] = c.description;
    j["relation"] = std::string(to_string(c.relation));
    j["passed"] = c.passed;
    j["observed"] = json_number(c.observed);
    j["expected"] = json_number(c.expected);
    j["tolerance"] = json_number(c.tolerance);
    j["input"] = c.input;
    checks.push_back(std::move(j));
  }
  doc["checks"] = std::move(checks);
  doc["all_passed"] = result.all_passed();
  return doc.dump() + "\n";
}

std::string canonicalize_json(std::string_view document) {
  return Json::parse(document).dump() + "\n";
}

std::string to_state_set_document(const std::vector<PureState>& states) {
  Json doc;
  doc["dim"] = states.empty() ? 0 : states.front().dim();
  Json list = Json::array();
  for (const auto& psi : states) {
    Json amps = Json::array();
    for (std::size_t i = 0; i < psi.dim(); ++i) amps.push_back(Json::array({psi[i].real(), psi[i].imag()}));
    list.push_back(std::move(amps));
  }
  doc["states"] = std::move(list);
  return doc.dump();
}

std::string to_state_set_document(const StateSet& set) { return to_state_set_document(set.states()); }

}  // namespace qmeasure
