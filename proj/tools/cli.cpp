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

#include "cli.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iostream>
#include <numbers>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "qmeasure/bloch.hpp"
#include "qmeasure/entropy.hpp"
#include "qmeasure/experiments.hpp"
#include "qmeasure/report.hpp"

namespace qmeasure::cli {

namespace {

using Json = nlohmann::json;

std::pair<std::size_t, std::size_t> line_and_column(std::string_view text, std::size_t byte) {
  byte = std::min(byte, text.size());
  std::size_t line = 1;
  std::size_t column = 1;
  for (std::size_t i = 0; i < byte; ++i) {
    if (text[i] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
  return {line, column};
}

double finite_number(const Json& j, const std::string& where) {
  if (!j.is_number()) throw ValidationError(where + ": expected a number");
  const double x = j.get<double>();
  if (!std::isfinite(x)) throw ValidationError(where + ": number is not finite");
  return x;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ValidationError("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

/// Emits a one-row result as "key = value" lines, CSV, or JSON.
void emit_single_row(const ExperimentResult& result, const std::string& format, std::ostream& out) {
  if (format == "csv") {
    out << rows_to_csv(result);
  } else if (format == "json") {
    out << to_json(result);
  } else {
    for (const auto& [key, cell] : result.rows.front()) out << key << " = " << format_cell(cell) << '\n';
  }
}

void emit_table(const ExperimentResult& result, const std::string& format, const std::string& table,
                std::ostream& out) {
  if (format == "json") {
    out << to_json(result);
  } else if (table == "checks") {
    out << checks_to_csv(result);
  } else {
    out << rows_to_csv(result);
  }
}

int report_checks(const ExperimentResult& result, std::ostream& err) {
  std::size_t failed = 0;
  for (const auto& c : result.checks) {
    if (c.passed) continue;
    ++failed;
    err << "FAIL " << c.description << ": observed " << format_number(c.observed) << ", expected "
        << to_string(c.relation) << ' ' << format_number(c.expected) << " +- " << format_number(c.tolerance)
        << '\n';
    if (!c.input.empty()) err << "  input: " << c.input << '\n';
  }
  err << "# " << result.name << ": " << result.checks.size() << " checks, " << failed << " failed, "
      << result.runtime_ms << " ms\n";
  return failed == 0 ? kExitSuccess : kExitCheckFailure;
}

}  // namespace

DocumentError::DocumentError(const std::string& message, std::size_t line, std::size_t column)
    : std::runtime_error(message + " (line " + std::to_string(line) + ", column " + std::to_string(column) + ")"),
      line_(line),
      column_(column) {}

ParsedStateSet parse_state_set(std::string_view document) {
  Json doc;
  try {
    doc = Json::parse(document);
  } catch (const Json::parse_error& e) {
    // e.byte is one past the offending character.
    const auto [line, column] = line_and_column(document, e.byte == 0 ? 0 : e.byte - 1);
    throw DocumentError("malformed state-set document", line, column);
  }

  if (!doc.is_object()) throw ValidationError("document must be a JSON object");
  if (!doc.contains("dim")) throw ValidationError("missing key \"dim\"");
  if (!doc.contains("states")) throw ValidationError("missing key \"states\"");
  const Json& dim_json = doc["dim"];
  if (!dim_json.is_number_integer() || dim_json.get<std::int64_t>() < 1) {
    throw ValidationError("\"dim\" must be a positive integer");
  }
  const auto dim = dim_json.get<std::size_t>();
  const Json& states = doc["states"];
  if (!states.is_array() || states.empty()) throw ValidationError("\"states\" must be a nonempty array");

  std::vector<std::string> labels;
  if (doc.contains("labels")) {
    const Json& l = doc["labels"];
    if (!l.is_array() || l.size() != states.size()) {
      throw ValidationError("\"labels\" must be an array with one string per state");
    }
    for (std::size_t i = 0; i < l.size(); ++i) {
      if (!l[i].is_string()) throw ValidationError("label " + std::to_string(i) + " is not a string");
      labels.push_back(l[i].get<std::string>());
    }
  } else {
    for (std::size_t i = 0; i < states.size(); ++i) labels.push_back("#" + std::to_string(i));
  }

  std::vector<PureState> parsed;
  parsed.reserve(states.size());
  for (std::size_t i = 0; i < states.size(); ++i) {
    const std::string where = "state " + std::to_string(i);
    const Json& amps = states[i];
    if (!amps.is_array() || amps.size() != dim) {
      throw ValidationError(where + ": expected " + std::to_string(dim) + " amplitudes");
    }
    Vector v(static_cast<Eigen::Index>(dim));
    for (std::size_t k = 0; k < dim; ++k) {
      const Json& a = amps[k];
      const std::string at = where + ", amplitude " + std::to_string(k);
      if (!a.is_array() || a.size() != 2) throw ValidationError(at + ": expected a [re, im] pair");
      v(static_cast<Eigen::Index>(k)) = Complex(finite_number(a[0], at), finite_number(a[1], at));
    }
    const double norm2 = v.squaredNorm();
    if (std::abs(norm2 - 1.0) > kDocumentNormTolerance) {
      throw ValidationError(where + ": squared norm " + format_number(norm2) + " is not 1 (tolerance 1e-6)");
    }
    parsed.push_back(std::abs(norm2 - 1.0) > kNormTolerance ? PureState::normalized(std::move(v))
                                                            : PureState(std::move(v)));
  }

  StateSet set(std::move(parsed));
  ParsedStateSet out{std::move(set), {}, {}};
  for (std::size_t idx : out.set.source_indices()) out.labels.push_back(labels[idx]);
  for (const auto& m : out.set.merges()) {
    out.diagnostics.push_back("dedup: state " + std::to_string(m.dropped) + " (" + labels[m.dropped] +
                              ") is the same ray as state " + std::to_string(m.kept) + " (" + labels[m.kept] +
                              "); dropped");
  }
  return out;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Quantized, counting and solid-angle state measures", "qmeasure"};
  app.require_subcommand(1);

  const std::vector<std::string> kFormats = {"csv", "json"};
  const std::vector<std::string> kTextFormats = {"text", "csv", "json"};

  auto* measure = app.add_subcommand("measure", "Measures of a finite state set");
  std::string states_path;
  std::string which = "all";
  std::string measure_format = "text";
  measure->add_option("--states", states_path, "StateSetDocument JSON file")->required();
  measure->add_option("--which", which, "qd (counting), qc (solid angle), qq (quantized) or all")
      ->check(CLI::IsMember({"qd", "qc", "qq", "all"}));
  measure->add_option("--format", measure_format)->check(CLI::IsMember(kTextFormats));

  auto* sweep = app.add_subcommand("sweep-overlap", "Pair entropy and measure against transition probability");
  int steps = 101;
  std::string sweep_format = "csv";
  sweep->add_option("--steps", steps, "Grid points on [0, 1]")->check(CLI::Range(2, 10'000'000));
  sweep->add_option("--format", sweep_format)->check(CLI::IsMember(kFormats));

  auto* cap = app.add_subcommand("cap", "Uniform mixture over a Bloch-sphere cap about +z");
  double theta0 = 0.0;
  std::string method = "analytic";
  std::size_t n_theta = 512;
  std::size_t n_phi = 512;
  std::size_t samples = 1'000'000;
  std::uint64_t cap_seed = kDefaultSeed;
  std::string cap_format = "text";
  std::optional<double> mu_c_total;
  cap->add_option("--theta0", theta0, "Opening angle in radians, in (0, pi]")->required();
  cap->add_option("--method", method)->check(CLI::IsMember({"analytic", "quadrature", "montecarlo"}));
  cap->add_option("--ntheta", n_theta, "Quadrature points in theta");
  cap->add_option("--nphi", n_phi, "Quadrature points in phi");
  cap->add_option("--samples", samples, "Monte Carlo sample count");
  cap->add_option("--seed", cap_seed, "Monte Carlo seed");
  cap->add_option("--mu-c-total", mu_c_total, "Rescale mu_c so the full sphere measures this total")
      ->check(CLI::PositiveNumber);
  cap->add_option("--format", cap_format)->check(CLI::IsMember(kTextFormats));

  auto* experiment = app.add_subcommand("experiment", "Run a named experiment");
  std::string name;
  ExperimentOptions options;
  std::string experiment_format = "csv";
  std::string table = "rows";
  experiment->add_option("name", name, "Experiment name")->required()->check(CLI::IsMember(experiment_names()));
  experiment->add_option("--seed", options.seed);
  experiment->add_option("--steps", options.steps, "overlap-sweep grid size")->check(CLI::Range(2, 10'000'000));
  experiment->add_option("--trials", options.trials, "Randomized trials")->check(CLI::PositiveNumber);
  experiment->add_option("--dim", options.dim, "context-additivity dimension")->check(CLI::Range(2, 64));
  experiment->add_option("--format", experiment_format)->check(CLI::IsMember(kFormats));
  experiment->add_option("--table", table, "CSV table to print")->check(CLI::IsMember({"rows", "checks"}));

  auto* props = app.add_subcommand("props", "Randomized property suite; exit 0 iff every check passes");
  int trials = 1000;
  std::uint64_t props_seed = kDefaultSeed;
  std::string props_format = "csv";
  std::string props_table = "checks";
  props->add_option("--trials", trials)->check(CLI::PositiveNumber);
  props->add_option("--seed", props_seed);
  props->add_option("--format", props_format)->check(CLI::IsMember(kFormats));
  props->add_option("--table", props_table)->check(CLI::IsMember({"rows", "checks"}));

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    err << app.help();
    return kExitUsage;
  }

  try {
    if (*measure) {
      const ParsedStateSet parsed = parse_state_set(read_file(states_path));
      for (const auto& d : parsed.diagnostics) err << d << '\n';
      const StateSet& u = parsed.set;
      ExperimentResult result;
      result.name = "measure";
      Row row;
      if (which == "all") {
        row.emplace_back("dim", static_cast<std::int64_t>(u.dim()));
        row.emplace_back("span_dim", static_cast<std::int64_t>(span_dimension(u.states())));
      }
      if (which == "qd" || which == "all") row.emplace_back("mu_d", counting_measure(u).value());
      if (which == "qc" || which == "all") {
        if (u.dim() == 2) {
          row.emplace_back("mu_c", solid_angle_measure(u).value());
        } else {
          row.emplace_back("mu_c", std::string("n/a"));
        }
      }
      if (which == "qq" || which == "all") {
        row.emplace_back("mu_q", quantized_measure(u).value());
        row.emplace_back("S", von_neumann_entropy(uniform_mixture(u)).bits());
      }
      result.rows.push_back(std::move(row));
      emit_single_row(result, measure_format, out);
      return kExitSuccess;
    }

    if (*sweep) {
      const ExperimentResult result = run_overlap_sweep(steps);
      emit_table(result, sweep_format, "rows", out);
      return report_checks(result, err);
    }

    if (*cap) {
      const SphericalCap region(theta0);
      CapMethod cap_method = AnalyticMethod{};
      if (method == "quadrature") cap_method = QuadratureGrid{n_theta, n_phi};
      if (method == "montecarlo") cap_method = MonteCarloConfig{samples, cap_seed};
      const DensityMatrix rho = cap_mixture(region, cap_method);
      const auto& lambda = rho.spectrum().eigenvalues;
      ExperimentResult result;
      result.name = "cap";
      result.rows.push_back({{"theta0", theta0},
                             {"method", method_name(cap_method)},
                             {"lambda_max", lambda[0]},
                             {"lambda_min", lambda[1]},
                             {"S", von_neumann_entropy(rho).bits()},
                             {"mu_q", measure_from_mixture(rho).value()},
                             {"mu_c", solid_angle_measure(region, mu_c_total).value()}});
      emit_single_row(result, cap_format, out);
      if (region.theta0() < std::numbers::pi) {
        err << "# note: mu_q of a partial cap extends the measure beyond finite sets and the full sphere\n";
      }
      return kExitSuccess;
    }

    if (*experiment) {
      const ExperimentResult result = run_experiment(name, options);
      emit_table(result, experiment_format, table, out);
      return report_checks(result, err);
    }

    if (*props) {
      const ExperimentResult result = run_property_suite(trials, props_seed);
      emit_table(result, props_format, props_table, out);
      return report_checks(result, err);
    }
  } catch (const DocumentError& e) {
    err << "error: " << e.what() << '\n';
    return kExitValidation;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitValidation;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << '\n';
    return kExitValidation;
  }
  return kExitUsage;
}

}  // namespace qmeasure::cli
