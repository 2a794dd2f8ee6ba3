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

// Acceptance suite: one line per criterion, exit status 0 iff all pass.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"
#include "oracles.hpp"
#include "qmeasure/bloch.hpp"
#include "qmeasure/entropy.hpp"
#include "qmeasure/experiments.hpp"
#include "qmeasure/measures.hpp"
#include "qmeasure/random.hpp"
#include "qmeasure/report.hpp"

using namespace qmeasure;

namespace {

constexpr double kPi = std::numbers::pi;
constexpr std::uint64_t kSeed = 20261018;

struct Verdict {
  bool passed;
  std::string detail;
};

std::string fmt(double x) { return format_number(x); }

PureState z_plus() { return PureState::basis(2, 0); }
PureState z_minus() { return PureState::basis(2, 1); }
PureState x_plus() { return bloch_state(kPi / 2, 0.0); }

std::vector<PureState> random_states(std::size_t dim, std::size_t count, Rng& rng) {
  std::vector<PureState> out;
  for (std::size_t i = 0; i < count; ++i) out.push_back(random_pure_state(dim, rng));
  return out;
}

Verdict single_state_measure() {
  Rng rng(kSeed);
  double worst = 0.0;
  for (int t = 0; t < 100; ++t) {
    const StateSet u{random_pure_state(rng.uniform_index(2, 8), rng)};
    worst = std::max(worst, std::abs(quantized_measure(u).value() - 1.0));
    // The eigendecomposition path must agree too.
    worst = std::max(worst, std::abs(measure_from_mixture(uniform_mixture(u)).value() - 1.0));
  }
  return {worst <= 1e-12, "max |mu_q - 1| = " + fmt(worst) + " (tol 1e-12, 100 states)"};
}

Verdict orthogonal_pair() {
  const double mu = quantized_measure(StateSet{z_plus(), z_minus()}).value();
  return {std::abs(mu - 2.0) <= 1e-9, "mu_q = " + fmt(mu) + " (expected 2 +- 1e-9)"};
}

Verdict pair_oracle_equivalence() {
  Rng rng(kSeed + 3);
  double worst = 0.0;
  for (int t = 0; t < 1000; ++t) {
    const PureState a = random_pure_state(2, rng);
    const PureState b = random_pure_state(2, rng);
    worst = std::max(worst, std::abs(pair_measure(transition_probability(a, b)).value() -
                                     quantized_measure(StateSet{a, b}).value()));
  }
  return {worst <= 1e-9, "max |pair_measure(p) - mu_q| = " + fmt(worst) + " (tol 1e-9, 1000 pairs)"};
}

Verdict non_monotonicity() {
  const double pair = quantized_measure(StateSet{z_plus(), z_minus()}).value();
  const double triple = quantized_measure(StateSet{z_plus(), z_minus(), x_plus()}).value();
  const bool ok = std::abs(triple - 1.88988) <= 1e-4 && triple < pair;
  return {ok, "mu_q(triple) = " + fmt(triple) + " (1.88988 +- 1e-4) < mu_q(pair) = " + fmt(pair)};
}

Verdict bounds_and_subadditivity() {
  Rng rng(kSeed + 5);
  std::int64_t violations = 0;
  std::int64_t sets = 0;
  std::int64_t unions = 0;
  for (int t = 0; t < 1000; ++t) {
    const std::size_t dim = rng.uniform_index(2, 6);
    const StateSet u(random_states(dim, rng.uniform_index(1, 10), rng));
    const double mu = quantized_measure(u).value();
    const auto span = static_cast<double>(span_dimension(u.states()));
    ++sets;
    if (mu < 1.0 - 1e-8 || mu > span + 1e-8 || span > static_cast<double>(u.size())) ++violations;

    const StateSet a(random_states(dim, rng.uniform_index(1, 5), rng));
    const StateSet b(random_states(dim, rng.uniform_index(1, 5), rng));
    if (!disjoint(a, b)) continue;
    ++unions;
    if (quantized_measure(set_union(a, b)).value() > quantized_measure(a).value() + quantized_measure(b).value() + 1e-8)
      ++violations;
  }
  return {violations == 0 && sets >= 1000 && unions >= 1000,
          std::to_string(violations) + " violations over " + std::to_string(sets) + " sets and " +
              std::to_string(unions) + " disjoint unions (tol 1e-8)"};
}

Verdict context_additivity() {
  double worst = 0.0;
  std::int64_t cases = 0;
  for (int dim = 2; dim <= 8; ++dim) {
    const ExperimentResult r = run_context_additivity(dim, 50, kSeed + static_cast<std::uint64_t>(dim));
    for (const auto& row : r.rows) {
      for (const auto& [column, cell] : row) {
        if (column == "max_abs_mu_minus_k") worst = std::max(worst, std::get<double>(cell));
      }
      ++cases;
    }
  }
  return {worst <= 1e-8, "max |mu_q - k| = " + fmt(worst) + " over " + std::to_string(cases) +
                             " (dim, k) pairs x 50 bases (tol 1e-8)"};
}

Verdict continuous_uniform_mixture() {
  const SphericalCap sphere = SphericalCap::full_sphere();
  Matrix half = Matrix::Identity(2, 2) * 0.5;
  const DensityMatrix quad = cap_mixture_quadrature(sphere, {512, 512});
  constexpr std::size_t kSamples = 1'000'000;
  const DensityMatrix mc = cap_mixture_montecarlo(sphere, {kSamples, kSeed});
  const double quad_err = max_abs_diff(quad.entries(), half);
  const double mc_err = max_abs_diff(mc.entries(), half);
  const double mc_tol = 3.0 * 0.5 / std::sqrt(static_cast<double>(kSamples));
  const double mu_quad = measure_from_mixture(quad).value();
  const double mu_mc = measure_from_mixture(mc).value();
  const bool ok = quad_err <= 1e-6 && mc_err <= mc_tol && std::abs(mu_quad - 2.0) <= 1e-9 &&
                  std::abs(mu_mc - 2.0) <= 1e-4;
  return {ok, "quadrature err " + fmt(quad_err) + " (tol 1e-6), Monte Carlo err " + fmt(mc_err) + " (tol " +
                  fmt(mc_tol) + "), mu_q " + fmt(mu_quad) + " / " + fmt(mu_mc)};
}

Verdict cap_formula() {
  double worst = 0.0;
  for (double theta0 : {kPi / 6, kPi / 3, kPi / 2, 2 * kPi / 3, kPi}) {
    const SphericalCap cap(theta0);
    worst = std::max(worst, std::abs(cap_quantized_measure(cap, AnalyticMethod{}).value() -
                                     cap_quantized_measure(cap, QuadratureGrid{512, 512}).value()));
  }
  const double hemisphere = cap_quantized_measure(SphericalCap(kPi / 2)).value();
  return {worst <= 1e-5 && std::abs(hemisphere - 1.75482) <= 1e-4,
          "max |analytic - quadrature| = " + fmt(worst) + " (tol 1e-5); hemisphere mu_q = " + fmt(hemisphere) +
              " (1.75482 +- 1e-4)"};
}

Verdict invertibility() {
  double worst = 0.0;
  for (int i = 0; i <= 1000; ++i) {
    const double p = i / 1000.0;
    worst = std::max(worst, std::abs(overlap_from_pair_measure(pair_measure(p).value()) - p));
  }
  return {worst <= 1e-9, "max round-trip error = " + fmt(worst) + " on 1001 points (tol 1e-9)"};
}

Verdict multiplicativity() {
  Rng rng(kSeed + 10);
  double worst = 0.0;
  for (int t = 0; t < 200; ++t) {
    const StateSet a(random_states(rng.uniform_index(2, 4), rng.uniform_index(1, 4), rng));
    const StateSet b(random_states(rng.uniform_index(2, 4), rng.uniform_index(1, 4), rng));
    worst = std::max(worst, std::abs(quantized_measure(product_set(a, b)).value() -
                                     quantized_measure(a).value() * quantized_measure(b).value()));
  }
  return {worst <= 1e-8, "max |mu_q(A x B) - mu_q(A) mu_q(B)| = " + fmt(worst) + " over 200 pairs (tol 1e-8)"};
}

Verdict three_measures_table() {
  const ExperimentResult r = run_three_measures_table();
  auto value = [&](std::size_t row, const std::string& column) -> Cell {
    for (const auto& [name, cell] : r.rows.at(row))
      if (name == column) return cell;
    return std::string("missing");
  };
  auto num = [&](std::size_t row, const std::string& column) {
    const Cell c = value(row, column);
    return std::holds_alternative<double>(c) ? std::get<double>(c) : std::nan("");
  };
  const bool point = num(0, "mu_d") == 1.0 && num(0, "mu_c") == 0.0 && num(0, "mu_q") == 1.0;
  const bool cap = value(1, "mu_d") == Cell(std::string("inf")) && std::isfinite(num(1, "mu_c")) &&
                   num(1, "mu_q") >= 1.0 && num(1, "mu_q") <= 2.0;
  const bool classical_additive = num(2, "mu_d") == num(3, "mu_d") && num(2, "mu_c") == num(3, "mu_c") &&
                                  std::abs(num(4, "mu_c") - num(5, "mu_c")) <= 1e-12;
  const double margin = num(3, "mu_q") - num(2, "mu_q");
  const bool ok = point && cap && classical_additive && margin >= 0.4 && r.all_passed();
  return {ok, std::string("point (1,0,1) ") + (point ? "ok" : "FAILED") + ", cap " + (cap ? "ok" : "FAILED") +
                  ", classical additivity " + (classical_additive ? "ok" : "FAILED") +
                  ", mu_q additivity gap = " + fmt(margin) + " (>= 0.4)"};
}

Verdict cli_determinism() {
  const std::string data = QMEASURE_DATA_DIR;
  const std::vector<std::vector<std::string>> invocations = {
      {"measure", "--states", data + "/pair_zx.json"},
      {"measure", "--states", data + "/triple_zzx.json", "--format", "json"},
      {"sweep-overlap", "--steps", "101"},
      {"sweep-overlap", "--steps", "11", "--format", "json"},
      {"cap", "--theta0", "1.0471975511965976", "--method", "analytic"},
      {"cap", "--theta0", "1.5707963267948966", "--method", "quadrature"},
      {"cap", "--theta0", "3.141592653589793", "--method", "montecarlo", "--seed", "7"},
      {"experiment", "three-measures"},
      {"experiment", "overlap-sweep", "--format", "json"},
      {"experiment", "nonmonotonicity"},
      {"experiment", "context-additivity", "--seed", "11", "--dim", "5"},
      {"experiment", "properties", "--seed", "3", "--trials", "100"},
      {"props", "--trials", "1000", "--seed", "42"},
  };
  std::size_t identical = 0;
  std::string first_mismatch;
  for (const auto& args : invocations) {
    std::ostringstream out1, out2, err;
    const int c1 = cli::run(args, out1, err);
    const int c2 = cli::run(args, out2, err);
    if (c1 == c2 && out1.str() == out2.str() && !out1.str().empty()) {
      ++identical;
    } else if (first_mismatch.empty()) {
      first_mismatch = args.front();
    }
  }
  std::string binary_note = "binary not checked";
#ifdef QMEASURE_CLI_PATH
  auto capture = [](const std::string& args) {
    std::string out;
    FILE* pipe = popen((std::string(QMEASURE_CLI_PATH) + " " + args + " 2>/dev/null").c_str(), "r");
    if (!pipe) return out;
    char buf[4096];
    std::size_t n;
    while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, n);
    pclose(pipe);
    return out;
  };
  const std::string args = "props --trials 200 --seed 42 --format json";
  const std::string a = capture(args);
  const bool binary_ok = !a.empty() && a == capture(args);
  binary_note = binary_ok ? "separate processes identical" : "separate processes DIFFER";
  if (!binary_ok) identical = 0;
#endif
  return {identical == invocations.size(),
          std::to_string(identical) + "/" + std::to_string(invocations.size()) +
              " invocations byte-identical in-process; " + binary_note +
              (first_mismatch.empty() ? "" : "; first mismatch: " + first_mismatch)};
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Verdict()>>> criteria = {
      {"AC1  single state counts as one", single_state_measure},
      {"AC2  orthogonal pair measures two", orthogonal_pair},
      {"AC3  pair formula equals eigendecomposition", pair_oracle_equivalence},
      {"AC4  bigger set, smaller measure", non_monotonicity},
      {"AC5  bounds and subadditivity", bounds_and_subadditivity},
      {"AC6  additivity within one context", context_additivity},
      {"AC7  continuous uniform mixture is maximally mixed", continuous_uniform_mixture},
      {"AC8  cap closed form vs quadrature", cap_formula},
      {"AC9  pair measure invertibility", invertibility},
      {"AC10 multiplicativity on composites", multiplicativity},
      {"AC11 three-measures table", three_measures_table},
      {"AC12 CLI determinism", cli_determinism},
  };

  int failures = 0;
  for (const auto& [name, criterion] : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Verdict v{false, ""};
    try {
      v = criterion();
    } catch (const std::exception& e) {
      v = {false, std::string("exception: ") + e.what()};
    }
    const auto ms =
        std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
    std::cout << (v.passed ? "[PASS] " : "[FAIL] ") << name << " -- " << v.detail << " [" << ms << " ms]\n";
    if (!v.passed) ++failures;
  }
  std::cout << (failures == 0 ? "all acceptance criteria passed" : std::to_string(failures) + " criteria failed")
            << std::endl;
  return failures == 0 ? 0 : 1;
}
