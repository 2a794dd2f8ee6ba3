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

#include "qmeasure/experiments.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "qmeasure/bloch.hpp"
#include "qmeasure/entropy.hpp"
#include "qmeasure/measures.hpp"
#include "qmeasure/random.hpp"
#include "qmeasure/report.hpp"

namespace qmeasure {

namespace {

constexpr double kPi = std::numbers::pi;

class Stopwatch {
 public:
  std::int64_t elapsed_ms() const {
    return std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start_)
        .count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

Cell measure_cell(const MeasureValue& m) {
  if (m.is_infinite()) return Cell(std::string("inf"));
  return Cell(m.value());
}

PureState z_plus() { return PureState::basis(2, 0); }
PureState z_minus() { return PureState::basis(2, 1); }
PureState x_plus() { return bloch_state(kPi / 2, 0.0); }

/// Tracks the worst value of a per-trial statistic and the input that produced it.
class Worst {
 public:
  explicit Worst(bool track_max) : track_max_(track_max) {
    value_ = track_max ? -std::numeric_limits<double>::infinity() : std::numeric_limits<double>::infinity();
  }

  template <typename MakeInput>
  void update(double x, MakeInput&& make_input) {
    if (std::isnan(x) || (track_max_ ? x > value_ : x < value_)) {
      value_ = x;
      input_ = make_input();
    }
  }

  double value() const { return value_; }
  const std::string& input() const { return input_; }

 private:
  bool track_max_;
  double value_;
  std::string input_;
};

std::vector<PureState> random_states(std::size_t dim, std::size_t count, Rng& rng) {
  std::vector<PureState> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) out.push_back(random_pure_state(dim, rng));
  return out;
}

double max_pairwise_overlap(const StateSet& u) {
  double worst = 0.0;
  for (std::size_t i = 0; i < u.size(); ++i) {
    for (std::size_t j = i + 1; j < u.size(); ++j) {
      worst = std::max(worst, transition_probability(u[i], u[j]));
    }
  }
  return worst;
}

std::string pair_input(const StateSet& a, const StateSet& b) {
  return "{\"a\":" + to_state_set_document(a) + ",\"b\":" + to_state_set_document(b) + "}";
}

}  // namespace

std::string_view to_string(Relation relation) {
  switch (relation) {
    case Relation::kEqual:
      return "eq";
    case Relation::kAtMost:
      return "le";
    case Relation::kAtLeast:
      return "ge";
  }
  return "?";
}

Check make_check(std::string description, Relation relation, double observed, double expected,
                 double tolerance, std::string input) {
  Check c;
  c.description = std::move(description);
  c.relation = relation;
  c.observed = observed;
  c.expected = expected;
  c.tolerance = tolerance;
  switch (relation) {
    case Relation::kEqual:
      c.passed = observed == expected || std::abs(observed - expected) <= tolerance;
      break;
    case Relation::kAtMost:
      c.passed = observed <= expected + tolerance;
      break;
    case Relation::kAtLeast:
      c.passed = observed >= expected - tolerance;
      break;
  }
  if (!c.passed) c.input = std::move(input);
  return c;
}

bool ExperimentResult::all_passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.passed; });
}

std::vector<std::string> ExperimentResult::columns() const {
  std::vector<std::string> out;
  if (rows.empty()) return out;
  for (const auto& [name, cell] : rows.front()) out.push_back(name);
  return out;
}

ExperimentResult run_three_measures_table() {
  Stopwatch clock;
  ExperimentResult result;
  result.name = "three-measures";

  auto add_row = [&](std::string region, const MeasureValue& mu_d, const MeasureValue& mu_c,
                     const MeasureValue& mu_q) {
    result.rows.push_back({{"region", std::move(region)},
                           {"mu_d", measure_cell(mu_d)},
                           {"mu_c", measure_cell(mu_c)},
                           {"mu_q", measure_cell(mu_q)}});
  };

  // A single point.
  const StateSet point{z_plus()};
  const MeasureValue point_d = counting_measure(point);
  const MeasureValue point_c = solid_angle_measure(point);
  const MeasureValue point_q = quantized_measure(point);
  add_row("point {z+}", point_d, point_c, point_q);

  // A finite open region: the northern hemisphere.
  const SphericalCap north(kPi / 2);
  const MeasureValue cap_d = counting_measure(north);
  const MeasureValue cap_c = solid_angle_measure(north);
  const MeasureValue cap_q = cap_quantized_measure(north);
  add_row("cap theta0=pi/2", cap_d, cap_c, cap_q);

  // Additivity on two disjoint points.
  const StateSet a{z_plus()};
  const StateSet b{x_plus()};
  const StateSet ab = set_union(a, b);
  const MeasureValue union_d = counting_measure(ab);
  const MeasureValue union_c = solid_angle_measure(ab);
  const MeasureValue union_q = quantized_measure(ab);
  const MeasureValue sum_d = counting_measure(a) + counting_measure(b);
  const MeasureValue sum_c = solid_angle_measure(a) + solid_angle_measure(b);
  const MeasureValue sum_q = quantized_measure(a) + quantized_measure(b);
  add_row("union {z+} u {x+}", union_d, union_c, union_q);
  add_row("sum {z+} + {x+}", sum_d, sum_c, sum_q);

  // Additivity on two disjoint regions: the hemispheres cover the sphere.
  const SphericalCap south = north.antipodal();
  const SphericalCap sphere = SphericalCap::full_sphere();
  const MeasureValue sphere_d = counting_measure(sphere);
  const MeasureValue sphere_c = solid_angle_measure(sphere);
  const MeasureValue sphere_q = cap_quantized_measure(sphere);
  const MeasureValue halves_d = counting_measure(north) + counting_measure(south);
  const MeasureValue halves_c = solid_angle_measure(north) + solid_angle_measure(south);
  const MeasureValue halves_q = cap_quantized_measure(north) + cap_quantized_measure(south);
  add_row("union north u south", sphere_d, sphere_c, sphere_q);
  add_row("sum north + south", halves_d, halves_c, halves_q);

  auto& checks = result.checks;
  checks.push_back(make_check("point: mu_d = 1", Relation::kEqual, point_d.value(), 1.0, 0.0));
  checks.push_back(make_check("point: mu_c = 0", Relation::kEqual, point_c.value(), 0.0, 0.0));
  checks.push_back(make_check("point: mu_q = 1", Relation::kEqual, point_q.value(), 1.0, 1e-12));
  checks.push_back(make_check("cap: mu_d infinite", Relation::kEqual, cap_d.value(),
                              std::numeric_limits<double>::infinity(), 0.0));
  checks.push_back(make_check("cap: mu_c = 2 pi (finite)", Relation::kEqual, cap_c.value(), 2.0 * kPi, 1e-12));
  checks.push_back(make_check("cap: mu_q in [1, 2]", Relation::kEqual, cap_q.value(), 1.5, 0.5));
  checks.push_back(
      make_check("points: mu_d additive", Relation::kEqual, union_d.value(), sum_d.value(), 0.0));
  checks.push_back(
      make_check("points: mu_c additive", Relation::kEqual, union_c.value(), sum_c.value(), 0.0));
  checks.push_back(make_check("points: mu_q not additive, sum - union >= 0.4", Relation::kAtLeast,
                              sum_q.value() - union_q.value(), 0.4, 0.0));
  checks.push_back(
      make_check("hemispheres: mu_d additive", Relation::kEqual, sphere_d.value(), halves_d.value(), 0.0));
  checks.push_back(make_check("hemispheres: mu_c additive", Relation::kEqual, sphere_c.value(),
                              halves_c.value(), 1e-12));
  checks.push_back(make_check("hemispheres: mu_q not additive, sum - union >= 0.4", Relation::kAtLeast,
                              halves_q.value() - sphere_q.value(), 0.4, 0.0));

  result.runtime_ms = clock.elapsed_ms();
  return result;
}

ExperimentResult run_overlap_sweep(int steps) {
  if (steps < 2) throw std::invalid_argument("run_overlap_sweep: steps must be at least 2");
  Stopwatch clock;
  ExperimentResult result;
  result.name = "overlap-sweep";

  std::vector<double> mus;
  double worst_round_trip = 0.0;
  std::string worst_input;
  for (int i = 0; i < steps; ++i) {
    const double p = static_cast<double>(i) / static_cast<double>(steps - 1);
    const double s = pair_entropy(p).bits();
    const double mu = pair_measure(p).value();
    const double p_back = overlap_from_pair_measure(mu);
    if (std::abs(p_back - p) > worst_round_trip) {
      worst_round_trip = std::abs(p_back - p);
      worst_input = "p=" + format_number(p);
    }
    mus.push_back(mu);
    result.rows.push_back({{"p", p}, {"S", s}, {"mu", mu}, {"p_from_mu", p_back}});
  }

  std::int64_t non_decreasing = 0;
  std::string first_bad;
  for (std::size_t i = 1; i < mus.size(); ++i) {
    if (!(mus[i] < mus[i - 1])) {
      if (non_decreasing == 0) first_bad = "step=" + std::to_string(i);
      ++non_decreasing;
    }
  }

  auto& checks = result.checks;
  checks.push_back(make_check("S(p=0) = 1", Relation::kEqual, pair_entropy(0.0).bits(), 1.0, 1e-12));
  checks.push_back(make_check("mu(p=0) = 2", Relation::kEqual, mus.front(), 2.0, 1e-12));
  checks.push_back(make_check("S(p=1) = 0", Relation::kEqual, pair_entropy(1.0).bits(), 0.0, 1e-12));
  checks.push_back(make_check("mu(p=1) = 1", Relation::kEqual, mus.back(), 1.0, 1e-12));
  checks.push_back(make_check("mu strictly decreasing (count of violations)", Relation::kEqual,
                              static_cast<double>(non_decreasing), 0.0, 0.0, first_bad));
  checks.push_back(make_check("max |p_from_mu - p|", Relation::kAtMost, worst_round_trip, 0.0, 1e-9, worst_input));

  result.runtime_ms = clock.elapsed_ms();
  return result;
}

ExperimentResult run_nonmonotonicity_demo() {
  Stopwatch clock;
  ExperimentResult result;
  result.name = "nonmonotonicity";

  const StateSet pair{z_plus(), z_minus()};
  const StateSet triple{z_plus(), z_minus(), x_plus()};
  const double s_pair = von_neumann_entropy(uniform_mixture(pair)).bits();
  const double s_triple = von_neumann_entropy(uniform_mixture(triple)).bits();
  const double mu_pair = quantized_measure(pair).value();
  const double mu_triple = quantized_measure(triple).value();

  result.rows.push_back({{"set", std::string("{z+,z-}")},
                         {"size", std::int64_t{2}},
                         {"S", s_pair},
                         {"mu_q", mu_pair}});
  result.rows.push_back({{"set", std::string("{z+,z-,x+}")},
                         {"size", std::int64_t{3}},
                         {"S", s_triple},
                         {"mu_q", mu_triple}});

  // The triple mixture is I/3 + |x+><x+|/3, with eigenvalues 2/3 and 1/3.
  const double triple_expected = std::exp2(binary_entropy(1.0 / 3.0));
  auto& checks = result.checks;
  checks.push_back(make_check("mu_q({z+,z-}) = 2", Relation::kEqual, mu_pair, 2.0, 1e-9));
  checks.push_back(make_check("mu_q({z+,z-,x+}) = 2^H(1/3)", Relation::kEqual, mu_triple, triple_expected, 1e-4));
  checks.push_back(make_check("mu_q(subset) - mu_q(superset) >= 0.1", Relation::kAtLeast, mu_pair - mu_triple,
                              0.1, 0.0, to_state_set_document(triple)));

  result.runtime_ms = clock.elapsed_ms();
  return result;
}

ExperimentResult run_context_additivity(int dim, int trials, std::uint64_t seed) {
  if (dim < 2) throw std::invalid_argument("run_context_additivity: dim must be at least 2");
  if (trials < 1) throw std::invalid_argument("run_context_additivity: trials must be at least 1");
  Stopwatch clock;
  ExperimentResult result;
  result.name = "context-additivity";
  result.seed = seed;

  constexpr double kTilt = 0.1;
  const auto n = static_cast<std::size_t>(dim);
  std::vector<Worst> deviation(n + 1, Worst(true));
  std::vector<Worst> deficit(n + 1, Worst(false));

  Rng rng = Rng(seed).split(n);
  for (int t = 0; t < trials; ++t) {
    const std::vector<PureState> basis = random_orthonormal_basis(n, rng);
    for (std::size_t k = 1; k <= n; ++k) {
      std::vector<PureState> subset(basis.begin(), basis.begin() + static_cast<std::ptrdiff_t>(k));
      const StateSet context(subset);
      const double mu = quantized_measure(context).value();
      deviation[k].update(std::abs(mu - static_cast<double>(k)), [&] { return to_state_set_document(context); });
      if (k >= 2) {
        // Tilt the first vector toward the second: the set stops being orthogonal.
        subset[0] = PureState::normalized(std::cos(kTilt) * basis[0].amplitudes() +
                                          std::sin(kTilt) * basis[1].amplitudes());
        const StateSet tilted(subset);
        const double mu_tilted = quantized_measure(tilted).value();
        deficit[k].update(static_cast<double>(k) - mu_tilted, [&] { return to_state_set_document(tilted); });
      }
    }
  }

  for (std::size_t k = 1; k <= n; ++k) {
    Row row{{"dim", std::int64_t{dim}},
            {"k", static_cast<std::int64_t>(k)},
            {"trials", std::int64_t{trials}},
            {"max_abs_mu_minus_k", deviation[k].value()}};
    row.emplace_back("min_tilted_deficit", k >= 2 ? Cell(deficit[k].value()) : Cell(std::string("")));
    result.rows.push_back(std::move(row));

    result.checks.push_back(make_check("orthonormal subset, k=" + std::to_string(k) + ": |mu_q - k|",
                                       Relation::kAtMost, deviation[k].value(), 0.0, 1e-8, deviation[k].input()));
    if (k >= 2) {
      result.checks.push_back(make_check("tilted subset, k=" + std::to_string(k) + ": k - mu_q > 0",
                                         Relation::kAtLeast, deficit[k].value(), 1e-6, 0.0, deficit[k].input()));
    }
  }

  result.runtime_ms = clock.elapsed_ms();
  return result;
}

ExperimentResult run_property_suite(int trials, std::uint64_t seed) {
  if (trials < 1) throw std::invalid_argument("run_property_suite: trials must be at least 1");
  Stopwatch clock;
  ExperimentResult result;
  result.name = "properties";
  result.seed = seed;
  const Rng root(seed);

  struct Summary {
    std::string property;
    std::int64_t cases;
    double worst;
  };
  std::vector<Summary> summaries;
  auto record = [&](std::string property, std::int64_t cases, Check check) {
    summaries.push_back({std::move(property), cases, check.observed});
    result.checks.push_back(std::move(check));
  };

  // 1 <= mu_q <= dim span <= |U|.
  {
    Rng rng = root.split(1);
    Worst worst(true);
    for (int t = 0; t < trials; ++t) {
      const std::size_t dim = rng.uniform_index(2, 6);
      const StateSet u(random_states(dim, rng.uniform_index(1, 10), rng));
      const double mu = quantized_measure(u).value();
      const auto span = static_cast<double>(span_dimension(u.states()));
      const double violation = std::max({1.0 - mu, mu - span, span - static_cast<double>(u.size())});
      worst.update(violation, [&] { return to_state_set_document(u); });
    }
    record("bounds", trials,
           make_check("bounds: max violation of 1 <= mu_q <= span <= |U|", Relation::kAtMost, worst.value(), 0.0,
                      1e-9, worst.input()));
  }

  // Orthonormal sets are counted exactly.
  {
    Rng rng = root.split(2);
    Worst worst(true);
    for (int t = 0; t < trials; ++t) {
      const std::size_t dim = rng.uniform_index(2, 8);
      auto basis = random_orthonormal_basis(dim, rng);
      basis.erase(basis.begin() + static_cast<std::ptrdiff_t>(rng.uniform_index(1, dim)), basis.end());
      const StateSet u(basis);
      worst.update(std::abs(quantized_measure(u).value() - static_cast<double>(u.size())),
                   [&] { return to_state_set_document(u); });
    }
    record("orthogonal-additivity", trials,
           make_check("orthonormal sets: max |mu_q - |U||", Relation::kAtMost, worst.value(), 0.0, 1e-8,
                      worst.input()));
  }

  // Any overlap strictly lowers the measure below the cardinality.
  {
    Rng rng = root.split(3);
    Worst worst(true);
    std::int64_t cases = 0;
    for (int t = 0; t < trials; ++t) {
      const std::size_t dim = rng.uniform_index(2, 6);
      const StateSet u(random_states(dim, rng.uniform_index(2, 10), rng));
      if (max_pairwise_overlap(u) < 0.01) continue;
      ++cases;
      worst.update(quantized_measure(u).value() - static_cast<double>(u.size()),
                   [&] { return to_state_set_document(u); });
    }
    record("overlap-strictness", cases,
           make_check("overlapping sets: max (mu_q - |U|)", Relation::kAtMost, cases ? worst.value() : -1.0,
                      -1e-6, 0.0, worst.input()));
  }

  // Pair subadditivity, strict away from orthogonality.
  {
    Rng rng = root.split(4);
    Worst worst(true);
    Worst worst_strict(true);
    for (int t = 0; t < trials; ++t) {
      const StateSet u(random_states(2, 2, rng));
      const double excess = quantized_measure(u).value() - 2.0;
      worst.update(excess, [&] { return to_state_set_document(u); });
      if (transition_probability(u[0], u[1]) >= 0.01) {
        worst_strict.update(excess, [&] { return to_state_set_document(u); });
      }
    }
    record("pair-subadditivity", trials,
           make_check("qubit pairs: max mu_q({psi,phi}) - mu_q({psi}) - mu_q({phi})", Relation::kAtMost,
                      worst.value(), 0.0, 1e-9, worst.input()));
    record("pair-strictness", trials,
           make_check("qubit pairs with p >= 0.01: max mu_q({psi,phi}) - 2", Relation::kAtMost,
                      worst_strict.value(), -1e-6, 0.0, worst_strict.input()));
  }

  // Disjoint-union subadditivity.
  {
    Rng rng = root.split(5);
    Worst worst(true);
    std::int64_t cases = 0;
    for (int t = 0; t < trials; ++t) {
      const std::size_t dim = rng.uniform_index(2, 6);
      const StateSet a(random_states(dim, rng.uniform_index(1, 5), rng));
      const StateSet b(random_states(dim, rng.uniform_index(1, 5), rng));
      if (!disjoint(a, b)) continue;
      ++cases;
      const double excess =
          quantized_measure(set_union(a, b)).value() - quantized_measure(a).value() - quantized_measure(b).value();
      worst.update(excess, [&] { return pair_input(a, b); });
    }
    record("union-subadditivity", cases,
           make_check("disjoint A, B: max mu_q(A u B) - mu_q(A) - mu_q(B)", Relation::kAtMost, worst.value(), 0.0,
                      1e-9, worst.input()));
  }

  // Bigger set, smaller measure.
  {
    const StateSet pair{z_plus(), z_minus()};
    const StateSet triple{z_plus(), z_minus(), x_plus()};
    const double margin = quantized_measure(pair).value() - quantized_measure(triple).value();
    record("nonmonotonicity", 1,
           make_check("mu_q({z+,z-}) - mu_q({z+,z-,x+}) >= 0.1", Relation::kAtLeast, margin, 0.1, 0.0,
                      to_state_set_document(triple)));
  }

  // Invariance under a global change of basis.
  {
    Rng rng = root.split(6);
    Worst worst(true);
    for (int t = 0; t < trials; ++t) {
      const std::size_t dim = rng.uniform_index(2, 6);
      const StateSet u(random_states(dim, rng.uniform_index(1, 10), rng));
      const Matrix unitary = random_unitary(dim, rng);
      std::vector<PureState> rotated;
      for (const auto& psi : u) rotated.push_back(PureState::normalized(unitary * psi.amplitudes()));
      const double diff = std::abs(quantized_measure(StateSet(rotated)).value() - quantized_measure(u).value());
      worst.update(diff, [&] { return to_state_set_document(u); });
    }
    record("unitary-invariance", trials,
           make_check("random unitaries: max |mu_q(VU) - mu_q(U)|", Relation::kAtMost, worst.value(), 0.0, 1e-9,
                      worst.input()));
  }

  // Multiplicativity on product sets.
  {
    Rng rng = root.split(7);
    Worst worst(true);
    const int cases = std::max(1, trials / 5);
    for (int t = 0; t < cases; ++t) {
      const StateSet a(random_states(rng.uniform_index(2, 4), rng.uniform_index(1, 4), rng));
      const StateSet b(random_states(rng.uniform_index(2, 4), rng.uniform_index(1, 4), rng));
      const double diff = std::abs(quantized_measure(product_set(a, b)).value() -
                                   quantized_measure(a).value() * quantized_measure(b).value());
      worst.update(diff, [&] { return pair_input(a, b); });
    }
    record("multiplicativity", cases,
           make_check("product sets: max |mu_q(A x B) - mu_q(A) mu_q(B)|", Relation::kAtMost, worst.value(), 0.0,
                      1e-8, worst.input()));
  }

  // Closed-form pair measure against the eigendecomposition.
  {
    Rng rng = root.split(8);
    Worst worst(true);
    for (int t = 0; t < trials; ++t) {
      const StateSet u(random_states(2, 2, rng));
      const double diff = std::abs(pair_measure(transition_probability(u[0], u[1])).value() -
                                   quantized_measure(u).value());
      worst.update(diff, [&] { return to_state_set_document(u); });
    }
    record("path-equivalence", trials,
           make_check("qubit pairs: max |pair_measure(p) - mu_q({psi,phi})|", Relation::kAtMost, worst.value(), 0.0,
                      1e-9, worst.input()));
  }

  // Invertibility of the pair relationship.
  {
    Rng rng = root.split(9);
    Worst worst(true);
    for (int t = 0; t < trials; ++t) {
      const double p = rng.uniform();
      worst.update(std::abs(overlap_from_pair_measure(pair_measure(p).value()) - p),
                   [&] { return "p=" + format_number(p); });
    }
    record("invertibility", trials,
           make_check("uniform p: max |p(mu(p)) - p|", Relation::kAtMost, worst.value(), 0.0, 1e-9, worst.input()));
  }

  // Continuous caps: quadrature and Monte Carlo against the closed form.
  {
    Worst quad(true);
    for (double theta0 : {kPi / 6, kPi / 3, kPi / 2, 2 * kPi / 3, kPi}) {
      const SphericalCap cap(theta0);
      const double diff = max_abs_diff(cap_mixture_quadrature(cap).entries(), cap_mixture_analytic(cap).entries());
      quad.update(diff, [&] { return "theta0=" + format_number(theta0); });
    }
    record("cap-quadrature", 5,
           make_check("cap quadrature 512x512: max entry error vs closed form", Relation::kAtMost, quad.value(), 0.0,
                      1e-6, quad.input()));

    constexpr std::size_t kSamples = 1'000'000;
    const double bound = 3.0 * 0.5 / std::sqrt(static_cast<double>(kSamples));
    Worst mc(true);
    for (double theta0 : {kPi / 2, kPi}) {
      const SphericalCap cap(theta0);
      const double diff = max_abs_diff(cap_mixture_montecarlo(cap, {kSamples, seed}).entries(),
                                       cap_mixture_analytic(cap).entries());
      mc.update(diff, [&] { return "theta0=" + format_number(theta0) + " seed=" + std::to_string(seed); });
    }
    record("cap-montecarlo", 2,
           make_check("cap Monte Carlo 1e6 samples: max entry error vs closed form", Relation::kAtMost, mc.value(),
                      0.0, bound, mc.input()));
  }

  for (std::size_t i = 0; i < summaries.size(); ++i) {
    const Check& c = result.checks[i];
    result.rows.push_back({{"property", summaries[i].property},
                           {"cases", summaries[i].cases},
                           {"worst", summaries[i].worst},
                           {"bound", c.relation == Relation::kAtLeast ? c.expected - c.tolerance
                                                                       : c.expected + c.tolerance},
                           {"relation", std::string(to_string(c.relation))},
                           {"passed", std::string(c.passed ? "pass" : "fail")}});
  }

  result.runtime_ms = clock.elapsed_ms();
  return result;
}

const std::vector<std::string>& experiment_names() {
  static const std::vector<std::string> names = {"three-measures", "overlap-sweep", "nonmonotonicity",
                                                 "context-additivity", "properties"};
  return names;
}

ExperimentResult run_experiment(std::string_view name, const ExperimentOptions& options) {
  if (name == "three-measures") return run_three_measures_table();
  if (name == "overlap-sweep") return run_overlap_sweep(options.steps);
  if (name == "nonmonotonicity") return run_nonmonotonicity_demo();
  if (name == "context-additivity") return run_context_additivity(options.dim, options.trials, options.seed);
  if (name == "properties") return run_property_suite(options.trials, options.seed);
  std::ostringstream msg;
  msg << "unknown experiment '" << name << "'; expected one of:";
  for (const auto& n : experiment_names()) msg << ' ' << n;
  throw std::invalid_argument(msg.str());
}

}  // namespace qmeasure
