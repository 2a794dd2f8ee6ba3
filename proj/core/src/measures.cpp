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

#include "qmeasure/measures.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace qmeasure {

namespace {

bool same_ray(const PureState& a, const PureState& b) {
  return transition_probability(a, b) >= 1.0 - kDedupTolerance;
}

}  // namespace

StateSet::StateSet(std::vector<PureState> states) {
  if (states.empty()) {
    throw std::invalid_argument("StateSet: a state set must be nonempty");
  }
  dim_ = states.front().dim();
  states_.reserve(states.size());
  for (std::size_t i = 0; i < states.size(); ++i) {
    if (states[i].dim() != dim_) {
      std::ostringstream msg;
      msg << "StateSet: state " << i << " has dimension " << states[i].dim() << ", expected " << dim_;
      throw DimensionMismatch(msg.str());
    }
    const auto hit = std::find_if(states_.begin(), states_.end(),
                                  [&](const PureState& kept) { return same_ray(kept, states[i]); });
    if (hit != states_.end()) {
      merges_.push_back({i, source_indices_[static_cast<std::size_t>(hit - states_.begin())]});
      continue;
    }
    states_.push_back(std::move(states[i]));
    source_indices_.push_back(i);
  }
}

StateSet::StateSet(std::initializer_list<PureState> states)
    : StateSet(std::vector<PureState>(states)) {}

bool StateSet::contains(const PureState& psi) const {
  if (psi.dim() != dim_) return false;
  return std::any_of(states_.begin(), states_.end(),
                     [&](const PureState& s) { return same_ray(s, psi); });
}

bool disjoint(const StateSet& a, const StateSet& b) {
  if (a.dim() != b.dim()) return true;
  return std::none_of(a.begin(), a.end(), [&](const PureState& s) { return b.contains(s); });
}

StateSet set_union(const StateSet& a, const StateSet& b) {
  if (a.dim() != b.dim()) {
    throw DimensionMismatch("set_union: sets live in different Hilbert spaces");
  }
  std::vector<PureState> all(a.states());
  all.insert(all.end(), b.begin(), b.end());
  return StateSet(std::move(all));
}

StateSet product_set(const StateSet& a, const StateSet& b) {
  std::vector<PureState> out;
  out.reserve(a.size() * b.size());
  for (const auto& x : a) {
    for (const auto& y : b) out.push_back(tensor_state(x, y));
  }
  return StateSet(std::move(out));
}

MeasureValue::MeasureValue(double value) : value_(value) {
  if (!(value >= 0.0)) {
    throw std::domain_error("MeasureValue: measure must be nonnegative");
  }
}

bool MeasureValue::is_infinite() const { return std::isinf(value_); }

DensityMatrix uniform_mixture(const StateSet& u) {
  const auto n = static_cast<Eigen::Index>(u.dim());
  Matrix m = Matrix::Zero(n, n);
  for (const auto& psi : u) {
    const Vector& v = psi.amplitudes();
    m += v * v.adjoint();
  }
  m /= static_cast<double>(u.size());
  Matrix h = 0.5 * (m + m.adjoint());
  return DensityMatrix(std::move(h));
}

MeasureValue measure_from_mixture(const DensityMatrix& rho) {
  const double s = von_neumann_entropy(rho).bits();
  return MeasureValue(std::clamp(std::exp2(s), 1.0, static_cast<double>(rho.dim())));
}

MeasureValue quantized_measure(const StateSet& u) {
  // A single ray is pure; report exactly one rather than 2^(rounding noise).
  if (u.size() == 1) return MeasureValue(1.0);
  return measure_from_mixture(uniform_mixture(u));
}

MeasureValue pair_measure(double p) {
  return MeasureValue(std::clamp(std::exp2(pair_entropy(p).bits()), 1.0, 2.0));
}

double overlap_from_pair_measure(double mu) {
  if (!(mu >= 1.0 && mu <= 2.0)) {
    std::ostringstream msg;
    msg.precision(17);
    msg << "overlap_from_pair_measure: measure " << mu << " outside [1, 2]";
    throw std::domain_error(msg.str());
  }
  return invert_pair_entropy(std::clamp(std::log2(mu), 0.0, 1.0));
}

MeasureValue counting_measure(const StateSet& u) {
  return MeasureValue(static_cast<double>(u.size()));
}

MeasureValue solid_angle_measure(const StateSet& u) {
  if (u.dim() != 2) {
    throw DimensionMismatch("solid_angle_measure: the solid-angle measure is defined on qubit rays only");
  }
  return MeasureValue(0.0);
}

}  // namespace qmeasure
