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
#include <optional>
#include <vector>

#include "qmeasure/entropy.hpp"
#include "qmeasure/hilbert.hpp"

namespace qmeasure {

/// Two states whose transition probability reaches 1 - kDedupTolerance are the same ray.
inline constexpr double kDedupTolerance = 1e-9;

/// Record of one input state folded into an earlier one during deduplication.
/// Indices refer to positions in the input list.
struct RayMerge {
  std::size_t dropped;
  std::size_t kept;
};

/// A finite, nonempty set of rays over one Hilbert space.
///
/// Inputs are deduplicated up to global phase; the first occurrence of each
/// ray is kept and merges() lists what was folded.
class StateSet {
 public:
  /// Throws std::invalid_argument for an empty list, DimensionMismatch for
  /// mixed dimensions.
  explicit StateSet(std::vector<PureState> states);
  StateSet(std::initializer_list<PureState> states);

  std::size_t dim() const { return dim_; }
  std::size_t size() const { return states_.size(); }
  const std::vector<PureState>& states() const { return states_; }
  const PureState& operator[](std::size_t i) const { return states_[i]; }
  auto begin() const { return states_.begin(); }
  auto end() const { return states_.end(); }

  const std::vector<RayMerge>& merges() const { return merges_; }
  /// Input position of each kept state.
  const std::vector<std::size_t>& source_indices() const { return source_indices_; }

  bool contains(const PureState& psi) const;

 private:
  std::size_t dim_ = 0;
  std::vector<PureState> states_;
  std::vector<RayMerge> merges_;
  std::vector<std::size_t> source_indices_;
};

/// True when no ray of a appears in b.
bool disjoint(const StateSet& a, const StateSet& b);
StateSet set_union(const StateSet& a, const StateSet& b);

/// All pairwise tensor products a_i (x) b_j, ordered with a's index outermost.
StateSet product_set(const StateSet& a, const StateSet& b);

/// Number of states in a region, or steradians for the solid-angle measure.
/// May be +infinity (counting measure of a continuous region).
class MeasureValue {
 public:
  constexpr MeasureValue() = default;
  /// Throws std::domain_error for negative or NaN values.
  explicit MeasureValue(double value);

  constexpr double value() const { return value_; }
  bool is_infinite() const;
  friend constexpr auto operator<=>(const MeasureValue&, const MeasureValue&) = default;
  friend MeasureValue operator+(MeasureValue a, MeasureValue b) { return MeasureValue(a.value_ + b.value_); }

 private:
  double value_ = 0.0;
};

/// rho_U = (1/n) sum |psi_i><psi_i|
DensityMatrix uniform_mixture(const StateSet& u);

/// 2^S(rho); the quantity the quantized measure assigns to a uniform ensemble.
MeasureValue measure_from_mixture(const DensityMatrix& rho);

/// mu_q(U) = 2^S(rho_U). Always in [1, span dimension of U].
MeasureValue quantized_measure(const StateSet& u);

/// mu_q of a two-element set as a function of its transition probability.
MeasureValue pair_measure(double p);

/// Inverse of pair_measure for mu in [1, 2].
double overlap_from_pair_measure(double mu);

/// Cardinality of the deduplicated set.
MeasureValue counting_measure(const StateSet& u);

/// Solid-angle (Liouville) measure of a finite set of qubit rays: every
/// finite set is null. Throws DimensionMismatch unless dim == 2.
MeasureValue solid_angle_measure(const StateSet& u);

}  // namespace qmeasure
