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
#include <random>
#include <vector>

#include "qmeasure/hilbert.hpp"

namespace qmeasure {

/// Seedable, splittable generator.
///
/// Child streams are derived with SplitMix64 from (seed, stream id), so a
/// given configuration always draws the same numbers regardless of how the
/// work is scheduled. Uniform and normal variates are produced here rather
/// than through <random> distributions, whose output is implementation
/// defined.
class Rng {
 public:
  explicit Rng(std::uint64_t seed);

  std::uint64_t seed() const { return seed_; }
  Rng split(std::uint64_t stream) const;

  std::uint64_t next_u64() { return engine_(); }
  /// Uniform on [0, 1) with 53 random bits.
  double uniform();
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
  /// Uniform integer in [lo, hi].
  std::size_t uniform_index(std::size_t lo, std::size_t hi);
  double normal();
  Complex complex_normal();

 private:
  std::uint64_t seed_;
  std::mt19937_64 engine_;
  double spare_normal_ = 0.0;
  bool has_spare_ = false;
};

std::uint64_t splitmix64(std::uint64_t x);

/// Normalized vector of standard complex Gaussians (Haar-distributed ray).
PureState random_pure_state(std::size_t dim, Rng& rng);

/// Haar-random unitary: QR of a complex Gaussian matrix with R's phases removed.
Matrix random_unitary(std::size_t dim, Rng& rng);

/// Columns of a random unitary.
std::vector<PureState> random_orthonormal_basis(std::size_t dim, Rng& rng);

/// Uniform mixture of k random pure states.
DensityMatrix random_density_matrix(std::size_t dim, std::size_t k, Rng& rng);

}  // namespace qmeasure
