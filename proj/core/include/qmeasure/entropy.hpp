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

#include <span>

#include "qmeasure/hilbert.hpp"

namespace qmeasure {

/// Entropies are in bits (base-2 logarithms) throughout.
class EntropyValue {
 public:
  constexpr EntropyValue() = default;
  /// Throws std::domain_error for negative or non-finite input.
  explicit EntropyValue(double bits);

  constexpr double bits() const { return bits_; }
  friend constexpr auto operator<=>(const EntropyValue&, const EntropyValue&) = default;

 private:
  double bits_ = 0.0;
};

/// Eigenvalues at or below this are treated as exact zeros in -sum lambda log lambda.
inline constexpr double kEntropyZeroCutoff = 1e-14;
inline constexpr double kBisectionTolerance = 1e-12;

/// -sum lambda_i log2 lambda_i over a probability vector.
EntropyValue shannon_entropy(std::span<const double> probabilities);

EntropyValue von_neumann_entropy(const DensityMatrix& rho);

/// H(x) = -x log2 x - (1 - x) log2 (1 - x) for x in [0, 1].
double binary_entropy(double x);

/// Entropy of the equal mixture of two rays with transition probability p:
/// the mixture has eigenvalues (1 +- sqrt(p)) / 2, so this is H((1 - sqrt p) / 2).
EntropyValue pair_entropy(double p);

/// Smallest-branch inverse of the binary entropy: the x in [0, 1/2] with H(x) = s.
double invert_binary_entropy(double s, double tol = kBisectionTolerance);

/// The unique p in [0, 1] with pair_entropy(p) = s.
double invert_pair_entropy(double s, double tol = kBisectionTolerance);

}  // namespace qmeasure
