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

#include "qmeasure/entropy.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace qmeasure {

namespace {

void require_unit_interval(double x, const char* what) {
  if (!(x >= 0.0 && x <= 1.0)) {
    std::ostringstream msg;
    msg.precision(17);
    msg << what << ": argument " << x << " outside [0, 1]";
    throw std::domain_error(msg.str());
  }
}

double neg_x_log2_x(double x) { return x > kEntropyZeroCutoff ? -x * std::log2(x) : 0.0; }

}  // namespace

EntropyValue::EntropyValue(double bits) : bits_(bits) {
  if (!(bits >= 0.0) || !std::isfinite(bits)) {
    throw std::domain_error("EntropyValue: entropy must be finite and nonnegative");
  }
}

EntropyValue shannon_entropy(std::span<const double> probabilities) {
  double s = 0.0;
  for (double p : probabilities) s += neg_x_log2_x(p);
  return EntropyValue(std::max(s, 0.0));
}

EntropyValue von_neumann_entropy(const DensityMatrix& rho) {
  return shannon_entropy(eigendecompose(rho).eigenvalues);
}

double binary_entropy(double x) {
  require_unit_interval(x, "binary_entropy");
  return neg_x_log2_x(x) + neg_x_log2_x(1.0 - x);
}

EntropyValue pair_entropy(double p) {
  require_unit_interval(p, "pair_entropy");
  const double lambda = 0.5 * (1.0 - std::sqrt(p));
  return EntropyValue(std::clamp(binary_entropy(lambda), 0.0, 1.0));
}

double invert_binary_entropy(double s, double tol) {
  require_unit_interval(s, "invert_binary_entropy");
  if (s == 0.0) return 0.0;
  if (s == 1.0) return 0.5;
  // H is strictly increasing on [0, 1/2].
  double lo = 0.0;
  double hi = 0.5;
  while (hi - lo > tol) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    if (binary_entropy(mid) < s) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

double invert_pair_entropy(double s, double tol) {
  require_unit_interval(s, "invert_pair_entropy");
  const double lambda = invert_binary_entropy(s, tol);
  const double root_p = 1.0 - 2.0 * lambda;
  return std::clamp(root_p * root_p, 0.0, 1.0);
}

}  // namespace qmeasure
