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
#include <optional>
#include <string>
#include <variant>

#include <Eigen/Dense>

#include "qmeasure/hilbert.hpp"
#include "qmeasure/measures.hpp"

namespace qmeasure {

/// cos(theta/2)|0> + e^{i phi} sin(theta/2)|1>
PureState bloch_state(double theta, double phi);

/// (<sigma_x>, <sigma_y>, <sigma_z>) of a qubit state; a unit vector.
Eigen::Vector3d bloch_vector(const PureState& psi);

/// Set of qubit rays whose Bloch vectors lie within polar angle theta0 of axis.
class SphericalCap {
 public:
  /// Throws std::domain_error unless |axis| = 1 within 1e-12 and 0 < theta0 <= pi.
  SphericalCap(Eigen::Vector3d axis, double theta0);
  /// Cap about +z.
  explicit SphericalCap(double theta0);

  static SphericalCap full_sphere();

  const Eigen::Vector3d& axis() const { return axis_; }
  double theta0() const { return theta0_; }

  /// Cap of the same size about -axis.
  SphericalCap antipodal() const;

 private:
  Eigen::Vector3d axis_;
  double theta0_;
};

/// Solid angle 2 pi (1 - cos theta0), in steradians.
///
/// With normalize_to set, the result is rescaled so the full sphere maps to
/// that total (e.g. 1.0 for a fraction of the sphere).
MeasureValue solid_angle_measure(const SphericalCap& cap, std::optional<double> normalize_to = std::nullopt);

/// A continuous cap holds uncountably many rays.
MeasureValue counting_measure(const SphericalCap& cap);

/// Area-uniform mixture over the cap in closed form:
/// rho = (I + r axis . sigma) / 2 with r = (1 + cos theta0) / 2.
DensityMatrix cap_mixture_analytic(const SphericalCap& cap);
DensityMatrix cap_mixture_analytic(double theta0);

struct QuadratureGrid {
  std::size_t n_theta = 512;
  std::size_t n_phi = 512;
};

/// Midpoint-rule integral of |psi><psi| sin(theta) over the cap, divided by
/// the discrete weight sum so the trace is one to rounding.
DensityMatrix cap_mixture_quadrature(const SphericalCap& cap, QuadratureGrid grid = {});
DensityMatrix cap_mixture_quadrature(double theta0, std::size_t n_theta, std::size_t n_phi);

struct MonteCarloConfig {
  std::size_t n_samples = 1'000'000;
  std::uint64_t seed = 20240101;
};

/// Samples are processed in chunks of this many; chunk c draws from
/// Rng(seed).split(c) and partial sums are combined in chunk order.
inline constexpr std::size_t kMonteCarloChunk = 65536;

/// Average of |psi><psi| over area-uniform samples in the cap: cos(theta)
/// uniform on [cos theta0, 1], phi uniform on [0, 2 pi). Chunks may run on
/// several threads; the result depends only on (cap, n_samples, seed).
DensityMatrix cap_mixture_montecarlo(const SphericalCap& cap, MonteCarloConfig config = {});
DensityMatrix cap_mixture_montecarlo(double theta0, std::size_t n_samples, std::uint64_t seed);

struct AnalyticMethod {};
using CapMethod = std::variant<AnalyticMethod, QuadratureGrid, MonteCarloConfig>;

std::string method_name(const CapMethod& method);
DensityMatrix cap_mixture(const SphericalCap& cap, const CapMethod& method);

/// mu_q of the cap: 2^S of its uniform mixture; lies in [1, 2].
MeasureValue cap_quantized_measure(const SphericalCap& cap, const CapMethod& method = AnalyticMethod{});

}  // namespace qmeasure
