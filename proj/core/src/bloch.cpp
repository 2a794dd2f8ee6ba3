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

#include "qmeasure/bloch.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <limits>
#include <numbers>
#include <sstream>
#include <thread>

#include "qmeasure/random.hpp"

namespace qmeasure {

namespace {

constexpr double kPi = std::numbers::pi;

void require_theta0(double theta0, const char* what) {
  if (!(theta0 > 0.0 && theta0 <= kPi)) {
    std::ostringstream msg;
    msg.precision(17);
    msg << what << ": opening angle " << theta0 << " outside (0, pi]";
    throw std::domain_error(msg.str());
  }
}

/// Upper triangle of a 2x2 Hermitian accumulator.
struct QubitSum {
  double upper = 0.0;  // <0|.|0>
  double lower = 0.0;  // <1|.|1>
  Complex coherence{0.0, 0.0};  // <1|.|0>

  void add(double weight, double theta, double phi) {
    const double c = std::cos(0.5 * theta);
    const double s = std::sin(0.5 * theta);
    upper += weight * c * c;
    lower += weight * s * s;
    coherence += weight * c * s * std::polar(1.0, phi);
  }

  QubitSum& operator+=(const QubitSum& o) {
    upper += o.upper;
    lower += o.lower;
    coherence += o.coherence;
    return *this;
  }

  Matrix to_matrix(double scale) const {
    Matrix m(2, 2);
    m(0, 0) = upper * scale;
    m(1, 1) = lower * scale;
    m(1, 0) = coherence * scale;
    m(0, 1) = std::conj(coherence) * scale;
    return m;
  }
};

/// Unitary taking |0> to the ray with Bloch vector axis (and sigma_z to axis . sigma).
Matrix frame_rotation(const Eigen::Vector3d& axis) {
  const double theta = std::acos(std::clamp(axis.z(), -1.0, 1.0));
  const double phi = (axis.x() == 0.0 && axis.y() == 0.0) ? 0.0 : std::atan2(axis.y(), axis.x());
  const PureState up = bloch_state(theta, phi);
  const PureState down = bloch_state(kPi - theta, phi + kPi);
  Matrix u(2, 2);
  u.col(0) = up.amplitudes();
  u.col(1) = down.amplitudes();
  return u;
}

DensityMatrix to_cap_frame(const SphericalCap& cap, const Matrix& z_frame) {
  const Matrix u = frame_rotation(cap.axis());
  Matrix m = u * z_frame * u.adjoint();
  Matrix h = 0.5 * (m + m.adjoint());
  return DensityMatrix(std::move(h));
}

}  // namespace

PureState bloch_state(double theta, double phi) {
  Vector v(2);
  v(0) = std::cos(0.5 * theta);
  v(1) = std::polar(std::sin(0.5 * theta), phi);
  return PureState::normalized(std::move(v));
}

Eigen::Vector3d bloch_vector(const PureState& psi) {
  if (psi.dim() != 2) throw DimensionMismatch("bloch_vector: state is not a qubit");
  const Complex a = psi[0];
  const Complex b = psi[1];
  const Complex ab = std::conj(a) * b;
  return {2.0 * ab.real(), 2.0 * ab.imag(), std::norm(a) - std::norm(b)};
}

SphericalCap::SphericalCap(Eigen::Vector3d axis, double theta0) : axis_(std::move(axis)), theta0_(theta0) {
  if (!axis_.allFinite() || std::abs(axis_.norm() - 1.0) > 1e-12) {
    throw std::domain_error("SphericalCap: axis must be a unit vector");
  }
  require_theta0(theta0, "SphericalCap");
}

SphericalCap::SphericalCap(double theta0) : SphericalCap(Eigen::Vector3d::UnitZ(), theta0) {}

SphericalCap SphericalCap::full_sphere() { return SphericalCap(kPi); }

SphericalCap SphericalCap::antipodal() const { return SphericalCap(-axis_, theta0_); }

MeasureValue solid_angle_measure(const SphericalCap& cap, std::optional<double> normalize_to) {
  const double omega = 2.0 * kPi * (1.0 - std::cos(cap.theta0()));
  if (normalize_to) return MeasureValue(omega / (4.0 * kPi) * *normalize_to);
  return MeasureValue(omega);
}

MeasureValue counting_measure(const SphericalCap&) {
  return MeasureValue(std::numeric_limits<double>::infinity());
}

DensityMatrix cap_mixture_analytic(const SphericalCap& cap) {
  const double r = 0.5 * (1.0 + std::cos(cap.theta0()));
  const Eigen::Vector3d n = r * cap.axis();
  Matrix m(2, 2);
  m(0, 0) = 0.5 * (1.0 + n.z());
  m(1, 1) = 0.5 * (1.0 - n.z());
  m(0, 1) = Complex(0.5 * n.x(), -0.5 * n.y());
  m(1, 0) = Complex(0.5 * n.x(), 0.5 * n.y());
  return DensityMatrix(std::move(m));
}

DensityMatrix cap_mixture_analytic(double theta0) { return cap_mixture_analytic(SphericalCap(theta0)); }

DensityMatrix cap_mixture_quadrature(const SphericalCap& cap, QuadratureGrid grid) {
  if (grid.n_theta < 8 || grid.n_phi < 8) {
    throw std::invalid_argument("cap_mixture_quadrature: grid needs at least 8 points per axis");
  }
  const double d_theta = cap.theta0() / static_cast<double>(grid.n_theta);
  const double d_phi = 2.0 * kPi / static_cast<double>(grid.n_phi);
  QubitSum sum;
  double total_weight = 0.0;
  for (std::size_t i = 0; i < grid.n_theta; ++i) {
    const double theta = (static_cast<double>(i) + 0.5) * d_theta;
    const double w = std::sin(theta) * d_theta * d_phi;
    for (std::size_t j = 0; j < grid.n_phi; ++j) {
      const double phi = (static_cast<double>(j) + 0.5) * d_phi;
      sum.add(w, theta, phi);
      total_weight += w;
    }
  }
  return to_cap_frame(cap, sum.to_matrix(1.0 / total_weight));
}

DensityMatrix cap_mixture_quadrature(double theta0, std::size_t n_theta, std::size_t n_phi) {
  return cap_mixture_quadrature(SphericalCap(theta0), QuadratureGrid{n_theta, n_phi});
}

DensityMatrix cap_mixture_montecarlo(const SphericalCap& cap, MonteCarloConfig config) {
  if (config.n_samples < 100) {
    throw std::invalid_argument("cap_mixture_montecarlo: need at least 100 samples");
  }
  const double cos_min = std::cos(cap.theta0());
  const Rng root(config.seed);
  const std::size_t n_chunks = (config.n_samples + kMonteCarloChunk - 1) / kMonteCarloChunk;

  auto run_chunk = [&](std::size_t c) {
    Rng rng = root.split(c);
    const std::size_t begin = c * kMonteCarloChunk;
    const std::size_t end = std::min(config.n_samples, begin + kMonteCarloChunk);
    QubitSum partial;
    for (std::size_t k = begin; k < end; ++k) {
      const double cos_theta = rng.uniform(cos_min, 1.0);
      const double phi = rng.uniform(0.0, 2.0 * kPi);
      partial.add(1.0, std::acos(std::clamp(cos_theta, -1.0, 1.0)), phi);
    }
    return partial;
  };

  std::vector<QubitSum> partials(n_chunks);
  const std::size_t workers =
      std::clamp<std::size_t>(std::thread::hardware_concurrency(), 1, std::max<std::size_t>(n_chunks, 1));
  std::vector<std::future<void>> jobs;
  jobs.reserve(workers);
  for (std::size_t w = 0; w < workers; ++w) {
    jobs.push_back(std::async(std::launch::async, [&, w] {
      for (std::size_t c = w; c < n_chunks; c += workers) partials[c] = run_chunk(c);
    }));
  }
  for (auto& job : jobs) job.get();

  QubitSum total;
  for (const auto& p : partials) total += p;
  return to_cap_frame(cap, total.to_matrix(1.0 / static_cast<double>(config.n_samples)));
}

DensityMatrix cap_mixture_montecarlo(double theta0, std::size_t n_samples, std::uint64_t seed) {
  return cap_mixture_montecarlo(SphericalCap(theta0), MonteCarloConfig{n_samples, seed});
}

std::string method_name(const CapMethod& method) {
  struct Visitor {
    std::string operator()(const AnalyticMethod&) const { return "analytic"; }
    std::string operator()(const QuadratureGrid&) const { return "quadrature"; }
    std::string operator()(const MonteCarloConfig&) const { return "montecarlo"; }
  };
  return std::visit(Visitor{}, method);
}

DensityMatrix cap_mixture(const SphericalCap& cap, const CapMethod& method) {
  struct Visitor {
    const SphericalCap& cap;
    DensityMatrix operator()(const AnalyticMethod&) const { return cap_mixture_analytic(cap); }
    DensityMatrix operator()(const QuadratureGrid& g) const { return cap_mixture_quadrature(cap, g); }
    DensityMatrix operator()(const MonteCarloConfig& c) const { return cap_mixture_montecarlo(cap, c); }
  };
  return std::visit(Visitor{cap}, method);
}

MeasureValue cap_quantized_measure(const SphericalCap& cap, const CapMethod& method) {
  return measure_from_mixture(cap_mixture(cap, method));
}

}  // namespace qmeasure
