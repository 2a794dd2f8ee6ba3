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

#include <complex>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace qmeasure {

using Complex = std::complex<double>;
using Vector = Eigen::VectorXcd;
using Matrix = Eigen::MatrixXcd;

/// Maximum deviation of a pure state's squared norm from one.
inline constexpr double kNormTolerance = 1e-9;
/// Maximum entrywise deviation |M - M^dagger| for a density matrix.
inline constexpr double kHermitianTolerance = 1e-10;
inline constexpr double kTraceTolerance = 1e-9;
/// Eigenvalues in [-kPsdTolerance, 0) are clamped to zero; anything lower is rejected.
inline constexpr double kPsdTolerance = 1e-8;
inline constexpr double kSpanTolerance = 1e-8;

class NormalizationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class DimensionMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class PositivityError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class HermiticityError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A normalized vector in C^dim, standing for the ray it spans.
///
/// Two PureStates that differ by a global phase describe the same physical
/// state. Compare rays with transition_probability(), never by amplitudes.
class PureState {
 public:
  /// Throws NormalizationError unless the squared norm is within
  /// kNormTolerance of one.
  explicit PureState(Vector amplitudes);
  PureState(std::initializer_list<Complex> amplitudes);

  /// Rescales a nonzero vector to unit norm.
  static PureState normalized(Vector raw);
  static PureState basis(std::size_t dim, std::size_t index);

  std::size_t dim() const { return static_cast<std::size_t>(amplitudes_.size()); }
  const Vector& amplitudes() const { return amplitudes_; }
  Complex operator[](std::size_t i) const { return amplitudes_(static_cast<Eigen::Index>(i)); }

  /// Same ray with the first nonzero amplitude made real and positive.
  PureState canonical() const;
  PureState with_phase(double radians) const;

 private:
  Vector amplitudes_;
};

/// Eigenvalues in descending order with matching orthonormal eigenvectors.
struct Spectrum {
  std::vector<double> eigenvalues;
  std::vector<PureState> eigenvectors;

  std::size_t dim() const { return eigenvalues.size(); }
  /// Sum of lambda_i |v_i><v_i|.
  Matrix reconstruct() const;
};

/// Hermitian, positive semidefinite, unit-trace operator.
///
/// The spectrum is computed once at construction (it is needed to check
/// positivity) and retained.
class DensityMatrix {
 public:
  explicit DensityMatrix(Matrix entries);

  std::size_t dim() const { return static_cast<std::size_t>(entries_.rows()); }
  const Matrix& entries() const { return entries_; }
  Complex operator()(std::size_t row, std::size_t col) const {
    return entries_(static_cast<Eigen::Index>(row), static_cast<Eigen::Index>(col));
  }
  const Spectrum& spectrum() const { return spectrum_; }
  double trace() const { return entries_.trace().real(); }

 private:
  Matrix entries_;
  Spectrum spectrum_;
};

/// Eigendecomposition of an arbitrary Hermitian matrix, eigenvalues descending.
/// Throws HermiticityError for a non-square or non-Hermitian input.
Spectrum eigendecompose_hermitian(const Matrix& m);

/// Throws PositivityError if an eigenvalue is below -kPsdTolerance.
Spectrum eigendecompose(const Matrix& m);
const Spectrum& eigendecompose(const DensityMatrix& rho);

/// |psi><psi|
DensityMatrix project(const PureState& psi);

Complex inner_product(const PureState& bra, const PureState& ket);

/// |<psi|phi>|^2, in [0, 1].
double transition_probability(const PureState& psi, const PureState& phi);

/// Kronecker ordering: amplitude (i * dim_b + j) is a_i * b_j.
PureState tensor_state(const PureState& a, const PureState& b);
Matrix kron(const Matrix& a, const Matrix& b);

/// U |psi>; U must be unitary to within kNormTolerance on this state.
PureState apply(const Matrix& unitary, const PureState& psi);

/// Rank of the Gram matrix <psi_i|psi_j>, counting eigenvalues above tol.
std::size_t span_dimension(std::span<const PureState> states, double tol = kSpanTolerance);

/// Largest entrywise modulus of a - b.
double max_abs_diff(const Matrix& a, const Matrix& b);

std::string to_string(const PureState& psi);

}  // namespace qmeasure
