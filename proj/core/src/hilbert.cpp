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

#include "qmeasure/hilbert.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace qmeasure {

namespace {

void require_same_dim(std::size_t a, std::size_t b, const char* what) {
  if (a != b) {
    std::ostringstream msg;
    msg << what << ": dimension mismatch (" << a << " vs " << b << ")";
    throw DimensionMismatch(msg.str());
  }
}

}  // namespace

PureState::PureState(Vector amplitudes) : amplitudes_(std::move(amplitudes)) {
  if (amplitudes_.size() == 0) {
    throw NormalizationError("PureState: dimension must be at least 1");
  }
  const double norm2 = amplitudes_.squaredNorm();
  if (!std::isfinite(norm2) || std::abs(norm2 - 1.0) > kNormTolerance) {
    std::ostringstream msg;
    msg.precision(17);
    msg << "PureState: squared norm " << norm2 << " is not 1";
    throw NormalizationError(msg.str());
  }
}

PureState::PureState(std::initializer_list<Complex> amplitudes)
    : PureState(Vector(Eigen::Map<const Vector>(amplitudes.begin(),
                                                static_cast<Eigen::Index>(amplitudes.size())))) {}

PureState PureState::normalized(Vector raw) {
  const double norm = raw.norm();
  if (!(norm > 0.0) || !std::isfinite(norm)) {
    throw NormalizationError("PureState::normalized: vector has zero or non-finite norm");
  }
  raw /= norm;
  return PureState(std::move(raw));
}

PureState PureState::basis(std::size_t dim, std::size_t index) {
  if (index >= dim) {
    throw std::out_of_range("PureState::basis: index out of range");
  }
  Vector v = Vector::Zero(static_cast<Eigen::Index>(dim));
  v(static_cast<Eigen::Index>(index)) = 1.0;
  return PureState(std::move(v));
}

PureState PureState::canonical() const {
  // Pick the first amplitude that is not negligible against the largest one.
  const double largest = amplitudes_.cwiseAbs().maxCoeff();
  for (Eigen::Index i = 0; i < amplitudes_.size(); ++i) {
    const double mag = std::abs(amplitudes_(i));
    if (mag > 1e-12 * largest) {
      const Complex phase = std::conj(amplitudes_(i)) / mag;
      Vector v = amplitudes_ * phase;
      v(i) = mag;
      return PureState::normalized(std::move(v));
    }
  }
  return *this;
}

PureState PureState::with_phase(double radians) const {
  return PureState::normalized(amplitudes_ * std::polar(1.0, radians));
}

Matrix Spectrum::reconstruct() const {
  const auto n = static_cast<Eigen::Index>(dim());
  Matrix m = Matrix::Zero(n, n);
  for (std::size_t i = 0; i < eigenvalues.size(); ++i) {
    const Vector& v = eigenvectors[i].amplitudes();
    m += eigenvalues[i] * (v * v.adjoint());
  }
  return m;
}

Spectrum eigendecompose_hermitian(const Matrix& m) {
  if (m.rows() != m.cols() || m.rows() == 0) {
    throw HermiticityError("eigendecompose: matrix must be square and nonempty");
  }
  if (!m.allFinite()) {
    throw HermiticityError("eigendecompose: matrix has non-finite entries");
  }
  if (max_abs_diff(m, m.adjoint()) > kHermitianTolerance) {
    throw HermiticityError("eigendecompose: matrix is not Hermitian");
  }
  Eigen::SelfAdjointEigenSolver<Matrix> solver(m);
  if (solver.info() != Eigen::Success) {
    throw std::runtime_error("eigendecompose: solver did not converge");
  }
  // Eigen sorts ascending.
  const auto n = m.rows();
  Spectrum out;
  out.eigenvalues.reserve(static_cast<std::size_t>(n));
  out.eigenvectors.reserve(static_cast<std::size_t>(n));
  for (Eigen::Index i = n - 1; i >= 0; --i) {
    out.eigenvalues.push_back(solver.eigenvalues()(i));
    out.eigenvectors.push_back(PureState::normalized(solver.eigenvectors().col(i)));
  }
  return out;
}

Spectrum eigendecompose(const Matrix& m) {
  Spectrum s = eigendecompose_hermitian(m);
  for (double& lambda : s.eigenvalues) {
    if (lambda < -kPsdTolerance) {
      std::ostringstream msg;
      msg.precision(17);
      msg << "eigendecompose: eigenvalue " << lambda << " violates positivity";
      throw PositivityError(msg.str());
    }
    if (lambda < 0.0) lambda = 0.0;
  }
  return s;
}

const Spectrum& eigendecompose(const DensityMatrix& rho) { return rho.spectrum(); }

DensityMatrix::DensityMatrix(Matrix entries) : entries_(std::move(entries)) {
  if (entries_.rows() != entries_.cols() || entries_.rows() == 0) {
    throw HermiticityError("DensityMatrix: matrix must be square and nonempty");
  }
  const Complex tr = entries_.trace();
  if (std::abs(tr.real() - 1.0) > kTraceTolerance || std::abs(tr.imag()) > kTraceTolerance) {
    std::ostringstream msg;
    msg.precision(17);
    msg << "DensityMatrix: trace " << tr.real() << " is not 1";
    throw std::invalid_argument(msg.str());
  }
  spectrum_ = eigendecompose(entries_);
}

DensityMatrix project(const PureState& psi) {
  const Vector& v = psi.amplitudes();
  return DensityMatrix(v * v.adjoint());
}

Complex inner_product(const PureState& bra, const PureState& ket) {
  require_same_dim(bra.dim(), ket.dim(), "inner_product");
  return bra.amplitudes().dot(ket.amplitudes());
}

double transition_probability(const PureState& psi, const PureState& phi) {
  require_same_dim(psi.dim(), phi.dim(), "transition_probability");
  const double p = std::norm(psi.amplitudes().dot(phi.amplitudes()));
  return std::clamp(p, 0.0, 1.0);
}

Matrix kron(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

PureState tensor_state(const PureState& a, const PureState& b) {
  return PureState::normalized(kron(a.amplitudes(), b.amplitudes()));
}

PureState apply(const Matrix& unitary, const PureState& psi) {
  if (unitary.cols() != static_cast<Eigen::Index>(psi.dim()) || unitary.rows() != unitary.cols()) {
    throw DimensionMismatch("apply: operator shape does not match state");
  }
  return PureState(unitary * psi.amplitudes());
}

std::size_t span_dimension(std::span<const PureState> states, double tol) {
  if (states.empty()) {
    throw std::invalid_argument("span_dimension: empty state list");
  }
  const std::size_t dim = states.front().dim();
  const auto n = static_cast<Eigen::Index>(states.size());
  Matrix gram(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    require_same_dim(dim, states[static_cast<std::size_t>(i)].dim(), "span_dimension");
    for (Eigen::Index j = 0; j < n; ++j) {
      gram(i, j) = states[static_cast<std::size_t>(i)].amplitudes().dot(
          states[static_cast<std::size_t>(j)].amplitudes());
    }
  }
  // The Gram matrix is Hermitian PSD, so its singular values are its eigenvalues.
  Eigen::SelfAdjointEigenSolver<Matrix> solver(gram, Eigen::EigenvaluesOnly);
  const auto& ev = solver.eigenvalues();
  return static_cast<std::size_t>(std::count_if(ev.begin(), ev.end(), [tol](double x) { return x > tol; }));
}

double max_abs_diff(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw DimensionMismatch("max_abs_diff: shape mismatch");
  }
  return (a - b).cwiseAbs().maxCoeff();
}

std::string to_string(const PureState& psi) {
  std::ostringstream out;
  out.precision(17);
  out << '[';
  for (std::size_t i = 0; i < psi.dim(); ++i) {
    if (i) out << ',';
    out << '[' << psi[i].real() << ',' << psi[i].imag() << ']';
  }
  out << ']';
  return out.str();
}

}  // namespace qmeasure
