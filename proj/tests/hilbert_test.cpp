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

#include <cmath>
#include <numbers>

#include "gtest/gtest.h"
#include "oracles.hpp"
#include "qmeasure/random.hpp"

using namespace qmeasure;

namespace {

const double kInvSqrt2 = 1.0 / std::sqrt(2.0);

PureState z_plus() { return PureState::basis(2, 0); }
PureState z_minus() { return PureState::basis(2, 1); }
PureState x_plus() { return PureState{kInvSqrt2, kInvSqrt2}; }

std::vector<std::vector<oracle::Cplx>> as_vectors(std::initializer_list<PureState> states) {
  std::vector<std::vector<oracle::Cplx>> out;
  for (const auto& s : states) out.emplace_back(s.amplitudes().begin(), s.amplitudes().end());
  return out;
}

}  // namespace

TEST(pure_state, rejects_unnormalized) {
  ASSERT_THROW(PureState({1.0, 1.0}), NormalizationError);
  ASSERT_THROW(PureState{Vector()}, NormalizationError);
  ASSERT_THROW(PureState::normalized(Vector::Zero(3)), NormalizationError);
  ASSERT_NO_THROW(PureState({1.0 + 1e-10, 0.0}));
}

TEST(pure_state, canonical_phase) {
  const PureState psi = PureState{Complex(0, kInvSqrt2), Complex(-kInvSqrt2, 0)}.canonical();
  EXPECT_NEAR(psi[0].real(), kInvSqrt2, 1e-15);
  EXPECT_NEAR(psi[0].imag(), 0.0, 1e-15);
  EXPECT_NEAR(psi[1].real(), 0.0, 1e-15);
  EXPECT_NEAR(psi[1].imag(), kInvSqrt2, 1e-15);

  const PureState lead_zero = PureState{0.0, Complex(0, -1)}.canonical();
  EXPECT_EQ(lead_zero[1], Complex(1.0, 0.0));
}

TEST(project, basis_projector) {
  const DensityMatrix rho = project(z_plus());
  EXPECT_EQ(rho(0, 0), Complex(1.0));
  EXPECT_EQ(rho(0, 1), Complex(0.0));
  EXPECT_EQ(rho(1, 0), Complex(0.0));
  EXPECT_EQ(rho(1, 1), Complex(0.0));
}

TEST(project, x_plus_all_half) {
  const DensityMatrix rho = project(x_plus());
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j) EXPECT_NEAR(std::abs(rho(i, j) - 0.5), 0.0, 1e-15);
}

TEST(project, random_states_are_idempotent_rank_one) {
  Rng rng(7);
  for (int t = 0; t < 200; ++t) {
    const PureState psi = random_pure_state(rng.uniform_index(1, 8), rng);
    const DensityMatrix rho = project(psi);
    EXPECT_NEAR(rho.trace(), 1.0, 1e-12);
    EXPECT_LE(max_abs_diff(rho.entries() * rho.entries(), rho.entries()), 1e-10);
    EXPECT_NEAR(rho.spectrum().eigenvalues[0], 1.0, 1e-10);
  }
}

TEST(transition_probability, named_examples) {
  EXPECT_EQ(transition_probability(z_plus(), z_minus()), 0.0);
  EXPECT_NEAR(transition_probability(z_plus(), z_plus().with_phase(1.234)), 1.0, 1e-15);
  EXPECT_NEAR(transition_probability(z_plus(), x_plus()), 0.5, 1e-15);
  EXPECT_THROW(transition_probability(z_plus(), PureState::basis(3, 0)), DimensionMismatch);
}

TEST(transition_probability, symmetric_and_phase_invariant) {
  Rng rng(11);
  for (int t = 0; t < 1000; ++t) {
    const std::size_t dim = rng.uniform_index(1, 8);
    const PureState a = random_pure_state(dim, rng);
    const PureState b = random_pure_state(dim, rng);
    const double p = transition_probability(a, b);
    ASSERT_GE(p, 0.0);
    ASSERT_LE(p, 1.0);
    ASSERT_NEAR(p, transition_probability(b, a), 1e-15);
    ASSERT_NEAR(p, transition_probability(a.with_phase(rng.uniform(0, 6.3)), b.with_phase(rng.uniform(0, 6.3))),
                1e-14);
  }
}

TEST(eigendecompose, named_examples) {
  const Spectrum s1 = eigendecompose(project(z_plus()));
  EXPECT_EQ(s1.eigenvalues, (std::vector<double>{1.0, 0.0}));

  Matrix half = Matrix::Identity(2, 2) * 0.5;
  const Spectrum s2 = eigendecompose(DensityMatrix(half));
  EXPECT_NEAR(s2.eigenvalues[0], 0.5, 1e-15);
  EXPECT_NEAR(s2.eigenvalues[1], 0.5, 1e-15);

  const Matrix triple = (project(z_plus()).entries() + project(z_minus()).entries() + project(x_plus()).entries()) / 3.0;
  const Spectrum s3 = eigendecompose(DensityMatrix(triple));
  // Oracle: Jacobi on the real embedding of the explicit mixture.
  const auto expected = oracle::hermitian_eigenvalues(oracle::mixture(as_vectors({z_plus(), z_minus(), x_plus()})));
  EXPECT_NEAR(expected[0], 2.0 / 3.0, 1e-14);
  EXPECT_NEAR(expected[1], 1.0 / 3.0, 1e-14);
  EXPECT_NEAR(s3.eigenvalues[0], expected[0], 1e-12);
  EXPECT_NEAR(s3.eigenvalues[1], expected[1], 1e-12);
}

TEST(eigendecompose, errors) {
  Matrix not_psd(2, 2);
  not_psd << 1.1, 0.0, 0.0, -0.1;
  EXPECT_THROW(DensityMatrix{not_psd}, PositivityError);
  EXPECT_THROW(eigendecompose(not_psd), PositivityError);

  Matrix tiny_negative(2, 2);
  tiny_negative << 1.0 + 5e-9, 0.0, 0.0, -5e-9;
  const DensityMatrix clamped(tiny_negative);
  EXPECT_EQ(clamped.spectrum().eigenvalues[1], 0.0);

  Matrix not_hermitian(2, 2);
  not_hermitian << 0.5, 0.1, 0.0, 0.5;
  EXPECT_THROW(DensityMatrix{not_hermitian}, HermiticityError);

  Matrix bad_trace = Matrix::Identity(2, 2);
  EXPECT_THROW(DensityMatrix{bad_trace}, std::invalid_argument);
}

TEST(eigendecompose, reconstruction_and_orthonormality_on_random_mixtures) {
  Rng rng(2024);
  for (int t = 0; t < 1000; ++t) {
    const std::size_t dim = rng.uniform_index(2, 8);
    const DensityMatrix rho = random_density_matrix(dim, rng.uniform_index(1, dim * dim), rng);
    const Spectrum& s = eigendecompose(rho);
    double sum = 0.0;
    for (std::size_t i = 0; i < dim; ++i) {
      ASSERT_GE(s.eigenvalues[i], 0.0);
      ASSERT_LE(s.eigenvalues[i], 1.0 + 1e-12);
      if (i > 0) ASSERT_GE(s.eigenvalues[i - 1], s.eigenvalues[i]);
      sum += s.eigenvalues[i];
      for (std::size_t j = i + 1; j < dim; ++j) {
        ASSERT_LE(std::abs(inner_product(s.eigenvectors[i], s.eigenvectors[j])), 1e-8);
      }
    }
    ASSERT_NEAR(sum, 1.0, 1e-9);
    ASSERT_LE(max_abs_diff(s.reconstruct(), rho.entries()), 1e-8);
  }
}

TEST(eigendecompose, agrees_with_jacobi_oracle) {
  Rng rng(99);
  for (int t = 0; t < 100; ++t) {
    const std::size_t dim = rng.uniform_index(2, 6);
    const DensityMatrix rho = random_density_matrix(dim, rng.uniform_index(1, 2 * dim), rng);
    oracle::DenseMatrix dense(dim, std::vector<oracle::Cplx>(dim));
    for (std::size_t i = 0; i < dim; ++i)
      for (std::size_t j = 0; j < dim; ++j) dense[i][j] = rho(i, j);
    const auto expected = oracle::hermitian_eigenvalues(dense);
    for (std::size_t i = 0; i < dim; ++i) ASSERT_NEAR(rho.spectrum().eigenvalues[i], expected[i], 1e-10);
  }
}

TEST(tensor_state, kronecker_ordering) {
  const PureState zz = tensor_state(z_plus(), z_plus());
  EXPECT_EQ(zz.dim(), 4u);
  EXPECT_EQ(zz[0], Complex(1.0));
  for (std::size_t i = 1; i < 4; ++i) EXPECT_EQ(zz[i], Complex(0.0));

  const PureState xz = tensor_state(x_plus(), z_plus());
  EXPECT_NEAR(xz[0].real(), kInvSqrt2, 1e-15);
  EXPECT_EQ(xz[1], Complex(0.0));
  EXPECT_NEAR(xz[2].real(), kInvSqrt2, 1e-15);
  EXPECT_EQ(xz[3], Complex(0.0));
}

TEST(tensor_state, inner_products_factor) {
  Rng rng(5);
  for (int t = 0; t < 500; ++t) {
    const std::size_t da = rng.uniform_index(1, 4);
    const std::size_t db = rng.uniform_index(1, 4);
    const PureState a = random_pure_state(da, rng);
    const PureState a2 = random_pure_state(da, rng);
    const PureState b = random_pure_state(db, rng);
    const PureState b2 = random_pure_state(db, rng);
    const PureState ab = tensor_state(a, b);
    const PureState ab2 = tensor_state(a2, b2);
    ASSERT_EQ(ab.dim(), da * db);
    ASSERT_LE(std::abs(inner_product(ab, ab2) - inner_product(a, a2) * inner_product(b, b2)), 1e-12);
    ASSERT_NEAR(transition_probability(ab, ab2), transition_probability(a, a2) * transition_probability(b, b2),
                1e-10);
  }
}

TEST(span_dimension, named_examples) {
  const std::vector<PureState> orthogonal{z_plus(), z_minus()};
  EXPECT_EQ(span_dimension(orthogonal), 2u);
  const std::vector<PureState> same_ray{z_plus(), z_plus().with_phase(0.7)};
  EXPECT_EQ(span_dimension(same_ray), 1u);
  const std::vector<PureState> triple{z_plus(), z_minus(), x_plus()};
  EXPECT_EQ(span_dimension(triple), 2u);
  EXPECT_THROW(span_dimension(std::vector<PureState>{}), std::invalid_argument);
  const std::vector<PureState> mixed{z_plus(), PureState::basis(3, 0)};
  EXPECT_THROW(span_dimension(mixed), DimensionMismatch);
}

TEST(random_unitary, is_unitary) {
  Rng rng(3);
  for (std::size_t dim = 1; dim <= 8; ++dim) {
    const Matrix u = random_unitary(dim, rng);
    const auto n = static_cast<Eigen::Index>(dim);
    EXPECT_LE(max_abs_diff(u.adjoint() * u, Matrix::Identity(n, n)), 1e-12);
  }
}

TEST(rng, split_streams_are_reproducible) {
  const Rng root(42);
  Rng a = root.split(3);
  Rng b = root.split(3);
  Rng c = root.split(4);
  for (int i = 0; i < 10; ++i) {
    const auto x = a.next_u64();
    EXPECT_EQ(x, b.next_u64());
    EXPECT_NE(x, c.next_u64());
  }
  Rng u(1);
  for (int i = 0; i < 1000; ++i) {
    const double x = u.uniform();
    ASSERT_GE(x, 0.0);
    ASSERT_LT(x, 1.0);
    const std::size_t k = u.uniform_index(2, 6);
    ASSERT_GE(k, 2u);
    ASSERT_LE(k, 6u);
  }
}
