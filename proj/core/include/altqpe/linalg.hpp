// Copyright 2026 The altqpe Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

/**
 * @file
 * Dense complex linear algebra shared by every other module: Kronecker
 * products, structural checks, Hermitian eigendecomposition and the
 * exponentials exp(-i t H).
 */

#include <complex>
#include <cstdint>

#include <Eigen/Dense>

#include "altqpe/errors.hpp"

namespace altqpe {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;
using Index = Eigen::Index;

inline constexpr Complex kI{0.0, 1.0};
inline constexpr double kPi = 3.141592653589793238462643383279502884;
inline constexpr double kTwoPi = 2.0 * kPi;

/// Per-dimension Frobenius tolerance for structural checks (Hermitian,
/// unitary, projector) and for operator identities.
inline constexpr double kToleranceScale = 1e-9;

inline double structural_tolerance(Index dim) {
  return kToleranceScale * static_cast<double>(dim);
}

struct EigenDecomposition {
  RealVector eigenvalues;      // ascending
  ComplexMatrix eigenvectors;  // orthonormal columns

  ComplexMatrix reconstruct() const;
};

ComplexMatrix identity(Index dim);

/// Block (j, k) of the result is a(j, k) * b.
ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

/// |v><v| for a column vector v.
ComplexMatrix outer(const ComplexVector& v);

ComplexVector basis_vector(Index dim, Index index);

double frobenius_distance(const ComplexMatrix& a, const ComplexMatrix& b);

double hermiticity_error(const ComplexMatrix& a);  // ||a - a^dagger||_F
double unitarity_error(const ComplexMatrix& a);    // ||a^dagger a - I||_F
double commutator_norm(const ComplexMatrix& a, const ComplexMatrix& b);

bool is_square(const ComplexMatrix& a);
bool is_hermitian(const ComplexMatrix& a);
bool is_unitary(const ComplexMatrix& a);

void require_square(const ComplexMatrix& a, std::string_view what);
void require_hermitian(const ComplexMatrix& a, std::string_view what);
void require_unitary(const ComplexMatrix& a, std::string_view what);

/// a^k by binary exponentiation. a must be square.
ComplexMatrix matrix_power(const ComplexMatrix& a, std::uint64_t k);

/// Eigendecomposition of a Hermitian matrix. Throws kNotHermitian when
/// ||a - a^dagger||_F exceeds the structural tolerance.
EigenDecomposition eigh(const ComplexMatrix& a);

/// exp(-i t h) for Hermitian h, evaluated as V exp(-i t Lambda) V^dagger.
ComplexMatrix expm_hermitian(const ComplexMatrix& h, double t);

/**
 * Returns a Hermitian H with expm_hermitian(H, t) == u.
 *
 * Each eigenvalue of u is written as exp(-i theta) with theta in [0, 2 pi);
 * the matching eigenvalue of H is theta / t. Eigenphases within 1e-12 of
 * 2 pi are folded to 0 so that the identity maps to the zero matrix.
 *
 * Throws kNotUnitary or kZeroTime.
 */
ComplexMatrix hamiltonian_from_unitary(const ComplexMatrix& u, double t);

/// Number of qubits q with 2^q == dim, or -1 when dim is not a power of two.
int qubits_for_dimension(Index dim);

}  // namespace altqpe
