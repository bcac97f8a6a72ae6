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

// Phase estimation with a QFT on the ancilla register in place of the
// Hadamard layer:
//
//   QPE_N(U) = (QFT^dagger (x) I) cU (QFT (x) I) = exp(-i t Q_N (x) Ham(U))
//
// The ancilla register is always the first (most significant) factor, so the
// joint index of |j>|k> is j * dim(U) + k.

#include "altqpe/linalg.hpp"
#include "altqpe/spectral.hpp"

namespace altqpe {

/// A unitary together with one of its Hamiltonians: expm_hermitian(H, t) == U.
class HamiltonianPair {
 public:
  /// Validates U unitary, H Hermitian and the exponential relation.
  /// Throws kInvalidPair.
  HamiltonianPair(ComplexMatrix unitary, ComplexMatrix hamiltonian, double t = 1.0);

  /// Extracts H via hamiltonian_from_unitary.
  static HamiltonianPair from_unitary(const ComplexMatrix& unitary, double t = 1.0);
  /// U = expm_hermitian(h, t).
  static HamiltonianPair from_hamiltonian(const ComplexMatrix& hamiltonian, double t = 1.0);

  const ComplexMatrix& unitary() const { return unitary_; }
  const ComplexMatrix& hamiltonian() const { return hamiltonian_; }
  double t() const { return t_; }
  Index dim() const { return unitary_.rows(); }

  /// (U^k, k H, t): the Hamiltonian is scaled rather than re-extracted.
  HamiltonianPair power(std::uint64_t k) const;

 private:
  ComplexMatrix unitary_;
  ComplexMatrix hamiltonian_;
  double t_;
};

/// An eigenvector psi of U with U psi = exp(i 2 pi phase) psi, phase in [0, 1).
class PhaseInstance {
 public:
  /// Reads the phase off <psi|U|psi>. Throws kNotEigenvector.
  PhaseInstance(HamiltonianPair pair, ComplexVector eigenvector);

  const HamiltonianPair& pair() const { return pair_; }
  const ComplexVector& eigenvector() const { return eigenvector_; }
  double phase() const { return phase_; }

 private:
  HamiltonianPair pair_;
  ComplexVector eigenvector_;
  double phase_;
};

/// C_N = diag(0, 1, ..., N - 1).
ComplexMatrix control_multiplier(int n);

/// sum_j |j><j| (x) U^j over an n-qubit control register.
ComplexMatrix controlled_u(int n, const ComplexMatrix& u);

/// Coefficients of Q_N: c_0 = (N - 1) / 2, c_j = 1 / (omega^j - 1).
CirculantSpec qpe_multiplier_spec(int n);

/// Q_N = QFT^dagger C_N QFT, built from its closed-form circulant spec.
ComplexMatrix qpe_multiplier(int n);

/// (QFT^dagger (x) I) cU (QFT (x) I). Throws kNotUnitary, kSizeOutOfRange.
ComplexMatrix alternative_qpe(int n, const ComplexMatrix& u);

/// exp(-i t Q_N (x) H) assembled as sum_m |v_m><v_m| (x) exp(-i t m H) with
/// v_m = QFT^dagger |m>.
ComplexMatrix qpe_via_hamiltonian(int n, const HamiltonianPair& pair);

struct QpeAlgebraReport {
  double inverse_error = 0.0;      // ||QPE(U0)^dagger - QPE(U0^dagger)||
  double product_error = 0.0;      // ||QPE(U0 U1) - QPE(U0) QPE(U1)||
  double commuted_error = 0.0;     // ||QPE(U0 U1) - QPE(U1) QPE(U0)||
  double tolerance = 1e-10;

  double max_error() const;
  bool passed() const { return max_error() <= tolerance; }
};

/// Inverse and product identities of the alternative QPE for a commuting
/// pair. Throws kNotCommuting.
QpeAlgebraReport qpe_algebra_checks(int n, const ComplexMatrix& u0, const ComplexMatrix& u1);

}  // namespace altqpe
