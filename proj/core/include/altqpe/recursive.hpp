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
 * One level of the recursive splitting of an n-qubit ancilla register into
 * an outer register of n0 qubits and an inner one of n1 qubits.
 *
 * omega is always the root for the full size N = N0 N1, never exp(i 2 pi / N1).
 */

#include <vector>

#include "altqpe/linalg.hpp"
#include "altqpe/qpe.hpp"
#include "altqpe/spectral.hpp"

namespace altqpe {

struct SplitLayout {
  int outer_qubits = 1;  // n0
  int inner_qubits = 1;  // n1

  /// Throws kSizeOutOfRange unless both counts are >= 1 and n0 + n1 <= 10.
  SplitLayout(int n0, int n1);

  int total_qubits() const { return outer_qubits + inner_qubits; }
  std::size_t outer_size() const { return std::size_t{1} << outer_qubits; }
  std::size_t inner_size() const { return std::size_t{1} << inner_qubits; }
  std::size_t size() const { return std::size_t{1} << total_qubits(); }
};

/// D = diag(1, omega, ..., omega^{N1 - 1}), omega = exp(i 2 pi / N).
struct OmegaDiagonal {
  SplitLayout layout;
  ComplexMatrix matrix;
};

OmegaDiagonal omega_diagonal(const SplitLayout& layout);

/// The sub-blocks A^(l), l < N0, with A^(l)(j, k) = c_{(k - j + N1 l) mod N}.
/// They tile the circulant as A = sum_l Shift_{N0}^l (x) A^(l).
std::vector<ComplexMatrix> circulant_sub_blocks(const CirculantSpec& spec,
                                                const SplitLayout& layout);

struct CirculantBlockTerm {
  ComplexMatrix projector;  // |v_m><v_m|, v_m = QFT_{N0}^dagger |m>
  ComplexMatrix block;      // sum_l omega^{-l m N1} A^(l)
};

/// A = sum_m |v_m><v_m| (x) B_m. Throws kShapeMismatch when the spec size is
/// not N0 N1.
std::vector<CirculantBlockTerm> circulant_block_decomposition(const CirculantSpec& spec,
                                                              const SplitLayout& layout);

/// Same decomposition with an arbitrary root used for the block phases.
/// Only meaningful as a negative control.
std::vector<CirculantBlockTerm> circulant_block_decomposition(const CirculantSpec& spec,
                                                              const SplitLayout& layout,
                                                              Complex root);

ComplexMatrix assemble(const std::vector<CirculantBlockTerm>& terms);

/// N0 sum_m |v_m><v_m| (x) (D^dagger)^m Q_{N1} D^m + Q_{N0} (x) I_{N1}.
ComplexMatrix qpe_multiplier_decomposition(const SplitLayout& layout);

/// The right-hand side above with a caller-supplied diagonal in place of D.
ComplexMatrix qpe_multiplier_decomposition(const SplitLayout& layout,
                                           const ComplexMatrix& diagonal);

/// An operator product together with its factors in application order
/// (factors.front() acts first); product = factors.back() * ... * factors.front().
struct FactoredOperator {
  ComplexMatrix product;
  std::vector<ComplexMatrix> factors;
};

ComplexMatrix multiply_in_order(const std::vector<ComplexMatrix>& factors);

/**
 * QPE_N(U) = (QPE_{N0}(D^dagger) (x) I) (I_{N0} (x) QPE_{N1}(U^{N0}))
 *            (QPE_{N0}(D) (x) I) QPE_{N0}(I_{N1} (x) U)
 *
 * The inner factor is built from the Hamiltonian N0 H. Throws
 * kSizeOutOfRange when N dim(U) > 2^10.
 */
FactoredOperator composed_qpe(const SplitLayout& layout, const HamiltonianPair& pair);

/// composed_qpe with the diagonal D supplied by the caller.
FactoredOperator composed_qpe(const SplitLayout& layout, const HamiltonianPair& pair,
                              const ComplexMatrix& diagonal);

/**
 * (QFT_{N0}^dagger (x) I (x) I) W (QFT_{N0} (x) I (x) I) with
 * W = (cD^dagger (x) I) (I_{N0} (x) QPE_{N1}(U^{N0})) (cD (x) I) c(I_{N1} (x) U).
 */
struct NestedQpe {
  ComplexMatrix product;
  ComplexMatrix w;
  std::vector<ComplexMatrix> w_factors;  // application order
  double fusion_error = 0.0;             // ||(cD (x) I) c(I (x) U) - c(D (x) U)||_F
};

NestedQpe nested_qpe(const SplitLayout& layout, const HamiltonianPair& pair);

/// The composed circuit for n0 = 1 after the Hadamard pairs between factors
/// cancel: (H (x) I) (cD^dagger (x) I) (I (x) QPE_{N1}(U^2)) (cD (x) I)
/// c(I (x) U) (H (x) I).
FactoredOperator one_qubit_outer_qpe(int inner_qubits, const HamiltonianPair& pair);

}  // namespace altqpe
