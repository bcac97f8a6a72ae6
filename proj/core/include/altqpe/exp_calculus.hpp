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
 * Exponentials of projection-based tensor decompositions
 *
 *     exp(-i t sum_j P_j (x) H_j) = sum_j P_j (x) exp(-i t H_j)
 *
 * where the P_j are Hermitian, mutually orthogonal projectors summing to the
 * identity and the H_j are Hermitian. Also provides the single-projector
 * special case and the version with unitary transformations
 * S^dagger P_j S and T_j^dagger H_j T_j.
 */

#include <vector>

#include "altqpe/linalg.hpp"

namespace altqpe {

class ProjectionFamily {
 public:
  ProjectionFamily() = default;
  /// Throws kShapeMismatch on an empty list or non-square/unequal sizes.
  explicit ProjectionFamily(std::vector<ComplexMatrix> projectors);

  /// {I - p, p}.
  static ProjectionFamily completed(const ComplexMatrix& p);
  /// {|0><0|, ..., |d-1><d-1|}.
  static ProjectionFamily computational(Index dim);
  /// Rank-1 projectors onto the columns of a unitary.
  static ProjectionFamily from_columns(const ComplexMatrix& basis);

  std::size_t size() const { return projectors_.size(); }
  Index dim() const { return projectors_.empty() ? 0 : projectors_.front().rows(); }
  const std::vector<ComplexMatrix>& projectors() const { return projectors_; }
  const ComplexMatrix& operator[](std::size_t j) const { return projectors_[j]; }

 private:
  std::vector<ComplexMatrix> projectors_;
};

/// Worst violation of each family condition, in Frobenius norm.
struct FamilyValidation {
  double hermiticity = 0.0;    // max_j ||P_j - P_j^dagger||
  double orthogonality = 0.0;  // max_{j,k} ||P_j P_k - delta_jk P_j||
  double completeness = 0.0;   // ||sum_j P_j - I||
  double tolerance = 0.0;

  bool hermitian_ok() const { return hermiticity <= tolerance; }
  bool orthogonal_ok() const { return orthogonality <= tolerance; }
  bool complete_ok() const { return completeness <= tolerance; }
  bool passed() const { return hermitian_ok() && orthogonal_ok() && complete_ok(); }
};

FamilyValidation validate_family(const ProjectionFamily& family);

struct ProjectionTensorDecomposition {
  ProjectionFamily family;
  std::vector<ComplexMatrix> hamiltonians;
  double t = 1.0;

  Index projector_dim() const { return family.dim(); }
  Index hamiltonian_dim() const {
    return hamiltonians.empty() ? 0 : hamiltonians.front().rows();
  }
  /// sum_j P_j (x) H_j.
  ComplexMatrix generator() const;
};

enum class FamilyCheck {
  kValidate,  // run validate_family and the Hamiltonian checks
  kTrusted,   // caller built the family from a unitary basis; shapes only
};

/// sum_j P_j (x) expm_hermitian(H_j, t). Throws kInvalidFamily when the
/// projectors fail validation or the Hamiltonians are not Hermitian.
ComplexMatrix pbtd_exponential(const ProjectionTensorDecomposition& d,
                               FamilyCheck check = FamilyCheck::kValidate);

/// exp(-i t P_j (x) H_j) for a single member j, i.e. the projector
/// exponential of that term.
ComplexMatrix pbtd_term_exponential(const ProjectionTensorDecomposition& d, std::size_t j);

/// (I - p) (x) I + p (x) expm_hermitian(h, t).
ComplexMatrix projector_exponential(const ComplexMatrix& p, const ComplexMatrix& h, double t);

struct TransformedExponential {
  ComplexMatrix result;
  ComplexMatrix transform;  // T = exp(-i t sum_j P_j (x) Ham(T_j))
  ComplexMatrix core;       // U = exp(-i t sum_j P_j (x) H_j)
};

/// The decomposition with members S^dagger P_j S and T_j^dagger H_j T_j.
ProjectionTensorDecomposition transformed_decomposition(
    const ComplexMatrix& s, const std::vector<ComplexMatrix>& transforms,
    const ProjectionTensorDecomposition& d);

/**
 * exp(-i t sum_j (S^dagger P_j S) (x) (T_j^dagger H_j T_j)) evaluated as
 * (S (x) I)^dagger T^dagger U T (S (x) I).
 *
 * The Hamiltonians of the T_j are extracted with hamiltonian_from_unitary,
 * so T and U individually depend on that branch; their product does not.
 */
TransformedExponential transformed_pbtd_exponential(
    const ComplexMatrix& s, const std::vector<ComplexMatrix>& transforms,
    const ProjectionTensorDecomposition& d);

}  // namespace altqpe
