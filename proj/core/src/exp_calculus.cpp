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

#include "altqpe/exp_calculus.hpp"

#include <algorithm>
#include <string>

namespace altqpe {

ProjectionFamily::ProjectionFamily(std::vector<ComplexMatrix> projectors)
    : projectors_(std::move(projectors)) {
  if (projectors_.empty()) {
    throw Error(ErrorKind::kShapeMismatch, "projection family is empty");
  }
  const Index d = projectors_.front().rows();
  for (const auto& p : projectors_) {
    if (!is_square(p) || p.rows() != d) {
      throw Error(ErrorKind::kShapeMismatch, "projectors must share one square shape");
    }
  }
}

ProjectionFamily ProjectionFamily::completed(const ComplexMatrix& p) {
  require_square(p, "projector");
  return ProjectionFamily({identity(p.rows()) - p, p});
}

ProjectionFamily ProjectionFamily::computational(Index dim) {
  std::vector<ComplexMatrix> ps;
  ps.reserve(static_cast<std::size_t>(dim));
  for (Index j = 0; j < dim; ++j) ps.push_back(outer(basis_vector(dim, j)));
  return ProjectionFamily(std::move(ps));
}

ProjectionFamily ProjectionFamily::from_columns(const ComplexMatrix& basis) {
  std::vector<ComplexMatrix> ps;
  ps.reserve(static_cast<std::size_t>(basis.cols()));
  for (Index j = 0; j < basis.cols(); ++j) ps.push_back(outer(basis.col(j)));
  return ProjectionFamily(std::move(ps));
}

FamilyValidation validate_family(const ProjectionFamily& family) {
  FamilyValidation v;
  const Index d = family.dim();
  v.tolerance = structural_tolerance(d);
  ComplexMatrix sum = ComplexMatrix::Zero(d, d);
  for (std::size_t j = 0; j < family.size(); ++j) {
    const ComplexMatrix& pj = family[j];
    v.hermiticity = std::max(v.hermiticity, hermiticity_error(pj));
    sum += pj;
    for (std::size_t k = j; k < family.size(); ++k) {
      const ComplexMatrix prod = pj * family[k];
      const double err = (j == k) ? (prod - pj).norm() : prod.norm();
      v.orthogonality = std::max(v.orthogonality, err);
      if (j != k) v.orthogonality = std::max(v.orthogonality, (family[k] * pj).norm());
    }
  }
  v.completeness = (sum - identity(d)).norm();
  return v;
}

ComplexMatrix ProjectionTensorDecomposition::generator() const {
  const Index dp = projector_dim();
  const Index dh = hamiltonian_dim();
  ComplexMatrix g = ComplexMatrix::Zero(dp * dh, dp * dh);
  for (std::size_t j = 0; j < family.size(); ++j) g += kron(family[j], hamiltonians[j]);
  return g;
}

namespace {

void check_shapes(const ProjectionTensorDecomposition& d) {
  if (d.family.size() == 0) {
    throw Error(ErrorKind::kInvalidFamily, "decomposition has no terms");
  }
  if (d.hamiltonians.size() != d.family.size()) {
    throw Error(ErrorKind::kInvalidFamily,
                std::to_string(d.family.size()) + " projectors but " +
                    std::to_string(d.hamiltonians.size()) + " Hamiltonians");
  }
  const Index dh = d.hamiltonian_dim();
  for (const auto& h : d.hamiltonians) {
    if (!is_square(h) || h.rows() != dh) {
      throw Error(ErrorKind::kInvalidFamily, "Hamiltonians must share one square shape");
    }
  }
}

void check_decomposition(const ProjectionTensorDecomposition& d) {
  check_shapes(d);
  const FamilyValidation v = validate_family(d.family);
  if (!v.passed()) {
    throw Error(ErrorKind::kInvalidFamily,
                "projector family violates its conditions (hermiticity " +
                    std::to_string(v.hermiticity) + ", orthogonality " +
                    std::to_string(v.orthogonality) + ", completeness " +
                    std::to_string(v.completeness) + ")");
  }
  for (const auto& h : d.hamiltonians) {
    if (!is_hermitian(h)) {
      throw Error(ErrorKind::kInvalidFamily, "a Hamiltonian of the decomposition is not Hermitian");
    }
  }
}

}  // namespace

ComplexMatrix pbtd_exponential(const ProjectionTensorDecomposition& d, FamilyCheck check) {
  if (check == FamilyCheck::kValidate) {
    check_decomposition(d);
  } else {
    check_shapes(d);
  }
  const Index dim = d.projector_dim() * d.hamiltonian_dim();
  ComplexMatrix out = ComplexMatrix::Zero(dim, dim);
  for (std::size_t j = 0; j < d.family.size(); ++j) {
    out += kron(d.family[j], expm_hermitian(d.hamiltonians[j], d.t));
  }
  return out;
}

ComplexMatrix pbtd_term_exponential(const ProjectionTensorDecomposition& d, std::size_t j) {
  check_shapes(d);
  return projector_exponential(d.family[j], d.hamiltonians[j], d.t);
}

ComplexMatrix projector_exponential(const ComplexMatrix& p, const ComplexMatrix& h, double t) {
  require_hermitian(h, "projector_exponential Hamiltonian");
  if (!is_square(p) || hermiticity_error(p) > structural_tolerance(p.rows()) ||
      (p * p - p).norm() > structural_tolerance(p.rows())) {
    throw Error(ErrorKind::kNotProjector, "p must be a Hermitian idempotent");
  }
  const ComplexMatrix id_h = identity(h.rows());
  return kron(identity(p.rows()) - p, id_h) + kron(p, expm_hermitian(h, t));
}

ProjectionTensorDecomposition transformed_decomposition(
    const ComplexMatrix& s, const std::vector<ComplexMatrix>& transforms,
    const ProjectionTensorDecomposition& d) {
  check_shapes(d);
  if (transforms.size() != d.family.size()) {
    throw Error(ErrorKind::kInvalidFamily, "need one transformation per term");
  }
  require_unitary(s, "S");
  if (s.rows() != d.projector_dim()) {
    throw Error(ErrorKind::kShapeMismatch, "S must act on the projector space");
  }
  std::vector<ComplexMatrix> ps;
  std::vector<ComplexMatrix> hs;
  for (std::size_t j = 0; j < d.family.size(); ++j) {
    const ComplexMatrix& tj = transforms[j];
    require_unitary(tj, "T_j");
    if (tj.rows() != d.hamiltonian_dim()) {
      throw Error(ErrorKind::kShapeMismatch, "T_j must act on the Hamiltonian space");
    }
    ps.push_back(s.adjoint() * d.family[j] * s);
    hs.push_back(tj.adjoint() * d.hamiltonians[j] * tj);
  }
  return {ProjectionFamily(std::move(ps)), std::move(hs), d.t};
}

TransformedExponential transformed_pbtd_exponential(
    const ComplexMatrix& s, const std::vector<ComplexMatrix>& transforms,
    const ProjectionTensorDecomposition& d) {
  check_decomposition(d);
  if (transforms.size() != d.family.size()) {
    throw Error(ErrorKind::kInvalidFamily, "need one transformation per term");
  }
  require_unitary(s, "S");
  if (s.rows() != d.projector_dim()) {
    throw Error(ErrorKind::kShapeMismatch, "S must act on the projector space");
  }

  ProjectionTensorDecomposition transform_terms{d.family, {}, d.t};
  transform_terms.hamiltonians.reserve(transforms.size());
  for (const auto& tj : transforms) {
    require_unitary(tj, "T_j");
    if (tj.rows() != d.hamiltonian_dim()) {
      throw Error(ErrorKind::kShapeMismatch, "T_j must act on the Hamiltonian space");
    }
    transform_terms.hamiltonians.push_back(hamiltonian_from_unitary(tj, d.t));
  }

  TransformedExponential out;
  out.transform = pbtd_exponential(transform_terms, FamilyCheck::kTrusted);
  out.core = pbtd_exponential(d, FamilyCheck::kTrusted);
  const ComplexMatrix s_full = kron(s, identity(d.hamiltonian_dim()));
  out.result = s_full.adjoint() * out.transform.adjoint() * out.core * out.transform * s_full;
  return out;
}

}  // namespace altqpe
