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

#include "altqpe/qpe.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "altqpe/exp_calculus.hpp"

namespace altqpe {

namespace {

void require_qubits(int n) {
  if (n < 1 || n > kMaxQubits) {
    throw Error(ErrorKind::kSizeOutOfRange,
                "ancilla qubit count " + std::to_string(n) + " outside [1, 10]");
  }
}

void require_joint_size(int n, Index target_dim) {
  require_qubits(n);
  const Index joint = (Index{1} << n) * target_dim;
  if (joint > (Index{1} << kMaxQubits)) {
    throw Error(ErrorKind::kSizeOutOfRange,
                "joint dimension " + std::to_string(joint) + " exceeds 1024");
  }
}

}  // namespace

HamiltonianPair::HamiltonianPair(ComplexMatrix unitary, ComplexMatrix hamiltonian, double t)
    : unitary_(std::move(unitary)), hamiltonian_(std::move(hamiltonian)), t_(t) {
  if (!is_unitary(unitary_)) {
    throw Error(ErrorKind::kInvalidPair, "U is not unitary");
  }
  if (!is_hermitian(hamiltonian_) || hamiltonian_.rows() != unitary_.rows()) {
    throw Error(ErrorKind::kInvalidPair, "H is not a Hermitian matrix of U's size");
  }
  const double err = frobenius_distance(expm_hermitian(hamiltonian_, t_), unitary_);
  if (err > structural_tolerance(unitary_.rows())) {
    throw Error(ErrorKind::kInvalidPair,
                "exp(-i t H) differs from U by " + std::to_string(err));
  }
}

HamiltonianPair HamiltonianPair::from_unitary(const ComplexMatrix& unitary, double t) {
  return HamiltonianPair(unitary, hamiltonian_from_unitary(unitary, t), t);
}

HamiltonianPair HamiltonianPair::from_hamiltonian(const ComplexMatrix& hamiltonian, double t) {
  return HamiltonianPair(expm_hermitian(hamiltonian, t), hamiltonian, t);
}

HamiltonianPair HamiltonianPair::power(std::uint64_t k) const {
  return HamiltonianPair(matrix_power(unitary_, k), static_cast<double>(k) * hamiltonian_, t_);
}

PhaseInstance::PhaseInstance(HamiltonianPair pair, ComplexVector eigenvector)
    : pair_(std::move(pair)), eigenvector_(std::move(eigenvector)), phase_(0.0) {
  if (eigenvector_.size() != pair_.dim()) {
    throw Error(ErrorKind::kShapeMismatch, "eigenvector length does not match U");
  }
  if (std::abs(eigenvector_.norm() - 1.0) > 1e-10) {
    throw Error(ErrorKind::kNotEigenvector, "eigenvector is not normalized");
  }
  const ComplexVector image = pair_.unitary() * eigenvector_;
  const Complex eigenvalue = eigenvector_.dot(image);  // <psi|U psi>
  const double residual = (image - eigenvalue * eigenvector_).norm();
  if (residual > 1e-9) {
    throw Error(ErrorKind::kNotEigenvector,
                "||U psi - lambda psi|| = " + std::to_string(residual));
  }
  double phase = std::arg(eigenvalue) / kTwoPi;
  if (phase < 0.0) phase += 1.0;
  if (phase >= 1.0 - 1e-12) phase = 0.0;
  phase_ = phase;
}

ComplexMatrix control_multiplier(int n) {
  require_qubits(n);
  const Index size = Index{1} << n;
  ComplexMatrix c = ComplexMatrix::Zero(size, size);
  for (Index j = 0; j < size; ++j) c(j, j) = static_cast<double>(j);
  return c;
}

ComplexMatrix controlled_u(int n, const ComplexMatrix& u) {
  require_unitary(u, "controlled_u target");
  require_joint_size(n, u.rows());
  const Index size = Index{1} << n;
  const Index d = u.rows();
  ComplexMatrix cu = ComplexMatrix::Zero(size * d, size * d);
  for (Index j = 0; j < size; ++j) {
    cu.block(j * d, j * d, d, d) = matrix_power(u, static_cast<std::uint64_t>(j));
  }
  if (!is_unitary(cu)) {
    throw Error(ErrorKind::kNotUnitary, "powers of U drifted away from unitarity");
  }
  return cu;
}

CirculantSpec qpe_multiplier_spec(int n) {
  require_qubits(n);
  const std::size_t size = std::size_t{1} << n;
  std::vector<Complex> c(size);
  c[0] = (static_cast<double>(size) - 1.0) / 2.0;
  for (std::size_t j = 1; j < size; ++j) {
    c[j] = 1.0 / (root_of_unity_power(size, static_cast<long long>(j)) - 1.0);
  }
  return CirculantSpec(std::move(c));
}

ComplexMatrix qpe_multiplier(int n) { return circulant_matrix(qpe_multiplier_spec(n)); }

ComplexMatrix alternative_qpe(int n, const ComplexMatrix& u) {
  require_unitary(u, "alternative_qpe target");
  require_joint_size(n, u.rows());
  const ComplexMatrix f = kron(qft_matrix(n), identity(u.rows()));
  return f.adjoint() * controlled_u(n, u) * f;
}

ComplexMatrix qpe_via_hamiltonian(int n, const HamiltonianPair& pair) {
  require_joint_size(n, pair.dim());
  const Index size = Index{1} << n;
  ProjectionTensorDecomposition d{ProjectionFamily::from_columns(qft_matrix(n).adjoint()), {},
                                  pair.t()};
  d.hamiltonians.reserve(static_cast<std::size_t>(size));
  for (Index m = 0; m < size; ++m) {
    d.hamiltonians.push_back(static_cast<double>(m) * pair.hamiltonian());
  }
  return pbtd_exponential(d, FamilyCheck::kTrusted);
}

double QpeAlgebraReport::max_error() const {
  return std::max({inverse_error, product_error, commuted_error});
}

QpeAlgebraReport qpe_algebra_checks(int n, const ComplexMatrix& u0, const ComplexMatrix& u1) {
  require_unitary(u0, "U0");
  require_unitary(u1, "U1");
  if (u0.rows() != u1.rows()) {
    throw Error(ErrorKind::kShapeMismatch, "U0 and U1 act on different spaces");
  }
  const double comm = commutator_norm(u0, u1);
  if (comm > structural_tolerance(u0.rows())) {
    throw Error(ErrorKind::kNotCommuting, "||U0 U1 - U1 U0|| = " + std::to_string(comm));
  }
  const ComplexMatrix q0 = alternative_qpe(n, u0);
  const ComplexMatrix q1 = alternative_qpe(n, u1);
  const ComplexMatrix q01 = alternative_qpe(n, u0 * u1);

  QpeAlgebraReport r;
  r.inverse_error = frobenius_distance(q0.adjoint(), alternative_qpe(n, u0.adjoint()));
  r.product_error = frobenius_distance(q01, q0 * q1);
  r.commuted_error = frobenius_distance(q01, q1 * q0);
  return r;
}

}  // namespace altqpe
