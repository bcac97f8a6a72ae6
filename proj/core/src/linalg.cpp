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

#include "altqpe/linalg.hpp"

#include <cmath>
#include <string>

#include <Eigen/Eigenvalues>

namespace altqpe {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::kNotHermitian: return "NotHermitian";
    case ErrorKind::kNotUnitary: return "NotUnitary";
    case ErrorKind::kNotProjector: return "NotProjector";
    case ErrorKind::kZeroTime: return "ZeroTime";
    case ErrorKind::kSizeOutOfRange: return "SizeOutOfRange";
    case ErrorKind::kShapeMismatch: return "ShapeMismatch";
    case ErrorKind::kInvalidFamily: return "InvalidFamily";
    case ErrorKind::kInvalidPair: return "InvalidPair";
    case ErrorKind::kNotCommuting: return "NotCommuting";
    case ErrorKind::kNotRootOfUnity: return "NotRootOfUnity";
    case ErrorKind::kIndexOutOfRange: return "IndexOutOfRange";
    case ErrorKind::kNonIntegerPhase: return "NonIntegerPhase";
    case ErrorKind::kNotEigenvector: return "NotEigenvector";
    case ErrorKind::kUnknownRegister: return "UnknownRegister";
    case ErrorKind::kParseError: return "ParseError";
  }
  return "Unknown";
}

ComplexMatrix EigenDecomposition::reconstruct() const {
  return eigenvectors * eigenvalues.cast<Complex>().asDiagonal() * eigenvectors.adjoint();
}

ComplexMatrix identity(Index dim) { return ComplexMatrix::Identity(dim, dim); }

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  const Index br = b.rows();
  const Index bc = b.cols();
  ComplexMatrix out(a.rows() * br, a.cols() * bc);
  for (Index j = 0; j < a.rows(); ++j) {
    for (Index k = 0; k < a.cols(); ++k) {
      out.block(j * br, k * bc, br, bc) = a(j, k) * b;
    }
  }
  return out;
}

ComplexMatrix outer(const ComplexVector& v) { return v * v.adjoint(); }

ComplexVector basis_vector(Index dim, Index index) {
  if (index < 0 || index >= dim) {
    throw Error(ErrorKind::kIndexOutOfRange,
                "basis index " + std::to_string(index) + " outside dimension " +
                    std::to_string(dim));
  }
  ComplexVector v = ComplexVector::Zero(dim);
  v(index) = 1.0;
  return v;
}

double frobenius_distance(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw Error(ErrorKind::kShapeMismatch, "cannot compare matrices of different shape");
  }
  return (a - b).norm();
}

bool is_square(const ComplexMatrix& a) { return a.rows() == a.cols() && a.rows() > 0; }

double hermiticity_error(const ComplexMatrix& a) { return (a - a.adjoint()).norm(); }

double unitarity_error(const ComplexMatrix& a) {
  return (a.adjoint() * a - identity(a.rows())).norm();
}

double commutator_norm(const ComplexMatrix& a, const ComplexMatrix& b) {
  return (a * b - b * a).norm();
}

bool is_hermitian(const ComplexMatrix& a) {
  return is_square(a) && hermiticity_error(a) <= structural_tolerance(a.rows());
}

bool is_unitary(const ComplexMatrix& a) {
  return is_square(a) && unitarity_error(a) <= structural_tolerance(a.rows());
}

void require_square(const ComplexMatrix& a, std::string_view what) {
  if (!is_square(a)) {
    throw Error(ErrorKind::kShapeMismatch,
                std::string(what) + " must be square, got " + std::to_string(a.rows()) + "x" +
                    std::to_string(a.cols()));
  }
}

void require_hermitian(const ComplexMatrix& a, std::string_view what) {
  if (!is_square(a)) {
    throw Error(ErrorKind::kNotHermitian, std::string(what) + " is not square");
  }
  const double err = hermiticity_error(a);
  if (err > structural_tolerance(a.rows())) {
    throw Error(ErrorKind::kNotHermitian,
                std::string(what) + ": ||A - A^dagger|| = " + std::to_string(err));
  }
}

void require_unitary(const ComplexMatrix& a, std::string_view what) {
  if (!is_square(a)) {
    throw Error(ErrorKind::kNotUnitary, std::string(what) + " is not square");
  }
  const double err = unitarity_error(a);
  if (err > structural_tolerance(a.rows())) {
    throw Error(ErrorKind::kNotUnitary,
                std::string(what) + ": ||U^dagger U - I|| = " + std::to_string(err));
  }
}

ComplexMatrix matrix_power(const ComplexMatrix& a, std::uint64_t k) {
  require_square(a, "matrix_power argument");
  ComplexMatrix result = identity(a.rows());
  ComplexMatrix base = a;
  while (k > 0) {
    if (k & 1U) result = result * base;
    k >>= 1U;
    if (k > 0) base = base * base;
  }
  return result;
}

EigenDecomposition eigh(const ComplexMatrix& a) {
  require_hermitian(a, "eigh argument");
  // Solve on the exactly Hermitian part; the solver reads one triangle only.
  const ComplexMatrix sym = 0.5 * (a + a.adjoint());
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(sym);
  if (solver.info() != Eigen::Success) {
    throw Error(ErrorKind::kNotHermitian, "eigensolver did not converge");
  }
  return {solver.eigenvalues(), solver.eigenvectors()};
}

ComplexMatrix expm_hermitian(const ComplexMatrix& h, double t) {
  const EigenDecomposition eig = eigh(h);
  ComplexVector phases(eig.eigenvalues.size());
  for (Index k = 0; k < phases.size(); ++k) {
    phases(k) = std::polar(1.0, -t * eig.eigenvalues(k));
  }
  return eig.eigenvectors * phases.asDiagonal() * eig.eigenvectors.adjoint();
}

ComplexMatrix hamiltonian_from_unitary(const ComplexMatrix& u, double t) {
  if (t == 0.0) {
    throw Error(ErrorKind::kZeroTime, "a Hamiltonian at t = 0 does not exist");
  }
  require_unitary(u, "hamiltonian_from_unitary argument");

  // A unitary is normal, so its complex Schur form is diagonal up to
  // rounding and the Schur vectors are an orthonormal eigenbasis.
  Eigen::ComplexSchur<ComplexMatrix> schur(u);
  const ComplexMatrix& tri = schur.matrixT();
  const ComplexMatrix& vecs = schur.matrixU();

  RealVector energies(u.rows());
  for (Index k = 0; k < u.rows(); ++k) {
    double theta = -std::arg(tri(k, k));  // eigenvalue = exp(-i theta)
    if (theta < 0.0) theta += kTwoPi;
    if (theta >= kTwoPi - 1e-12) theta = 0.0;
    energies(k) = theta / t;
  }
  ComplexMatrix h = vecs * energies.cast<Complex>().asDiagonal() * vecs.adjoint();
  return 0.5 * (h + h.adjoint());
}

int qubits_for_dimension(Index dim) {
  if (dim <= 0) return -1;
  int q = 0;
  while ((Index{1} << q) < dim) ++q;
  return (Index{1} << q) == dim ? q : -1;
}

}  // namespace altqpe
