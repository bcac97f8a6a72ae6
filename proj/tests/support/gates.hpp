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

#include <cmath>

#include "altqpe/linalg.hpp"

namespace altqpe::gates {

inline ComplexMatrix pauli_x() {
  ComplexMatrix m(2, 2);
  m << 0, 1, 1, 0;
  return m;
}

inline ComplexMatrix pauli_z() {
  ComplexMatrix m(2, 2);
  m << 1, 0, 0, -1;
  return m;
}

inline ComplexMatrix hadamard() {
  const double r = 1.0 / std::sqrt(2.0);
  ComplexMatrix m(2, 2);
  m << r, r, r, -r;
  return m;
}

inline ComplexMatrix cnot() {
  ComplexMatrix m = ComplexMatrix::Zero(4, 4);
  m(0, 0) = m(1, 1) = m(2, 3) = m(3, 2) = 1.0;
  return m;
}

/// CNOT with the second qubit as control.
inline ComplexMatrix reversed_cnot() {
  ComplexMatrix m = ComplexMatrix::Zero(4, 4);
  m(0, 0) = m(3, 1) = m(2, 2) = m(1, 3) = 1.0;
  return m;
}

inline ComplexMatrix cz() {
  ComplexMatrix m = ComplexMatrix::Identity(4, 4);
  m(3, 3) = -1.0;
  return m;
}

inline ComplexVector ket0() { return basis_vector(2, 0); }
inline ComplexVector ket1() { return basis_vector(2, 1); }
inline ComplexVector ket_plus() { return (ket0() + ket1()) / std::sqrt(2.0); }
inline ComplexVector ket_minus() { return (ket0() - ket1()) / std::sqrt(2.0); }

inline ComplexMatrix diag2(Complex a, Complex b) {
  ComplexMatrix m = ComplexMatrix::Zero(2, 2);
  m(0, 0) = a;
  m(1, 1) = b;
  return m;
}

/// diag(1, exp(i 2 pi phase)).
inline ComplexMatrix phase_gate(double phase) {
  return diag2(1.0, std::polar(1.0, 2.0 * 3.141592653589793238462643383279502884 * phase));
}

}  // namespace altqpe::gates
