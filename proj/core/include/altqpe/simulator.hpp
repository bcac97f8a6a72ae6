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

// Dense statevector application of joint-space operators.

#include <map>
#include <string>
#include <vector>

#include "altqpe/linalg.hpp"
#include "altqpe/qpe.hpp"

namespace altqpe {

inline const std::string kAncillaRegister = "ancilla";
inline const std::string kVectorRegister = "vector";

struct Register {
  std::string name;
  int qubits = 0;

  bool operator==(const Register&) const = default;
};

/// Ordered registers, first register most significant.
class RegisterLayout {
 public:
  RegisterLayout() = default;
  /// Throws kSizeOutOfRange for more than 10 qubits in total or a register
  /// with fewer than one qubit; kShapeMismatch for duplicate names.
  explicit RegisterLayout(std::vector<Register> registers);

  const std::vector<Register>& registers() const { return registers_; }
  int total_qubits() const;
  Index dimension() const { return Index{1} << total_qubits(); }
  /// Throws kUnknownRegister.
  std::size_t position(const std::string& name) const;

  bool operator==(const RegisterLayout&) const = default;

 private:
  std::vector<Register> registers_;
};

class StateVector {
 public:
  /// Throws kShapeMismatch when the length does not match the layout and
  /// kShapeMismatch when the norm differs from 1 by more than 1e-10.
  StateVector(ComplexVector amplitudes, RegisterLayout layout);

  /// Single register named "vector" sized from the amplitude count.
  static StateVector single(ComplexVector amplitudes,
                            const std::string& name = kVectorRegister);
  static StateVector basis(const RegisterLayout& layout, Index index);

  const ComplexVector& amplitudes() const { return amplitudes_; }
  const RegisterLayout& layout() const { return layout_; }
  Index size() const { return amplitudes_.size(); }

 private:
  ComplexVector amplitudes_;
  RegisterLayout layout_;
};

/// |j> (x) |psi> with an n-qubit register "ancilla" prepended.
/// Throws kIndexOutOfRange unless j < 2^n.
StateVector product_state(int n, Index j, const StateVector& psi);

/// op * state. Throws kShapeMismatch or kNotUnitary.
StateVector apply(const ComplexMatrix& op, const StateVector& state);

/// |<a|b>|^2.
double fidelity(const ComplexVector& a, const ComplexVector& b);

struct ShiftActionResult {
  StateVector output;
  Index expected_outcome;  // (j + N phase) mod N
  double fidelity;
  bool passed;             // fidelity >= 1 - 1e-10
};

/// Runs QPE_N(U) on |j>|psi>. Throws kNonIntegerPhase unless N * phase is an
/// integer within 1e-9, and kIndexOutOfRange unless j < N.
ShiftActionResult qpe_shift_action(int n, const PhaseInstance& instance, Index j);

/// Marginal outcome probabilities of one register. Throws kUnknownRegister.
std::map<Index, double> measure_distribution(const StateVector& state,
                                             const std::string& register_name);

}  // namespace altqpe
