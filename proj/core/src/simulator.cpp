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

#include "altqpe/simulator.hpp"

#include <cmath>
#include <set>
#include <string>

namespace altqpe {

RegisterLayout::RegisterLayout(std::vector<Register> registers)
    : registers_(std::move(registers)) {
  std::set<std::string> names;
  int total = 0;
  for (const auto& r : registers_) {
    if (r.qubits < 1) {
      throw Error(ErrorKind::kSizeOutOfRange, "register '" + r.name + "' has no qubits");
    }
    if (!names.insert(r.name).second) {
      throw Error(ErrorKind::kShapeMismatch, "duplicate register name '" + r.name + "'");
    }
    total += r.qubits;
  }
  if (total > kMaxQubits) {
    throw Error(ErrorKind::kSizeOutOfRange,
                "layout has " + std::to_string(total) + " qubits, limit is 10");
  }
}

int RegisterLayout::total_qubits() const {
  int total = 0;
  for (const auto& r : registers_) total += r.qubits;
  return total;
}

std::size_t RegisterLayout::position(const std::string& name) const {
  for (std::size_t k = 0; k < registers_.size(); ++k) {
    if (registers_[k].name == name) return k;
  }
  throw Error(ErrorKind::kUnknownRegister, "no register named '" + name + "'");
}

StateVector::StateVector(ComplexVector amplitudes, RegisterLayout layout)
    : amplitudes_(std::move(amplitudes)), layout_(std::move(layout)) {
  if (amplitudes_.size() != layout_.dimension()) {
    throw Error(ErrorKind::kShapeMismatch,
                std::to_string(amplitudes_.size()) + " amplitudes for a layout of dimension " +
                    std::to_string(layout_.dimension()));
  }
  if (std::abs(amplitudes_.norm() - 1.0) > 1e-10) {
    throw Error(ErrorKind::kShapeMismatch, "state is not normalized");
  }
}

StateVector StateVector::single(ComplexVector amplitudes, const std::string& name) {
  const int q = qubits_for_dimension(amplitudes.size());
  if (q < 1) {
    throw Error(ErrorKind::kShapeMismatch, "amplitude count must be a power of two >= 2");
  }
  RegisterLayout layout({Register{name, q}});
  return StateVector(std::move(amplitudes), std::move(layout));
}

StateVector StateVector::basis(const RegisterLayout& layout, Index index) {
  return StateVector(basis_vector(layout.dimension(), index), layout);
}

StateVector product_state(int n, Index j, const StateVector& psi) {
  if (n < 1) {
    throw Error(ErrorKind::kSizeOutOfRange, "ancilla needs at least one qubit");
  }
  const Index size = Index{1} << n;
  if (j < 0 || j >= size) {
    throw Error(ErrorKind::kIndexOutOfRange,
                "ancilla index " + std::to_string(j) + " outside [0, " + std::to_string(size) +
                    ")");
  }
  std::vector<Register> regs{Register{kAncillaRegister, n}};
  regs.insert(regs.end(), psi.layout().registers().begin(), psi.layout().registers().end());
  RegisterLayout layout(std::move(regs));

  ComplexVector amps = ComplexVector::Zero(layout.dimension());
  amps.segment(j * psi.size(), psi.size()) = psi.amplitudes();
  return StateVector(std::move(amps), std::move(layout));
}

StateVector apply(const ComplexMatrix& op, const StateVector& state) {
  if (!is_square(op) || op.rows() != state.size()) {
    throw Error(ErrorKind::kShapeMismatch, "operator does not act on this state's space");
  }
  require_unitary(op, "applied operator");
  ComplexVector out = op * state.amplitudes();
  out /= out.norm();
  return StateVector(std::move(out), state.layout());
}

double fidelity(const ComplexVector& a, const ComplexVector& b) {
  return std::norm(a.dot(b));
}

ShiftActionResult qpe_shift_action(int n, const PhaseInstance& instance, Index j) {
  const Index size = Index{1} << n;
  if (j < 0 || j >= size) {
    throw Error(ErrorKind::kIndexOutOfRange, "ancilla index outside [0, N)");
  }
  const double scaled = static_cast<double>(size) * instance.phase();
  const double rounded = std::round(scaled);
  if (std::abs(scaled - rounded) > 1e-9) {
    throw Error(ErrorKind::kNonIntegerPhase,
                "N phase = " + std::to_string(scaled) + " is not an integer");
  }
  const StateVector psi = StateVector::single(instance.eigenvector());
  const StateVector input = product_state(n, j, psi);
  StateVector output = altqpe::apply(alternative_qpe(n, instance.pair().unitary()), input);

  const Index expected = (j + static_cast<Index>(rounded)) % size;
  const StateVector target = product_state(n, expected, psi);
  const double f = fidelity(target.amplitudes(), output.amplitudes());
  return {std::move(output), expected, f, f >= 1.0 - 1e-10};
}

std::map<Index, double> measure_distribution(const StateVector& state,
                                             const std::string& register_name) {
  const auto& regs = state.layout().registers();
  const std::size_t pos = state.layout().position(register_name);
  int lower_qubits = 0;
  for (std::size_t k = pos + 1; k < regs.size(); ++k) lower_qubits += regs[k].qubits;
  const Index reg_size = Index{1} << regs[pos].qubits;

  std::map<Index, double> probs;
  for (Index value = 0; value < reg_size; ++value) probs[value] = 0.0;
  for (Index idx = 0; idx < state.size(); ++idx) {
    const Index value = (idx >> lower_qubits) & (reg_size - 1);
    probs[value] += std::norm(state.amplitudes()(idx));
  }
  return probs;
}

}  // namespace altqpe
