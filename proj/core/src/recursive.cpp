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

#include "altqpe/recursive.hpp"

#include <string>

namespace altqpe {

SplitLayout::SplitLayout(int n0, int n1) : outer_qubits(n0), inner_qubits(n1) {
  if (n0 < 1 || n1 < 1 || n0 + n1 > kMaxQubits) {
    throw Error(ErrorKind::kSizeOutOfRange,
                "split (" + std::to_string(n0) + ", " + std::to_string(n1) +
                    ") needs n0, n1 >= 1 and n0 + n1 <= 10");
  }
}

OmegaDiagonal omega_diagonal(const SplitLayout& layout) {
  const auto n1 = static_cast<Index>(layout.inner_size());
  ComplexMatrix d = ComplexMatrix::Zero(n1, n1);
  for (Index j = 0; j < n1; ++j) d(j, j) = root_of_unity_power(layout.size(), j);
  return {layout, std::move(d)};
}

std::vector<ComplexMatrix> circulant_sub_blocks(const CirculantSpec& spec,
                                                const SplitLayout& layout) {
  if (spec.size() != layout.size()) {
    throw Error(ErrorKind::kShapeMismatch,
                "circulant of size " + std::to_string(spec.size()) + " cannot split as " +
                    std::to_string(layout.outer_size()) + " x " +
                    std::to_string(layout.inner_size()));
  }
  const auto n1 = static_cast<Index>(layout.inner_size());
  std::vector<ComplexMatrix> blocks;
  blocks.reserve(layout.outer_size());
  for (std::size_t l = 0; l < layout.outer_size(); ++l) {
    ComplexMatrix a(n1, n1);
    for (Index j = 0; j < n1; ++j) {
      for (Index k = 0; k < n1; ++k) {
        a(j, k) = spec.at_wrapped(static_cast<long long>(k - j) +
                                  static_cast<long long>(n1) * static_cast<long long>(l));
      }
    }
    blocks.push_back(std::move(a));
  }
  return blocks;
}

namespace {

std::vector<CirculantBlockTerm> block_terms(const CirculantSpec& spec, const SplitLayout& layout,
                                            auto&& phase) {
  const std::vector<ComplexMatrix> sub = circulant_sub_blocks(spec, layout);
  const ComplexMatrix vs = qft_matrix(layout.outer_qubits).adjoint();
  const auto n1 = static_cast<long long>(layout.inner_size());

  std::vector<CirculantBlockTerm> terms;
  terms.reserve(layout.outer_size());
  for (std::size_t m = 0; m < layout.outer_size(); ++m) {
    ComplexMatrix block = ComplexMatrix::Zero(sub.front().rows(), sub.front().cols());
    for (std::size_t l = 0; l < sub.size(); ++l) {
      const long long exponent =
          -static_cast<long long>(l) * static_cast<long long>(m) * n1;
      block += phase(exponent) * sub[l];
    }
    terms.push_back({outer(vs.col(static_cast<Index>(m))), std::move(block)});
  }
  return terms;
}

}  // namespace

std::vector<CirculantBlockTerm> circulant_block_decomposition(const CirculantSpec& spec,
                                                              const SplitLayout& layout) {
  const std::size_t size = layout.size();
  return block_terms(spec, layout,
                     [size](long long e) { return root_of_unity_power(size, e); });
}

std::vector<CirculantBlockTerm> circulant_block_decomposition(const CirculantSpec& spec,
                                                              const SplitLayout& layout,
                                                              Complex root) {
  return block_terms(spec, layout,
                     [root](long long e) { return std::pow(root, static_cast<double>(e)); });
}

ComplexMatrix assemble(const std::vector<CirculantBlockTerm>& terms) {
  if (terms.empty()) {
    throw Error(ErrorKind::kShapeMismatch, "no terms to assemble");
  }
  const Index dim = terms.front().projector.rows() * terms.front().block.rows();
  ComplexMatrix a = ComplexMatrix::Zero(dim, dim);
  for (const auto& term : terms) a += kron(term.projector, term.block);
  return a;
}

ComplexMatrix qpe_multiplier_decomposition(const SplitLayout& layout) {
  return qpe_multiplier_decomposition(layout, omega_diagonal(layout).matrix);
}

ComplexMatrix qpe_multiplier_decomposition(const SplitLayout& layout,
                                           const ComplexMatrix& diagonal) {
  const auto n0 = static_cast<Index>(layout.outer_size());
  const auto n1 = static_cast<Index>(layout.inner_size());
  if (diagonal.rows() != n1 || diagonal.cols() != n1) {
    throw Error(ErrorKind::kShapeMismatch, "diagonal must be N1 x N1");
  }
  const ComplexMatrix q_inner = qpe_multiplier(layout.inner_qubits);
  const ComplexMatrix vs = qft_matrix(layout.outer_qubits).adjoint();

  ComplexMatrix rhs = kron(qpe_multiplier(layout.outer_qubits), identity(n1));
  ComplexMatrix d_pow = identity(n1);
  for (Index m = 0; m < n0; ++m) {
    const ComplexMatrix rotated = d_pow.adjoint() * q_inner * d_pow;
    rhs += static_cast<double>(n0) * kron(outer(vs.col(m)), rotated);
    d_pow = d_pow * diagonal;
  }
  return rhs;
}

ComplexMatrix multiply_in_order(const std::vector<ComplexMatrix>& factors) {
  if (factors.empty()) {
    throw Error(ErrorKind::kShapeMismatch, "empty factor list");
  }
  ComplexMatrix product = factors.front();
  for (std::size_t k = 1; k < factors.size(); ++k) product = factors[k] * product;
  return product;
}

namespace {

void require_fits(const SplitLayout& layout, const HamiltonianPair& pair) {
  const Index joint = static_cast<Index>(layout.size()) * pair.dim();
  if (joint > (Index{1} << kMaxQubits)) {
    throw Error(ErrorKind::kSizeOutOfRange,
                "joint dimension " + std::to_string(joint) + " exceeds 1024");
  }
}

// I_{N0} (x) QPE_{N1}(U^{N0}) from the Hamiltonian N0 H.
ComplexMatrix inner_qpe_factor(const SplitLayout& layout, const HamiltonianPair& pair) {
  const HamiltonianPair powered = pair.power(layout.outer_size());
  return kron(identity(static_cast<Index>(layout.outer_size())),
              qpe_via_hamiltonian(layout.inner_qubits, powered));
}

}  // namespace

FactoredOperator composed_qpe(const SplitLayout& layout, const HamiltonianPair& pair) {
  return composed_qpe(layout, pair, omega_diagonal(layout).matrix);
}

FactoredOperator composed_qpe(const SplitLayout& layout, const HamiltonianPair& pair,
                              const ComplexMatrix& diagonal) {
  require_fits(layout, pair);
  const int n0 = layout.outer_qubits;
  const Index id_n1 = static_cast<Index>(layout.inner_size());
  const ComplexMatrix id_h = identity(pair.dim());

  FactoredOperator out;
  out.factors.push_back(alternative_qpe(n0, kron(identity(id_n1), pair.unitary())));
  out.factors.push_back(kron(alternative_qpe(n0, diagonal), id_h));
  out.factors.push_back(inner_qpe_factor(layout, pair));
  out.factors.push_back(kron(alternative_qpe(n0, diagonal.adjoint()), id_h));
  out.product = multiply_in_order(out.factors);
  return out;
}

NestedQpe nested_qpe(const SplitLayout& layout, const HamiltonianPair& pair) {
  require_fits(layout, pair);
  const int n0 = layout.outer_qubits;
  const Index id_n1 = static_cast<Index>(layout.inner_size());
  const ComplexMatrix id_h = identity(pair.dim());
  const ComplexMatrix d = omega_diagonal(layout).matrix;

  const ComplexMatrix c_d = controlled_u(n0, d);
  const ComplexMatrix c_u = controlled_u(n0, kron(identity(id_n1), pair.unitary()));

  NestedQpe out;
  out.w_factors.push_back(c_u);
  out.w_factors.push_back(kron(c_d, id_h));
  out.w_factors.push_back(inner_qpe_factor(layout, pair));
  out.w_factors.push_back(kron(controlled_u(n0, d.adjoint()), id_h));
  out.w = multiply_in_order(out.w_factors);

  const ComplexMatrix f = kron(qft_matrix(n0), identity(id_n1 * pair.dim()));
  out.product = f.adjoint() * out.w * f;
  out.fusion_error =
      frobenius_distance(kron(c_d, id_h) * c_u, controlled_u(n0, kron(d, pair.unitary())));
  return out;
}

FactoredOperator one_qubit_outer_qpe(int inner_qubits, const HamiltonianPair& pair) {
  const SplitLayout layout(1, inner_qubits);
  require_fits(layout, pair);
  const Index rest = static_cast<Index>(layout.inner_size()) * pair.dim();
  const ComplexMatrix id_h = identity(pair.dim());
  const ComplexMatrix d = omega_diagonal(layout).matrix;
  const ComplexMatrix hadamard = kron(qft_matrix(1), identity(rest));

  FactoredOperator out;
  out.factors.push_back(hadamard);
  out.factors.push_back(
      controlled_u(1, kron(identity(static_cast<Index>(layout.inner_size())), pair.unitary())));
  out.factors.push_back(kron(controlled_u(1, d), id_h));
  out.factors.push_back(inner_qpe_factor(layout, pair));
  out.factors.push_back(kron(controlled_u(1, d.adjoint()), id_h));
  out.factors.push_back(hadamard);
  out.product = multiply_in_order(out.factors);
  return out;
}

}  // namespace altqpe
