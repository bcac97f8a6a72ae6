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

// Independent reference computations for the unit and acceptance suites.
// Nothing here calls the eigensolver-based routines under test.

#include <cmath>
#include <cstdint>
#include <vector>

#include "altqpe/linalg.hpp"

namespace altqpe::oracle {

/// exp(a) by truncated Taylor series with scaling and squaring. The series
/// runs until the bound ||b||^{k+1} / (k+1)! on the next term drops below
/// 1e-14 (and for at least 30 terms), where b = a / 2^s has norm <= 1/2.
inline ComplexMatrix taylor_expm(const ComplexMatrix& a) {
  const double norm = a.norm();
  int squarings = 0;
  double scaled_norm = norm;
  while (scaled_norm > 0.5) {
    scaled_norm /= 2.0;
    ++squarings;
  }
  const ComplexMatrix b = a / std::ldexp(1.0, squarings);
  const Index dim = a.rows();
  ComplexMatrix result = ComplexMatrix::Identity(dim, dim);
  ComplexMatrix term = ComplexMatrix::Identity(dim, dim);
  double bound = 1.0;
  for (int k = 1;; ++k) {
    term = term * b / static_cast<double>(k);
    result += term;
    bound *= scaled_norm / static_cast<double>(k + 1);
    if (k >= 30 && bound < 1e-14) break;
  }
  for (int s = 0; s < squarings; ++s) result = result * result;
  return result;
}

/// exp(-i t h) through the Taylor oracle.
inline ComplexMatrix taylor_expm_hermitian(const ComplexMatrix& h, double t) {
  return taylor_expm(Complex(0.0, -t) * h);
}

/// u * u * ... * u, k times.
inline ComplexMatrix repeated_power(const ComplexMatrix& u, std::uint64_t k) {
  ComplexMatrix p = ComplexMatrix::Identity(u.rows(), u.cols());
  for (std::uint64_t j = 0; j < k; ++j) p = p * u;
  return p;
}

/// sum_j kron(|j><j|, U^j) with literal powers.
inline ComplexMatrix literal_controlled(int n, const ComplexMatrix& u) {
  const Index size = Index{1} << n;
  ComplexMatrix out = ComplexMatrix::Zero(size * u.rows(), size * u.cols());
  for (Index j = 0; j < size; ++j) {
    ComplexVector e = ComplexVector::Zero(size);
    e(j) = 1.0;
    out += kron(e * e.adjoint(), repeated_power(u, static_cast<std::uint64_t>(j)));
  }
  return out;
}

inline Complex literal_sum(Complex z, std::size_t count) {
  Complex acc = 0.0;
  Complex p = 1.0;
  for (std::size_t j = 0; j < count; ++j) {
    acc += p;
    p *= z;
  }
  return acc;
}

inline Complex literal_weighted_sum(Complex z, std::size_t count) {
  Complex acc = 0.0;
  for (std::size_t j = 0; j < count; ++j) {
    acc += static_cast<double>(j) * std::pow(z, static_cast<double>(j));
  }
  return acc;
}

/// Hadamard on every one of n qubits, as an explicit tensor power.
inline ComplexMatrix hadamard_layer(int n) {
  ComplexMatrix h(2, 2);
  const double r = 1.0 / std::sqrt(2.0);
  h << r, r, r, -r;
  ComplexMatrix out = ComplexMatrix::Identity(1, 1);
  for (int q = 0; q < n; ++q) out = kron(out, h);
  return out;
}

}  // namespace altqpe::oracle
