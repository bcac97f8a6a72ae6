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

// Fourier, shift and circulant matrices. The root of unity is always
// omega = exp(+i 2 pi / N); inverse transforms use the adjoint.

#include <cstddef>
#include <vector>

#include "altqpe/linalg.hpp"

namespace altqpe {

inline constexpr int kMaxQubits = 10;

/// omega^k for omega = exp(i 2 pi / size). The exponent is reduced mod size
/// before evaluation, so large powers stay on the unit circle exactly.
Complex root_of_unity_power(std::size_t size, long long k);

struct RootOfUnity {
  int qubits;
  Complex omega;

  explicit RootOfUnity(int n);
  std::size_t size() const { return std::size_t{1} << qubits; }
};

/// Coefficients c_0..c_{N-1} of the circulant A(j, k) = c_{(k - j) mod N}.
class CirculantSpec {
 public:
  /// Throws kSizeOutOfRange unless the length is a power of two in [1, 2^10].
  explicit CirculantSpec(std::vector<Complex> coefficients);

  static CirculantSpec identity(std::size_t size);
  static CirculantSpec shift(std::size_t size);

  std::size_t size() const { return coefficients_.size(); }
  int qubits() const;
  const std::vector<Complex>& coefficients() const { return coefficients_; }
  Complex operator[](std::size_t l) const { return coefficients_[l]; }
  /// c_{l mod N} for any integer l.
  Complex at_wrapped(long long l) const;

 private:
  std::vector<Complex> coefficients_;
};

/// (QFT_N)(j, k) = omega^{jk} / sqrt(N). 1 <= n <= 10.
ComplexMatrix qft_matrix(int n);

/// Circulant with c_1 = 1: row j has its single 1 in column (j + 1) mod N.
ComplexMatrix shift_matrix(std::size_t size);

/// Entrywise construction; in debug builds also checked against the
/// power-sum form.
ComplexMatrix circulant_matrix(const CirculantSpec& spec);

/// sum_l c_l Shift^l by repeated multiplication.
ComplexMatrix circulant_matrix_from_shifts(const CirculantSpec& spec);

/**
 * Eigenvalues of a circulant in the basis of QFT^dagger columns:
 * A = QFT^dagger diag(lambda) QFT and A QFT^dagger|m> = lambda_m QFT^dagger|m>,
 * with lambda_m = sum_j c_j omega^{-jm}.
 */
struct CirculantEigensystem {
  std::vector<Complex> eigenvalues;

  /// Column m is QFT^dagger|m>.
  static ComplexMatrix eigenvectors(int n);
  ComplexMatrix reconstruct() const;
};

CirculantEigensystem circulant_eigensystem(const CirculantSpec& spec);

struct GeometricSums {
  Complex plain;     // sum_{j<N} z^j
  Complex weighted;  // sum_{j<N} j z^j
};

/// Closed forms for sums over an N-th root of unity z:
/// plain = N if z == 1 else 0; weighted = N(N-1)/2 if z == 1 else N/(z-1).
/// Throws kNotRootOfUnity unless |z| == 1 and z^N == 1 within 1e-9.
GeometricSums geometric_sums(Complex z, std::size_t count);

}  // namespace altqpe
