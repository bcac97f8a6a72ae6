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

#include "altqpe/spectral.hpp"

#include <cmath>
#include <string>

namespace altqpe {

namespace {

void require_qubits(int n) {
  if (n < 1 || n > kMaxQubits) {
    throw Error(ErrorKind::kSizeOutOfRange,
                "qubit count " + std::to_string(n) + " outside [1, 10]");
  }
}

}  // namespace

Complex root_of_unity_power(std::size_t size, long long k) {
  const auto n = static_cast<long long>(size);
  long long r = k % n;
  if (r < 0) r += n;
  return std::polar(1.0, kTwoPi * static_cast<double>(r) / static_cast<double>(n));
}

RootOfUnity::RootOfUnity(int n) : qubits(n), omega() {
  require_qubits(n);
  omega = root_of_unity_power(size(), 1);
}

CirculantSpec::CirculantSpec(std::vector<Complex> coefficients)
    : coefficients_(std::move(coefficients)) {
  const auto len = static_cast<Index>(coefficients_.size());
  const int q = qubits_for_dimension(len);
  if (q < 0 || q > kMaxQubits) {
    throw Error(ErrorKind::kSizeOutOfRange,
                "circulant size " + std::to_string(len) + " is not a power of two <= 1024");
  }
}

CirculantSpec CirculantSpec::identity(std::size_t size) {
  std::vector<Complex> c(size, 0.0);
  if (size > 0) c[0] = 1.0;
  return CirculantSpec(std::move(c));
}

CirculantSpec CirculantSpec::shift(std::size_t size) {
  if (size < 2) {
    throw Error(ErrorKind::kSizeOutOfRange, "shift needs size >= 2");
  }
  std::vector<Complex> c(size, 0.0);
  c[1] = 1.0;
  return CirculantSpec(std::move(c));
}

int CirculantSpec::qubits() const {
  return qubits_for_dimension(static_cast<Index>(coefficients_.size()));
}

Complex CirculantSpec::at_wrapped(long long l) const {
  const auto n = static_cast<long long>(coefficients_.size());
  long long r = l % n;
  if (r < 0) r += n;
  return coefficients_[static_cast<std::size_t>(r)];
}

ComplexMatrix qft_matrix(int n) {
  require_qubits(n);
  const std::size_t size = std::size_t{1} << n;
  const auto dim = static_cast<Index>(size);
  const double scale = 1.0 / std::sqrt(static_cast<double>(size));
  ComplexMatrix f(dim, dim);
  for (Index j = 0; j < dim; ++j) {
    for (Index k = 0; k < dim; ++k) {
      f(j, k) = scale * root_of_unity_power(size, static_cast<long long>(j * k));
    }
  }
  return f;
}

ComplexMatrix shift_matrix(std::size_t size) {
  const int q = qubits_for_dimension(static_cast<Index>(size));
  if (size < 2 || q < 0 || q > kMaxQubits) {
    throw Error(ErrorKind::kSizeOutOfRange,
                "shift size " + std::to_string(size) + " must be a power of two in [2, 1024]");
  }
  return circulant_matrix(CirculantSpec::shift(size));
}

ComplexMatrix circulant_matrix(const CirculantSpec& spec) {
  const auto dim = static_cast<Index>(spec.size());
  ComplexMatrix a(dim, dim);
  for (Index j = 0; j < dim; ++j) {
    for (Index k = 0; k < dim; ++k) {
      a(j, k) = spec.at_wrapped(static_cast<long long>(k - j));
    }
  }
#ifndef NDEBUG
  if (dim <= 64 && frobenius_distance(a, circulant_matrix_from_shifts(spec)) >
                       1e-12 * static_cast<double>(dim) * (1.0 + a.norm())) {
    throw Error(ErrorKind::kShapeMismatch, "entrywise and power-sum circulants disagree");
  }
#endif
  return a;
}

ComplexMatrix circulant_matrix_from_shifts(const CirculantSpec& spec) {
  const auto dim = static_cast<Index>(spec.size());
  ComplexMatrix shift = ComplexMatrix::Zero(dim, dim);
  for (Index j = 0; j < dim; ++j) shift(j, (j + 1) % dim) = 1.0;

  ComplexMatrix power = identity(dim);
  ComplexMatrix sum = ComplexMatrix::Zero(dim, dim);
  for (std::size_t l = 0; l < spec.size(); ++l) {
    sum += spec[l] * power;
    power = power * shift;
  }
  return sum;
}

ComplexMatrix CirculantEigensystem::eigenvectors(int n) { return qft_matrix(n).adjoint(); }

ComplexMatrix CirculantEigensystem::reconstruct() const {
  const int n = qubits_for_dimension(static_cast<Index>(eigenvalues.size()));
  const ComplexMatrix f = qft_matrix(n);
  const Eigen::Map<const ComplexVector> diag(eigenvalues.data(),
                                             static_cast<Index>(eigenvalues.size()));
  return f.adjoint() * diag.asDiagonal() * f;
}

CirculantEigensystem circulant_eigensystem(const CirculantSpec& spec) {
  const std::size_t size = spec.size();
  CirculantEigensystem sys;
  sys.eigenvalues.assign(size, 0.0);
  for (std::size_t m = 0; m < size; ++m) {
    Complex acc = 0.0;
    for (std::size_t j = 0; j < size; ++j) {
      acc += spec[j] * root_of_unity_power(size, -static_cast<long long>(j * m));
    }
    sys.eigenvalues[m] = acc;
  }
  return sys;
}

GeometricSums geometric_sums(Complex z, std::size_t count) {
  if (count == 0) {
    throw Error(ErrorKind::kNotRootOfUnity, "sum length must be positive");
  }
  const double modulus_err = std::abs(std::abs(z) - 1.0);
  const Complex zn = std::pow(z, static_cast<double>(count));
  if (modulus_err > 1e-9 || std::abs(zn - 1.0) > 1e-9) {
    throw Error(ErrorKind::kNotRootOfUnity,
                "z is not a " + std::to_string(count) + "-th root of unity");
  }
  const auto n = static_cast<double>(count);
  if (std::abs(z - 1.0) <= 1e-9) {
    return {n, n * (n - 1.0) / 2.0};
  }
  return {0.0, n / (z - 1.0)};
}

}  // namespace altqpe
