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

#include "altqpe/random.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include <Eigen/Eigenvalues>
#include <Eigen/QR>

namespace altqpe {

ComplexMatrix random_gaussian_matrix(Index rows, Index cols, Rng& rng) {
  std::normal_distribution<double> normal(0.0, 1.0);
  ComplexMatrix g(rows, cols);
  // Fill in a fixed row-major order so instances do not depend on storage order.
  for (Index j = 0; j < rows; ++j) {
    for (Index k = 0; k < cols; ++k) {
      const double re = normal(rng);
      const double im = normal(rng);
      g(j, k) = Complex(re, im);
    }
  }
  return g;
}

ComplexMatrix random_hermitian(Index dim, Rng& rng, double scale) {
  const ComplexMatrix g = random_gaussian_matrix(dim, dim, rng);
  ComplexMatrix h = 0.5 * (g + g.adjoint());
  if (scale > 0.0) {
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(h, Eigen::EigenvaluesOnly);
    const double norm = solver.eigenvalues().cwiseAbs().maxCoeff();
    if (norm > 0.0) h *= scale / norm;
  }
  return h;
}

ComplexMatrix random_unitary(Index dim, Rng& rng) {
  const ComplexMatrix g = random_gaussian_matrix(dim, dim, rng);
  Eigen::HouseholderQR<ComplexMatrix> qr(g);
  ComplexMatrix q = qr.householderQ() * ComplexMatrix::Identity(dim, dim);
  const ComplexMatrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (Index k = 0; k < dim; ++k) {
    const double mag = std::abs(r(k, k));
    if (mag > 0.0) q.col(k) *= r(k, k) / mag;
  }
  return q;
}

ComplexMatrix random_diagonal_unitary(Index dim, Rng& rng) {
  std::uniform_real_distribution<double> angle(0.0, kTwoPi);
  ComplexMatrix d = ComplexMatrix::Zero(dim, dim);
  for (Index k = 0; k < dim; ++k) d(k, k) = std::polar(1.0, angle(rng));
  return d;
}

ComplexVector random_state(Index dim, Rng& rng) {
  ComplexVector v = random_gaussian_matrix(dim, 1, rng).col(0);
  return v / v.norm();
}

CirculantSpec random_circulant_spec(std::size_t size, Rng& rng) {
  const ComplexMatrix g = random_gaussian_matrix(static_cast<Index>(size), 1, rng);
  std::vector<Complex> c(g.data(), g.data() + size);
  return CirculantSpec(std::move(c));
}

ProjectionFamily random_projection_family(Index dim, std::size_t count, Rng& rng) {
  count = std::clamp<std::size_t>(count, 1, static_cast<std::size_t>(dim));
  const ComplexMatrix basis = random_unitary(dim, rng);

  // Cut points: count - 1 distinct interior positions in (0, dim).
  std::vector<Index> positions(static_cast<std::size_t>(dim - 1));
  std::iota(positions.begin(), positions.end(), Index{1});
  std::shuffle(positions.begin(), positions.end(), rng);
  std::vector<Index> cuts(positions.begin(), positions.begin() + static_cast<long>(count - 1));
  cuts.push_back(0);
  cuts.push_back(dim);
  std::sort(cuts.begin(), cuts.end());

  std::vector<ComplexMatrix> ps;
  for (std::size_t k = 0; k + 1 < cuts.size(); ++k) {
    const Index width = cuts[k + 1] - cuts[k];
    const ComplexMatrix cols = basis.middleCols(cuts[k], width);
    ps.push_back(cols * cols.adjoint());
  }
  return ProjectionFamily(std::move(ps));
}

}  // namespace altqpe
