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

// Seeded generators for random test instances.

#include <cstdint>
#include <random>

#include "altqpe/exp_calculus.hpp"
#include "altqpe/linalg.hpp"
#include "altqpe/spectral.hpp"

namespace altqpe {

using Rng = std::mt19937_64;

ComplexMatrix random_gaussian_matrix(Index rows, Index cols, Rng& rng);

/// (G + G^dagger) / 2 for Gaussian G, rescaled to spectral norm `scale` when
/// scale > 0.
ComplexMatrix random_hermitian(Index dim, Rng& rng, double scale = 0.0);

/// Q factor of a Gaussian matrix with the diagonal phases of R removed.
ComplexMatrix random_unitary(Index dim, Rng& rng);

/// Diagonal unitary with uniformly random phases.
ComplexMatrix random_diagonal_unitary(Index dim, Rng& rng);

ComplexVector random_state(Index dim, Rng& rng);

CirculantSpec random_circulant_spec(std::size_t size, Rng& rng);

/// Splits the columns of a random unitary into `count` non-empty groups and
/// returns the projectors onto their spans.
ProjectionFamily random_projection_family(Index dim, std::size_t count, Rng& rng);

}  // namespace altqpe
