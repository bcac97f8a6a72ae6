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

/**
 * @file
 * JSON forms of the library types.
 *
 *   matrix:      {"rows": R, "cols": C, "data": [[re, im], ...]}   row-major
 *   circulant:   {"n": qubits, "coefficients": [[re, im], ...]}
 *   pbtd:        {"t": real, "projectors": [matrix...], "hamiltonians": [matrix...]}
 *   pair:        {"t": real, "unitary": matrix, "hamiltonian": matrix}
 *                (hamiltonian optional, extracted when absent)
 *   state:       {"layout": [{"name": s, "qubits": q}], "amplitudes": [[re, im], ...]}
 *
 * Every parser throws Error(kParseError) on malformed input, including
 * non-finite entries.
 */

#include <filesystem>

#include <nlohmann/json.hpp>

#include "altqpe/exp_calculus.hpp"
#include "altqpe/linalg.hpp"
#include "altqpe/qpe.hpp"
#include "altqpe/simulator.hpp"
#include "altqpe/spectral.hpp"

namespace altqpe::io {

using Json = nlohmann::json;

Json complex_to_json(Complex z);
Complex complex_from_json(const Json& j);

Json to_json(const ComplexMatrix& m);
ComplexMatrix matrix_from_json(const Json& j);

Json to_json(const CirculantSpec& spec);
CirculantSpec circulant_from_json(const Json& j);

Json to_json(const ProjectionTensorDecomposition& d);
ProjectionTensorDecomposition pbtd_from_json(const Json& j);

Json to_json(const HamiltonianPair& pair);
HamiltonianPair pair_from_json(const Json& j);

Json to_json(const StateVector& state);
StateVector state_from_json(const Json& j);

/// Reads and parses a JSON file; throws kParseError.
Json read_file(const std::filesystem::path& path);

}  // namespace altqpe::io
