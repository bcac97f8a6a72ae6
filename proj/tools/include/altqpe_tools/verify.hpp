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

// Verification suites behind `altqpe verify`.

#include <cstdint>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace altqpe::tools {

enum class Sabotage {
  kNone,
  kWrongRoot,      // omega = exp(i 2 pi / N1) inside the recursive suite
  kDroppedFactor,  // composed and nested products lose the controlled-U factor
};

struct VerifyOptions {
  std::string suite = "all";
  int max_n = 4;
  std::uint64_t seed = 0;
  Sabotage sabotage = Sabotage::kNone;
};

struct VerificationCase {
  std::string id;
  nlohmann::json parameters;
  double max_error = 0.0;
  double tolerance = 0.0;
  bool passed = false;
};

struct VerificationReport {
  std::string suite;
  std::uint64_t seed = 0;
  int max_n = 0;
  std::vector<VerificationCase> cases;
  double wall_time_seconds = 0.0;

  bool passed() const;
  nlohmann::json to_json() const;
};

inline constexpr int kMaxVerifyQubits = 8;

const std::vector<std::string>& suite_names();

/// Throws std::invalid_argument on an unknown suite or max_n outside [1, 8].
VerificationReport run_verification(const VerifyOptions& options);

}  // namespace altqpe::tools
