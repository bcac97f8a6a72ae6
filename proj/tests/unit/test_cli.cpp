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

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "altqpe/io.hpp"
#include "altqpe_tools/cli.hpp"
#include "altqpe_tools/verify.hpp"
#include "gates.hpp"

namespace altqpe::tools {
namespace {

using nlohmann::json;

struct CliRun {
  int code;
  std::string out;
  std::string err;
};

CliRun run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

class CliFiles : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = std::filesystem::temp_directory_path() /
           ("altqpe_cli_" + std::to_string(::testing::UnitTest::GetInstance()->random_seed()) +
            "_" + ::testing::UnitTest::GetInstance()->current_test_info()->name());
    std::filesystem::create_directories(dir_);
  }
  void TearDown() override { std::filesystem::remove_all(dir_); }

  std::string write(const std::string& name, const json& j) {
    const auto path = dir_ / name;
    std::ofstream(path) << j.dump();
    return path.string();
  }
  std::string matrix(const std::string& name, const ComplexMatrix& m) {
    return write(name, io::to_json(m));
  }
  std::string ket(const std::string& name, const ComplexVector& v) {
    return write(name, io::to_json(StateVector::single(v)));
  }

  std::filesystem::path dir_;
};

TEST(VerifyReport, SchemaAndPassing) {
  const VerificationReport r = run_verification({"qpe", 3, 7, Sabotage::kNone});
  EXPECT_TRUE(r.passed());
  const json j = r.to_json();
  for (const char* key : {"suite", "seed", "max_n", "cases", "passed", "wall_time_seconds"}) {
    EXPECT_TRUE(j.contains(key)) << key;
  }
  ASSERT_FALSE(j["cases"].empty());
  for (const auto& c : j["cases"]) {
    for (const char* key : {"id", "parameters", "max_error", "tolerance", "passed"}) {
      EXPECT_TRUE(c.contains(key)) << key;
    }
  }
}

TEST(VerifyReport, SeedDeterminism) {
  auto a = run_verification({"all", 3, 42, Sabotage::kNone}).to_json();
  auto b = run_verification({"all", 3, 42, Sabotage::kNone}).to_json();
  a.erase("wall_time_seconds");
  b.erase("wall_time_seconds");
  EXPECT_EQ(a.dump(), b.dump());
  auto c = run_verification({"all", 3, 43, Sabotage::kNone}).to_json();
  c.erase("wall_time_seconds");
  EXPECT_NE(a.dump(), c.dump());
}

TEST(VerifyReport, AllIsConcatenationOfSuites) {
  const auto all = run_verification({"all", 2, 5, Sabotage::kNone});
  std::size_t total = 0;
  for (const auto& name : suite_names()) {
    if (name == "all") continue;
    const auto single = run_verification({name, 2, 5, Sabotage::kNone});
    for (std::size_t k = 0; k < single.cases.size(); ++k) {
      EXPECT_EQ(single.cases[k].id, all.cases[total + k].id);
      EXPECT_EQ(single.cases[k].max_error, all.cases[total + k].max_error);
    }
    total += single.cases.size();
  }
  EXPECT_EQ(total, all.cases.size());
}

TEST(VerifyReport, SabotageFails) {
  EXPECT_FALSE(run_verification({"recursive", 2, 0, Sabotage::kWrongRoot}).passed());
  EXPECT_FALSE(run_verification({"recursive", 2, 0, Sabotage::kDroppedFactor}).passed());
  EXPECT_TRUE(run_verification({"recursive", 2, 0, Sabotage::kNone}).passed());
}

TEST(VerifyReport, RejectsBadArguments) {
  EXPECT_THROW(run_verification({"nope", 2, 0, Sabotage::kNone}), std::invalid_argument);
  EXPECT_THROW(run_verification({"qpe", 9, 0, Sabotage::kNone}), std::invalid_argument);
  EXPECT_THROW(run_verification({"qpe", 0, 0, Sabotage::kNone}), std::invalid_argument);
}

TEST(Cli, VerifyExitCodes) {
  const CliRun ok = run({"verify", "--suite", "qpe", "--max-n", "3"});
  EXPECT_EQ(ok.code, kExitPass) << ok.err;
  EXPECT_TRUE(json::parse(ok.out)["passed"].get<bool>());
  EXPECT_EQ(run({"verify", "--suite", "qpe", "--max-n", "9"}).code, kExitUsage);
  EXPECT_EQ(run({"verify", "--suite", "bogus"}).code, kExitUsage);
  EXPECT_EQ(run({}).code, kExitUsage);
  EXPECT_EQ(run({"--help"}).code, kExitPass);
}

#ifdef ALTQPE_ENABLE_SABOTAGE
TEST(Cli, SabotageFlag) {
  for (const char* kind : {"wrong-root", "dropped-factor"}) {
    const CliRun r = run({"verify", "--suite", "recursive", "--max-n", "2", "--sabotage", kind});
    EXPECT_EQ(r.code, kExitFailure) << kind;
    EXPECT_FALSE(json::parse(r.out)["passed"].get<bool>());
    EXPECT_EQ(json::parse(r.out)["sabotage"], kind);
  }
  EXPECT_EQ(run({"verify", "--sabotage", "other"}).code, kExitUsage);
}
#endif

TEST_F(CliFiles, VerifyWritesOutFile) {
  const auto path = (dir_ / "report.json").string();
  const CliRun r = run({"verify", "--suite", "spectral", "--max-n", "2", "--out", path});
  EXPECT_EQ(r.code, kExitPass);
  EXPECT_TRUE(r.out.empty());
  EXPECT_EQ(io::read_file(path)["suite"], "spectral");
}

TEST_F(CliFiles, QpeExactOutcomes) {
  const auto u = matrix("u.json", gates::diag2(1.0, kI));
  const auto psi = ket("psi.json", gates::ket1());
  const CliRun r0 = run({"qpe", "--unitary", u, "--eigenvector", psi, "--n", "3", "--j", "0"});
  ASSERT_EQ(r0.code, kExitPass) << r0.err;
  EXPECT_EQ(json::parse(r0.out)["outcome"], 2);
  const CliRun r7 = run({"qpe", "--unitary", u, "--eigenvector", psi, "--n", "3", "--j", "7"});
  ASSERT_EQ(r7.code, kExitPass);
  EXPECT_EQ(json::parse(r7.out)["outcome"], 1);
}

TEST_F(CliFiles, QpeAcceptsPairAndBareAmplitudes) {
  const HamiltonianPair pair(gates::pauli_x(), outer(gates::ket_minus()), kPi);
  const auto u = write("pair.json", io::to_json(pair));
  const auto psi = write("psi.json", {{"amplitudes", {{0.7071067811865476, 0.0},
                                                      {-0.7071067811865476, 0.0}}}});
  const CliRun r = run({"qpe", "--unitary", u, "--eigenvector", psi, "--n", "2", "--j", "1"});
  ASSERT_EQ(r.code, kExitPass) << r.err;
  EXPECT_EQ(json::parse(r.out)["outcome"], 3);
}

TEST_F(CliFiles, QpeDistribution) {
  const auto u = matrix("u.json", gates::phase_gate(0.3));
  const auto psi = ket("psi.json", gates::ket1());
  const CliRun r = run({"qpe", "--unitary", u, "--eigenvector", psi, "--n", "3", "--mode",
                     "distribution"});
  ASSERT_EQ(r.code, kExitPass) << r.err;
  const json j = json::parse(r.out);
  double total = 0.0, best = -1.0;
  std::string argmax;
  for (const auto& [k, p] : j["distribution"].items()) {
    total += p.get<double>();
    if (p.get<double>() > best) {
      best = p.get<double>();
      argmax = k;
    }
  }
  EXPECT_NEAR(total, 1.0, 1e-10);
  EXPECT_EQ(argmax, "2");
}

TEST_F(CliFiles, QpeInputErrors) {
  const auto u = matrix("u.json", gates::phase_gate(0.3));
  const auto psi = ket("psi.json", gates::ket1());
  const auto plus = ket("plus.json", gates::ket_plus());
  const auto bad_u = matrix("bad.json", 2.0 * identity(2));
  const auto broken = (dir_ / "broken.json").string();
  std::ofstream(broken) << "{";

  EXPECT_EQ(run({"qpe", "--unitary", u, "--eigenvector", psi, "--n", "3"}).code, kExitUsage);
  EXPECT_EQ(run({"qpe", "--unitary", u, "--eigenvector", plus, "--n", "3"}).code, kExitUsage);
  const CliRun not_unitary = run({"qpe", "--unitary", bad_u, "--eigenvector", psi});
  EXPECT_EQ(not_unitary.code, kExitUsage);
  EXPECT_NE(not_unitary.err.find("NotUnitary"), std::string::npos) << not_unitary.err;
  EXPECT_EQ(run({"qpe", "--unitary", broken, "--eigenvector", psi}).code, kExitUsage);
  EXPECT_EQ(run({"qpe", "--unitary", u, "--eigenvector", psi, "--j", "8"}).code, kExitUsage);
  EXPECT_EQ(run({"qpe", "--unitary", u}).code, kExitUsage);
}

TEST_F(CliFiles, DecomposeReports) {
  const auto z = matrix("z.json", gates::diag2(1.0, kI));
  const CliRun r = run({"decompose", "--n0", "1", "--n1", "1", "--unitary", z});
  ASSERT_EQ(r.code, kExitPass) << r.err;
  const json j = json::parse(r.out);
  EXPECT_EQ(j["layout"]["n0"], 1);
  EXPECT_EQ(j["factor_dims"].size(), 4u);
  EXPECT_LT(j["composed"]["max_error"].get<double>(), 1e-10);
  EXPECT_LT(j["nested"]["max_error"].get<double>(), 1e-10);
  EXPECT_TRUE(j["passed"].get<bool>());

  const auto id = matrix("id.json", identity(2));
  const json trivial = json::parse(run({"decompose", "--n0", "2", "--n1", "1", "--unitary", id}).out);
  EXPECT_LT(trivial["max_error"].get<double>(), 1e-13);

  EXPECT_EQ(run({"decompose", "--n0", "5", "--n1", "5", "--unitary", z}).code, kExitUsage);
}

}  // namespace
}  // namespace altqpe::tools
