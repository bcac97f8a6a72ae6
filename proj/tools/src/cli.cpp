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

#include "altqpe_tools/cli.hpp"

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <optional>
#include <stdexcept>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "altqpe/altqpe.hpp"
#include "altqpe/io.hpp"
#include "altqpe_tools/verify.hpp"

namespace altqpe::tools {
namespace {

using nlohmann::json;

struct CommonOutput {
  std::string out_path;
};

int emit(const json& report, const CommonOutput& where, std::ostream& out, std::ostream& err) {
  const std::string text = report.dump(2) + "\n";
  if (where.out_path.empty()) {
    out << text;
    return kExitPass;
  }
  std::ofstream file(where.out_path);
  if (!file || !(file << text)) {
    err << "error: cannot write " << where.out_path << "\n";
    return kExitUsage;
  }
  return kExitPass;
}

// A bare matrix file or the pair form {"t", "unitary", "hamiltonian"}.
HamiltonianPair load_pair(const std::string& path) {
  const io::Json j = io::read_file(path);
  if (j.is_object() && j.contains("unitary")) {
    require_unitary(io::matrix_from_json(j.at("unitary")), "unitary");
    return io::pair_from_json(j);
  }
  const ComplexMatrix u = io::matrix_from_json(j);
  require_unitary(u, "unitary");
  return HamiltonianPair::from_unitary(u);
}

// Either the full state form or a bare {"amplitudes": [...]}.
StateVector load_state(const std::string& path) {
  const io::Json j = io::read_file(path);
  if (j.is_object() && !j.contains("layout") && j.contains("amplitudes")) {
    io::Json full = j;
    const auto count = j.at("amplitudes").size();
    if (count < 2 || (count & (count - 1)) != 0) {
      throw Error(ErrorKind::kParseError, "amplitude count must be a power of two >= 2");
    }
    int qubits = 0;
    while ((std::size_t{1} << qubits) < count) ++qubits;
    full["layout"] = io::Json::array({{{"name", kVectorRegister}, {"qubits", qubits}}});
    return io::state_from_json(full);
  }
  return io::state_from_json(j);
}

struct QpeArgs {
  std::string unitary;
  std::string eigenvector;
  int n = 3;
  std::int64_t j = 0;
  std::string mode = "exact";
};

int cmd_qpe(const QpeArgs& a, const CommonOutput& where, std::ostream& out, std::ostream& err) {
  const HamiltonianPair pair = load_pair(a.unitary);
  const StateVector psi = load_state(a.eigenvector);
  if (psi.size() != pair.dim()) {
    throw Error(ErrorKind::kShapeMismatch, "eigenvector length does not match the unitary");
  }
  const PhaseInstance inst(pair, psi.amplitudes());
  const auto size = Index{1} << a.n;
  if ((size * pair.dim()) > (Index{1} << kMaxQubits)) {
    throw Error(ErrorKind::kSizeOutOfRange, "ancilla plus target exceed 10 qubits");
  }
  if (a.j < 0 || a.j >= size) {
    throw Error(ErrorKind::kIndexOutOfRange, "j must lie in [0, 2^n)");
  }

  json report = {{"mode", a.mode}, {"n", a.n}, {"j", a.j}, {"phase", inst.phase()},
                 {"n_phase", inst.phase() * static_cast<double>(size)}};
  if (a.mode == "exact") {
    const ShiftActionResult r = qpe_shift_action(a.n, inst, a.j);
    report["outcome"] = r.expected_outcome;
    report["fidelity"] = r.fidelity;
    report["passed"] = r.passed;
    const int code = emit(report, where, out, err);
    return code != kExitPass ? code : (r.passed ? kExitPass : kExitFailure);
  }
  const StateVector output =
      altqpe::apply(alternative_qpe(a.n, pair.unitary()), product_state(a.n, a.j, psi));
  json dist = json::object();
  double total = 0.0;
  for (const auto& [k, p] : measure_distribution(output, kAncillaRegister)) {
    dist[std::to_string(k)] = p;
    total += p;
  }
  report["distribution"] = std::move(dist);
  report["total_probability"] = total;
  return emit(report, where, out, err);
}

struct DecomposeArgs {
  int n0 = 1;
  int n1 = 1;
  std::string unitary;
};

json dims_of(const std::vector<ComplexMatrix>& factors) {
  json dims = json::array();
  for (const auto& f : factors) dims.push_back(f.rows());
  return dims;
}

int cmd_decompose(const DecomposeArgs& a, const CommonOutput& where, std::ostream& out,
                  std::ostream& err) {
  const SplitLayout layout(a.n0, a.n1);
  const HamiltonianPair pair = load_pair(a.unitary);
  const FactoredOperator composed = composed_qpe(layout, pair);
  const NestedQpe nested = nested_qpe(layout, pair);
  const ComplexMatrix exact = alternative_qpe(layout.total_qubits(), pair.unitary());

  const double tolerance = 1e-9 * static_cast<double>(exact.rows());
  const double composed_error = frobenius_distance(composed.product, exact);
  const double nested_error = frobenius_distance(nested.product, exact);
  const double max_error = std::max(composed_error, nested_error);
  const bool passed =
      max_error <= tolerance && nested.fusion_error <= 1e-10;

  const json report = {
      {"layout", {{"n0", a.n0}, {"n1", a.n1}}},
      {"factor_dims", dims_of(composed.factors)},
      {"max_error", max_error},
      {"tolerance", tolerance},
      {"passed", passed},
      {"composed", {{"max_error", composed_error}, {"factor_dims", dims_of(composed.factors)}}},
      {"nested",
       {{"max_error", nested_error},
        {"fusion_error", nested.fusion_error},
        {"factor_dims", dims_of(nested.w_factors)}}},
  };
  const int code = emit(report, where, out, err);
  return code != kExitPass ? code : (passed ? kExitPass : kExitFailure);
}

int cmd_verify(const VerifyOptions& opt, const CommonOutput& where, std::ostream& out,
               std::ostream& err) {
  const VerificationReport report = run_verification(opt);
  json j = report.to_json();
  if (opt.sabotage != Sabotage::kNone) {
    j["sabotage"] = opt.sabotage == Sabotage::kWrongRoot ? "wrong-root" : "dropped-factor";
  }
  const int code = emit(j, where, out, err);
  if (code != kExitPass) return code;
  if (!report.passed()) {
    for (const auto& c : report.cases) {
      if (!c.passed) err << "FAIL " << c.id << " error=" << c.max_error << " tol=" << c.tolerance << "\n";
    }
    return kExitFailure;
  }
  return kExitPass;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Alternative quantum phase estimation toolkit"};
  app.name("altqpe");
  app.require_subcommand(1);

  CommonOutput where;

  VerifyOptions verify;
  auto* verify_cmd = app.add_subcommand("verify", "Run a verification suite");
  verify_cmd->add_option("--suite", verify.suite, "Suite to run")
      ->check(CLI::IsMember(suite_names()));
  verify_cmd->add_option("--max-n", verify.max_n, "Largest ancilla qubit count")
      ->check(CLI::Range(1, kMaxVerifyQubits));
  verify_cmd->add_option("--seed", verify.seed, "PRNG seed");
  verify_cmd->add_option("--out", where.out_path, "Write the JSON report here");
#ifdef ALTQPE_ENABLE_SABOTAGE
  std::optional<std::string> sabotage;
  verify_cmd->add_option("--sabotage", sabotage)
      ->check(CLI::IsMember({"wrong-root", "dropped-factor"}))
      ->group("");
#endif

  QpeArgs qpe;
  auto* qpe_cmd = app.add_subcommand("qpe", "Apply the phase estimation to |j>|psi>");
  qpe_cmd->add_option("--unitary", qpe.unitary, "Unitary or pair JSON file")->required();
  qpe_cmd->add_option("--eigenvector", qpe.eigenvector, "State JSON file")->required();
  qpe_cmd->add_option("--n", qpe.n, "Ancilla qubits")->check(CLI::Range(1, kMaxQubits - 1));
  qpe_cmd->add_option("--j", qpe.j, "Initial ancilla basis state");
  qpe_cmd->add_option("--mode", qpe.mode, "exact or distribution")
      ->check(CLI::IsMember({"exact", "distribution"}));
  qpe_cmd->add_option("--out", where.out_path, "Write the JSON report here");

  DecomposeArgs decompose;
  auto* dec_cmd = app.add_subcommand("decompose", "Check the split factorizations");
  dec_cmd->add_option("--n0", decompose.n0, "Outer qubits")->required();
  dec_cmd->add_option("--n1", decompose.n1, "Inner qubits")->required();
  dec_cmd->add_option("--unitary", decompose.unitary, "Unitary or pair JSON file")->required();
  dec_cmd->add_option("--out", where.out_path, "Write the JSON report here");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitPass : kExitUsage;
  }

  try {
    if (*verify_cmd) {
#ifdef ALTQPE_ENABLE_SABOTAGE
      if (sabotage) {
        verify.sabotage = *sabotage == "wrong-root" ? Sabotage::kWrongRoot : Sabotage::kDroppedFactor;
      }
#endif
      return cmd_verify(verify, where, out, err);
    }
    if (*qpe_cmd) return cmd_qpe(qpe, where, out, err);
    return cmd_decompose(decompose, where, out, err);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}

}  // namespace altqpe::tools
