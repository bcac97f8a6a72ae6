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

#include "altqpe_tools/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <complex>
#include <functional>
#include <stdexcept>

#include <unsupported/Eigen/MatrixFunctions>

#include "altqpe/altqpe.hpp"

namespace altqpe::tools {
namespace {

using nlohmann::json;

class CaseList {
 public:
  explicit CaseList(std::vector<VerificationCase>& cases) : cases_(cases) {}

  void add(std::string id, json parameters, double error, double tolerance) {
    // NaN must fail, hence the negated comparison.
    const bool ok = std::isfinite(error) && !(error > tolerance);
    cases_.push_back({std::move(id), std::move(parameters), error, tolerance, ok});
  }

  void add(std::string id, json parameters, double error, double tolerance, bool extra_ok) {
    add(std::move(id), std::move(parameters), error, tolerance);
    cases_.back().passed = cases_.back().passed && extra_ok;
  }

 private:
  std::vector<VerificationCase>& cases_;
};

// Pade scaling-and-squaring from Eigen, independent of the eigh route.
ComplexMatrix expm_reference(const ComplexMatrix& h, double t) {
  const ComplexMatrix a = (-kI * t) * h;
  return a.exp();
}

std::string tag(const SplitLayout& l) {
  return "n0=" + std::to_string(l.outer_qubits) + ",n1=" + std::to_string(l.inner_qubits);
}

double as_double(std::size_t v) { return static_cast<double>(v); }

// ---------------------------------------------------------------- spectral

void spectral_suite(const VerifyOptions& opt, Rng& rng, CaseList& out) {
  for (int n = 1; n <= opt.max_n; ++n) {
    const std::size_t size = std::size_t{1} << n;
    const json p = {{"n", n}};
    const ComplexMatrix f = qft_matrix(n);
    out.add("spectral/qft-unitary/n=" + std::to_string(n), p, unitarity_error(f),
            structural_tolerance(f.rows()));

    const CirculantSpec spec = random_circulant_spec(size, rng);
    const ComplexMatrix a = circulant_matrix(spec);
    out.add("spectral/circulant-eigensystem/n=" + std::to_string(n), p,
            frobenius_distance(circulant_eigensystem(spec).reconstruct(), a), 1e-10 * as_double(size));

    const ComplexMatrix s = shift_matrix(size);
    const CirculantEigensystem shift_eig = circulant_eigensystem(CirculantSpec::shift(size));
    const ComplexMatrix vs = CirculantEigensystem::eigenvectors(n);
    double residual = 0.0;
    for (std::size_t m = 0; m < size; ++m) {
      const auto col = vs.col(static_cast<Index>(m));
      residual = std::max(residual, (s * col - shift_eig.eigenvalues[m] * col).norm());
    }
    out.add("spectral/shift-eigenvectors/n=" + std::to_string(n), p, residual,
            1e-10 * as_double(size));

    double sums_error = 0.0;
    for (std::size_t k = 0; k < size; ++k) {
      const Complex z = root_of_unity_power(size, static_cast<long long>(k));
      const GeometricSums g = geometric_sums(z, size);
      Complex plain = 0.0, weighted = 0.0;
      for (std::size_t j = 0; j < size; ++j) {
        const Complex zj = root_of_unity_power(size, static_cast<long long>(j * k));
        plain += zj;
        weighted += as_double(j) * zj;
      }
      sums_error = std::max({sums_error, std::abs(g.plain - plain), std::abs(g.weighted - weighted)});
    }
    // The weighted sum reaches N^2 / 2, so past N = 32 the floor scales with it.
    const double scale = std::max(1.0, as_double(size * size) / 1024.0);
    out.add("spectral/geometric-sums/n=" + std::to_string(n), p, sums_error, 1e-11 * scale);
  }
}

// ---------------------------------------------------------------- expcalc

const ComplexMatrix& hadamard() {
  static const ComplexMatrix h = qft_matrix(1);
  return h;
}

ComplexMatrix cnot() {
  ComplexMatrix m = ComplexMatrix::Zero(4, 4);
  m(0, 0) = m(1, 1) = m(2, 3) = m(3, 2) = 1.0;
  return m;
}

ComplexMatrix reversed_cnot() {
  ComplexMatrix m = ComplexMatrix::Zero(4, 4);
  m(0, 0) = m(1, 3) = m(2, 2) = m(3, 1) = 1.0;
  return m;
}

void expcalc_suite(const VerifyOptions&, Rng& rng, CaseList& out) {
  constexpr int kTrials = 50;
  std::uniform_int_distribution<int> shape(1, 2);
  for (int trial = 0; trial < kTrials; ++trial) {
    const Index dp = Index{1} << shape(rng);
    const Index dh = Index{1} << shape(rng);
    std::uniform_int_distribution<Index> count_dist(1, dp);
    const auto count = static_cast<std::size_t>(count_dist(rng));
    std::uniform_real_distribution<double> time(0.1, 2.0);
    ProjectionTensorDecomposition d{random_projection_family(dp, count, rng), {}, time(rng)};
    for (std::size_t j = 0; j < d.family.size(); ++j) d.hamiltonians.push_back(random_hermitian(dh, rng));

    const ComplexMatrix reference = expm_reference(d.generator(), d.t);
    const ComplexMatrix e = pbtd_exponential(d);
    double commutators = 0.0;
    std::vector<ComplexMatrix> terms;
    for (std::size_t j = 0; j < d.family.size(); ++j) terms.push_back(pbtd_term_exponential(d, j));
    for (std::size_t j = 0; j < terms.size(); ++j) {
      for (std::size_t k = j + 1; k < terms.size(); ++k) {
        commutators = std::max(commutators, commutator_norm(terms[j], terms[k]));
      }
    }
    const json p = {{"projector_dim", dp}, {"hamiltonian_dim", dh}, {"terms", d.family.size()},
                    {"t", d.t}};
    out.add("expcalc/pbtd-taylor/trial=" + std::to_string(trial), p, frobenius_distance(e, reference),
            1e-9);
    out.add("expcalc/pbtd-commute/trial=" + std::to_string(trial), p, commutators, 1e-10);
  }

  const ComplexMatrix p1 = outer(basis_vector(2, 1));
  const ComplexMatrix minus = outer(hadamard().col(1));
  out.add("expcalc/cnot/projector-exponential", json::object(),
          frobenius_distance(projector_exponential(p1, minus, kPi), cnot()), 1e-12);

  const ComplexMatrix cz = projector_exponential(p1, p1, kPi);
  const ComplexMatrix ih = kron(identity(2), hadamard());
  const ProjectionTensorDecomposition variant1{ProjectionFamily::computational(2),
                                               {ComplexMatrix::Zero(2, 2), p1}, kPi};
  const auto t1 = transformed_pbtd_exponential(identity(2), {hadamard(), hadamard()}, variant1);
  out.add("expcalc/cnot/cz-conjugation", json::object(),
          std::max(frobenius_distance(ih * cz * ih, cnot()), frobenius_distance(t1.result, cnot())),
          1e-12);

  const ComplexMatrix hh = kron(hadamard(), hadamard());
  const ProjectionTensorDecomposition variant2{
      ProjectionFamily({outer(hadamard().col(0)), outer(hadamard().col(1))}),
      {ComplexMatrix::Zero(2, 2), p1}, kPi};
  const auto t2 = transformed_pbtd_exponential(hadamard(), {hadamard(), hadamard()}, variant2);
  out.add("expcalc/cnot/reversed-control", json::object(),
          std::max({frobenius_distance(hh * reversed_cnot() * hh, cnot()),
                    frobenius_distance(t2.result, cnot()),
                    frobenius_distance(t2.core, reversed_cnot())}),
          1e-12);

  for (int trial = 0; trial < 10; ++trial) {
    ProjectionTensorDecomposition d{random_projection_family(2, 2, rng), {}, 1.0};
    std::vector<ComplexMatrix> ts;
    for (int j = 0; j < 2; ++j) {
      d.hamiltonians.push_back(random_hermitian(4, rng));
      ts.push_back(random_unitary(4, rng));
    }
    const ComplexMatrix s = random_unitary(2, rng);
    const auto via_factors = transformed_pbtd_exponential(s, ts, d);
    const ComplexMatrix direct = expm_reference(transformed_decomposition(s, ts, d).generator(), d.t);
    out.add("expcalc/transformed/trial=" + std::to_string(trial), json::object(),
            frobenius_distance(via_factors.result, direct), 1e-9);
  }
}

// ---------------------------------------------------------------- qpe

void qpe_suite(const VerifyOptions& opt, Rng& rng, CaseList& out) {
  for (int n = 1; n <= std::min(opt.max_n, 6); ++n) {
    const std::size_t size = std::size_t{1} << n;
    const json p = {{"n", n}};
    const ComplexMatrix q = qpe_multiplier(n);
    const ComplexMatrix f = qft_matrix(n);
    out.add("qpe/multiplier-conjugation/n=" + std::to_string(n), p,
            frobenius_distance(q, f.adjoint() * control_multiplier(n) * f), 1e-10 * as_double(size));

    RealVector ev = eigh(q).eigenvalues;
    std::sort(ev.data(), ev.data() + ev.size());
    double spectrum = 0.0;
    for (Index m = 0; m < ev.size(); ++m) spectrum = std::max(spectrum, std::abs(ev(m) - m));
    out.add("qpe/multiplier-spectrum/n=" + std::to_string(n), p, spectrum, 1e-8);

    const CirculantSpec spec = qpe_multiplier_spec(n);
    double coeff = std::abs(spec[0] - Complex(as_double(size - 1) / 2));
    for (std::size_t j = 1; j < size; ++j) {
      const Complex expected = 1.0 / (root_of_unity_power(size, static_cast<long long>(j)) - 1.0);
      coeff = std::max(coeff, std::abs(spec[j] - expected));
    }
    out.add("qpe/multiplier-coefficients/n=" + std::to_string(n), p, coeff, 1e-12);
  }

  for (int n = 1; n <= opt.max_n; ++n) {
    const Index size = Index{1} << n;
    for (Index dim : {Index{2}, Index{4}}) {
      if (size * dim > (Index{1} << kMaxQubits)) continue;
      const HamiltonianPair pair = HamiltonianPair::from_hamiltonian(random_hermitian(dim, rng), 1.0);
      const ComplexMatrix a = alternative_qpe(n, pair.unitary());
      const json p = {{"n", n}, {"target_dim", dim}, {"t", pair.t()}};
      out.add("qpe/hamiltonian-form/n=" + std::to_string(n) + ",dim=" + std::to_string(dim), p,
              frobenius_distance(a, qpe_via_hamiltonian(n, pair)), 1e-9 * as_double(a.rows()));
    }

    const HamiltonianPair pair = HamiltonianPair::from_hamiltonian(random_hermitian(2, rng), 1.0);
    ProjectionTensorDecomposition counter{ProjectionFamily::computational(size), {}, pair.t()};
    for (Index j = 0; j < size; ++j) counter.hamiltonians.push_back(static_cast<double>(j) * pair.hamiltonian());
    out.add("qpe/controlled-pbtd/n=" + std::to_string(n), {{"n", n}},
            frobenius_distance(controlled_u(n, pair.unitary()),
                               pbtd_exponential(counter, FamilyCheck::kTrusted)),
            1e-9);

    const QpeAlgebraReport r =
        qpe_algebra_checks(n, random_diagonal_unitary(2, rng), random_diagonal_unitary(2, rng));
    out.add("qpe/algebra/n=" + std::to_string(n), {{"n", n}, {"target_dim", 2}}, r.max_error(),
            r.tolerance);
  }
}

// ---------------------------------------------------------------- recursive

ComplexMatrix inner_root_diagonal(const SplitLayout& l) {
  const auto n1 = static_cast<Index>(l.inner_size());
  ComplexMatrix d = ComplexMatrix::Zero(n1, n1);
  for (Index j = 0; j < n1; ++j) d(j, j) = root_of_unity_power(l.inner_size(), j);
  return d;
}

void recursive_suite(const VerifyOptions& opt, Rng& rng, CaseList& out) {
  const bool wrong_root = opt.sabotage == Sabotage::kWrongRoot;
  const bool dropped = opt.sabotage == Sabotage::kDroppedFactor;

  for (int total = 2; total <= opt.max_n; ++total) {
    for (int n0 = 1; n0 < total; ++n0) {
      const SplitLayout l(n0, total - n0);
      const json p = {{"n0", l.outer_qubits}, {"n1", l.inner_qubits}};
      const double size = as_double(l.size());
      const ComplexMatrix d =
          wrong_root ? inner_root_diagonal(l) : omega_diagonal(l).matrix;

      const CirculantSpec spec = random_circulant_spec(l.size(), rng);
      const auto terms = wrong_root
                             ? circulant_block_decomposition(
                                   spec, l, std::polar(1.0, kTwoPi / as_double(l.inner_size())))
                             : circulant_block_decomposition(spec, l);
      out.add("recursive/circulant-blocks/" + tag(l), p,
              frobenius_distance(assemble(terms), circulant_matrix(spec)), 1e-10 * size);

      out.add("recursive/multiplier-split/" + tag(l), p,
              frobenius_distance(qpe_multiplier_decomposition(l, d), qpe_multiplier(total)),
              1e-9 * size);

      const HamiltonianPair pair = HamiltonianPair::from_hamiltonian(random_hermitian(2, rng), 1.0);
      const ComplexMatrix exact = alternative_qpe(total, pair.unitary());

      FactoredOperator composed = composed_qpe(l, pair, d);
      if (dropped) {
        composed.factors.erase(composed.factors.begin());
        composed.product = multiply_in_order(composed.factors);
      }
      out.add("recursive/composed/" + tag(l), p, frobenius_distance(composed.product, exact), 1e-9);

      NestedQpe nested = nested_qpe(l, pair);
      if (dropped) {
        nested.w_factors.erase(nested.w_factors.begin());
        nested.w = multiply_in_order(nested.w_factors);
        const ComplexMatrix f = kron(qft_matrix(l.outer_qubits),
                                     identity(static_cast<Index>(l.inner_size()) * pair.dim()));
        nested.product = f.adjoint() * nested.w * f;
      }
      out.add("recursive/nested/" + tag(l), p, frobenius_distance(nested.product, exact), 1e-9);
      out.add("recursive/fusion/" + tag(l), p, nested.fusion_error, 1e-10);

      const HamiltonianPair powered = pair.power(l.outer_size());
      const ComplexMatrix via_exp = expm_hermitian(
          as_double(l.outer_size()) * kron(qpe_multiplier(l.inner_qubits), pair.hamiltonian()),
          pair.t());
      out.add("recursive/inner-factor/" + tag(l), p,
              frobenius_distance(via_exp, alternative_qpe(l.inner_qubits, powered.unitary())), 1e-9);
    }
  }
}

// ---------------------------------------------------------------- action

void action_suite(const VerifyOptions& opt, Rng& rng, CaseList& out) {
  for (int n = 1; n <= opt.max_n; ++n) {
    const auto size = Index{1} << n;
    std::vector<Index> phases;
    if (n <= 4) {
      for (Index k = 0; k < size; ++k) phases.push_back(k);
    } else {
      std::uniform_int_distribution<Index> pick(1, size - 1);
      phases.push_back(0);
      while (phases.size() < 8) phases.push_back(pick(rng));
    }

    for (Index k : phases) {
      const ComplexMatrix v = random_unitary(2, rng);
      std::uniform_int_distribution<Index> other(0, size - 1);
      ComplexMatrix diag = ComplexMatrix::Zero(2, 2);
      diag(0, 0) = root_of_unity_power(static_cast<std::size_t>(size), k);
      diag(1, 1) = root_of_unity_power(static_cast<std::size_t>(size), other(rng));
      const PhaseInstance inst(HamiltonianPair::from_unitary(v * diag * v.adjoint()), v.col(0));
      const StateVector psi = StateVector::single(inst.eigenvector());
      const ComplexMatrix op = alternative_qpe(n, inst.pair().unitary());

      double worst = 0.0;
      for (Index j = 0; j < size; ++j) {
        const ComplexVector output = op * product_state(n, j, psi).amplitudes();
        const ComplexVector target = product_state(n, (j + k) % size, psi).amplitudes();
        worst = std::max(worst, 1.0 - fidelity(output, target));
      }
      // The j = 0 row against the textbook circuit with a Hadamard layer.
      ComplexMatrix hadamards = ComplexMatrix::Identity(1, 1);
      for (int q = 0; q < n; ++q) hadamards = kron(hadamards, hadamard());
      const ComplexMatrix textbook = kron(qft_matrix(n).adjoint(), identity(2)) *
                                     controlled_u(n, inst.pair().unitary()) *
                                     kron(hadamards, identity(2));
      const ComplexVector input = product_state(n, 0, psi).amplitudes();
      worst = std::max(worst, 1.0 - fidelity(textbook * input, op * input));
      out.add("action/shift/n=" + std::to_string(n) + ",k=" + std::to_string(k),
              {{"n", n}, {"k", k}, {"phase", inst.phase()}}, worst, 1e-10);
    }

    const double phase = 0.3;
    ComplexMatrix u = identity(2);
    u(1, 1) = std::polar(1.0, kTwoPi * phase);
    const StateVector input = product_state(n, 0, StateVector::single(basis_vector(2, 1)));
    const StateVector output(alternative_qpe(n, u) * input.amplitudes(), input.layout());
    const auto dist = measure_distribution(output, kAncillaRegister);
    double total = 0.0;
    for (const auto& [outcome, prob] : dist) total += prob;
    const auto best = std::max_element(dist.begin(), dist.end(), [](const auto& a, const auto& b) {
      return a.second < b.second;
    });
    const auto nearest = static_cast<Index>(std::lround(phase * static_cast<double>(size))) % size;
    out.add("action/distribution/n=" + std::to_string(n),
            {{"n", n}, {"phase", phase}, {"argmax", best->first}, {"nearest", nearest}},
            std::abs(total - 1.0), 1e-10, best->first == nearest);
  }
}

using SuiteFn = std::function<void(const VerifyOptions&, Rng&, CaseList&)>;

struct SuiteEntry {
  std::string name;
  SuiteFn run;
  std::uint64_t salt;
};

const std::vector<SuiteEntry>& suites() {
  static const std::vector<SuiteEntry> entries = {
      {"spectral", spectral_suite, 1},   {"expcalc", expcalc_suite, 2},
      {"qpe", qpe_suite, 3},             {"recursive", recursive_suite, 4},
      {"action", action_suite, 5},
  };
  return entries;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& s : suites()) out.push_back(s.name);
    out.emplace_back("all");
    return out;
  }();
  return names;
}

bool VerificationReport::passed() const {
  return std::all_of(cases.begin(), cases.end(), [](const auto& c) { return c.passed; });
}

nlohmann::json VerificationReport::to_json() const {
  json list = json::array();
  for (const auto& c : cases) {
    list.push_back({{"id", c.id},
                    {"parameters", c.parameters},
                    {"max_error", c.max_error},
                    {"tolerance", c.tolerance},
                    {"passed", c.passed}});
  }
  return {{"suite", suite},
          {"seed", seed},
          {"max_n", max_n},
          {"cases", std::move(list)},
          {"passed", passed()},
          {"wall_time_seconds", wall_time_seconds}};
}

VerificationReport run_verification(const VerifyOptions& options) {
  if (options.max_n < 1 || options.max_n > kMaxVerifyQubits) {
    throw std::invalid_argument("--max-n must lie in [1, " + std::to_string(kMaxVerifyQubits) + "]");
  }
  const auto& names = suite_names();
  if (std::find(names.begin(), names.end(), options.suite) == names.end()) {
    throw std::invalid_argument("unknown suite '" + options.suite + "'");
  }

  const auto start = std::chrono::steady_clock::now();
  VerificationReport report;
  report.suite = options.suite;
  report.seed = options.seed;
  report.max_n = options.max_n;
  CaseList list(report.cases);
  for (const auto& entry : suites()) {
    if (options.suite != "all" && options.suite != entry.name) continue;
    // Each suite owns its stream so `all` replays the single-suite runs.
    std::seed_seq seq{options.seed, entry.salt};
    Rng rng(seq);
    entry.run(options, rng, list);
  }
  report.wall_time_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

}  // namespace altqpe::tools
