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

#include "altqpe/io.hpp"

#include <cmath>
#include <fstream>
#include <string>

namespace altqpe::io {

namespace {

[[noreturn]] void fail(const std::string& message) {
  throw Error(ErrorKind::kParseError, message);
}

const Json& field(const Json& j, const char* name) {
  if (!j.is_object() || !j.contains(name)) fail(std::string("missing field '") + name + "'");
  return j.at(name);
}

double finite_number(const Json& j, const char* what) {
  if (!j.is_number()) fail(std::string(what) + " must be a number");
  const double x = j.get<double>();
  if (!std::isfinite(x)) fail(std::string(what) + " is not finite");
  return x;
}

std::vector<Complex> complex_list(const Json& j, const char* what) {
  if (!j.is_array()) fail(std::string(what) + " must be an array");
  std::vector<Complex> out;
  out.reserve(j.size());
  for (const auto& z : j) out.push_back(complex_from_json(z));
  return out;
}

std::vector<ComplexMatrix> matrix_list(const Json& j, const char* what) {
  if (!j.is_array()) fail(std::string(what) + " must be an array");
  std::vector<ComplexMatrix> out;
  for (const auto& m : j) out.push_back(matrix_from_json(m));
  return out;
}

}  // namespace

Json complex_to_json(Complex z) { return Json::array({z.real(), z.imag()}); }

Complex complex_from_json(const Json& j) {
  if (!j.is_array() || j.size() != 2) fail("complex entries are [re, im] pairs");
  return {finite_number(j[0], "real part"), finite_number(j[1], "imaginary part")};
}

Json to_json(const ComplexMatrix& m) {
  Json data = Json::array();
  for (Index r = 0; r < m.rows(); ++r) {
    for (Index c = 0; c < m.cols(); ++c) data.push_back(complex_to_json(m(r, c)));
  }
  return {{"rows", m.rows()}, {"cols", m.cols()}, {"data", std::move(data)}};
}

ComplexMatrix matrix_from_json(const Json& j) {
  const Json& rows_j = field(j, "rows");
  const Json& cols_j = field(j, "cols");
  if (!rows_j.is_number_integer() || !cols_j.is_number_integer()) {
    fail("rows and cols must be integers");
  }
  const auto rows = rows_j.get<long long>();
  const auto cols = cols_j.get<long long>();
  if (rows < 1 || cols < 1) fail("rows and cols must be positive");
  const std::vector<Complex> data = complex_list(field(j, "data"), "data");
  if (static_cast<long long>(data.size()) != rows * cols) {
    fail("data has " + std::to_string(data.size()) + " entries, expected " +
         std::to_string(rows * cols));
  }
  ComplexMatrix m(rows, cols);
  for (Index r = 0; r < rows; ++r) {
    for (Index c = 0; c < cols; ++c) m(r, c) = data[static_cast<std::size_t>(r * cols + c)];
  }
  return m;
}

Json to_json(const CirculantSpec& spec) {
  Json coeffs = Json::array();
  for (const Complex& c : spec.coefficients()) coeffs.push_back(complex_to_json(c));
  return {{"n", spec.qubits()}, {"coefficients", std::move(coeffs)}};
}

CirculantSpec circulant_from_json(const Json& j) {
  const Json& n_j = field(j, "n");
  if (!n_j.is_number_integer()) fail("n must be an integer");
  const int n = n_j.get<int>();
  if (n < 0 || n > kMaxQubits) fail("n outside [0, 10]");
  std::vector<Complex> coeffs = complex_list(field(j, "coefficients"), "coefficients");
  if (coeffs.size() != (std::size_t{1} << n)) fail("coefficient count must be 2^n");
  return CirculantSpec(std::move(coeffs));
}

Json to_json(const ProjectionTensorDecomposition& d) {
  Json ps = Json::array();
  for (const auto& p : d.family.projectors()) ps.push_back(to_json(p));
  Json hs = Json::array();
  for (const auto& h : d.hamiltonians) hs.push_back(to_json(h));
  return {{"t", d.t}, {"projectors", std::move(ps)}, {"hamiltonians", std::move(hs)}};
}

ProjectionTensorDecomposition pbtd_from_json(const Json& j) {
  const double t = finite_number(field(j, "t"), "t");
  std::vector<ComplexMatrix> ps = matrix_list(field(j, "projectors"), "projectors");
  std::vector<ComplexMatrix> hs = matrix_list(field(j, "hamiltonians"), "hamiltonians");
  if (ps.empty() || ps.size() != hs.size()) fail("projector and Hamiltonian counts must match");
  try {
    return {ProjectionFamily(std::move(ps)), std::move(hs), t};
  } catch (const Error& e) {
    fail(e.what());
  }
}

Json to_json(const HamiltonianPair& pair) {
  return {{"t", pair.t()},
          {"unitary", to_json(pair.unitary())},
          {"hamiltonian", to_json(pair.hamiltonian())}};
}

HamiltonianPair pair_from_json(const Json& j) {
  const double t = j.contains("t") ? finite_number(j.at("t"), "t") : 1.0;
  ComplexMatrix u = matrix_from_json(field(j, "unitary"));
  if (j.contains("hamiltonian") && !j.at("hamiltonian").is_null()) {
    return HamiltonianPair(std::move(u), matrix_from_json(j.at("hamiltonian")), t);
  }
  return HamiltonianPair::from_unitary(u, t);
}

Json to_json(const StateVector& state) {
  Json layout = Json::array();
  for (const auto& r : state.layout().registers()) {
    layout.push_back({{"name", r.name}, {"qubits", r.qubits}});
  }
  Json amps = Json::array();
  for (Index k = 0; k < state.size(); ++k) amps.push_back(complex_to_json(state.amplitudes()(k)));
  return {{"layout", std::move(layout)}, {"amplitudes", std::move(amps)}};
}

StateVector state_from_json(const Json& j) {
  const Json& layout_j = field(j, "layout");
  if (!layout_j.is_array()) fail("layout must be an array");
  std::vector<Register> regs;
  for (const auto& r : layout_j) {
    const Json& name = field(r, "name");
    const Json& qubits = field(r, "qubits");
    if (!name.is_string() || !qubits.is_number_integer()) fail("malformed register entry");
    regs.push_back({name.get<std::string>(), qubits.get<int>()});
  }
  const std::vector<Complex> amps = complex_list(field(j, "amplitudes"), "amplitudes");
  ComplexVector v(static_cast<Index>(amps.size()));
  for (std::size_t k = 0; k < amps.size(); ++k) v(static_cast<Index>(k)) = amps[k];
  try {
    return StateVector(std::move(v), RegisterLayout(std::move(regs)));
  } catch (const Error& e) {
    fail(e.what());
  }
}

Json read_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) fail("cannot open " + path.string());
  try {
    return Json::parse(in);
  } catch (const Json::exception& e) {
    fail(path.string() + ": " + e.what());
  }
}

}  // namespace altqpe::io
