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

#include "altqpe/exp_calculus.hpp"
#include "altqpe/random.hpp"
#include "gates.hpp"
#include "oracles.hpp"

namespace altqpe {
namespace {

ProjectionTensorDecomposition cnot_decomposition() {
  return {ProjectionFamily::computational(2),
          {ComplexMatrix::Zero(2, 2), outer(gates::ket_minus())}, kPi};
}

ProjectionTensorDecomposition random_decomposition(Index dp, Index dh, std::size_t count,
                                                   double t, Rng& rng) {
  ProjectionTensorDecomposition d{random_projection_family(dp, count, rng), {}, t};
  for (std::size_t j = 0; j < d.family.size(); ++j) {
    d.hamiltonians.push_back(random_hermitian(dh, rng, 1.5));
  }
  return d;
}

TEST(ValidateFamily, ComputationalBasisPasses) {
  EXPECT_TRUE(validate_family(ProjectionFamily::computational(2)).passed());
}

TEST(ValidateFamily, NotEigenprojectorsPass) {
  const ProjectionFamily f({outer(gates::ket_plus()), outer(gates::ket_minus())});
  EXPECT_TRUE(validate_family(f).passed());
}

TEST(ValidateFamily, DuplicatedProjectorFails) {
  const ProjectionFamily f({outer(gates::ket0()), outer(gates::ket0())});
  const FamilyValidation v = validate_family(f);
  EXPECT_FALSE(v.passed());
  EXPECT_TRUE(v.hermitian_ok());
  EXPECT_FALSE(v.orthogonal_ok());
  EXPECT_FALSE(v.complete_ok());
}

TEST(ValidateFamily, NonHermitianFails) {
  ComplexMatrix p(2, 2);
  p << 1, 1, 0, 0;  // idempotent but not Hermitian
  const FamilyValidation v = validate_family(ProjectionFamily({p, identity(2) - p}));
  EXPECT_FALSE(v.hermitian_ok());
  EXPECT_FALSE(v.passed());
}

TEST(ProjectionFamily, RejectsMismatchedShapes) {
  EXPECT_THROW(ProjectionFamily({identity(2), identity(3)}), Error);
  EXPECT_THROW(ProjectionFamily(std::vector<ComplexMatrix>{}), Error);
}

TEST(PbtdExponential, ZeroHamiltoniansGiveIdentity) {
  Rng rng(1);
  ProjectionTensorDecomposition d{random_projection_family(3, 2, rng),
                                  {ComplexMatrix::Zero(2, 2), ComplexMatrix::Zero(2, 2)}, 0.9};
  EXPECT_LT(frobenius_distance(pbtd_exponential(d), identity(6)), 1e-13);
}

TEST(PbtdExponential, Cnot) {
  EXPECT_LT(frobenius_distance(pbtd_exponential(cnot_decomposition()), gates::cnot()), 1e-14);
}

TEST(PbtdExponential, MatchesTaylorOfGenerator) {
  Rng rng(71);
  for (int trial = 0; trial < 5; ++trial) {
    const auto d = random_decomposition(4, 4, 2, 0.7, rng);
    const ComplexMatrix expected = oracle::taylor_expm_hermitian(d.generator(), d.t);
    EXPECT_LT(frobenius_distance(pbtd_exponential(d), expected), 1e-9);
  }
}

TEST(PbtdExponential, RejectsInvalidFamily) {
  ProjectionTensorDecomposition d{ProjectionFamily({outer(gates::ket0()), outer(gates::ket0())}),
                                  {identity(2), identity(2)}, 1.0};
  try {
    pbtd_exponential(d);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kInvalidFamily);
  }
  ComplexMatrix not_hermitian(2, 2);
  not_hermitian << 0, 1, 0, 0;
  ProjectionTensorDecomposition d2{ProjectionFamily::computational(2),
                                   {identity(2), not_hermitian}, 1.0};
  EXPECT_THROW(pbtd_exponential(d2), Error);
  ProjectionTensorDecomposition d3{ProjectionFamily::computational(2), {identity(2)}, 1.0};
  EXPECT_THROW(pbtd_exponential(d3), Error);
}

TEST(ProjectorExponential, ZeroProjector) {
  Rng rng(2);
  const ComplexMatrix h = random_hermitian(3, rng);
  EXPECT_LT(frobenius_distance(projector_exponential(ComplexMatrix::Zero(2, 2), h, 1.3),
                               identity(6)),
            1e-14);
}

TEST(ProjectorExponential, ControlledZ) {
  const ComplexMatrix p = outer(gates::ket1());
  EXPECT_LT(frobenius_distance(projector_exponential(p, p, kPi), gates::cz()), 1e-14);
}

TEST(ProjectorExponential, CnotAgreesWithCompletedFamily) {
  const ComplexMatrix p = outer(gates::ket1());
  const ComplexMatrix h = outer(gates::ket_minus());
  const ComplexMatrix direct = projector_exponential(p, h, kPi);
  EXPECT_LT(frobenius_distance(direct, gates::cnot()), 1e-14);
  ProjectionTensorDecomposition d{ProjectionFamily::completed(p),
                                  {ComplexMatrix::Zero(2, 2), h}, kPi};
  EXPECT_LT(frobenius_distance(direct, pbtd_exponential(d)), 1e-14);
}

TEST(ProjectorExponential, Errors) {
  ComplexMatrix not_projector = 0.5 * identity(2);
  try {
    projector_exponential(not_projector, identity(2), 1.0);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kNotProjector);
  }
  ComplexMatrix not_hermitian(2, 2);
  not_hermitian << 0, 1, 0, 0;
  try {
    projector_exponential(outer(gates::ket1()), not_hermitian, 1.0);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kNotHermitian);
  }
}

TEST(TransformedPbtd, IdentityTransformsReduce) {
  Rng rng(9);
  const auto d = random_decomposition(2, 3, 2, 1.1, rng);
  const auto out = transformed_pbtd_exponential(identity(2), {identity(3), identity(3)}, d);
  EXPECT_LT(frobenius_distance(out.result, pbtd_exponential(d)), 1e-12);
}

TEST(TransformedPbtd, CnotViaControlledZ) {
  const ProjectionTensorDecomposition d{ProjectionFamily::computational(2),
                                        {ComplexMatrix::Zero(2, 2), outer(gates::ket1())}, kPi};
  const auto out =
      transformed_pbtd_exponential(identity(2), {gates::hadamard(), gates::hadamard()}, d);
  EXPECT_LT(frobenius_distance(out.result, gates::cnot()), 1e-12);
  EXPECT_LT(frobenius_distance(out.core, gates::cz()), 1e-12);
  const ComplexMatrix ih = kron(identity(2), gates::hadamard());
  EXPECT_LT(frobenius_distance(ih * gates::cz() * ih, gates::cnot()), 1e-12);
}

TEST(TransformedPbtd, CnotViaReversedCnot) {
  const ProjectionTensorDecomposition d{
      ProjectionFamily({outer(gates::ket_plus()), outer(gates::ket_minus())}),
      {ComplexMatrix::Zero(2, 2), outer(gates::ket1())}, kPi};
  const auto out =
      transformed_pbtd_exponential(gates::hadamard(), {gates::hadamard(), gates::hadamard()}, d);
  EXPECT_LT(frobenius_distance(out.result, gates::cnot()), 1e-12);
  // The middle factor is a CNOT controlled by the second qubit.
  EXPECT_LT(frobenius_distance(out.core, gates::reversed_cnot()), 1e-12);
  const ComplexMatrix hh = kron(gates::hadamard(), gates::hadamard());
  EXPECT_LT(frobenius_distance(hh * gates::reversed_cnot() * hh, gates::cnot()), 1e-12);
}

TEST(TransformedPbtdProperty, FactorizationMatchesDirectRoute) {
  Rng rng(404);
  for (int trial = 0; trial < 10; ++trial) {
    const auto d = random_decomposition(3, 2, 2, 0.8, rng);
    const ComplexMatrix s = random_unitary(3, rng);
    const std::vector<ComplexMatrix> ts{random_unitary(2, rng), random_unitary(2, rng)};
    const auto out = transformed_pbtd_exponential(s, ts, d);
    const auto direct = pbtd_exponential(transformed_decomposition(s, ts, d));
    EXPECT_LT(frobenius_distance(out.result, direct), 1e-9);
    EXPECT_LT(frobenius_distance(out.result,
                                 oracle::taylor_expm_hermitian(
                                     transformed_decomposition(s, ts, d).generator(), d.t)),
              1e-9);
  }
}

TEST(TransformedPbtd, RejectsNonUnitaryTransform) {
  const auto d = cnot_decomposition();
  try {
    transformed_pbtd_exponential(identity(2), {identity(2), 2.0 * identity(2)}, d);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kNotUnitary);
  }
  EXPECT_THROW(transformed_pbtd_exponential(identity(2), {identity(2)}, d), Error);
}

TEST(PbtdProperty, TermsCommuteAndMultiplyToExponential) {
  Rng rng(123);
  for (int trial = 0; trial < 10; ++trial) {
    const auto d = random_decomposition(4, 4, 3, 0.6, rng);
    std::vector<ComplexMatrix> terms;
    for (std::size_t j = 0; j < d.family.size(); ++j) terms.push_back(pbtd_term_exponential(d, j));
    ComplexMatrix product = identity(16);
    for (std::size_t j = 0; j < terms.size(); ++j) {
      product = product * terms[j];
      for (std::size_t k = j + 1; k < terms.size(); ++k) {
        EXPECT_LT(commutator_norm(terms[j], terms[k]), 1e-10);
      }
    }
    EXPECT_LT(frobenius_distance(product, pbtd_exponential(d)), 1e-9);
  }
}

TEST(PbtdProperty, InterleavingIdentity) {
  Rng rng(55);
  for (int trial = 0; trial < 10; ++trial) {
    const ProjectionFamily f = random_projection_family(3, 3, rng);
    ComplexMatrix lhs = ComplexMatrix::Zero(6, 6), vs = lhs, us = lhs;
    for (std::size_t j = 0; j < f.size(); ++j) {
      const ComplexMatrix v = random_gaussian_matrix(2, 2, rng);
      const ComplexMatrix u = random_gaussian_matrix(2, 2, rng);
      lhs += kron(f[j], v * u);
      vs += kron(f[j], v);
      us += kron(f[j], u);
    }
    EXPECT_LT(frobenius_distance(lhs, vs * us), 1e-11);
  }
}

}  // namespace
}  // namespace altqpe
