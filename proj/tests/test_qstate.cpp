// Copyright 2026 The rsplab Authors
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

#include <random>

#include "rsplab/qstate.hpp"
#include "test_support.hpp"

namespace rsplab {
namespace {

TEST(Decompose, RoundTripOnRandomStates) {
  std::mt19937_64 rng(1);
  for (int trial = 0; trial < 300; ++trial) {
    const TwoQubitState s = random_density(rng);
    const PauliDecomposition& d = s.decomposition();
    for (std::size_t k = 0; k < 3; ++k) {
      EXPECT_NEAR(d.a[k], testing::pauli_expectation(s.rho(), k + 1, 0), 1e-12);
      EXPECT_NEAR(d.b[k], testing::pauli_expectation(s.rho(), 0, k + 1), 1e-12);
      for (std::size_t l = 0; l < 3; ++l)
        EXPECT_NEAR(d.E(k, l), testing::pauli_expectation(s.rho(), k + 1, l + 1), 1e-12);
    }
    EXPECT_LT(max_abs_diff(compose(d).rho(), s.rho()), 1e-13);
  }
}

TEST(BellDiagonal, SingletCornerAndEigenvalues) {
  const TwoQubitState s = bell_diagonal({-1.0, -1.0, -1.0});
  EXPECT_LT(max_abs_diff(s.rho(), singlet().rho()), 1e-15);
  EXPECT_NEAR(s.purity(), 1.0, 1e-15);
  const auto ev = BellDiagonalParams{0.5, 0.0, -0.5}.bell_eigenvalues();
  double sum = 0.0;
  for (double v : ev) sum += v;
  EXPECT_NEAR(sum, 1.0, 1e-15);
}

TEST(BellDiagonal, EigenvaluesMatchDenseSpectrum) {
  std::mt19937_64 rng(2);
  for (int trial = 0; trial < 100; ++trial) {
    const BellDiagonalParams c = testing::random_tetrahedron_point(rng);
    auto ev = c.bell_eigenvalues();
    std::sort(ev.begin(), ev.end(), std::greater<>());
    const auto dense = hermitian_eigs(bell_diagonal(c).rho());
    for (std::size_t i = 0; i < 4; ++i) EXPECT_NEAR(ev[i], dense.values[i], 1e-12);
  }
}

TEST(BellDiagonal, RejectsOutsideTetrahedron) {
  EXPECT_FALSE((BellDiagonalParams{1.0, 1.0, 1.0}.in_tetrahedron()));
  try {
    bell_diagonal({1.0, 1.0, 1.0});
    FAIL() << "expected an exception";
  } catch (const std::invalid_argument& e) {
    EXPECT_NE(std::string(e.what()).find("eigenvalue"), std::string::npos);
  }
  // Corners sit exactly on the boundary and must construct.
  EXPECT_NO_THROW(bell_diagonal({1.0, -1.0, 1.0}));
  EXPECT_NO_THROW(bell_diagonal({1.0, 1.0, -1.0}));
}

TEST(FromDensity, NamesViolatedProperty) {
  Matrix4c m = Matrix4c::identity();
  auto message = [](const Matrix4c& rho) {
    try {
      TwoQubitState::from_density(rho);
    } catch (const std::invalid_argument& e) {
      return std::string(e.what());
    }
    return std::string();
  };
  EXPECT_NE(message(m).find("trace"), std::string::npos);
  Matrix4c h = 0.25 * Matrix4c::identity();
  h(0, 1) = 0.1;
  EXPECT_NE(message(h).find("Hermitian"), std::string::npos);
  Matrix4c neg;
  neg(0, 0) = 1.5;
  neg(1, 1) = -0.5;
  EXPECT_NE(message(neg).find("semidefinite"), std::string::npos);
}

TEST(LocalUnitary, PreservesSpectrumAndRotatesBlochData) {
  std::mt19937_64 rng(4);
  for (int trial = 0; trial < 100; ++trial) {
    const TwoQubitState s = random_density(rng);
    const Matrix2c u1 = random_unitary(rng), u2 = random_unitary(rng);
    const TwoQubitState t = local_unitary(s, u1, u2);
    const auto e0 = hermitian_eigs(s.rho()), e1 = hermitian_eigs(t.rho());
    for (std::size_t i = 0; i < 4; ++i) EXPECT_NEAR(e0.values[i], e1.values[i], 1e-12);
    const Mat3 r1 = unitary_to_rotation(u1), r2 = unitary_to_rotation(u2);
    const PauliDecomposition& d0 = s.decomposition();
    const PauliDecomposition& d1 = t.decomposition();
    EXPECT_LT(max_abs_diff(d1.a, r1 * d0.a), 1e-12);
    EXPECT_LT(max_abs_diff(d1.b, r2 * d0.b), 1e-12);
    EXPECT_LT(max_abs_diff(d1.E, r1 * d0.E * r2.transpose()), 1e-12);
  }
}

TEST(RandomDensity, DeterministicForSeed) {
  std::mt19937_64 a(99), b(99);
  EXPECT_EQ(random_density(a).rho(), random_density(b).rho());
}

TEST(MaximallyMixed, ZeroPauliData) {
  const PauliDecomposition& d = maximally_mixed().decomposition();
  EXPECT_EQ(norm(d.a), 0.0);
  EXPECT_EQ(norm(d.b), 0.0);
  EXPECT_EQ(d.E.frobenius_sq(), 0.0);
}

}  // namespace
}  // namespace rsplab
