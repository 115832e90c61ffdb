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

#include "rsplab/qstate.hpp"

#include <cstdio>
#include <stdexcept>
#include <string>

namespace rsplab {

namespace {

std::string fmt(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3g", x);
  return buf;
}

const std::array<Matrix4c, 16>& pauli_products() {
  static const std::array<Matrix4c, 16> kProducts = [] {
    std::array<Matrix4c, 16> p;
    for (std::size_t mu = 0; mu < 4; ++mu)
      for (std::size_t nu = 0; nu < 4; ++nu) p[mu * 4 + nu] = kron(pauli(mu), pauli(nu));
    return p;
  }();
  return kProducts;
}

void validate_density(const Matrix4c& rho, const char* where) {
  const double herr = hermiticity_error(rho);
  if (herr > TwoQubitState::kTol)
    throw std::invalid_argument(std::string(where) + ": not Hermitian (max |rho - rho^dagger| = " +
                                fmt(herr) + ")");
  const Complex tr = rho.trace();
  if (std::abs(tr - 1.0) > TwoQubitState::kTol)
    throw std::invalid_argument(std::string(where) + ": trace != 1 (trace = " + fmt(tr.real()) +
                                ")");
  const double min_eig = hermitian_eigs(rho, TwoQubitState::kTol).values[3];
  if (min_eig < -TwoQubitState::kTol)
    throw std::invalid_argument(std::string(where) +
                                ": not positive semidefinite (min eigenvalue = " + fmt(min_eig) +
                                ")");
}

PauliDecomposition pauli_coefficients(const Matrix4c& rho, const char* where) {
  const auto& products = pauli_products();
  auto coefficient = [&](std::size_t mu, std::size_t nu) {
    const Complex x = trace_of_product(rho, products[mu * 4 + nu]);
    if (std::abs(x.imag()) > TwoQubitState::kTol)
      throw std::invalid_argument(std::string(where) + ": Pauli coefficient has imaginary part " +
                                  fmt(x.imag()));
    return x.real();
  };
  PauliDecomposition d;
  for (std::size_t k = 0; k < 3; ++k) {
    d.a[k] = coefficient(k + 1, 0);
    d.b[k] = coefficient(0, k + 1);
    for (std::size_t l = 0; l < 3; ++l) d.E(k, l) = coefficient(k + 1, l + 1);
  }
  return d;
}

Matrix4c assemble(const PauliDecomposition& d) {
  const auto& products = pauli_products();
  Matrix4c rho = products[0];
  for (std::size_t k = 0; k < 3; ++k) {
    rho += Complex(d.a[k]) * products[(k + 1) * 4];
    rho += Complex(d.b[k]) * products[k + 1];
    for (std::size_t l = 0; l < 3; ++l) rho += Complex(d.E(k, l)) * products[(k + 1) * 4 + l + 1];
  }
  return 0.25 * rho;
}

}  // namespace

std::array<double, 4> BellDiagonalParams::bell_eigenvalues() const {
  return {(1.0 - c1 - c2 - c3) / 4.0, (1.0 - c1 + c2 + c3) / 4.0, (1.0 + c1 - c2 + c3) / 4.0,
          (1.0 + c1 + c2 - c3) / 4.0};
}

bool BellDiagonalParams::in_tetrahedron(double tol) const {
  for (double e : bell_eigenvalues())
    if (e < -tol) return false;
  return true;
}

TwoQubitState TwoQubitState::from_density(const Matrix4c& rho) {
  validate_density(rho, "density matrix");
  return TwoQubitState(rho, pauli_coefficients(rho, "density matrix"));
}

double TwoQubitState::purity() const { return trace_of_product(rho_, rho_).real(); }

PauliDecomposition decompose(const Matrix4c& rho) {
  validate_density(rho, "decompose");
  return pauli_coefficients(rho, "decompose");
}

TwoQubitState compose(const PauliDecomposition& d) {
  const Matrix4c rho = assemble(d);
  try {
    return TwoQubitState::from_density(rho);
  } catch (const std::invalid_argument& e) {
    throw std::invalid_argument(std::string("compose: decomposition is not a valid state: ") +
                                e.what());
  }
}

TwoQubitState bell_diagonal(const BellDiagonalParams& c) {
  static constexpr const char* kNames[4] = {"(1-c1-c2-c3)/4", "(1-c1+c2+c3)/4", "(1+c1-c2+c3)/4",
                                            "(1+c1+c2-c3)/4"};
  const auto eig = c.bell_eigenvalues();
  for (std::size_t i = 0; i < 4; ++i)
    if (!(eig[i] >= -1e-12))
      throw std::invalid_argument("bell_diagonal: (" + fmt(c.c1) + ", " + fmt(c.c2) + ", " +
                                  fmt(c.c3) + ") outside the Bell tetrahedron: eigenvalue " +
                                  kNames[i] + " = " + fmt(eig[i]));
  PauliDecomposition d;
  d.E = Mat3::diag(c.c1, c.c2, c.c3);
  return compose(d);
}

TwoQubitState local_unitary(const TwoQubitState& s, const Matrix2c& u1, const Matrix2c& u2) {
  if (!is_unitary(u1) || !is_unitary(u2))
    throw std::invalid_argument("local_unitary: operator is not unitary");
  const Matrix4c u = kron(u1, u2);
  return TwoQubitState::from_density(u * s.rho() * u.adjoint());
}

TwoQubitState singlet() { return bell_diagonal({-1.0, -1.0, -1.0}); }

TwoQubitState maximally_mixed() { return bell_diagonal({0.0, 0.0, 0.0}); }

TwoQubitState random_density(std::mt19937_64& rng) {
  std::normal_distribution<double> normal(0.0, 1.0);
  Matrix4c g;
  for (std::size_t r = 0; r < 4; ++r)
    for (std::size_t c = 0; c < 4; ++c) {
      const double re = normal(rng);
      const double im = normal(rng);
      g(r, c) = Complex(re, im);
    }
  Matrix4c rho = g * g.adjoint();
  rho *= 1.0 / rho.trace().real();
  // Exact Hermitian symmetrization against roundoff in the product.
  rho = 0.5 * (rho + rho.adjoint());
  return TwoQubitState::from_density(rho);
}

Vec3 random_unit_vector(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> uniform(-1.0, 1.0);
  const double z = uniform(rng);
  const double phi = M_PI * uniform(rng);
  const double rho = std::sqrt(std::max(0.0, 1.0 - z * z));
  return {rho * std::cos(phi), rho * std::sin(phi), z};
}

Matrix2c axis_angle_unitary(const Vec3& axis, double angle) {
  const double c = std::cos(0.5 * angle), s = std::sin(0.5 * angle);
  Matrix2c u = Complex(c) * Matrix2c::identity();
  for (std::size_t k = 0; k < 3; ++k) u -= Complex(0.0, s * axis[k]) * pauli(k + 1);
  return u;
}

Matrix2c random_unitary(std::mt19937_64& rng) {
  const Vec3 axis = random_unit_vector(rng);
  std::uniform_real_distribution<double> angle(0.0, 2.0 * M_PI);
  return axis_angle_unitary(axis, angle(rng));
}

}  // namespace rsplab
