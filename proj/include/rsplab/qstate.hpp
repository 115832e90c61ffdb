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

#pragma once

#include <array>
#include <random>

#include "rsplab/linalg.hpp"

namespace rsplab {

/// Pauli (Bloch) coordinates of a two-qubit operator:
///   rho = [I⊗I + a·σ⊗I + I⊗b·σ + Σ E_kl σ_k⊗σ_l] / 4
struct PauliDecomposition {
  Vec3 a;  ///< Alice's local Bloch vector
  Vec3 b;  ///< Bob's local Bloch vector
  Mat3 E;  ///< correlation matrix, E_kl = tr(rho σ_k⊗σ_l)
};

/// Correlation coefficients of a Bell-diagonal state, E = diag(c1, c2, c3).
struct BellDiagonalParams {
  double c1 = 0.0;
  double c2 = 0.0;
  double c3 = 0.0;

  /// Eigenvalues in the Bell basis; the state is physical iff all are >= 0.
  std::array<double, 4> bell_eigenvalues() const;
  bool in_tetrahedron(double tol = 1e-12) const;
};

/// Immutable two-qubit density matrix with its Pauli decomposition computed
/// at construction. Every instance satisfies: Hermitian, unit trace, PSD
/// (all within 1e-10).
class TwoQubitState {
 public:
  static constexpr double kTol = 1e-10;

  /// Validates rho; throws std::invalid_argument naming the violated property.
  static TwoQubitState from_density(const Matrix4c& rho);

  const Matrix4c& rho() const { return rho_; }
  const PauliDecomposition& decomposition() const { return decomposition_; }
  double purity() const;

 private:
  TwoQubitState(const Matrix4c& rho, const PauliDecomposition& d)
      : rho_(rho), decomposition_(d) {}

  Matrix4c rho_;
  PauliDecomposition decomposition_;
};

/// a_k = tr(rho σ_k⊗I), b_l = tr(rho I⊗σ_l), E_kl = tr(rho σ_k⊗σ_l).
/// Throws if rho is not a density matrix or a coefficient is not real.
PauliDecomposition decompose(const Matrix4c& rho);

/// Inverse of decompose. Throws if the resulting matrix is not PSD.
TwoQubitState compose(const PauliDecomposition& d);

/// Throws std::invalid_argument with the violated Bell-basis eigenvalue when
/// c lies outside the tetrahedron (tolerance -1e-12).
TwoQubitState bell_diagonal(const BellDiagonalParams& c);

/// (U1⊗U2) rho (U1⊗U2)^dagger.
TwoQubitState local_unitary(const TwoQubitState& s, const Matrix2c& u1, const Matrix2c& u2);

/// Singlet |Ψ⁻⟩⟨Ψ⁻|.
TwoQubitState singlet();
/// I/4.
TwoQubitState maximally_mixed();

/// Ginibre-distributed density matrix: rho = G G^dagger / tr(G G^dagger)
/// with standard complex normal G.
TwoQubitState random_density(std::mt19937_64& rng);

/// exp(-i angle n·σ / 2) with n uniform on the sphere and angle uniform on
/// [0, 2π). Not Haar, but covers SU(2).
Matrix2c random_unitary(std::mt19937_64& rng);

Vec3 random_unit_vector(std::mt19937_64& rng);

/// exp(-i angle n·σ / 2); rotates Bloch vectors by `angle` about n.
Matrix2c axis_angle_unitary(const Vec3& axis, double angle);

}  // namespace rsplab
