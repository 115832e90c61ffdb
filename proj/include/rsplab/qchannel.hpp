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
#include <cstdint>
#include <random>
#include <string_view>
#include <utility>
#include <vector>

#include "rsplab/linalg.hpp"
#include "rsplab/qstate.hpp"

namespace rsplab {

/// Bloch-ball action r -> t + T r of a qubit channel.
struct AffineRep {
  Vec3 t;
  Mat3 T;

  Vec3 apply(const Vec3& r) const { return t + T * r; }
};

/// Immutable CPTP qubit map. The affine form is always present; the Kraus set
/// may be empty for channels defined by their affine action.
class QubitChannel {
 public:
  static constexpr double kTpTol = 1e-10;
  static constexpr double kChoiTol = 1e-9;

  /// Throws std::invalid_argument if Σ E†E != I or the Choi matrix is not PSD.
  static QubitChannel from_kraus(std::vector<Matrix2c> kraus);
  /// Throws std::invalid_argument if the map is not completely positive.
  static QubitChannel from_affine(const AffineRep& affine);

  const std::vector<Matrix2c>& kraus() const { return kraus_; }
  const AffineRep& affine() const { return affine_; }
  bool has_kraus() const { return !kraus_.empty(); }

 private:
  QubitChannel(std::vector<Matrix2c> kraus, const AffineRep& affine)
      : kraus_(std::move(kraus)), affine_(affine) {}

  std::vector<Matrix2c> kraus_;
  AffineRep affine_;
};

/// t_i = tr(σ_i Φ(I))/2, T_ij = tr(σ_i Φ(σ_j))/2. Throws if the set is not
/// trace preserving.
AffineRep kraus_to_affine(const std::vector<Matrix2c>& kraus);

/// Choi matrix Σ_ij |i⟩⟨j| ⊗ Φ(|i⟩⟨j|) of the affine map (its linear
/// extension to all 2x2 matrices).
Matrix4c choi(const AffineRep& affine);
inline Matrix4c choi(const QubitChannel& ch) { return choi(ch.affine()); }

/// Kraus operators from the Choi eigendecomposition. Throws if not CP.
std::vector<Matrix2c> affine_to_kraus(const AffineRep& affine);

QubitChannel identity_channel();
QubitChannel unitary_channel(const Matrix2c& u);

/// Kraus {[[1,0],[0,√(1-p)]], [[0,√p],[0,0]]}.
QubitChannel amplitude_damping(double p);

/// {√(1-3p/4) I, √(p/4) σ1, √(p/4) σ2, √(p/4) σ3}, so T = (1-p) I.
QubitChannel depolarizing(double p);
QubitChannel bit_flip(double p);
QubitChannel phase_flip(double p);
QubitChannel bit_phase_flip(double p);

/// One of "depolarizing", "bit_flip", "phase_flip", "bit_phase_flip".
QubitChannel unital_builtin(std::string_view name, double p);

/// Kraus {|0⟩⟨0|, |+⟩⟨1|}: |0⟩⟨0| -> |0⟩⟨0|, |1⟩⟨1| -> |+⟩⟨+|.
QubitChannel discord_raising();

/// Pauli channel with T = diag(lambda), conjugated by unitaries:
/// Φ(ρ) = U_out Φ_λ(U_in ρ U_in†) U_out†. Throws if lambda is outside the
/// tetrahedron 1 ± λ1 ± λ2 ± λ3 >= 0 (even number of minus signs).
QubitChannel unital_channel(const Vec3& lambda, const Matrix2c& u_out, const Matrix2c& u_in);

bool is_unital(const QubitChannel& ch, double tol = kDefaultTol);

/// T = R1 (sign · diag(D)) R2^T with proper rotations, D descending and
/// nonnegative; d is the translation of the normal form Φ_D, so that
/// Φ(ρ) = U Φ_D(V ρ V†) U† with U ~ R1 and V ~ R2^T.
struct ChannelFactorization {
  Mat3 R1;
  Mat3 R2;
  std::array<double, 3> D{};
  int sign = 1;
  Vec3 d;

  /// Affine form of Φ_D.
  AffineRep normal_form() const;
  /// Affine form of U Φ_D(V · V†) U†.
  AffineRep reconstruct() const;
  Matrix2c u() const;
  Matrix2c v() const;
};

ChannelFactorization factorize(const QubitChannel& ch);

/// Φ(ρ) for a single-qubit density matrix; Kraus form if available, else
/// the affine map. Throws on an invalid input density.
Matrix2c apply_single(const QubitChannel& ch, const Matrix2c& rho);

/// (Φ_A ⊗ Φ_B)(ρ) = Σ (E_i⊗F_j) ρ (E_i⊗F_j)†. Both channels need Kraus sets.
TwoQubitState apply_local(const QubitChannel& ch_a, const QubitChannel& ch_b,
                          const TwoQubitState& s);

/// Random unital channel: rotation ∘ diag(λ) ∘ rotation with λ rejection
/// sampled from [-1,1]³ inside the CP tetrahedron.
QubitChannel sample_unital(std::mt19937_64& rng);
std::pair<QubitChannel, QubitChannel> sample_unital_local(std::mt19937_64& rng);
std::pair<QubitChannel, QubitChannel> sample_unital_local(std::uint64_t seed);

/// Bloch vector of a single-qubit density matrix and back.
Vec3 bloch_vector(const Matrix2c& rho);
Matrix2c density_from_bloch(const Vec3& r);

/// The 26 directions of a 3x3x3 cube around the origin, normalized.
std::vector<Vec3> bloch_probe_directions();

}  // namespace rsplab
