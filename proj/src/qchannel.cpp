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

#include "rsplab/qchannel.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace rsplab {

namespace {

void check_probability(double p, const char* where) {
  if (!(p >= 0.0 && p <= 1.0))
    throw std::invalid_argument(std::string(where) + ": p must lie in [0, 1], got " +
                                std::to_string(p));
}

Matrix2c apply_kraus(const std::vector<Matrix2c>& kraus, const Matrix2c& x) {
  Matrix2c out;
  for (const Matrix2c& e : kraus) out += e * x * e.adjoint();
  return out;
}

/// Linear extension of the affine map to an arbitrary 2x2 matrix.
Matrix2c apply_affine(const AffineRep& aff, const Matrix2c& x) {
  std::array<Complex, 4> coeff;
  for (std::size_t mu = 0; mu < 4; ++mu) coeff[mu] = trace_of_product(pauli(mu), x);
  Matrix2c out = coeff[0] * pauli(0);
  for (std::size_t k = 0; k < 3; ++k) {
    Complex ck = coeff[0] * aff.t[k];
    for (std::size_t j = 0; j < 3; ++j) ck += aff.T(k, j) * coeff[j + 1];
    out += ck * pauli(k + 1);
  }
  return 0.5 * out;
}

void require_choi_psd(const AffineRep& aff, const char* where) {
  const double min_eig = hermitian_eigs(choi(aff), QubitChannel::kChoiTol).values[3];
  if (min_eig < -QubitChannel::kChoiTol)
    throw std::invalid_argument(std::string(where) +
                                ": map is not completely positive (min Choi eigenvalue = " +
                                std::to_string(min_eig) + ")");
}

void validate_qubit_density(const Matrix2c& rho, const char* where) {
  constexpr double kTol = 1e-10;
  if (hermiticity_error(rho) > kTol)
    throw std::invalid_argument(std::string(where) + ": input is not Hermitian");
  if (std::abs(rho.trace() - 1.0) > kTol)
    throw std::invalid_argument(std::string(where) + ": input trace != 1");
  if (hermitian_eigs(rho, kTol).values[1] < -kTol)
    throw std::invalid_argument(std::string(where) + ": input is not positive semidefinite");
}

QubitChannel two_kraus(const Matrix2c& sigma, double p) {
  return QubitChannel::from_kraus(
      {Complex(std::sqrt(1.0 - p)) * Matrix2c::identity(), Complex(std::sqrt(p)) * sigma});
}

}  // namespace

QubitChannel QubitChannel::from_kraus(std::vector<Matrix2c> kraus) {
  if (kraus.empty()) throw std::invalid_argument("from_kraus: empty Kraus set");
  AffineRep aff = kraus_to_affine(kraus);
  require_choi_psd(aff, "from_kraus");
  return QubitChannel(std::move(kraus), aff);
}

QubitChannel QubitChannel::from_affine(const AffineRep& affine) {
  require_choi_psd(affine, "from_affine");
  return QubitChannel({}, affine);
}

AffineRep kraus_to_affine(const std::vector<Matrix2c>& kraus) {
  Matrix2c completeness;
  for (const Matrix2c& e : kraus) completeness += e.adjoint() * e;
  const double err = max_abs_diff(completeness, Matrix2c::identity());
  if (err > QubitChannel::kTpTol)
    throw std::invalid_argument("kraus_to_affine: Kraus set is not trace preserving (max |ΣE†E - I| = " +
                                std::to_string(err) + ")");
  AffineRep aff;
  const Matrix2c image_of_identity = apply_kraus(kraus, pauli(0));
  for (std::size_t i = 0; i < 3; ++i)
    aff.t[i] = 0.5 * trace_of_product(pauli(i + 1), image_of_identity).real();
  for (std::size_t j = 0; j < 3; ++j) {
    const Matrix2c image = apply_kraus(kraus, pauli(j + 1));
    for (std::size_t i = 0; i < 3; ++i)
      aff.T(i, j) = 0.5 * trace_of_product(pauli(i + 1), image).real();
  }
  return aff;
}

Matrix4c choi(const AffineRep& affine) {
  Matrix4c c;
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j) {
      Matrix2c unit;
      unit(i, j) = 1.0;
      const Matrix2c block = apply_affine(affine, unit);
      for (std::size_t m = 0; m < 2; ++m)
        for (std::size_t n = 0; n < 2; ++n) c(2 * i + m, 2 * j + n) = block(m, n);
    }
  return c;
}

std::vector<Matrix2c> affine_to_kraus(const AffineRep& affine) {
  const auto eig = hermitian_eigs(choi(affine), QubitChannel::kChoiTol);
  if (eig.values[3] < -QubitChannel::kChoiTol)
    throw std::invalid_argument("affine_to_kraus: map is not completely positive");
  std::vector<Matrix2c> kraus;
  for (std::size_t k = 0; k < 4; ++k) {
    if (eig.values[k] <= 1e-14) continue;
    const double w = std::sqrt(eig.values[k]);
    Matrix2c e;
    for (std::size_t i = 0; i < 2; ++i)
      for (std::size_t m = 0; m < 2; ++m) e(m, i) = w * eig.vectors(2 * i + m, k);
    kraus.push_back(e);
  }
  return kraus;
}

QubitChannel identity_channel() { return QubitChannel::from_kraus({Matrix2c::identity()}); }

QubitChannel unitary_channel(const Matrix2c& u) {
  if (!is_unitary(u)) throw std::invalid_argument("unitary_channel: operator is not unitary");
  return QubitChannel::from_kraus({u});
}

QubitChannel amplitude_damping(double p) {
  check_probability(p, "amplitude_damping");
  Matrix2c e0, e1;
  e0(0, 0) = 1.0;
  e0(1, 1) = std::sqrt(1.0 - p);
  e1(0, 1) = std::sqrt(p);
  return QubitChannel::from_kraus({e0, e1});
}

QubitChannel depolarizing(double p) {
  check_probability(p, "depolarizing");
  const Complex w = std::sqrt(p / 4.0);
  return QubitChannel::from_kraus({Complex(std::sqrt(1.0 - 0.75 * p)) * pauli(0), w * pauli(1),
                                   w * pauli(2), w * pauli(3)});
}

QubitChannel bit_flip(double p) {
  check_probability(p, "bit_flip");
  return two_kraus(pauli(1), p);
}

QubitChannel phase_flip(double p) {
  check_probability(p, "phase_flip");
  return two_kraus(pauli(3), p);
}

QubitChannel bit_phase_flip(double p) {
  check_probability(p, "bit_phase_flip");
  return two_kraus(pauli(2), p);
}

QubitChannel unital_builtin(std::string_view name, double p) {
  if (name == "depolarizing") return depolarizing(p);
  if (name == "bit_flip") return bit_flip(p);
  if (name == "phase_flip") return phase_flip(p);
  if (name == "bit_phase_flip") return bit_phase_flip(p);
  throw std::invalid_argument("unital_builtin: unknown channel '" + std::string(name) + "'");
}

QubitChannel discord_raising() {
  Matrix2c k0, k1;
  k0(0, 0) = 1.0;
  k1(0, 1) = M_SQRT1_2;
  k1(1, 1) = M_SQRT1_2;
  return QubitChannel::from_kraus({k0, k1});
}

QubitChannel unital_channel(const Vec3& lambda, const Matrix2c& u_out, const Matrix2c& u_in) {
  const double l1 = lambda[0], l2 = lambda[1], l3 = lambda[2];
  const std::array<double, 4> probs = {(1.0 + l1 + l2 + l3) / 4.0, (1.0 + l1 - l2 - l3) / 4.0,
                                       (1.0 - l1 + l2 - l3) / 4.0, (1.0 - l1 - l2 + l3) / 4.0};
  std::vector<Matrix2c> kraus;
  for (std::size_t k = 0; k < 4; ++k) {
    if (probs[k] < -1e-12)
      throw std::invalid_argument("unital_channel: lambda outside the CP tetrahedron");
    if (probs[k] <= 0.0) continue;
    kraus.push_back(Complex(std::sqrt(probs[k])) * (u_out * pauli(k) * u_in));
  }
  return QubitChannel::from_kraus(std::move(kraus));
}

bool is_unital(const QubitChannel& ch, double tol) { return norm(ch.affine().t) <= tol; }

AffineRep ChannelFactorization::normal_form() const {
  return {d, static_cast<double>(sign) * Mat3::diag(D[0], D[1], D[2])};
}

AffineRep ChannelFactorization::reconstruct() const {
  const AffineRep nf = normal_form();
  return {R1 * d, R1 * nf.T * R2.transpose()};
}

Matrix2c ChannelFactorization::u() const { return rotation_to_unitary(R1); }
Matrix2c ChannelFactorization::v() const { return rotation_to_unitary(R2.transpose()); }

ChannelFactorization factorize(const QubitChannel& ch) {
  const AffineRep& aff = ch.affine();
  Svd3 svd = svd3(aff.T);
  Mat3 u = svd.u, v = svd.v;
  const bool full_rank = svd.s[2] > 0.0;
  if (v.det() < 0.0) {
    v.set_column(2, -v.column(2));
    if (full_rank) u.set_column(2, -u.column(2));
  }
  if (!full_rank && u.det() < 0.0) u.set_column(2, -u.column(2));

  ChannelFactorization f;
  f.D = svd.s;
  if (u.det() < 0.0) {
    f.sign = -1;
    f.R1 = -1.0 * u;
  } else {
    f.R1 = u;
  }
  f.R2 = v;
  f.d = f.R1.transpose() * aff.t;
  return f;
}

Vec3 bloch_vector(const Matrix2c& rho) {
  return {trace_of_product(pauli(1), rho).real(), trace_of_product(pauli(2), rho).real(),
          trace_of_product(pauli(3), rho).real()};
}

Matrix2c density_from_bloch(const Vec3& r) {
  Matrix2c rho = pauli(0);
  for (std::size_t k = 0; k < 3; ++k) rho += Complex(r[k]) * pauli(k + 1);
  return 0.5 * rho;
}

Matrix2c apply_single(const QubitChannel& ch, const Matrix2c& rho) {
  validate_qubit_density(rho, "apply_single");
  if (ch.has_kraus()) return apply_kraus(ch.kraus(), rho);
  return density_from_bloch(ch.affine().apply(bloch_vector(rho)));
}

TwoQubitState apply_local(const QubitChannel& ch_a, const QubitChannel& ch_b,
                          const TwoQubitState& s) {
  if (!ch_a.has_kraus() || !ch_b.has_kraus())
    throw std::invalid_argument("apply_local: both channels need a Kraus representation");
  Matrix4c out;
  for (const Matrix2c& ea : ch_a.kraus())
    for (const Matrix2c& eb : ch_b.kraus()) {
      const Matrix4c k = kron(ea, eb);
      out += k * s.rho() * k.adjoint();
    }
  return TwoQubitState::from_density(out);
}

QubitChannel sample_unital(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> uniform(-1.0, 1.0);
  Vec3 lambda;
  while (true) {
    for (std::size_t k = 0; k < 3; ++k) lambda[k] = uniform(rng);
    const double l1 = lambda[0], l2 = lambda[1], l3 = lambda[2];
    if (1.0 + l1 + l2 + l3 >= 0.0 && 1.0 + l1 - l2 - l3 >= 0.0 && 1.0 - l1 + l2 - l3 >= 0.0 &&
        1.0 - l1 - l2 + l3 >= 0.0)
      break;
  }
  const Matrix2c u_out = random_unitary(rng);
  const Matrix2c u_in = random_unitary(rng);
  return unital_channel(lambda, u_out, u_in);
}

std::pair<QubitChannel, QubitChannel> sample_unital_local(std::mt19937_64& rng) {
  QubitChannel a = sample_unital(rng);
  QubitChannel b = sample_unital(rng);
  return {std::move(a), std::move(b)};
}

std::pair<QubitChannel, QubitChannel> sample_unital_local(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  return sample_unital_local(rng);
}

std::vector<Vec3> bloch_probe_directions() {
  std::vector<Vec3> dirs;
  for (int x = -1; x <= 1; ++x)
    for (int y = -1; y <= 1; ++y)
      for (int z = -1; z <= 1; ++z) {
        if (x == 0 && y == 0 && z == 0) continue;
        const Vec3 v(x, y, z);
        dirs.push_back((1.0 / norm(v)) * v);
      }
  return dirs;
}

}  // namespace rsplab
