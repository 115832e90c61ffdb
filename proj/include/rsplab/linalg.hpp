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

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <cstddef>

namespace rsplab {

using Complex = std::complex<double>;

inline constexpr double kDefaultTol = 1e-10;

/// Real 3-vector. Used for Bloch vectors and rotation axes.
struct Vec3 {
  std::array<double, 3> v{0.0, 0.0, 0.0};

  constexpr Vec3() = default;
  constexpr Vec3(double x, double y, double z) : v{x, y, z} {}

  constexpr double& operator[](std::size_t i) { return v[i]; }
  constexpr double operator[](std::size_t i) const { return v[i]; }

  Vec3& operator+=(const Vec3& o) {
    for (std::size_t i = 0; i < 3; ++i) v[i] += o.v[i];
    return *this;
  }
  Vec3& operator-=(const Vec3& o) {
    for (std::size_t i = 0; i < 3; ++i) v[i] -= o.v[i];
    return *this;
  }
  Vec3& operator*=(double s) {
    for (double& x : v) x *= s;
    return *this;
  }
  bool operator==(const Vec3&) const = default;
};

inline Vec3 operator+(Vec3 a, const Vec3& b) { return a += b; }
inline Vec3 operator-(Vec3 a, const Vec3& b) { return a -= b; }
inline Vec3 operator-(Vec3 a) { return a *= -1.0; }
inline Vec3 operator*(double s, Vec3 a) { return a *= s; }
inline Vec3 operator*(Vec3 a, double s) { return a *= s; }

inline double dot(const Vec3& a, const Vec3& b) {
  return a[0] * b[0] + a[1] * b[1] + a[2] * b[2];
}
inline Vec3 cross(const Vec3& a, const Vec3& b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2],
          a[0] * b[1] - a[1] * b[0]};
}
inline double norm(const Vec3& a) { return std::sqrt(dot(a, a)); }
double max_abs_diff(const Vec3& a, const Vec3& b);

/// Real 3x3 matrix, row-major.
class Mat3 {
 public:
  constexpr Mat3() = default;
  static Mat3 identity();
  static Mat3 diag(double d0, double d1, double d2);
  static Mat3 diag(const Vec3& d) { return diag(d[0], d[1], d[2]); }
  static Mat3 from_columns(const Vec3& c0, const Vec3& c1, const Vec3& c2);
  static Mat3 outer(const Vec3& a, const Vec3& b);

  double& operator()(std::size_t r, std::size_t c) { return m_[r * 3 + c]; }
  double operator()(std::size_t r, std::size_t c) const { return m_[r * 3 + c]; }

  Vec3 column(std::size_t c) const { return {m_[c], m_[3 + c], m_[6 + c]}; }
  void set_column(std::size_t c, const Vec3& v);
  Mat3 transpose() const;
  double trace() const { return m_[0] + m_[4] + m_[8]; }
  double det() const;
  double frobenius_sq() const;

  Mat3& operator+=(const Mat3& o);
  Mat3& operator-=(const Mat3& o);
  Mat3& operator*=(double s);
  bool operator==(const Mat3&) const = default;

 private:
  std::array<double, 9> m_{};
};

Mat3 operator+(Mat3 a, const Mat3& b);
Mat3 operator-(Mat3 a, const Mat3& b);
Mat3 operator*(double s, Mat3 a);
Mat3 operator*(const Mat3& a, const Mat3& b);
Vec3 operator*(const Mat3& a, const Vec3& x);
double max_abs_diff(const Mat3& a, const Mat3& b);

/// Dense N x N complex matrix, row-major. Only N = 2 and N = 4 are used.
template <std::size_t N>
class CMatrix {
 public:
  static constexpr std::size_t kDim = N;

  constexpr CMatrix() = default;

  static CMatrix identity() {
    CMatrix m;
    for (std::size_t i = 0; i < N; ++i) m(i, i) = 1.0;
    return m;
  }

  Complex& operator()(std::size_t r, std::size_t c) { return m_[r * N + c]; }
  const Complex& operator()(std::size_t r, std::size_t c) const {
    return m_[r * N + c];
  }

  CMatrix adjoint() const {
    CMatrix out;
    for (std::size_t r = 0; r < N; ++r)
      for (std::size_t c = 0; c < N; ++c) out(c, r) = std::conj((*this)(r, c));
    return out;
  }

  Complex trace() const {
    Complex t = 0.0;
    for (std::size_t i = 0; i < N; ++i) t += (*this)(i, i);
    return t;
  }

  CMatrix& operator+=(const CMatrix& o) {
    for (std::size_t i = 0; i < N * N; ++i) m_[i] += o.m_[i];
    return *this;
  }
  CMatrix& operator-=(const CMatrix& o) {
    for (std::size_t i = 0; i < N * N; ++i) m_[i] -= o.m_[i];
    return *this;
  }
  CMatrix& operator*=(Complex s) {
    for (Complex& x : m_) x *= s;
    return *this;
  }
  bool operator==(const CMatrix&) const = default;

  friend CMatrix operator+(CMatrix a, const CMatrix& b) { return a += b; }
  friend CMatrix operator-(CMatrix a, const CMatrix& b) { return a -= b; }
  friend CMatrix operator*(Complex s, CMatrix a) { return a *= s; }
  friend CMatrix operator*(CMatrix a, Complex s) { return a *= s; }

  friend CMatrix operator*(const CMatrix& a, const CMatrix& b) {
    CMatrix out;
    for (std::size_t r = 0; r < N; ++r)
      for (std::size_t k = 0; k < N; ++k) {
        const Complex ark = a(r, k);
        if (ark == Complex{}) continue;
        for (std::size_t c = 0; c < N; ++c) out(r, c) += ark * b(k, c);
      }
    return out;
  }

 private:
  std::array<Complex, N * N> m_{};
};

using Matrix2c = CMatrix<2>;
using Matrix4c = CMatrix<4>;

template <std::size_t N>
double max_abs_diff(const CMatrix<N>& a, const CMatrix<N>& b) {
  double m = 0.0;
  for (std::size_t r = 0; r < N; ++r)
    for (std::size_t c = 0; c < N; ++c) m = std::max(m, std::abs(a(r, c) - b(r, c)));
  return m;
}

/// Largest |A - A^dagger| entry.
template <std::size_t N>
double hermiticity_error(const CMatrix<N>& a) {
  return max_abs_diff(a, a.adjoint());
}

/// tr(A B) without forming the product.
template <std::size_t N>
Complex trace_of_product(const CMatrix<N>& a, const CMatrix<N>& b) {
  Complex t = 0.0;
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t k = 0; k < N; ++k) t += a(i, k) * b(k, i);
  return t;
}

/// Pauli matrices; index 0 is the identity.
const Matrix2c& pauli(std::size_t k);

Matrix4c kron(const Matrix2c& a, const Matrix2c& b);

struct SymEigen {
  /// Descending.
  std::array<double, 3> values{};
  /// Column i is the eigenvector of values[i].
  Mat3 vectors;
};

/// Cyclic Jacobi eigensolver for a real symmetric 3x3 matrix.
/// Throws std::invalid_argument if max|M - M^T| > tol.
SymEigen sym3_eigs(const Mat3& m, double tol = kDefaultTol);

template <std::size_t N>
struct HermitianEigen {
  /// Descending.
  std::array<double, N> values{};
  /// Column i is the eigenvector of values[i].
  CMatrix<N> vectors;
};

/// Cyclic complex Jacobi. Throws std::invalid_argument if not Hermitian
/// within tol.
template <std::size_t N>
HermitianEigen<N> hermitian_eigs(const CMatrix<N>& h, double tol = kDefaultTol);

extern template HermitianEigen<2> hermitian_eigs<2>(const Matrix2c&, double);
extern template HermitianEigen<4> hermitian_eigs<4>(const Matrix4c&, double);

/// True iff every eigenvalue of the Hermitian matrix is >= -tol.
template <std::size_t N>
bool psd_check(const CMatrix<N>& h, double tol = kDefaultTol) {
  return hermitian_eigs(h, tol).values[N - 1] >= -tol;
}

/// Thin SVD of a real 3x3 matrix, A = U diag(s) V^T with s descending and
/// nonnegative, U and V orthogonal (not necessarily proper). One-sided
/// (Hestenes) Jacobi, so small singular values keep full absolute accuracy.
struct Svd3 {
  Mat3 u;
  std::array<double, 3> s{};
  Mat3 v;
};
Svd3 svd3(const Mat3& a);

/// Right-handed rotation by `angle` about the unit `axis`.
Mat3 rotation_axis_angle(const Vec3& axis, double angle);

/// R_ij = tr(sigma_i U sigma_j U^dagger) / 2, so that U rho U^dagger acts on
/// Bloch vectors as r -> R r.
Mat3 unitary_to_rotation(const Matrix2c& u);

/// SU(2) preimage of a proper rotation (defined up to overall sign).
Matrix2c rotation_to_unitary(const Mat3& r);

bool is_rotation(const Mat3& r, double tol = 1e-12);

template <std::size_t N>
bool is_unitary(const CMatrix<N>& u, double tol = kDefaultTol) {
  return max_abs_diff(u.adjoint() * u, CMatrix<N>::identity()) <= tol;
}

}  // namespace rsplab
