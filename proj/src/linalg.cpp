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

#include "rsplab/linalg.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

namespace rsplab {

namespace {

constexpr double kJacobiThreshold = 1e-14;
constexpr int kJacobiMaxSweeps = 50;

template <typename Values, typename Swap>
void sort_descending(Values& values, Swap&& swap_columns) {
  // Selection sort on values; the comparator only sees values, never indices.
  const std::size_t n = values.size();
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t best = i;
    for (std::size_t j = i + 1; j < n; ++j)
      if (values[j] > values[best]) best = j;
    if (best != i) {
      std::swap(values[i], values[best]);
      swap_columns(i, best);
    }
  }
}

}  // namespace

double max_abs_diff(const Vec3& a, const Vec3& b) {
  return std::max({std::abs(a[0] - b[0]), std::abs(a[1] - b[1]),
                   std::abs(a[2] - b[2])});
}

Mat3 Mat3::identity() { return diag(1.0, 1.0, 1.0); }

Mat3 Mat3::diag(double d0, double d1, double d2) {
  Mat3 m;
  m(0, 0) = d0;
  m(1, 1) = d1;
  m(2, 2) = d2;
  return m;
}

Mat3 Mat3::from_columns(const Vec3& c0, const Vec3& c1, const Vec3& c2) {
  Mat3 m;
  m.set_column(0, c0);
  m.set_column(1, c1);
  m.set_column(2, c2);
  return m;
}

Mat3 Mat3::outer(const Vec3& a, const Vec3& b) {
  Mat3 m;
  for (std::size_t r = 0; r < 3; ++r)
    for (std::size_t c = 0; c < 3; ++c) m(r, c) = a[r] * b[c];
  return m;
}

void Mat3::set_column(std::size_t c, const Vec3& v) {
  for (std::size_t r = 0; r < 3; ++r) (*this)(r, c) = v[r];
}

Mat3 Mat3::transpose() const {
  Mat3 t;
  for (std::size_t r = 0; r < 3; ++r)
    for (std::size_t c = 0; c < 3; ++c) t(c, r) = (*this)(r, c);
  return t;
}

double Mat3::det() const {
  const Mat3& m = *this;
  return m(0, 0) * (m(1, 1) * m(2, 2) - m(1, 2) * m(2, 1)) -
         m(0, 1) * (m(1, 0) * m(2, 2) - m(1, 2) * m(2, 0)) +
         m(0, 2) * (m(1, 0) * m(2, 1) - m(1, 1) * m(2, 0));
}

double Mat3::frobenius_sq() const {
  return std::inner_product(m_.begin(), m_.end(), m_.begin(), 0.0);
}

Mat3& Mat3::operator+=(const Mat3& o) {
  for (std::size_t i = 0; i < 9; ++i) m_[i] += o.m_[i];
  return *this;
}

Mat3& Mat3::operator-=(const Mat3& o) {
  for (std::size_t i = 0; i < 9; ++i) m_[i] -= o.m_[i];
  return *this;
}

Mat3& Mat3::operator*=(double s) {
  for (double& x : m_) x *= s;
  return *this;
}

Mat3 operator+(Mat3 a, const Mat3& b) { return a += b; }
Mat3 operator-(Mat3 a, const Mat3& b) { return a -= b; }
Mat3 operator*(double s, Mat3 a) { return a *= s; }

Mat3 operator*(const Mat3& a, const Mat3& b) {
  Mat3 out;
  for (std::size_t r = 0; r < 3; ++r)
    for (std::size_t c = 0; c < 3; ++c)
      out(r, c) = a(r, 0) * b(0, c) + a(r, 1) * b(1, c) + a(r, 2) * b(2, c);
  return out;
}

Vec3 operator*(const Mat3& a, const Vec3& x) {
  return {a(0, 0) * x[0] + a(0, 1) * x[1] + a(0, 2) * x[2],
          a(1, 0) * x[0] + a(1, 1) * x[1] + a(1, 2) * x[2],
          a(2, 0) * x[0] + a(2, 1) * x[1] + a(2, 2) * x[2]};
}

double max_abs_diff(const Mat3& a, const Mat3& b) {
  double m = 0.0;
  for (std::size_t r = 0; r < 3; ++r)
    for (std::size_t c = 0; c < 3; ++c) m = std::max(m, std::abs(a(r, c) - b(r, c)));
  return m;
}

const Matrix2c& pauli(std::size_t k) {
  static const std::array<Matrix2c, 4> kPauli = [] {
    std::array<Matrix2c, 4> p;
    p[0] = Matrix2c::identity();
    p[1](0, 1) = 1.0;
    p[1](1, 0) = 1.0;
    p[2](0, 1) = Complex(0.0, -1.0);
    p[2](1, 0) = Complex(0.0, 1.0);
    p[3](0, 0) = 1.0;
    p[3](1, 1) = -1.0;
    return p;
  }();
  if (k > 3) throw std::out_of_range("pauli: index must be 0..3");
  return kPauli[k];
}

Matrix4c kron(const Matrix2c& a, const Matrix2c& b) {
  Matrix4c out;
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j)
      for (std::size_t k = 0; k < 2; ++k)
        for (std::size_t l = 0; l < 2; ++l) out(2 * i + k, 2 * j + l) = a(i, j) * b(k, l);
  return out;
}

SymEigen sym3_eigs(const Mat3& m, double tol) {
  const double asym = max_abs_diff(m, m.transpose());
  if (asym > tol)
    throw std::invalid_argument("sym3_eigs: matrix not symmetric (max |M - M^T| = " +
                                std::to_string(asym) + ")");

  Mat3 a = 0.5 * (m + m.transpose());
  Mat3 v = Mat3::identity();
  const double scale = std::max(1.0, std::sqrt(a.frobenius_sq()));

  for (int sweep = 0; sweep < kJacobiMaxSweeps; ++sweep) {
    const double off = std::sqrt(2.0 * (a(0, 1) * a(0, 1) + a(0, 2) * a(0, 2) +
                                        a(1, 2) * a(1, 2)));
    if (off <= kJacobiThreshold * scale) break;
    for (std::size_t p = 0; p < 2; ++p) {
      for (std::size_t q = p + 1; q < 3; ++q) {
        const double apq = a(p, q);
        if (apq == 0.0) continue;
        const double theta = (a(q, q) - a(p, p)) / (2.0 * apq);
        const double t = (theta >= 0.0 ? 1.0 : -1.0) /
                         (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        // A <- J^T A J with J = [[c, s], [-s, c]] in the (p, q) plane.
        for (std::size_t k = 0; k < 3; ++k) {
          const double akp = a(k, p);
          const double akq = a(k, q);
          a(k, p) = c * akp - s * akq;
          a(k, q) = s * akp + c * akq;
        }
        for (std::size_t k = 0; k < 3; ++k) {
          const double apk = a(p, k);
          const double aqk = a(q, k);
          a(p, k) = c * apk - s * aqk;
          a(q, k) = s * apk + c * aqk;
        }
        a(p, q) = 0.0;
        a(q, p) = 0.0;
        for (std::size_t k = 0; k < 3; ++k) {
          const double vkp = v(k, p);
          const double vkq = v(k, q);
          v(k, p) = c * vkp - s * vkq;
          v(k, q) = s * vkp + c * vkq;
        }
      }
    }
  }

  SymEigen out;
  out.values = {a(0, 0), a(1, 1), a(2, 2)};
  out.vectors = v;
  sort_descending(out.values, [&](std::size_t i, std::size_t j) {
    const Vec3 ci = out.vectors.column(i);
    out.vectors.set_column(i, out.vectors.column(j));
    out.vectors.set_column(j, ci);
  });
  return out;
}

template <std::size_t N>
HermitianEigen<N> hermitian_eigs(const CMatrix<N>& h, double tol) {
  const double herr = hermiticity_error(h);
  if (herr > tol)
    throw std::invalid_argument("hermitian_eigs: matrix not Hermitian (max |H - H^dagger| = " +
                                std::to_string(herr) + ")");

  CMatrix<N> a = 0.5 * (h + h.adjoint());
  CMatrix<N> v = CMatrix<N>::identity();
  double fro = 0.0;
  for (std::size_t r = 0; r < N; ++r)
    for (std::size_t c = 0; c < N; ++c) fro += std::norm(a(r, c));
  const double scale = std::max(1.0, std::sqrt(fro));

  for (int sweep = 0; sweep < kJacobiMaxSweeps; ++sweep) {
    double off = 0.0;
    for (std::size_t r = 0; r < N; ++r)
      for (std::size_t c = 0; c < N; ++c)
        if (r != c) off += std::norm(a(r, c));
    if (std::sqrt(off) <= kJacobiThreshold * scale) break;

    for (std::size_t p = 0; p + 1 < N; ++p) {
      for (std::size_t q = p + 1; q < N; ++q) {
        const Complex g = a(p, q);
        const double mag = std::abs(g);
        if (mag == 0.0) continue;
        // Phase q so that the (p, q) entry becomes real, then a real rotation.
        const Complex phase = std::conj(g) / mag;
        const double theta = (a(q, q).real() - a(p, p).real()) / (2.0 * mag);
        const double t = (theta >= 0.0 ? 1.0 : -1.0) /
                         (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        // G restricted to (p, q): [[c, s], [-s * phase, c * phase]].
        const Complex g_pp = c, g_pq = s, g_qp = -s * phase, g_qq = c * phase;
        for (std::size_t k = 0; k < N; ++k) {  // A <- A G
          const Complex akp = a(k, p), akq = a(k, q);
          a(k, p) = akp * g_pp + akq * g_qp;
          a(k, q) = akp * g_pq + akq * g_qq;
        }
        for (std::size_t k = 0; k < N; ++k) {  // A <- G^dagger A
          const Complex apk = a(p, k), aqk = a(q, k);
          a(p, k) = std::conj(g_pp) * apk + std::conj(g_qp) * aqk;
          a(q, k) = std::conj(g_pq) * apk + std::conj(g_qq) * aqk;
        }
        a(p, q) = 0.0;
        a(q, p) = 0.0;
        a(p, p) = a(p, p).real();
        a(q, q) = a(q, q).real();
        for (std::size_t k = 0; k < N; ++k) {
          const Complex vkp = v(k, p), vkq = v(k, q);
          v(k, p) = vkp * g_pp + vkq * g_qp;
          v(k, q) = vkp * g_pq + vkq * g_qq;
        }
      }
    }
  }

  HermitianEigen<N> out;
  for (std::size_t i = 0; i < N; ++i) out.values[i] = a(i, i).real();
  out.vectors = v;
  sort_descending(out.values, [&](std::size_t i, std::size_t j) {
    for (std::size_t k = 0; k < N; ++k) std::swap(out.vectors(k, i), out.vectors(k, j));
  });
  return out;
}

template HermitianEigen<2> hermitian_eigs<2>(const Matrix2c&, double);
template HermitianEigen<4> hermitian_eigs<4>(const Matrix4c&, double);

Svd3 svd3(const Mat3& m) {
  Mat3 a = m;
  Mat3 v = Mat3::identity();
  constexpr double kEps = 1e-15;

  for (int sweep = 0; sweep < kJacobiMaxSweeps; ++sweep) {
    bool rotated = false;
    for (std::size_t i = 0; i < 2; ++i) {
      for (std::size_t j = i + 1; j < 3; ++j) {
        const Vec3 ai = a.column(i), aj = a.column(j);
        const double alpha = dot(ai, ai), beta = dot(aj, aj), gamma = dot(ai, aj);
        if (gamma == 0.0 || std::abs(gamma) <= kEps * std::sqrt(alpha * beta)) continue;
        rotated = true;
        const double zeta = (beta - alpha) / (2.0 * gamma);
        const double t = (zeta >= 0.0 ? 1.0 : -1.0) /
                         (std::abs(zeta) + std::sqrt(1.0 + zeta * zeta));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = c * t;
        a.set_column(i, c * ai - s * aj);
        a.set_column(j, s * ai + c * aj);
        const Vec3 vi = v.column(i), vj = v.column(j);
        v.set_column(i, c * vi - s * vj);
        v.set_column(j, s * vi + c * vj);
      }
    }
    if (!rotated) break;
  }

  Svd3 out;
  for (std::size_t k = 0; k < 3; ++k) out.s[k] = norm(a.column(k));
  sort_descending(out.s, [&](std::size_t i, std::size_t j) {
    const Vec3 ai = a.column(i), vi = v.column(i);
    a.set_column(i, a.column(j));
    a.set_column(j, ai);
    v.set_column(i, v.column(j));
    v.set_column(j, vi);
  });

  std::array<Vec3, 3> u{};
  std::size_t rank = 0;
  for (std::size_t k = 0; k < 3; ++k) {
    if (out.s[k] > 1e-150) {
      u[k] = (1.0 / out.s[k]) * a.column(k);
      ++rank;
    } else {
      out.s[k] = 0.0;
    }
  }
  if (rank == 0) u[0] = {1.0, 0.0, 0.0};
  if (rank <= 1) {
    // Any unit vector orthogonal to u[0]: cross with the least aligned axis.
    const Vec3& x = u[0];
    std::size_t axis = 0;
    for (std::size_t k = 1; k < 3; ++k)
      if (std::abs(x[k]) < std::abs(x[axis])) axis = k;
    Vec3 e;
    e[axis] = 1.0;
    const Vec3 w = cross(x, e);
    u[1] = (1.0 / norm(w)) * w;
  }
  if (rank <= 2) u[2] = cross(u[0], u[1]);
  out.u = Mat3::from_columns(u[0], u[1], u[2]);
  out.v = v;
  return out;
}

Mat3 rotation_axis_angle(const Vec3& axis, double angle) {
  const double n = norm(axis);
  if (!(std::abs(n - 1.0) <= 1e-12))
    throw std::invalid_argument("rotation_axis_angle: axis must be a unit vector (|axis| = " +
                                std::to_string(n) + ")");
  const double c = std::cos(angle), s = std::sin(angle);
  Mat3 k;  // cross-product matrix of the axis
  k(0, 1) = -axis[2];
  k(0, 2) = axis[1];
  k(1, 0) = axis[2];
  k(1, 2) = -axis[0];
  k(2, 0) = -axis[1];
  k(2, 1) = axis[0];
  return c * Mat3::identity() + s * k + (1.0 - c) * Mat3::outer(axis, axis);
}

Mat3 unitary_to_rotation(const Matrix2c& u) {
  if (!is_unitary(u, 1e-10))
    throw std::invalid_argument("unitary_to_rotation: matrix is not unitary");
  const Matrix2c ud = u.adjoint();
  Mat3 r;
  for (std::size_t j = 0; j < 3; ++j) {
    const Matrix2c conj = u * pauli(j + 1) * ud;
    for (std::size_t i = 0; i < 3; ++i)
      r(i, j) = 0.5 * trace_of_product(pauli(i + 1), conj).real();
  }
  return r;
}

Matrix2c rotation_to_unitary(const Mat3& r) {
  if (!is_rotation(r, 1e-9))
    throw std::invalid_argument("rotation_to_unitary: matrix is not a proper rotation");
  // Quaternion (w, x, y, z) via the largest diagonal combination.
  const double tr = r.trace();
  double w, x, y, z;
  const std::array<double, 4> sq = {1.0 + tr, 1.0 + r(0, 0) - r(1, 1) - r(2, 2),
                                    1.0 - r(0, 0) + r(1, 1) - r(2, 2),
                                    1.0 - r(0, 0) - r(1, 1) + r(2, 2)};
  const auto big = static_cast<std::size_t>(std::max_element(sq.begin(), sq.end()) - sq.begin());
  const double h = 0.5 * std::sqrt(std::max(sq[big], 0.0));
  const double f = 0.25 / h;
  switch (big) {
    case 0:
      w = h;
      x = (r(2, 1) - r(1, 2)) * f;
      y = (r(0, 2) - r(2, 0)) * f;
      z = (r(1, 0) - r(0, 1)) * f;
      break;
    case 1:
      x = h;
      w = (r(2, 1) - r(1, 2)) * f;
      y = (r(0, 1) + r(1, 0)) * f;
      z = (r(0, 2) + r(2, 0)) * f;
      break;
    case 2:
      y = h;
      w = (r(0, 2) - r(2, 0)) * f;
      x = (r(0, 1) + r(1, 0)) * f;
      z = (r(1, 2) + r(2, 1)) * f;
      break;
    default:
      z = h;
      w = (r(1, 0) - r(0, 1)) * f;
      x = (r(0, 2) + r(2, 0)) * f;
      y = (r(1, 2) + r(2, 1)) * f;
      break;
  }
  const double qn = std::sqrt(w * w + x * x + y * y + z * z);
  w /= qn;
  x /= qn;
  y /= qn;
  z /= qn;
  // U = w I - i (x sigma_1 + y sigma_2 + z sigma_3)
  Matrix2c u;
  u(0, 0) = Complex(w, -z);
  u(0, 1) = Complex(-y, -x);
  u(1, 0) = Complex(y, -x);
  u(1, 1) = Complex(w, z);
  return u;
}

bool is_rotation(const Mat3& r, double tol) {
  return max_abs_diff(r.transpose() * r, Mat3::identity()) <= tol &&
         std::abs(r.det() - 1.0) <= tol;
}

}  // namespace rsplab
