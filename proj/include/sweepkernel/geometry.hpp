// Copyright 2026 The SweepKernel Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <array>
#include <cmath>
#include <stdexcept>
#include <vector>

namespace sweepkernel {

struct Vec3 {
  double x = 0, y = 0, z = 0;

  Vec3 operator+(const Vec3& o) const { return {x + o.x, y + o.y, z + o.z}; }
  Vec3 operator-(const Vec3& o) const { return {x - o.x, y - o.y, z - o.z}; }
  Vec3 operator-() const { return {-x, -y, -z}; }
  Vec3 operator*(double s) const { return {x * s, y * s, z * s}; }
  Vec3 operator/(double s) const { return {x / s, y / s, z / s}; }
  Vec3& operator+=(const Vec3& o) {
    x += o.x;
    y += o.y;
    z += o.z;
    return *this;
  }
  Vec3& operator-=(const Vec3& o) {
    x -= o.x;
    y -= o.y;
    z -= o.z;
    return *this;
  }
  Vec3& operator*=(double s) {
    x *= s;
    y *= s;
    z *= s;
    return *this;
  }
  double operator[](int i) const { return i == 0 ? x : (i == 1 ? y : z); }
};

inline Vec3 operator*(double s, const Vec3& v) { return v * s; }

inline double dot(const Vec3& a, const Vec3& b) {
  return a.x * b.x + a.y * b.y + a.z * b.z;
}

inline Vec3 cross(const Vec3& a, const Vec3& b) {
  return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z,
          a.x * b.y - a.y * b.x};
}

inline double norm2(const Vec3& v) { return dot(v, v); }
inline double norm(const Vec3& v) { return std::sqrt(norm2(v)); }
inline double dist(const Vec3& a, const Vec3& b) { return norm(a - b); }

inline Vec3 normalized(const Vec3& v) {
  double n = norm(v);
  return n > 0 ? v / n : Vec3{};
}

// Some unit vector perpendicular to v; v need not be normalized.
inline Vec3 any_perpendicular(const Vec3& v) {
  Vec3 t = std::abs(v.x) < 0.9 * norm(v) ? Vec3{1, 0, 0} : Vec3{0, 1, 0};
  return normalized(cross(v, t));
}

// Unit vector wrapper. Construction either renormalizes or checks the
// invariant |norm - 1| <= tol and throws.
struct UnitVec3 {
  Vec3 v;

  UnitVec3() : v{1, 0, 0} {}
  explicit UnitVec3(const Vec3& u) : v(u) {}
  operator const Vec3&() const { return v; }

  static UnitVec3 of(const Vec3& u) { return UnitVec3(normalized(u)); }
  static UnitVec3 checked(const Vec3& u, double tol) {
    if (std::abs(norm(u) - 1.0) > tol)
      throw std::invalid_argument("UnitVec3: vector norm off unit by more than tolerance");
    return UnitVec3(u);
  }
};

// Row-major 3x3 matrix.
struct Mat3 {
  std::array<double, 9> m{1, 0, 0, 0, 1, 0, 0, 0, 1};

  double operator()(int r, int c) const { return m[3 * r + c]; }
  double& operator()(int r, int c) { return m[3 * r + c]; }

  static Mat3 identity() { return Mat3{}; }
  static Mat3 zero() {
    Mat3 a;
    a.m = {0, 0, 0, 0, 0, 0, 0, 0, 0};
    return a;
  }

  static Mat3 from_columns(const Vec3& c0, const Vec3& c1, const Vec3& c2) {
    Mat3 a;
    a.m = {c0.x, c1.x, c2.x, c0.y, c1.y, c2.y, c0.z, c1.z, c2.z};
    return a;
  }

  // Skew matrix with [w]x v = w x v.
  static Mat3 cross_matrix(const Vec3& w) {
    Mat3 a;
    a.m = {0, -w.z, w.y, w.z, 0, -w.x, -w.y, w.x, 0};
    return a;
  }

  // Rodrigues rotation about a unit axis.
  static Mat3 axis_angle(const UnitVec3& axis, double angle);

  Vec3 col(int c) const { return {m[c], m[3 + c], m[6 + c]}; }
  Vec3 row(int r) const { return {m[3 * r], m[3 * r + 1], m[3 * r + 2]}; }

  Vec3 operator*(const Vec3& v) const {
    return {m[0] * v.x + m[1] * v.y + m[2] * v.z,
            m[3] * v.x + m[4] * v.y + m[5] * v.z,
            m[6] * v.x + m[7] * v.y + m[8] * v.z};
  }

  Mat3 operator*(const Mat3& b) const {
    Mat3 r = zero();
    for (int i = 0; i < 3; ++i)
      for (int k = 0; k < 3; ++k)
        for (int j = 0; j < 3; ++j) r.m[3 * i + j] += m[3 * i + k] * b.m[3 * k + j];
    return r;
  }

  Mat3 operator*(double s) const {
    Mat3 r = *this;
    for (auto& e : r.m) e *= s;
    return r;
  }

  Mat3 operator+(const Mat3& b) const {
    Mat3 r = *this;
    for (int i = 0; i < 9; ++i) r.m[i] += b.m[i];
    return r;
  }

  Mat3 operator-(const Mat3& b) const {
    Mat3 r = *this;
    for (int i = 0; i < 9; ++i) r.m[i] -= b.m[i];
    return r;
  }

  Mat3 transposed() const {
    Mat3 r;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) r.m[3 * i + j] = m[3 * j + i];
    return r;
  }

  // Applies the transpose without forming it: A^T v.
  Vec3 tmul(const Vec3& v) const {
    return {m[0] * v.x + m[3] * v.y + m[6] * v.z,
            m[1] * v.x + m[4] * v.y + m[7] * v.z,
            m[2] * v.x + m[5] * v.y + m[8] * v.z};
  }

  double det() const {
    return m[0] * (m[4] * m[8] - m[5] * m[7]) - m[1] * (m[3] * m[8] - m[5] * m[6]) +
           m[2] * (m[3] * m[7] - m[4] * m[6]);
  }

  // Deviation from an orthonormal matrix, max-abs entry of A^T A - I.
  double orthonormal_residual() const;
};

// Quaternion (w, x, y, z), Hamilton convention.
struct Quat {
  double w = 1, x = 0, y = 0, z = 0;

  Quat operator+(const Quat& o) const { return {w + o.w, x + o.x, y + o.y, z + o.z}; }
  Quat operator-(const Quat& o) const { return {w - o.w, x - o.x, y - o.y, z - o.z}; }
  Quat operator*(double s) const { return {w * s, x * s, y * s, z * s}; }

  Quat operator*(const Quat& q) const {
    return {w * q.w - x * q.x - y * q.y - z * q.z,
            w * q.x + x * q.w + y * q.z - z * q.y,
            w * q.y - x * q.z + y * q.w + z * q.x,
            w * q.z + x * q.y - y * q.x + z * q.w};
  }

  Quat conj() const { return {w, -x, -y, -z}; }
  double norm() const { return std::sqrt(w * w + x * x + y * y + z * z); }
  Vec3 vec() const { return {x, y, z}; }

  static Quat axis_angle(const UnitVec3& axis, double angle) {
    double c = std::cos(angle / 2), s = std::sin(angle / 2);
    const Vec3& a = axis.v;
    return {c, s * a.x, s * a.y, s * a.z};
  }

  // Rotation matrix of a unit quaternion.
  Mat3 to_matrix() const;
};

inline double dot(const Quat& a, const Quat& b) {
  return a.w * b.w + a.x * b.x + a.y * b.y + a.z * b.z;
}

// Solves the 2x2 system [a b; c d] [x;y] = [e;f]. Returns false if singular.
bool solve2x2(double a, double b, double c, double d, double e, double f,
              double& x, double& y);

}  // namespace sweepkernel
