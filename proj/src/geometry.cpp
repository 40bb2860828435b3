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

#include <algorithm>
#include <cmath>

#include "sweepkernel/curve.hpp"
#include "sweepkernel/geometry.hpp"
#include "sweepkernel/surface.hpp"

namespace sweepkernel {

namespace {

constexpr double kPi = 3.14159265358979323846;

// Bernstein basis values of degree n at t. Row-filled in place.
void bernstein_row(int n, double t, double* b) {
  b[0] = 1;
  for (int j = 1; j <= n; ++j) {
    b[j] = b[j - 1] * t;
    for (int k = j - 1; k >= 1; --k) b[k] = b[k - 1] * t + b[k] * (1 - t);
    b[0] *= (1 - t);
  }
}

// Basis with first and second derivative rows; handles n <= 1 degeneracies.
struct Basis {
  std::vector<double> b, d1, d2;
  Basis(int n, double t) : b(n + 1), d1(n + 1, 0.0), d2(n + 1, 0.0) {
    bernstein_row(n, t, b.data());
    if (n >= 1) {
      std::vector<double> lo(n);
      bernstein_row(n - 1, t, lo.data());
      for (int i = 0; i <= n; ++i) {
        double a = i >= 1 ? lo[i - 1] : 0;
        double c = i <= n - 1 ? lo[i] : 0;
        d1[i] = n * (a - c);
      }
    }
    if (n >= 2) {
      std::vector<double> lo(n - 1);
      bernstein_row(n - 2, t, lo.data());
      for (int i = 0; i <= n; ++i) {
        double a = i >= 2 ? lo[i - 2] : 0;
        double c = i >= 1 && i <= n - 1 ? lo[i - 1] : 0;
        double e = i <= n - 2 ? lo[i] : 0;
        d2[i] = n * (n - 1) * (a - 2 * c + e);
      }
    }
  }
};

double wrap_into(double x, double lo, double hi) {
  while (x < lo - 1e-12) x += 2 * kPi;
  while (x > hi + 1e-12) x -= 2 * kPi;
  return std::clamp(x, lo, hi);
}

}  // namespace

Mat3 Mat3::axis_angle(const UnitVec3& axis, double angle) {
  Mat3 k = cross_matrix(axis.v);
  double s = std::sin(angle), c = std::cos(angle);
  return identity() + k * s + (k * k) * (1 - c);
}

double Mat3::orthonormal_residual() const {
  Mat3 g = transposed() * (*this);
  double r = 0;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      r = std::max(r, std::abs(g(i, j) - (i == j ? 1.0 : 0.0)));
  return r;
}

Mat3 Quat::to_matrix() const {
  Mat3 r;
  double xx = x * x, yy = y * y, zz = z * z;
  double xy = x * y, xz = x * z, yz = y * z;
  double wx = w * x, wy = w * y, wz = w * z;
  r.m = {1 - 2 * (yy + zz), 2 * (xy - wz),     2 * (xz + wy),
         2 * (xy + wz),     1 - 2 * (xx + zz), 2 * (yz - wx),
         2 * (xz - wy),     2 * (yz + wx),     1 - 2 * (xx + yy)};
  return r;
}

bool solve2x2(double a, double b, double c, double d, double e, double f,
              double& x, double& y) {
  double det = a * d - b * c;
  double scale = std::max({std::abs(a), std::abs(b), std::abs(c), std::abs(d)});
  if (std::abs(det) <= 1e-14 * std::max(scale * scale, 1e-300)) return false;
  x = (e * d - b * f) / det;
  y = (a * f - e * c) / det;
  return true;
}

// ---------------------------------------------------------------------------
// Surface

SurfaceSample Surface::eval(double u, double v) const {
  SurfaceSample s;
  switch (kind) {
    case SurfaceKind::plane: {
      s.p = origin + ax * u + ay * v;
      s.su = ax;
      s.sv = ay;
      break;
    }
    case SurfaceKind::sphere: {
      double cu = std::cos(u), su_ = std::sin(u);
      double cv = std::cos(v), sv_ = std::sin(v);
      Vec3 w = ax * cu + ay * su_;
      Vec3 wp = ax * (-su_) + ay * cu;
      s.p = origin + (w * cv + az * sv_) * radius;
      s.su = wp * (radius * cv);
      s.sv = (w * (-sv_) + az * cv) * radius;
      s.suu = w * (-radius * cv);
      s.suv = wp * (-radius * sv_);
      s.svv = (w * cv + az * sv_) * (-radius);
      break;
    }
    case SurfaceKind::cylinder: {
      double cu = std::cos(u), su_ = std::sin(u);
      Vec3 w = ax * cu + ay * su_;
      Vec3 wp = ax * (-su_) + ay * cu;
      s.p = origin + w * radius + az * v;
      s.su = wp * radius;
      s.sv = az;
      s.suu = w * (-radius);
      break;
    }
    case SurfaceKind::cone: {
      double cu = std::cos(u), su_ = std::sin(u);
      double k = std::tan(half_angle);
      Vec3 w = ax * cu + ay * su_;
      Vec3 wp = ax * (-su_) + ay * cu;
      s.p = origin + az * v + w * (v * k);
      s.su = wp * (v * k);
      s.sv = az + w * k;
      s.suu = w * (-v * k);
      s.suv = wp * k;
      break;
    }
    case SurfaceKind::torus: {
      double cu = std::cos(u), su_ = std::sin(u);
      double cv = std::cos(v), sv_ = std::sin(v);
      Vec3 w = ax * cu + ay * su_;
      Vec3 wp = ax * (-su_) + ay * cu;
      double rho = radius + radius2 * cv;
      s.p = origin + w * rho + az * (radius2 * sv_);
      s.su = wp * rho;
      s.sv = w * (-radius2 * sv_) + az * (radius2 * cv);
      s.suu = w * (-rho);
      s.suv = wp * (-radius2 * sv_);
      s.svv = w * (-radius2 * cv) + az * (-radius2 * sv_);
      break;
    }
    case SurfaceKind::bezier_patch: {
      int n = int(net.size()) - 1;
      int m = int(net[0].size()) - 1;
      Basis bu(n, u), bv(m, v);
      for (int i = 0; i <= n; ++i) {
        for (int j = 0; j <= m; ++j) {
          const Vec3& c = net[i][j];
          s.p += c * (bu.b[i] * bv.b[j]);
          s.su += c * (bu.d1[i] * bv.b[j]);
          s.sv += c * (bu.b[i] * bv.d1[j]);
          s.suu += c * (bu.d2[i] * bv.b[j]);
          s.suv += c * (bu.d1[i] * bv.d1[j]);
          s.svv += c * (bu.b[i] * bv.d2[j]);
        }
      }
      break;
    }
  }
  return s;
}

Vec3 Surface::normal_raw(double u, double v) const {
  SurfaceSample s = eval(u, v);
  return cross(s.su, s.sv);
}

Surface::Projection Surface::project(const Vec3& q) const {
  Projection r;
  Vec3 d = q - origin;
  switch (kind) {
    case SurfaceKind::plane: {
      r.u = dot(d, ax);
      r.v = dot(d, ay);
      break;
    }
    case SurfaceKind::sphere: {
      double px = dot(d, ax), py = dot(d, ay), pz = dot(d, az);
      double rho = std::hypot(px, py);
      r.u = rho > 1e-300 ? wrap_into(std::atan2(py, px), u0(), u1()) : 0.5 * (u0() + u1());
      r.v = std::atan2(pz, rho);
      break;
    }
    case SurfaceKind::cylinder: {
      double px = dot(d, ax), py = dot(d, ay);
      r.u = std::hypot(px, py) > 1e-300 ? wrap_into(std::atan2(py, px), u0(), u1())
                                        : 0.5 * (u0() + u1());
      r.v = dot(d, az);
      break;
    }
    case SurfaceKind::cone: {
      double px = dot(d, ax), py = dot(d, ay), pz = dot(d, az);
      double rho = std::hypot(px, py);
      r.u = rho > 1e-300 ? wrap_into(std::atan2(py, px), u0(), u1()) : 0.5 * (u0() + u1());
      double k = std::tan(half_angle);
      r.v = (rho * k + pz) / (1 + k * k);
      break;
    }
    case SurfaceKind::torus: {
      double px = dot(d, ax), py = dot(d, ay), pz = dot(d, az);
      double rho = std::hypot(px, py);
      r.u = rho > 1e-300 ? wrap_into(std::atan2(py, px), u0(), u1()) : 0.5 * (u0() + u1());
      r.v = wrap_into(std::atan2(pz, rho - radius), v0(), v1());
      break;
    }
    case SurfaceKind::bezier_patch: {
      // Coarse seed, then Newton on the squared distance.
      double best = 1e300;
      const int kSeed = 8;
      for (int i = 0; i <= kSeed; ++i) {
        for (int j = 0; j <= kSeed; ++j) {
          double uu = u0() + (u1() - u0()) * i / kSeed;
          double vv = v0() + (v1() - v0()) * j / kSeed;
          double dd = norm2(point(uu, vv) - q);
          if (dd < best) {
            best = dd;
            r.u = uu;
            r.v = vv;
          }
        }
      }
      for (int it = 0; it < 20; ++it) {
        SurfaceSample s = eval(r.u, r.v);
        Vec3 f = s.p - q;
        double gu = dot(f, s.su), gv = dot(f, s.sv);
        double huu = dot(s.su, s.su) + dot(f, s.suu);
        double huv = dot(s.su, s.sv) + dot(f, s.suv);
        double hvv = dot(s.sv, s.sv) + dot(f, s.svv);
        double du = 0, dv = 0;
        if (!solve2x2(huu, huv, huv, hvv, -gu, -gv, du, dv)) break;
        r.u = std::clamp(r.u + du, u0(), u1());
        r.v = std::clamp(r.v + dv, v0(), v1());
        if (std::abs(du) + std::abs(dv) < 1e-14) break;
      }
      r.p = point(r.u, r.v);
      r.distance = dist(q, r.p);
      r.clamped = r.u <= u0() || r.u >= u1() || r.v <= v0() || r.v >= v1();
      return r;
    }
  }
  double cu = std::clamp(r.u, u0(), u1());
  double cv = std::clamp(r.v, v0(), v1());
  r.clamped = cu != r.u || cv != r.v;
  r.u = cu;
  r.v = cv;
  r.p = point(r.u, r.v);
  r.distance = dist(q, r.p);
  return r;
}

double Surface::implicit(const Vec3& q) const {
  Vec3 d = q - origin;
  switch (kind) {
    case SurfaceKind::plane:
      return dot(d, cross(ax, ay));
    case SurfaceKind::sphere:
      return norm(d) - radius;
    case SurfaceKind::cylinder: {
      Vec3 radial = d - az * dot(d, az);
      return norm(radial) - radius;
    }
    case SurfaceKind::cone: {
      double rho = norm(d - az * dot(d, az));
      double z = dot(d, az);
      return rho * std::cos(half_angle) - z * std::sin(half_angle);
    }
    case SurfaceKind::torus: {
      double rho = norm(d - az * dot(d, az));
      double z = dot(d, az);
      return std::hypot(rho - radius, z) - radius2;
    }
    case SurfaceKind::bezier_patch:
      break;
  }
  throw std::logic_error("implicit() not available for this surface kind");
}

Surface Surface::make_plane(const Vec3& origin, const Vec3& ax, const Vec3& ay,
                            std::array<double, 4> domain) {
  Surface s;
  s.kind = SurfaceKind::plane;
  s.origin = origin;
  s.ax = normalized(ax);
  s.ay = normalized(ay - s.ax * dot(ay, s.ax));
  s.az = cross(s.ax, s.ay);
  s.domain = domain;
  return s;
}

Surface Surface::make_sphere(const Vec3& center, double r) {
  return make_sphere_band(center, r, -kPi / 2, kPi / 2);
}

Surface Surface::make_sphere_band(const Vec3& center, double r, double v_lo,
                                  double v_hi) {
  Surface s;
  s.kind = SurfaceKind::sphere;
  s.origin = center;
  s.radius = r;
  s.domain = {0, 2 * kPi, v_lo, v_hi};
  return s;
}

Surface Surface::make_cylinder(const Vec3& origin, const Vec3& axis, double r,
                               std::array<double, 4> domain) {
  Surface s;
  s.kind = SurfaceKind::cylinder;
  s.origin = origin;
  s.az = normalized(axis);
  s.ax = any_perpendicular(s.az);
  s.ay = cross(s.az, s.ax);
  s.radius = r;
  s.domain = domain;
  return s;
}

Surface Surface::make_cone(const Vec3& origin, const Vec3& axis, double half_angle,
                           std::array<double, 4> domain) {
  Surface s;
  s.kind = SurfaceKind::cone;
  s.origin = origin;
  s.az = normalized(axis);
  s.ax = any_perpendicular(s.az);
  s.ay = cross(s.az, s.ax);
  s.half_angle = half_angle;
  s.domain = domain;
  return s;
}

Surface Surface::make_torus(const Vec3& center, const Vec3& axis, double major,
                            double minor, std::array<double, 4> domain) {
  Surface s;
  s.kind = SurfaceKind::torus;
  s.origin = center;
  s.az = normalized(axis);
  s.ax = any_perpendicular(s.az);
  s.ay = cross(s.az, s.ax);
  s.radius = major;
  s.radius2 = minor;
  s.domain = domain;
  return s;
}

Surface Surface::make_bezier(std::vector<std::vector<Vec3>> net) {
  Surface s;
  s.kind = SurfaceKind::bezier_patch;
  s.net = std::move(net);
  s.domain = {0, 1, 0, 1};
  return s;
}

// ---------------------------------------------------------------------------
// Curve3

CurveSample Curve3::eval(double s) const {
  CurveSample r;
  switch (kind) {
    case CurveKind::line:
      r.p = point + dir * s;
      r.d1 = dir;
      break;
    case CurveKind::circular_arc: {
      double c = std::cos(s), sn = std::sin(s);
      r.p = center + (ax * c + ay * sn) * radius;
      r.d1 = (ax * (-sn) + ay * c) * radius;
      r.d2 = (ax * c + ay * sn) * (-radius);
      break;
    }
    case CurveKind::bezier: {
      int n = int(ctrl.size()) - 1;
      Basis b(n, s);
      for (int i = 0; i <= n; ++i) {
        r.p += ctrl[i] * b.b[i];
        r.d1 += ctrl[i] * b.d1[i];
        r.d2 += ctrl[i] * b.d2[i];
      }
      break;
    }
  }
  return r;
}

Curve3 Curve3::make_line(const Vec3& p, const Vec3& d, std::array<double, 2> domain) {
  Curve3 c;
  c.kind = CurveKind::line;
  c.point = p;
  c.dir = d;
  c.domain = domain;
  return c;
}

Curve3 Curve3::make_arc(const Vec3& center, const Vec3& axis, const Vec3& xref,
                        double r, std::array<double, 2> domain) {
  Curve3 c;
  c.kind = CurveKind::circular_arc;
  c.center = center;
  c.ax = normalized(xref);
  c.ay = normalized(cross(axis, c.ax));
  c.radius = r;
  c.domain = domain;
  return c;
}

Curve3 Curve3::make_bezier(std::vector<Vec3> ctrl) {
  Curve3 c;
  c.kind = CurveKind::bezier;
  c.ctrl = std::move(ctrl);
  c.domain = {0, 1};
  return c;
}

}  // namespace sweepkernel
