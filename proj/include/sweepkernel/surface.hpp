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
#include <vector>

#include "sweepkernel/geometry.hpp"

namespace sweepkernel {

enum class SurfaceKind { plane, sphere, cylinder, cone, torus, bezier_patch };

struct SurfaceSample {
  Vec3 p;
  Vec3 su, sv;         // first partials
  Vec3 suu, suv, svv;  // second partials
};

// Parametric surface over a rectangular domain [u0,u1] x [v0,v1].
//
//   plane     S(u,v) = origin + u*ax + v*ay
//   sphere    S(u,v) = origin + r*(cos v cos u * ax + cos v sin u * ay + sin v * az)
//   cylinder  S(u,v) = origin + r*(cos u * ax + sin u * ay) + v * az
//   cone      S(u,v) = origin + v * az + v*tan(half_angle)*(cos u * ax + sin u * ay)
//   torus     S(u,v) = origin + (r + r2 cos v)(cos u * ax + sin u * ay) + r2 sin v * az
//   bezier    tensor-product Bernstein over the control net, (u,v) in the domain
//
// ax, ay, az form a right-handed orthonormal frame.
struct Surface {
  SurfaceKind kind = SurfaceKind::plane;
  Vec3 origin;
  Vec3 ax{1, 0, 0}, ay{0, 1, 0}, az{0, 0, 1};
  double radius = 0;      // sphere/cylinder/torus major
  double radius2 = 0;     // torus minor
  double half_angle = 0;  // cone
  std::vector<std::vector<Vec3>> net;  // bezier rows: net[i][j], i along u
  std::array<double, 4> domain{0, 1, 0, 1};  // u0, u1, v0, v1

  double u0() const { return domain[0]; }
  double u1() const { return domain[1]; }
  double v0() const { return domain[2]; }
  double v1() const { return domain[3]; }

  // Natural period of each chart coordinate; 0 when not periodic.
  double period_u() const { return kind == SurfaceKind::plane || kind == SurfaceKind::bezier_patch ? 0.0 : 2.0 * 3.14159265358979323846; }
  double period_v() const { return kind == SurfaceKind::torus ? 2.0 * 3.14159265358979323846 : 0.0; }

  SurfaceSample eval(double u, double v) const;
  Vec3 point(double u, double v) const { return eval(u, v).p; }

  // su x sv, unnormalized.
  Vec3 normal_raw(double u, double v) const;
  UnitVec3 unit_normal(double u, double v) const {
    return UnitVec3::of(normal_raw(u, v));
  }

  struct Projection {
    double u = 0, v = 0;
    Vec3 p;
    double distance = 0;
    bool clamped = false;  // hit the domain boundary
  };
  // Closest point of the domain-restricted surface. Closed-form for the
  // analytic kinds, Newton seeded by coarse sampling for Bezier patches.
  Projection project(const Vec3& q) const;

  // Signed implicit function (negative inside for closed kinds, below for
  // planes). Not available for Bezier patches.
  bool has_implicit() const { return kind != SurfaceKind::bezier_patch; }
  double implicit(const Vec3& q) const;

  static Surface make_plane(const Vec3& origin, const Vec3& ax, const Vec3& ay,
                            std::array<double, 4> domain);
  static Surface make_sphere(const Vec3& center, double r);
  static Surface make_cylinder(const Vec3& origin, const Vec3& axis, double r,
                               std::array<double, 4> domain);
  static Surface make_cone(const Vec3& origin, const Vec3& axis, double half_angle,
                           std::array<double, 4> domain);
  static Surface make_torus(const Vec3& center, const Vec3& axis, double major,
                            double minor, std::array<double, 4> domain);
  static Surface make_bezier(std::vector<std::vector<Vec3>> net);

  // Sphere with an explicit v range, e.g. a cap above a latitude.
  static Surface make_sphere_band(const Vec3& center, double r, double v_lo,
                                  double v_hi);
};

}  // namespace sweepkernel
