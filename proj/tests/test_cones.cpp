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

#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "sweepkernel/cones.hpp"
#include "sweepkernel/motion.hpp"

using namespace sweepkernel;

namespace {
constexpr double kPi = 3.14159265358979323846;

bool has_pair(const std::vector<std::pair<int, int>>& ps, int i, int j) {
  return std::find(ps.begin(), ps.end(), std::make_pair(i, j)) != ps.end() ||
         std::find(ps.begin(), ps.end(), std::make_pair(j, i)) != ps.end();
}
}  // namespace

TEST_CASE("grazing values on a rotating square prism") {
  // Unit-rate rotation about z. For the inner vertical edge of the box
  // [1,2]^2 x [0,1], the two face normals -x and -y give opposite grazing
  // signs, so the edge carries an isolated grazing direction in its pencil.
  auto tr = Trajectory::screw({0, 0, 0}, UnitVec3::of({0, 0, 1}), 1.0, 0.0,
                              0.0, kPi / 2);
  MotionSample m = tr.eval(0.0);
  Vec3 x{1, 1, 0.5};
  Vec3 n_left{-1, 0, 0}, n_right{0, -1, 0};

  // velocity of x is omega x r = (-1, 1, 0).
  CHECK(g_eval(m, n_left, x) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(g_eval(m, n_right, x) == doctest::Approx(-1.0).epsilon(1e-12));

  Tolerances tol;
  auto ec = edge_contact_test(m, n_left, n_right, x, tol.g_abs(norm(m.dA * x + m.db)));
  CHECK(ec.contact);
  CHECK_FALSE(ec.whole_pencil);
  CHECK(ec.alpha == doctest::Approx(0.5).epsilon(1e-12));

  Vec3 n_star = cone_blend(n_left, n_right, ec.alpha);
  CHECK(norm(n_star - Vec3{-1 / std::sqrt(2.0), -1 / std::sqrt(2.0), 0}) <= 1e-12);
  // The blended direction grazes exactly.
  CHECK(std::abs(g_eval(m, n_star, x)) <= 1e-12);

  // Outer vertical edge at (2,2): grazing signs flip the other way around
  // and the crossing sits mid-pencil by symmetry.
  Vec3 x2{2, 2, 0.5};
  auto ec2 = edge_contact_test(m, {1, 0, 0}, {0, 1, 0}, x2,
                               tol.g_abs(norm(m.dA * x2 + m.db)));
  CHECK(ec2.g_left == doctest::Approx(-2.0));
  CHECK(ec2.g_right == doctest::Approx(2.0));
  CHECK(ec2.contact);
  CHECK(ec2.alpha == doctest::Approx(0.5));
}

TEST_CASE("pencil boundary crossing is linear in the blend") {
  auto tr = Trajectory::screw({0.2, -0.1, 0}, UnitVec3::of({0, 0, 1}), 0.8, 0.3,
                              0.0, 1.0);
  MotionSample m = tr.eval(0.4);
  Vec3 nl = normalized({1, 0.2, 0.1});
  Vec3 nr = normalized({0.1, 1, -0.3});
  Vec3 x{1.3, 0.4, 0.2};
  double gl = g_eval(m, nl, x), gr = g_eval(m, nr, x);
  if (gl * gr <= 0) {
    auto ec = edge_contact_test(m, nl, nr, x, 1e-12);
    // g over the unnormalized blend vanishes at alpha*.
    Vec3 blend_raw = ec.alpha * nl + (1 - ec.alpha) * nr;
    CHECK(std::abs(g_eval(m, blend_raw, x)) <= 1e-12);
  }
}

TEST_CASE("whole pencil graze") {
  // Pure translation along z with both normals horizontal: g vanishes on
  // the whole pencil, which callers must treat as degenerate.
  auto tr = Trajectory::screw({0, 0, 0}, UnitVec3::of({0, 0, 1}), 0.0, 1.0,
                              0.0, 1.0);
  MotionSample m = tr.eval(0.5);
  auto ec = edge_contact_test(m, {1, 0, 0}, {0, 1, 0}, {1, 1, 0}, 1e-9);
  CHECK(ec.whole_pencil);
  CHECK(ec.contact);
}

TEST_CASE("corner cone sign patterns") {
  CHECK(active_pairs({+1, -1, -1}) ==
        std::vector<std::pair<int, int>>{{0, 1}, {0, 2}});
  CHECK(active_pairs({+1, +1, +1}).empty());
  CHECK(active_pairs({-1, -1, -1}).empty());

  // Tolerance-zero generators pair with nonzero ones only when no strict
  // crossing exists.
  auto zpp = active_pairs({0, +1, +1});
  CHECK(zpp.size() == 2);
  CHECK(has_pair(zpp, 0, 1));
  CHECK(has_pair(zpp, 0, 2));

  auto zmp = active_pairs({0, -1, +1});
  CHECK(zmp.size() == 1);
  CHECK(has_pair(zmp, 1, 2));

  // Two vanishing generators never pair with each other.
  auto zzp = active_pairs({0, 0, +1});
  CHECK(zzp.size() == 2);
  CHECK(has_pair(zzp, 0, 2));
  CHECK(has_pair(zzp, 1, 2));
  CHECK_FALSE(has_pair(zzp, 0, 1));
}

TEST_CASE("vertex contact on the rotating prism") {
  auto tr = Trajectory::screw({0, 0, 0}, UnitVec3::of({0, 0, 1}), 1.0, 0.0,
                              0.0, kPi / 2);
  MotionSample m = tr.eval(0.2);
  // Inner bottom corner of [1,2]^2 x [0,1]; normals -x, -y, -z.
  VertexContact vc = vertex_contact_test(
      m, {Vec3{-1, 0, 0}, Vec3{0, -1, 0}, Vec3{0, 0, -1}}, {1, 1, 0}, 1e-9);
  CHECK(vc.contact);
  CHECK(vc.sign[0] == +1);
  CHECK(vc.sign[1] == -1);
  CHECK(vc.sign[2] == 0);
  auto ps = active_pairs(vc.sign);
  CHECK(ps.size() == 1);
  CHECK(has_pair(ps, 0, 1));
  CHECK(pair_alpha(vc.s, 0, 1) == doctest::Approx(0.5).epsilon(1e-12));

  // Far corner (2,2,1) with outward normals +x, +y, +z: velocity (-2, 2, 0),
  // signs (-,+,0): strict pair (0,1) wins.
  VertexContact vc2 = vertex_contact_test(
      m, {Vec3{1, 0, 0}, Vec3{0, 1, 0}, Vec3{0, 0, 1}}, {2, 2, 1}, 1e-9);
  CHECK(vc2.contact);
  auto ps2 = active_pairs(vc2.sign);
  CHECK(ps2.size() == 1);
  CHECK(has_pair(ps2, 0, 1));
}

TEST_CASE("g time derivative matches finite differences") {
  auto tr = Trajectory::screw({0.5, 0, 0}, UnitVec3::of({0.6, 0, 0.8}), 1.3, 0.2,
                              0.0, 1.0);
  Vec3 n = normalized({0.3, -1, 0.5});
  Vec3 x{0.7, 0.2, -0.4};
  const double h = 1e-6;
  for (double t : {0.2, 0.5, 0.81}) {
    double d_fd = (g_eval(tr.eval(t + h), n, x) - g_eval(tr.eval(t - h), n, x)) / (2 * h);
    CHECK(g_eval_dt(tr.eval(t), n, x) == doctest::Approx(d_fd).epsilon(1e-5));
  }
}
