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

#include <cmath>
#include <vector>

#include "sweepkernel/errors.hpp"
#include "sweepkernel/motion.hpp"

using namespace sweepkernel;

namespace {
constexpr double kPi = 3.14159265358979323846;

// Max column difference.
double mat_dist(const Mat3& a, const Mat3& b) {
  double m = 0;
  for (int i = 0; i < 3; ++i) m = std::max(m, norm(a.col(i) - b.col(i)));
  return m;
}

// Central differences of A and b against the analytic derivatives.
void check_derivatives(const Trajectory& tr, double t, double tol1, double tol2) {
  const double h = 1e-5;
  MotionSample c = tr.eval(t);
  Mat3 Ap, Am;
  Vec3 bp, bm;
  tr.placement(t + h, Ap, bp);
  tr.placement(t - h, Am, bm);
  Mat3 dA_fd, ddA_fd;
  for (int i = 0; i < 3; ++i) {
    Vec3 cp = Ap.col(i), cm = Am.col(i), cc = c.A.col(i);
    Vec3 d1 = (1.0 / (2 * h)) * (cp - cm);
    Vec3 d2 = (1.0 / (h * h)) * (cp - 2.0 * cc + cm);
    CHECK(norm(d1 - c.dA.col(i)) <= tol1);
    CHECK(norm(d2 - c.ddA.col(i)) <= tol2);
  }
  Vec3 db_fd = (1.0 / (2 * h)) * (bp - bm);
  Vec3 ddb_fd = (1.0 / (h * h)) * (bp - 2.0 * c.b + bm);
  CHECK(norm(db_fd - c.db) <= tol1 * (1 + norm(c.db)));
  CHECK(norm(ddb_fd - c.ddb) <= tol2 * (1 + norm(c.ddb)));
  (void)dA_fd;
  (void)ddA_fd;
}
}  // namespace

TEST_CASE("screw motion closed form") {
  // Quarter turn about the z axis through (0,0,0), no axial feed.
  auto tr = Trajectory::screw({0, 0, 0}, UnitVec3::of({0, 0, 1}), kPi / 2, 0.0,
                              0.0, 1.0);
  MotionSample m0 = tr.eval(0.0);
  CHECK(mat_dist(m0.A, Mat3::identity()) <= 1e-14);
  CHECK(norm(m0.b) <= 1e-14);

  MotionSample m1 = tr.eval(1.0);
  CHECK(norm(m1.A * Vec3{1, 0, 0} - Vec3{0, 1, 0}) <= 1e-13);

  // Velocity of a body point is omega x r.
  Vec3 x{2, 0, 0};
  Vec3 v = tr.velocity(x, 0.0);
  CHECK(norm(v - Vec3{0, kPi, 0}) <= 1e-13);

  check_derivatives(tr, 0.3, 1e-8, 1e-4);

  // Off-axis screw with feed: points on the axis translate only.
  auto tr2 = Trajectory::screw({1, 2, 0}, UnitVec3::of({0, 0, 1}), 1.0, 0.5,
                               0.0, 2.0);
  for (double t : {0.0, 0.7, 2.0}) {
    Mat3 A;
    Vec3 b;
    tr2.placement(t, A, b);
    Vec3 y = A * Vec3{1, 2, 5} + b;
    CHECK(norm(y - Vec3{1, 2, 5 + 0.5 * t}) <= 1e-12);
  }
  check_derivatives(tr2, 1.1, 1e-8, 1e-4);

  // Round trip through the inverse placement.
  Vec3 p{0.3, -1, 0.2};
  Mat3 A;
  Vec3 b;
  tr2.placement(1.3, A, b);
  CHECK(norm(tr2.inverse_point(A * p + b, 1.3) - p) <= 1e-12);
}

TEST_CASE("keyframed motion derivative consistency") {
  // A bent path with rotation: keyframes on a quarter circle.
  std::vector<double> times{0, 0.5, 1.0, 1.5, 2.0};
  std::vector<Quat> rots;
  std::vector<Vec3> trans;
  for (double t : times) {
    double th = 0.4 * t * t;
    rots.push_back({std::cos(th / 2), 0, 0, std::sin(th / 2)});
    trans.push_back({std::sin(t), t, 0.1 * t * t});
  }
  auto tr = Trajectory::keyframed(times, rots, trans);
  CHECK(tr.t0() == doctest::Approx(0.0));
  CHECK(tr.t1() == doctest::Approx(2.0));

  for (double t : {0.21, 0.9, 1.37, 1.93}) {
    MotionSample m = tr.eval(t);
    // Rotation stays orthonormal despite spline interpolation.
    CHECK(m.A.orthonormal_residual() <= 1e-9);
    check_derivatives(tr, t, 1e-6, 1e-3);
  }

  // Keyframe positions are interpolated exactly.
  for (size_t i = 0; i < times.size(); ++i) {
    Mat3 A;
    Vec3 b;
    tr.placement(times[i], A, b);
    CHECK(norm(b - trans[i]) <= 1e-12);
    CHECK(mat_dist(A, rots[i].to_matrix()) <= 1e-12);
  }
}

TEST_CASE("keyframed quaternions are sign aligned") {
  // Same orientations, opposite quaternion signs: interpolation must not
  // swing through zero.
  std::vector<double> times{0, 1};
  std::vector<Quat> rots{{1, 0, 0, 0}, {-1, 0, 0, 0}};
  std::vector<Vec3> trans{{0, 0, 0}, {1, 0, 0}};
  auto tr = Trajectory::keyframed(times, rots, trans);
  MotionSample m = tr.eval(0.5);
  CHECK(mat_dist(m.A, Mat3::identity()) <= 1e-12);
}

TEST_CASE("interval is enforced") {
  auto tr = Trajectory::screw({0, 0, 0}, UnitVec3::of({0, 0, 1}), 1.0, 0.0,
                              0.25, 0.75);
  CHECK_THROWS_AS((void)tr.eval(0.1), OutOfInterval);
  CHECK_THROWS_AS((void)tr.eval(0.76), OutOfInterval);
  CHECK_NOTHROW((void)tr.eval(0.25));
  CHECK_NOTHROW((void)tr.eval(0.75));
}
