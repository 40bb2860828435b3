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

#include <utility>
#include <vector>

#include "sweepkernel/geometry.hpp"
#include "sweepkernel/spline.hpp"

namespace sweepkernel {

// Rigid placement and its first two time derivatives at one instant.
// The motion carries body point X to A X + b.
struct MotionSample {
  Mat3 A, dA, ddA;
  Vec3 b, db, ddb;
};

enum class MotionKind { screw, keyframed };

// Twice differentiable one-parameter rigid motion over a closed interval.
// Screw motions have closed-form derivatives; keyframed motions interpolate
// quaternion and translation channels with natural cubic splines and push
// derivatives through the renormalization exactly.
class Trajectory {
 public:
  static Trajectory screw(const Vec3& axis_point, const UnitVec3& axis_dir,
                          double angular_rate, double axial_rate, double t0,
                          double t1);
  static Trajectory keyframed(std::vector<double> times,
                              std::vector<Quat> rotations,
                              std::vector<Vec3> translations);

  MotionKind kind() const { return kind_; }
  double t0() const { return t0_; }
  double t1() const { return t1_; }
  std::pair<double, double> interval() const { return {t0_, t1_}; }

  // Throws OutOfInterval when t lies outside [t0, t1] by more than slack.
  MotionSample eval(double t) const;

  // Placement only, cheaper than eval.
  void placement(double t, Mat3& A, Vec3& b) const;

  // World velocity of the trajectory of body point x at time t: A'(t) x + b'(t).
  Vec3 velocity(const Vec3& x, double t) const;

  // Body-frame preimage of world point y at time t: A(t)^T (y - b(t)).
  Vec3 inverse_point(const Vec3& y, double t) const;

  // Screw parameters, valid only for screw kind.
  const Vec3& axis_point() const { return axis_point_; }
  const Vec3& axis_dir() const { return axis_dir_; }
  double angular_rate() const { return angular_rate_; }
  double axial_rate() const { return axial_rate_; }

  // Keyframe channels, valid only for keyframed kind.
  const std::vector<double>& knot_times() const { return times_; }
  const std::vector<Quat>& knot_rotations() const { return quats_; }
  const std::vector<Vec3>& knot_translations() const { return trans_; }

 private:
  Trajectory() = default;
  void check_interval(double t) const;

  MotionKind kind_ = MotionKind::screw;
  double t0_ = 0.0, t1_ = 1.0;

  Vec3 axis_point_{};
  Vec3 axis_dir_{0.0, 0.0, 1.0};
  double angular_rate_ = 0.0;
  double axial_rate_ = 0.0;

  std::vector<double> times_;
  std::vector<Quat> quats_;
  std::vector<Vec3> trans_;
  CubicSpline qw_, qx_, qy_, qz_;
  CubicSpline bx_, by_, bz_;
};

}  // namespace sweepkernel
