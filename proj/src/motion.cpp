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

#include "sweepkernel/motion.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "sweepkernel/errors.hpp"

namespace sweepkernel {

namespace {

Quat qadd(const Quat& a, const Quat& b) {
  return {a.w + b.w, a.x + b.x, a.y + b.y, a.z + b.z};
}

Quat qscale(const Quat& a, double s) {
  return {a.w * s, a.x * s, a.y * s, a.z * s};
}

double qdot(const Quat& a, const Quat& b) {
  return a.w * b.w + a.x * b.x + a.y * b.y + a.z * b.z;
}

}  // namespace

Trajectory Trajectory::screw(const Vec3& axis_point, const UnitVec3& axis_dir,
                             double angular_rate, double axial_rate, double t0,
                             double t1) {
  if (!(t0 < t1)) throw std::invalid_argument("screw: empty time interval");
  Trajectory tr;
  tr.kind_ = MotionKind::screw;
  tr.t0_ = t0;
  tr.t1_ = t1;
  tr.axis_point_ = axis_point;
  tr.axis_dir_ = axis_dir.v;
  tr.angular_rate_ = angular_rate;
  tr.axial_rate_ = axial_rate;
  return tr;
}

Trajectory Trajectory::keyframed(std::vector<double> times,
                                 std::vector<Quat> rotations,
                                 std::vector<Vec3> translations) {
  if (times.size() != rotations.size() || times.size() != translations.size())
    throw std::invalid_argument("keyframed: channel lengths differ");
  if (times.size() < 2)
    throw std::invalid_argument("keyframed: need at least two keyframes");
  // Antipodal representatives interpolate through zero; align signs first.
  for (size_t i = 1; i < rotations.size(); ++i)
    if (qdot(rotations[i - 1], rotations[i]) < 0.0)
      rotations[i] = qscale(rotations[i], -1.0);

  Trajectory tr;
  tr.kind_ = MotionKind::keyframed;
  tr.t0_ = times.front();
  tr.t1_ = times.back();

  const size_t n = times.size();
  std::vector<double> ch(n);
  auto build = [&](auto get) {
    for (size_t i = 0; i < n; ++i) ch[i] = get(i);
    return CubicSpline(times, ch);
  };
  tr.qw_ = build([&](size_t i) { return rotations[i].w; });
  tr.qx_ = build([&](size_t i) { return rotations[i].x; });
  tr.qy_ = build([&](size_t i) { return rotations[i].y; });
  tr.qz_ = build([&](size_t i) { return rotations[i].z; });
  tr.bx_ = build([&](size_t i) { return translations[i].x; });
  tr.by_ = build([&](size_t i) { return translations[i].y; });
  tr.bz_ = build([&](size_t i) { return translations[i].z; });

  tr.times_ = std::move(times);
  tr.quats_ = std::move(rotations);
  tr.trans_ = std::move(translations);
  return tr;
}

void Trajectory::check_interval(double t) const {
  double slack = 1e-9 * (1.0 + t1_ - t0_);
  if (t < t0_ - slack || t > t1_ + slack) {
    std::ostringstream os;
    os << "time " << t << " outside [" << t0_ << ", " << t1_ << "]";
    throw OutOfInterval(os.str());
  }
}

MotionSample Trajectory::eval(double t) const {
  check_interval(t);
  MotionSample m;
  if (kind_ == MotionKind::screw) {
    const Vec3& u = axis_dir_;
    const Vec3& p = axis_point_;
    const double w = angular_rate_;
    Mat3 K = Mat3::cross_matrix(u);
    m.A = Mat3::axis_angle(UnitVec3::of(u), w * t);
    m.dA = (K * m.A) * w;
    m.ddA = (K * (K * m.A)) * (w * w);
    m.b = p - m.A * p + u * (axial_rate_ * t);
    m.db = u * axial_rate_ - m.dA * p;
    m.ddb = (m.ddA * p) * -1.0;
    return m;
  }

  Quat q, dq, ddq;
  qw_.eval(t, &q.w, &dq.w, &ddq.w);
  qx_.eval(t, &q.x, &dq.x, &ddq.x);
  qy_.eval(t, &q.y, &dq.y, &ddq.y);
  qz_.eval(t, &q.z, &dq.z, &ddq.z);
  const double n2 = qdot(q, q);
  if (n2 < 1e-12)
    throw AssumptionViolation("rotation channel passes near zero quaternion");
  const double n = std::sqrt(n2);

  // Renormalize u = q/|q| and push both derivatives through the quotient.
  const double dn = qdot(q, dq) / n;
  const double ddn = (qdot(dq, dq) + qdot(q, ddq) - dn * dn) / n;
  Quat u = qscale(q, 1.0 / n);
  Quat du = qadd(qscale(dq, 1.0 / n), qscale(q, -dn / n2));
  Quat ddu = qadd(qadd(qscale(ddq, 1.0 / n), qscale(dq, -2.0 * dn / n2)),
                  qscale(q, (2.0 * dn * dn / n - ddn) / n2));

  // For unit u, u' = (1/2) omega * u with omega pure, so omega = 2 u' u^-1.
  Quat wq = qscale(du * u.conj(), 2.0);
  Quat dwq = qscale(qadd(ddu * u.conj(), du * du.conj()), 2.0);
  Vec3 omega{wq.x, wq.y, wq.z};
  Vec3 domega{dwq.x, dwq.y, dwq.z};

  m.A = u.to_matrix();
  Mat3 W = Mat3::cross_matrix(omega);
  m.dA = W * m.A;
  m.ddA = (Mat3::cross_matrix(domega) + W * W) * m.A;

  bx_.eval(t, &m.b.x, &m.db.x, &m.ddb.x);
  by_.eval(t, &m.b.y, &m.db.y, &m.ddb.y);
  bz_.eval(t, &m.b.z, &m.db.z, &m.ddb.z);
  return m;
}

void Trajectory::placement(double t, Mat3& A, Vec3& b) const {
  check_interval(t);
  if (kind_ == MotionKind::screw) {
    A = Mat3::axis_angle(UnitVec3::of(axis_dir_), angular_rate_ * t);
    b = axis_point_ - A * axis_point_ + (axial_rate_ * t) * axis_dir_;
    return;
  }
  MotionSample m = eval(t);
  A = m.A;
  b = m.b;
}

Vec3 Trajectory::velocity(const Vec3& x, double t) const {
  MotionSample m = eval(t);
  return m.dA * x + m.db;
}

Vec3 Trajectory::inverse_point(const Vec3& y, double t) const {
  Mat3 A;
  Vec3 b;
  placement(t, A, b);
  return A.tmul(y - b);
}

}  // namespace sweepkernel
