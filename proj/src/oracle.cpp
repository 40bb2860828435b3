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

#include "sweepkernel/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

namespace sweepkernel {

namespace {

constexpr double kTau = 6.28318530717958647692;

// Closest parameter of the domain-restricted curve. Closed-form for lines
// and arcs; Bezier edges fall back to sampling plus golden section.
double curve_foot(const Curve3& c, double s0, double s1, const Vec3& q) {
  switch (c.kind) {
    case CurveKind::line: {
      double len2 = dot(c.dir, c.dir);
      double s = len2 > 0 ? dot(q - c.point, c.dir) / len2 : s0;
      return std::clamp(s, s0, s1);
    }
    case CurveKind::circular_arc: {
      Vec3 rel = q - c.center;
      double s = std::atan2(dot(rel, c.ay), dot(rel, c.ax));
      // Bring the principal angle into the arc range if some 2 pi shift
      // lands there; otherwise the nearer endpoint wins.
      for (int k = -2; k <= 2; ++k) {
        double cand = s + k * kTau;
        if (cand >= s0 && cand <= s1) return cand;
      }
      Vec3 pa = c.at(s0), pb = c.at(s1);
      return norm(q - pa) <= norm(q - pb) ? s0 : s1;
    }
    case CurveKind::bezier: {
      const int n = 32;
      double best = s0, bd = std::numeric_limits<double>::max();
      for (int i = 0; i <= n; ++i) {
        double s = s0 + (s1 - s0) * i / n;
        double d = norm(q - c.at(s));
        if (d < bd) {
          bd = d;
          best = s;
        }
      }
      double a = std::max(s0, best - (s1 - s0) / n);
      double b = std::min(s1, best + (s1 - s0) / n);
      const double gr = 0.6180339887498949;
      double x1 = b - gr * (b - a), x2 = a + gr * (b - a);
      double f1 = norm(q - c.at(x1)), f2 = norm(q - c.at(x2));
      for (int it = 0; it < 80 && b - a > 1e-13; ++it) {
        if (f1 <= f2) {
          b = x2;
          x2 = x1;
          f2 = f1;
          x1 = b - gr * (b - a);
          f1 = norm(q - c.at(x1));
        } else {
          a = x1;
          x1 = x2;
          f1 = f2;
          x2 = a + gr * (b - a);
          f2 = norm(q - c.at(x2));
        }
      }
      return 0.5 * (a + b);
    }
  }
  return s0;
}

}  // namespace

double signed_distance(const SolidBrep& solid, const Vec3& q) {
  double best = std::numeric_limits<double>::max();
  bool outside = false;

  // Face interiors: only an unclamped foot is a true face candidate; feet
  // pushed to the domain boundary are owned by edges and vertices below.
  for (const auto& face : solid.faces) {
    auto pr = solid.surface_of(face.id).project(q);
    if (pr.clamped) continue;
    if (pr.distance < best) {
      best = pr.distance;
      Vec3 n = solid.face_normal(face.id, pr.u, pr.v);
      outside = dot(q - pr.p, n) > 0;
    }
  }

  for (const auto& e : solid.edges) {
    double s = curve_foot(solid.curve_of(e.id), e.s0, e.s1, q);
    // Endpoint feet belong to the vertex pass.
    double span = e.s1 - e.s0;
    if (s - e.s0 < 1e-12 * span || e.s1 - s < 1e-12 * span) continue;
    Vec3 foot = solid.edge_point(e.id, s);
    double d = norm(q - foot);
    if (d >= best) continue;
    best = d;
    Vec3 rel = q - foot;
    Vec3 nl = solid.edge_side_normal(e.id, 0, s);
    Vec3 nr = solid.edge_side_normal(e.id, 1, s);
    outside = dot(rel, nl) > 0 || dot(rel, nr) > 0;
  }

  for (const auto& v : solid.vertices) {
    double d = norm(q - v.point);
    if (d >= best) continue;
    best = d;
    Vec3 rel = q - v.point;
    bool out = false;
    for (const auto& e : solid.edges) {
      if (e.start_vertex != v.id && e.end_vertex != v.id) continue;
      double s = e.start_vertex == v.id ? e.s0 : e.s1;
      out = out || dot(rel, solid.edge_side_normal(e.id, 0, s)) > 0 ||
            dot(rel, solid.edge_side_normal(e.id, 1, s)) > 0;
    }
    outside = out;
  }

  return outside ? best : -best;
}

PmcResult pmc(const SolidBrep& solid, const Trajectory& traj, const Vec3& y,
              const Config& cfg) {
  const int nt = cfg.grid.pmc_nt;
  const double t0 = traj.t0(), t1 = traj.t1();
  auto dist = [&](double t) {
    return signed_distance(solid, traj.inverse_point(y, t));
  };

  PmcResult r;
  r.margin = std::numeric_limits<double>::max();
  int k_min = 0;
  for (int k = 0; k <= nt; ++k) {
    double t = t0 + (t1 - t0) * k / nt;
    double d = dist(t);
    if (d < r.margin) {
      r.margin = d;
      r.t_min = t;
      k_min = k;
    }
  }

  // Golden-section polish in the bracketing cells around the best sample.
  double a = t0 + (t1 - t0) * std::max(0, k_min - 1) / nt;
  double b = t0 + (t1 - t0) * std::min(nt, k_min + 1) / nt;
  const double gr = 0.6180339887498949;
  double x1 = b - gr * (b - a), x2 = a + gr * (b - a);
  double f1 = dist(x1), f2 = dist(x2);
  for (int it = 0; it < 80 && b - a > 1e-13 * (t1 - t0); ++it) {
    if (f1 <= f2) {
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = b - gr * (b - a);
      f1 = dist(x1);
    } else {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + gr * (b - a);
      f2 = dist(x2);
    }
  }
  double xm = 0.5 * (a + b);
  double fm = dist(xm);
  if (fm < r.margin) {
    r.margin = fm;
    r.t_min = xm;
  }

  if (std::abs(r.margin) <= cfg.tol.pmc) r.verdict = PointClass::boundary;
  else if (r.margin < 0) r.verdict = PointClass::inside;
  else r.verdict = PointClass::outside;
  return r;
}

LsiResult lsi_check(const SolidBrep& solid, const Trajectory& traj,
                    const Vec3& body_point, double t_contact, double delta_t,
                    int nt, const Config& cfg) {
  const Vec3 y = traj.eval(t_contact).A * body_point + traj.eval(t_contact).b;
  const double a = std::max(traj.t0(), t_contact - delta_t);
  const double b = std::min(traj.t1(), t_contact + delta_t);

  LsiResult r;
  r.depth = std::numeric_limits<double>::max();
  for (int k = 0; k <= nt; ++k) {
    double t = a + (b - a) * k / nt;
    double d = signed_distance(solid, traj.inverse_point(y, t));
    if (d < r.depth) {
      r.depth = d;
      r.t_witness = t;
    }
  }
  r.verdict =
      r.depth < -cfg.tol.pmc ? LsiVerdict::occluded : LsiVerdict::free;
  return r;
}

}  // namespace sweepkernel
