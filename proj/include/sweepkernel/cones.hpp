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
#include <utility>
#include <vector>

#include "sweepkernel/config.hpp"
#include "sweepkernel/geometry.hpp"
#include "sweepkernel/motion.hpp"

namespace sweepkernel {

// Contact function of the moving body at body point x with candidate outward
// normal n: the world-frame normal dotted with the world velocity of x.
// Zero means x is instantaneously grazing along n.
inline double g_eval(const MotionSample& m, const Vec3& n, const Vec3& x) {
  return dot(m.A * n, m.dA * x + m.db);
}

// Time derivative of g at fixed (n, x).
inline double g_eval_dt(const MotionSample& m, const Vec3& n, const Vec3& x) {
  return dot(m.dA * n, m.dA * x + m.db) + dot(m.A * n, m.ddA * x + m.ddb);
}

// Normalized blend across one edge pencil: alpha = 1 is the left face
// normal, alpha = 0 the right.
Vec3 cone_blend(const Vec3& n_left, const Vec3& n_right, double alpha);

// Where the pencil crosses the boundary of contact: g is linear in the
// unnormalized blend, so the zero sits at alpha* = g_right / (g_right - g_left).
struct EdgeContact {
  double g_left = 0.0, g_right = 0.0;
  bool contact = false;     // g changes sign (or touches zero) across the pencil
  bool whole_pencil = false;  // both ends vanish: every blend grazes
  double alpha = 0.0;       // zero of g in the pencil, valid when contact
};
EdgeContact edge_contact_test(const MotionSample& m, const Vec3& n_left,
                              const Vec3& n_right, const Vec3& x,
                              double g_tol);

// Corner cone at a sharp vertex: sign pattern of g over the three face
// normals, and the generator pairs whose pencils cross zero.
struct VertexContact {
  std::array<double, 3> s{};   // g over the three generators
  std::array<int, 3> sign{};   // -1, 0, +1 with |s| <= g_tol counting as 0
  bool contact = false;        // some cone direction grazes
};
VertexContact vertex_contact_test(const MotionSample& m,
                                  const std::array<Vec3, 3>& normals,
                                  const Vec3& x, double g_tol);

// Pairs (i, j) whose pencil carries an isolated grazing direction. Pairs of
// strictly opposite sign win; only when there are none do (zero, nonzero)
// pairs count. Two vanishing generators never pair: their pencil is not
// isolated.
std::vector<std::pair<int, int>> active_pairs(const std::array<int, 3>& sign);

// Zero of g in the (i, j) pencil: blend weight on generator i.
inline double pair_alpha(const std::array<double, 3>& s, int i, int j) {
  double d = s[j] - s[i];
  return d == 0.0 ? 0.5 : s[j] / d;
}

}  // namespace sweepkernel
