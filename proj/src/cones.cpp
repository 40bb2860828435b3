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

#include "sweepkernel/cones.hpp"

#include <cmath>

namespace sweepkernel {

Vec3 cone_blend(const Vec3& n_left, const Vec3& n_right, double alpha) {
  Vec3 n = n_left * alpha + n_right * (1.0 - alpha);
  double len = norm(n);
  // Opposite generators can cancel; the caller screens that via convexity.
  if (len < 1e-14) return n_left;
  return n / len;
}

EdgeContact edge_contact_test(const MotionSample& m, const Vec3& n_left,
                              const Vec3& n_right, const Vec3& x,
                              double g_tol) {
  EdgeContact ec;
  ec.g_left = g_eval(m, n_left, x);
  ec.g_right = g_eval(m, n_right, x);
  bool z1 = std::abs(ec.g_left) <= g_tol;
  bool z2 = std::abs(ec.g_right) <= g_tol;
  if (z1 && z2) {
    ec.contact = true;
    ec.whole_pencil = true;
    ec.alpha = 0.5;
    return ec;
  }
  if (ec.g_left * ec.g_right <= 0.0 || z1 || z2) {
    ec.contact = true;
    double d = ec.g_right - ec.g_left;
    ec.alpha = z1 ? 1.0 : (z2 ? 0.0 : ec.g_right / d);
  }
  return ec;
}

VertexContact vertex_contact_test(const MotionSample& m,
                                  const std::array<Vec3, 3>& normals,
                                  const Vec3& x, double g_tol) {
  VertexContact vc;
  for (int i = 0; i < 3; ++i) {
    vc.s[i] = g_eval(m, normals[i], x);
    vc.sign[i] = std::abs(vc.s[i]) <= g_tol ? 0 : (vc.s[i] > 0 ? 1 : -1);
  }
  // g is linear over the cone hull, so a grazing direction exists exactly
  // when the generator values straddle (or touch) zero.
  int lo = std::min({vc.sign[0], vc.sign[1], vc.sign[2]});
  int hi = std::max({vc.sign[0], vc.sign[1], vc.sign[2]});
  vc.contact = lo <= 0 && hi >= 0;
  return vc;
}

std::vector<std::pair<int, int>> active_pairs(const std::array<int, 3>& sign) {
  std::vector<std::pair<int, int>> strict, mixed;
  for (int i = 0; i < 3; ++i) {
    for (int j = i + 1; j < 3; ++j) {
      int a = sign[i], b = sign[j];
      if (a * b < 0) strict.emplace_back(i, j);
      else if (a * b == 0 && a + b != 0) mixed.emplace_back(i, j);
    }
  }
  return strict.empty() ? mixed : strict;
}

}  // namespace sweepkernel
