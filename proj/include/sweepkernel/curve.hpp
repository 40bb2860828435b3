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

enum class CurveKind { line, circular_arc, bezier };

struct CurveSample {
  Vec3 p, d1, d2;
};

// Parametric space curve.
//
//   line          e(s) = point + s * dir
//   circular_arc  e(s) = center + r*(cos s * ax + sin s * ay)
//   bezier        Bernstein over ctrl, s in [0, 1] natural domain
struct Curve3 {
  CurveKind kind = CurveKind::line;
  Vec3 point, dir;            // line
  Vec3 center, ax, ay;        // arc frame
  double radius = 0;          // arc
  std::vector<Vec3> ctrl;     // bezier
  std::array<double, 2> domain{0, 1};

  CurveSample eval(double s) const;
  Vec3 at(double s) const { return eval(s).p; }
  Vec3 tangent(double s) const { return eval(s).d1; }

  static Curve3 make_line(const Vec3& p, const Vec3& d,
                          std::array<double, 2> domain = {0, 1});
  static Curve3 make_arc(const Vec3& center, const Vec3& axis, const Vec3& xref,
                         double r, std::array<double, 2> domain);
  static Curve3 make_bezier(std::vector<Vec3> ctrl);
};

}  // namespace sweepkernel
