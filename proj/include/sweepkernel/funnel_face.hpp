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

#include "sweepkernel/brep.hpp"
#include "sweepkernel/config.hpp"
#include "sweepkernel/motion.hpp"
#include "sweepkernel/region2d.hpp"

namespace sweepkernel {

// Grazing function of a smooth face point: the moved outward normal against
// the velocity of the moved point.
double face_g(const SolidBrep& solid, int face, double u, double v,
              const MotionSample& m);

// Contact sheet of one face: the zero set of face_g over the chart-time
// prism, meshed by marching tetrahedra with crossings refined on the exact
// field and welded on shared tetrahedron edges. Triangles are oriented so
// their normal follows the moved face normal, which is outward for the
// swept boundary.
struct FaceSheet {
  int face = -1;
  double t0 = 0, t1 = 1;

  // The grazing function vanishes over the whole prism: the motion maps the
  // carrier onto itself and the face slides instead of sweeping a sheet.
  bool slides = false;
  bool empty = false;  // strict sign over the whole prism, no sheet

  std::vector<Vec3> points;
  std::vector<std::array<double, 3>> uvt;  // chart u, v and time per point
  std::vector<std::array<int, 3>> tris;
  std::vector<int> tri_component;
  int n_components = 0;

  double f_tol = 0;
};

FaceSheet compute_face_sheet(const SolidBrep& solid, int face,
                             const Trajectory& traj, const Config& cfg);

// Part of a face that faces away from the start of the motion (start = true)
// or along its end: the piece of the solid surface that caps the swept
// volume at an interval end. The region is {g <= 0} at t0 and {g >= 0} at
// t1, extracted in the face chart.
struct CapRegion {
  int face = -1;
  bool start = true;
  double t_wall = 0;
  Region2D region;
  bool empty = false;
  bool full = false;
  double f_tol = 0;
};

CapRegion compute_cap_region(const SolidBrep& solid, int face, bool start,
                             const Trajectory& traj, const Config& cfg);

}  // namespace sweepkernel
