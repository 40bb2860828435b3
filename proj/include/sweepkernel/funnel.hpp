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

#include "sweepkernel/brep.hpp"
#include "sweepkernel/cones.hpp"
#include "sweepkernel/config.hpp"
#include "sweepkernel/motion.hpp"
#include "sweepkernel/region2d.hpp"

namespace sweepkernel {

// Contact set of one sharp edge over the motion interval: the (s, t) prism
// with both grazing functions sampled on a grid, the region where their
// signs differ, and the points where the swept chart loses rank.
//
// Grid axes: x is the edge parameter, y is time. Field 1 is the left face's
// grazing function, field 2 the right's.
struct EdgeFunnel {
  int edge = -1;
  double s0 = 0, s1 = 1;
  double t0 = 0, t1 = 1;

  FieldGrid grid;
  Region2D region;

  // A grazing function that vanishes over the whole prism: the face on that
  // side slides, the strip degenerates and contributes no face of its own.
  bool degenerate_left = false;
  bool degenerate_right = false;

  bool empty = false;  // no contact: the edge never carries the boundary
  bool full = false;   // the whole prism is in contact

  struct Singular {
    double s = 0, t = 0;
    double residual = 0;  // normalized |sigma_s x sigma_t| at the minimum
  };
  std::vector<Singular> singular;

  double g_tol = 0;  // absolute grazing tolerance used for this prism

  bool degenerate() const { return degenerate_left || degenerate_right; }
};

EdgeFunnel compute_edge_funnel(const SolidBrep& solid, int edge,
                               const Trajectory& traj, const Config& cfg);

// Rank-drop scan over the sampled prism: local minima of the residual among
// contact nodes, pushed down by compass descent, kept under tol.sing.
// Throws AssumptionViolation when the singular set is a curve rather than
// isolated points (velocity parallel to the edge for all time).
std::vector<EdgeFunnel::Singular> detect_singularities(const SolidBrep& solid,
                                                       const EdgeFunnel& funnel,
                                                       const Trajectory& traj,
                                                       const Config& cfg);

// Exact evaluations backing the funnel grid. side 0 = left, 1 = right.
double funnel_g(const SolidBrep& solid, int edge, int side, double s,
                const MotionSample& m);

// Blend weight of the pencil zero at (s, t); 1 selects the left normal.
double funnel_alpha(const SolidBrep& solid, int edge, double s,
                    const MotionSample& m);

// World position of the swept edge chart and its outward normal, the
// rotated pencil zero direction.
Vec3 funnel_point(const SolidBrep& solid, int edge, double s,
                  const MotionSample& m);
Vec3 funnel_normal(const SolidBrep& solid, int edge, double s,
                   const MotionSample& m);

// Area of sigma_s x sigma_t over the product of the factor norms: the sine
// of the angle between the chart directions. Zero collapses the chart.
double funnel_rank_residual(const SolidBrep& solid, int edge, double s,
                            const MotionSample& m);

// Time scan of one sharp corner: the grazing function over each of the
// three generator normals, the refined instants where one of them crosses
// zero, and the arcs of constant sign pattern in between.
struct VertexArc {
  double t_lo = 0, t_hi = 0;
  // -1 is the interval end, 0..2 the generator whose root bounds the arc.
  int cause_lo = -1, cause_hi = -1;
  std::array<int, 3> sign{};
  bool contact = false;
  std::vector<std::pair<int, int>> pairs;  // generator pairs with a pencil zero
};

struct VertexScan {
  int vertex = -1;
  std::array<int, 3> faces{{-1, -1, -1}};
  std::array<Vec3, 3> normals{};  // body-frame outward normals at the corner
  std::vector<double> roots;      // refined, strictly increasing
  std::vector<int> root_gen;      // generator index per root
  std::vector<VertexArc> arcs;
  double g_tol = 0;
};

// Throws RootClusterTooDense when two grazing events cannot be separated at
// the scan resolution, AssumptionViolation when the vertex does not join
// exactly three faces.
VertexScan scan_vertex(const SolidBrep& solid, int vertex,
                       const Trajectory& traj, const Config& cfg);

}  // namespace sweepkernel
