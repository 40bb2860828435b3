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

#include "sweepkernel/funnel.hpp"
#include "sweepkernel/funnel_face.hpp"
#include "sweepkernel/sweep.hpp"

namespace sweepkernel {
namespace detail {

// A boundary curve computed once by its owner, already resolved to the two
// face pieces it separates. piece[0] is the designated side: its co-edge
// follows the polyline when sense0 = +1, and the partner co-edge always runs
// opposite, which is what outward orientation of both faces demands.
struct PendingEdge {
  std::vector<Vec3> pts;
  int piece[2] = {-1, -1};
  int sense0 = 1;
  const char* origin = "";  // diagnostics only
};

// Contact data of one smooth edge: the shared-normal grazing function over
// the (s, t) prism. Chains are the zero curves (where the two face sheets
// meet); the runs are the s-intervals the caps keep at each wall.
struct SeamScan {
  int edge = -1;
  bool slides = false;  // g vanishes over the whole prism
  std::vector<Chain2D> contour;
  std::vector<std::pair<double, double>> runs_start, runs_end;
};

SeamScan scan_seam(const SolidBrep& solid, int edge, const Trajectory& traj,
                   const Config& cfg);

// Sign intervals of one grazing function along an edge at a wall instant:
// maximal runs where sgn * g <= 0, with refined endpoints.
std::vector<std::pair<double, double>> wall_sign_runs(
    const SolidBrep& solid, int edge, int side, const Trajectory& traj,
    double t_wall, int sgn, const Config& cfg);

// Face piece builders. Each returns fully meshed faces without loops; ids
// and loops are assigned by the assembly pass.
SweptFace build_edge_piece(const SolidBrep& solid, const EdgeFunnel& funnel,
                           const Trajectory& traj, int component);
std::vector<SweptFace> build_sheet_pieces(const SolidBrep& solid,
                                          const FaceSheet& sheet,
                                          const Trajectory& traj);
std::vector<SweptFace> build_cap_pieces(const SolidBrep& solid,
                                        const CapRegion& cap,
                                        const Trajectory& traj);

// Planar slide face: footprint of the moved face region on its own carrier
// plane. The mesh comes from the swept-footprint field; the boundary stays
// structural (moved edge runs and corner tracks from the other owners).
// Throws AssumptionViolation for non-planar or trimmed carriers.
SweptFace build_slide_piece(const SolidBrep& solid, int face,
                            const Trajectory& traj, const Config& cfg);

}  // namespace detail
}  // namespace sweepkernel
