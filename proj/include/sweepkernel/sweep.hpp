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
#include <string>
#include <vector>

#include "sweepkernel/brep.hpp"
#include "sweepkernel/config.hpp"
#include "sweepkernel/funnel.hpp"
#include "sweepkernel/motion.hpp"

namespace sweepkernel {

// Role of an output face in the swept boundary.
//   edge_swept  blend surface of a sharp edge over its contact funnel
//   face_swept  contact sheet of a smooth face
//   cap_start   rear-facing part of the solid surface at the interval start
//   cap_end     forward-facing part at the interval end
//   slide       planar face mapped onto its own carrier, contributing its
//               motion footprint
enum class SweptFaceKind { edge_swept, face_swept, cap_start, cap_end, slide };

// Input entity that generated an output entity. kind uses the same coding
// as SolidBrep::entities_touch: 0 face, 1 edge, 2 vertex.
struct GeneratorRef {
  int kind = 0;
  int id = -1;
};

struct SweptFace {
  int id = -1;
  SweptFaceKind kind = SweptFaceKind::face_swept;
  GeneratorRef generator;
  int component = 0;  // chart component within the generator's contact set
  std::vector<int> loops;

  // World tessellation; normals are exact evaluations, outward.
  std::vector<Vec3> mesh_pts;
  std::vector<Vec3> mesh_normals;
  std::vector<std::array<int, 3>> mesh_tris;

  // Chart coordinates behind mesh_pts: (s, t, 0) for edge_swept, (u, v, 0)
  // for caps, (u, v, t) for face_swept, carrier plane (x, y, 0) for slides.
  std::vector<std::array<double, 3>> mesh_chart;

  // Rank-drop points of the chart, kept with a warning.
  std::vector<EdgeFunnel::Singular> singular;

  std::string name;
};

struct SweptEdge {
  int id = -1;
  std::vector<Vec3> pts;  // refined world polyline
  std::array<int, 2> coedges{{-1, -1}};
  int start_vertex = -1, end_vertex = -1;
};

struct SweptCoedge {
  int id = -1;
  int edge = -1;
  int face = -1;
  int loop = -1;
  int sense = 1;  // +1 follows the stored polyline order
};

struct SweptLoop {
  int id = -1;
  int face = -1;
  std::vector<int> coedges;  // in traversal order, face on the left
};

struct SweptVertex {
  int id = -1;
  Vec3 point;
};

// One output edge with its two incident faces and whether the generating
// input entities touch on the input boundary. A closed shell of a simple
// sweep must satisfy the touch condition on every row.
struct AdjacencyRecord {
  int edge = -1;
  int face_a = -1, face_b = -1;
  bool generators_touch = false;
};

struct SweepReport {
  int n_edge_faces = 0, n_face_faces = 0, n_cap_faces = 0, n_slide_faces = 0;
  std::vector<std::string> warnings;
  std::vector<AdjacencyRecord> adjacency;
  int adjacency_violations = 0;
  std::string simplicity_evidence;  // empty when the heuristic found none
  double max_contact_residual = 0;  // |g| over sheet mesh points
};

struct SweptBrep {
  std::vector<SweptFace> faces;
  std::vector<SweptEdge> edges;
  std::vector<SweptCoedge> coedges;
  std::vector<SweptLoop> loops;
  std::vector<SweptVertex> vertices;
  SweepReport report;
};

// Boundary of the volume swept by the solid along the motion. The solid must
// validate cleanly and the sweep must be simple; every output co-edge is
// partnered and every face is outward oriented.
//
// Throws NotSimpleSweep when the sampling heuristic finds occluded contact
// points (only with cfg.verify_simple), UnmatchedCoedge or OpenLoop when the
// shell cannot be closed, AssumptionViolation for inputs outside the
// accepted class.
SweptBrep sweep(const SolidBrep& solid, const Trajectory& traj,
                const Config& cfg);

// Number of maximal groups of same-kind faces glued across shared edges:
// the face count a modeler would report, with chart seams invisible.
int count_face_groups(const SweptBrep& swept, SweptFaceKind kind);

// Sampling heuristic for the simple-sweep precondition: classifies contact
// samples through the inverse-trajectory oracle and looks for distinct
// contact curves passing through the same world point.
struct SimplicityEvidence {
  bool simple = true;
  std::string detail;
};
SimplicityEvidence verify_simple_sweep(const SolidBrep& solid,
                                       const Trajectory& traj,
                                       const Config& cfg);

}  // namespace sweepkernel
