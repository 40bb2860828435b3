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

#include <string>
#include <vector>

#include "sweepkernel/curve.hpp"
#include "sweepkernel/geometry.hpp"
#include "sweepkernel/surface.hpp"

namespace sweepkernel {

// Indices are positions into the owning SolidBrep vectors; -1 means unset.

struct Vertex {
  int id = -1;
  Vec3 point;
  bool sharp = false;  // corner of three faces with independent normals
};

struct Edge {
  int id = -1;
  int curve = -1;
  double s0 = 0, s1 = 1;  // parameter range on the curve
  int start_vertex = -1, end_vertex = -1;
  bool sharp = false;
  // The left face is the one whose coedge runs with increasing curve
  // parameter; convexity and cone orientation conventions build on this.
  int left_face = -1, right_face = -1;
};

struct Coedge {
  int id = -1;
  int edge = -1;
  int face = -1;
  int loop = -1;
  int sense = 1;  // +1 follows increasing edge parameter

  // Trace of the edge in the face chart, inferred by finalize(). Every edge
  // of the accepted class runs along one side of the rectangular domain:
  // side 0 is v = v0, 1 is u = u1, 2 is v = v1, 3 is u = u0. The running
  // coordinate is affine in the edge parameter, w(s) interpolating w_s0 at
  // e.s0 and w_s1 at e.s1 (independent of sense), unwrapped for periodic
  // charts so it may leave the nominal domain interval.
  int side = -1;
  double w_s0 = 0, w_s1 = 0;
};

struct Loop {
  int id = -1;
  int face = -1;
  std::vector<int> coedges;  // in traversal order
};

struct Face {
  int id = -1;
  int surface = -1;
  std::vector<int> loops;  // first is the outer loop
  int outward_flag = 1;    // outward normal = outward_flag * unit(su x sv)
  std::string name;        // optional, for fixtures and diagnostics
};

struct SolidBrep {
  std::vector<Vertex> vertices;
  std::vector<Curve3> curves;
  std::vector<Surface> surfaces;
  std::vector<Edge> edges;
  std::vector<Coedge> coedges;
  std::vector<Loop> loops;
  std::vector<Face> faces;

  // Derived connectivity, rebuilt by finalize().
  std::vector<std::vector<int>> vertex_edges;  // per vertex: incident edges
  std::vector<std::vector<int>> edge_coedges;  // per edge: its coedges
  std::vector<std::vector<int>> face_edges;    // per face: its edges

  void finalize();

  const Surface& surface_of(int face) const { return surfaces[faces[face].surface]; }
  const Curve3& curve_of(int edge) const { return curves[edges[edge].curve]; }

  Vec3 edge_point(int edge, double s) const { return curve_of(edge).at(s); }
  Vec3 edge_tangent(int edge, double s) const { return curve_of(edge).tangent(s); }

  // Outward unit normal of a face at surface parameters.
  Vec3 face_normal(int face, double u, double v) const;

  // Outward unit normal of a face at a point assumed to lie on it.
  Vec3 face_normal_near(int face, const Vec3& p) const;

  // Chart coordinates of edge parameter s seen from the coedge's face.
  void pcurve_point(int coedge, double s, double* u, double* v) const;

  // Outward normal of the face on the given side of an edge, evaluated
  // through that side's pcurve. side 0 = left, 1 = right.
  Vec3 edge_side_normal(int edge, int side, double s) const;

  // Coedge of the edge on the given side (0 = left, 1 = right).
  int edge_coedge_on(int edge, int side) const;

  // Faces incident to a vertex, in no particular order.
  std::vector<int> vertex_faces(int vertex) const;

  // Generator adjacency: true if the two boundary entities touch.
  // Kind 0 = face, 1 = edge, 2 = vertex.
  bool entities_touch(int kind_a, int a, int kind_b, int b) const;

  void bounding_sphere(Vec3* center, double* radius) const;
};

// Builder used by fixtures and the JSON loader; wires left/right faces and
// derived tables, then checks nothing (validation is separate).
struct BrepBuilder {
  SolidBrep solid;

  int add_vertex(const Vec3& p, bool sharp = false);
  int add_curve(const Curve3& c);
  int add_surface(const Surface& s);
  int add_edge(int curve, double s0, double s1, int v_start, int v_end, bool sharp);
  int add_face(int surface, int outward_flag = 1, const std::string& name = {});
  // Coedges listed in loop order; sense +1 follows the edge parameter.
  int add_loop(int face, const std::vector<std::pair<int, int>>& edges_with_sense);
  SolidBrep finish();
};

}  // namespace sweepkernel
